#include "torclus/cartan.hpp"

#include <numeric>
#include <regex>
#include <stdexcept>

namespace torclus {

std::vector<int> CartanData::neighbors(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= n_; ++j)
        if (adjacent(i, j)) out.push_back(j);
    return out;
}

int64_t CartanData::ctilde(int i, int j, int64_t m) const {
    if (m <= 0) return 0;
    const auto& row = table_[i - 1][j - 1];
    return row[static_cast<size_t>((m - 1) % static_cast<int64_t>(row.size()))];
}

namespace {

struct Frac {
    int64_t num = 0, den = 1;
    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const int64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
};

// Exact inverse of a unimodular integer matrix.
IntMatrix integer_inverse(const IntMatrix& A) {
    const size_t n = A.size();
    std::vector<std::vector<Frac>> M(n, std::vector<Frac>(2 * n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) M[i][j] = {A[i][j], 1};
        M[i][n + i] = {1, 1};
    }
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && M[p][c].num == 0) ++p;
        if (p == n) throw std::logic_error("singular constant term in C(z)");
        std::swap(M[p], M[c]);
        const Frac piv = M[c][c];
        for (auto& x : M[c]) {
            x = {checked_mul(x.num, piv.den), checked_mul(x.den, piv.num)};
            x.normalize();
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || M[r][c].num == 0) continue;
            const Frac f = M[r][c];
            for (size_t k = 0; k < 2 * n; ++k) {
                // M[r][k] -= f * M[c][k]
                const int64_t num = checked_add(checked_mul(M[r][k].num, checked_mul(f.den, M[c][k].den)),
                                                -checked_mul(checked_mul(f.num, M[c][k].num), M[r][k].den));
                M[r][k] = {num, checked_mul(M[r][k].den, checked_mul(f.den, M[c][k].den))};
                M[r][k].normalize();
            }
        }
    }
    IntMatrix inv(n, std::vector<int64_t>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const Frac& x = M[i][n + j];
            if (x.den != 1) throw std::logic_error("constant term of C(z) is not unimodular");
            inv[i][j] = x.num;
        }
    return inv;
}

IntMatrix chain_matrix(int n, const std::vector<std::pair<int, int>>& edges) {
    IntMatrix C(static_cast<size_t>(n), std::vector<int64_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) C[i][i] = 2;
    for (auto [a, b] : edges) {
        C[a - 1][b - 1] = -1;
        C[b - 1][a - 1] = -1;
    }
    return C;
}

}  // namespace

std::vector<std::vector<std::vector<int64_t>>> ctilde_series(const CartanData& data, int order) {
    const int n = data.rank();
    // Row i of C(z) times z^{d_i} is a polynomial P_i(z); entries z^{d}[c]_{z^d}.
    int deg = 0;
    std::vector<std::vector<std::vector<int64_t>>> P(n, std::vector<std::vector<int64_t>>(n));
    for (int i = 0; i < n; ++i) {
        const int di = data.d(i + 1);
        for (int j = 0; j < n; ++j) {
            const int64_t c = data.C(i + 1, j + 1);
            const int64_t ac = c < 0 ? -c : c;
            auto& poly = P[i][j];
            poly.assign(static_cast<size_t>(2 * di * ac + 1), 0);
            for (int64_t k = 0; k < ac; ++k) {
                const int64_t power = di * (ac - 2 * k);
                if (power < 0) throw std::logic_error("Cartan entry too large for this expansion");
                poly[static_cast<size_t>(power)] += c < 0 ? -1 : 1;
            }
            deg = std::max(deg, static_cast<int>(poly.size()) - 1);
        }
    }
    IntMatrix P0(n, std::vector<int64_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) P0[i][j] = P[i][j].empty() ? 0 : P[i][j][0];
    const IntMatrix P0inv = integer_inverse(P0);

    // X = P^{-1} as a power series: P0 X_m = delta_{m0} - sum_{k>=1} P_k X_{m-k}.
    std::vector<IntMatrix> X;
    for (int m = 0; m <= order; ++m) {
        IntMatrix rhs(n, std::vector<int64_t>(n, 0));
        if (m == 0)
            for (int i = 0; i < n; ++i) rhs[i][i] = 1;
        for (int k = 1; k <= std::min(m, deg); ++k)
            for (int i = 0; i < n; ++i)
                for (int l = 0; l < n; ++l) {
                    const auto& poly = P[i][l];
                    if (static_cast<size_t>(k) >= poly.size() || poly[k] == 0) continue;
                    for (int j = 0; j < n; ++j) rhs[i][j] = checked_add(rhs[i][j], -checked_mul(poly[k], X[m - k][l][j]));
                }
        IntMatrix Xm(n, std::vector<int64_t>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int l = 0; l < n; ++l) Xm[i][j] = checked_add(Xm[i][j], checked_mul(P0inv[i][l], rhs[l][j]));
        X.push_back(std::move(Xm));
    }
    // C~ = X diag(z^{d_j}).
    std::vector<std::vector<std::vector<int64_t>>> out(n, std::vector<std::vector<int64_t>>(n, std::vector<int64_t>(order + 1, 0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int m = data.d(j + 1); m <= order; ++m) out[i][j][m] = X[m - data.d(j + 1)][i][j];
    return out;
}

CartanPtr make_cartan(const std::string& label) {
    static const std::regex re("^([ABDE])([0-9]+)$");
    std::smatch mt;
    if (!std::regex_match(label, mt, re)) throw Error(ErrorKind::UnknownType, label);
    const char kind = mt[1].str()[0];
    const int n = std::stoi(mt[2].str());

    auto data = std::make_shared<CartanData>();
    data->label_ = label;
    data->n_ = n;
    data->d_.assign(static_cast<size_t>(n), 1);
    std::vector<std::pair<int, int>> edges;
    if (kind == 'A') {
        if (n < 1 || n > 8) throw Error(ErrorKind::UnknownType, label);
        for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
        data->h_ = n + 1;
    } else if (kind == 'D') {
        if (n < 4 || n > 8) throw Error(ErrorKind::UnknownType, label);
        for (int i = 1; i < n - 1; ++i) edges.emplace_back(i, i + 1);
        edges.emplace_back(n - 2, n);
        data->h_ = 2 * n - 2;
    } else if (kind == 'E') {
        if (n < 6 || n > 8) throw Error(ErrorKind::UnknownType, label);
        // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4.
        edges = {{1, 3}, {3, 4}, {4, 5}, {2, 4}};
        for (int i = 5; i < n; ++i) edges.emplace_back(i, i + 1);
        data->h_ = n == 6 ? 12 : n == 7 ? 18 : 30;
    } else {
        if (n != 2) throw Error(ErrorKind::UnknownType, label);
    }
    if (kind == 'B') {
        data->C_ = {{2, -2}, {-1, 2}};
        data->d_ = {1, 2};
        data->h_ = 4;
        data->simply_laced_ = false;
        data->half_period_ = 6;
        data->period_sign_ = -1;
    } else {
        data->C_ = chain_matrix(n, edges);
        data->half_period_ = 2 * data->h_;
        data->period_sign_ = 1;
    }

    const int full = data->full_period();
    const int order = 2 * full + 4 * data->h_ + 4;
    const auto series = ctilde_series(*data, order);
    data->table_.assign(static_cast<size_t>(n), std::vector<std::vector<int64_t>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& s = series[i][j];
            for (int m = 1; m + data->half_period_ <= order; ++m)
                if (s[m + data->half_period_] != data->period_sign_ * s[m])
                    throw std::logic_error("inverse quantum Cartan matrix is not periodic as expected for " + label);
            data->table_[i][j].assign(s.begin() + 1, s.begin() + 1 + full);
        }
    return data;
}

int64_t ctilde_typeA_closed(int n, int i, int j, int64_t m) {
    if (m <= 0) return 0;
    // The displayed formula is stated for i <= j; the matrix is symmetric.
    if (i > j) std::swap(i, j);
    const int64_t period = 2 * (n + 1);
    int64_t total = 0;
    for (int64_t a = 0; a <= i - 1; ++a) {
        const int64_t e = i + j - 1 - 2 * a;
        if (m >= e && (m - e) % period == 0) ++total;
    }
    for (int64_t a = -n + j - 1; a <= -n + i + j - 2; ++a) {
        const int64_t e = i + j - 1 - 2 * a;
        if (m >= e && (m - e) % period == 0) --total;
    }
    return total;
}

int64_t n_exponent(const CartanData& data, int64_t a, int i, int64_t p, int j, int64_t s) {
    const int64_t dj = data.d(j);
    return data.ctilde(j, i, p - s - dj + a) - data.ctilde(j, i, s - p - dj + a) - data.ctilde(j, i, p - s + dj + a) +
           data.ctilde(j, i, s - p + dj + a);
}

ExpSeq n_sequence(const CartanData& data, int i, int64_t p, int j, int64_t s) {
    const int64_t delta = s > p ? s - p : p - s;
    const int64_t dj = data.d(j);
    const int64_t lo = -delta - dj;
    const int64_t tail = delta + dj + 1;  // from here on every argument of C~ is positive
    std::vector<int64_t> ex, pat;
    for (int64_t a = lo; a < tail; ++a) ex.push_back(2 * n_exponent(data, a, i, p, j, s));
    for (int64_t a = tail; a < tail + data.full_period(); ++a) pat.push_back(2 * n_exponent(data, a, i, p, j, s));
    return ExpSeq::periodic(lo, std::move(ex), std::move(pat));
}

ExpSeq ay_sequence(const CartanData& data, int i, int64_t r, int j, int64_t s) {
    ExpSeq total;
    total = total + n_sequence(data, i, r - data.d(i), j, s) + n_sequence(data, i, r + data.d(i), j, s);
    for (int k = 1; k <= data.rank(); ++k) {
        if (k == i) continue;
        const int64_t c = data.C(k, i);
        if (c == -1) total = total - n_sequence(data, k, r, j, s);
        else if (c == -2) total = total - n_sequence(data, k, r - 1, j, s) - n_sequence(data, k, r + 1, j, s);
    }
    return total;
}

ExpSeq ay_closed_form(int i, int64_t r, int j, int64_t s) {
    if (i != j) return {};
    return ExpSeq::unit(r - s - 1, 2) - ExpSeq::unit(r - s + 1, 2) - ExpSeq::unit(s - r - 1, 2) + ExpSeq::unit(s - r + 1, 2);
}

}  // namespace torclus
