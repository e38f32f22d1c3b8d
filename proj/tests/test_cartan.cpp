#include <doctest.h>

#include "torclus/cartan.hpp"

using namespace torclus;

namespace {

// Coefficients of C(z) C~(z) at z^m, with C(z)_{ij} = [C_ij]_{z^{d_i}} written out directly.
int64_t product_coefficient(const CartanData& d, int i, int j, int64_t m) {
    int64_t total = 0;
    for (int l = 1; l <= d.rank(); ++l) {
        const int64_t c = d.C(i, l);
        if (c == 0) continue;
        const int64_t ac = c < 0 ? -c : c, sign = c < 0 ? -1 : 1;
        for (int64_t k = 0; k < ac; ++k) {
            const int64_t power = d.d(i) * (ac - 1 - 2 * k);
            total += sign * d.ctilde(l, j, m - power);
        }
    }
    return total;
}

std::vector<int64_t> row(const CartanData& d, int i, int j, int64_t upto) {
    std::vector<int64_t> out;
    for (int64_t m = 1; m <= upto; ++m) out.push_back(d.ctilde(i, j, m));
    return out;
}

}  // namespace

TEST_CASE("C~ inverts the quantized Cartan matrix") {
    for (const char* t : {"A1", "A2", "A3", "A5", "A8", "D4", "D5", "D8", "E6", "E7", "E8", "B2"}) {
        CAPTURE(t);
        const CartanPtr d = make_cartan(t);
        const int64_t h = d->coxeter();
        for (int i = 1; i <= d->rank(); ++i)
            for (int j = 1; j <= d->rank(); ++j)
                for (int64_t m = -4; m <= 4 * h; ++m) REQUIRE(product_coefficient(*d, i, j, m) == (i == j && m == 0 ? 1 : 0));
    }
}

TEST_CASE("series inversion agrees with the cached table") {
    for (const char* t : {"A4", "D6", "E6", "B2"}) {
        const CartanPtr d = make_cartan(t);
        const int order = 4 * d->coxeter();
        const auto s = ctilde_series(*d, order);
        for (int i = 1; i <= d->rank(); ++i)
            for (int j = 1; j <= d->rank(); ++j)
                for (int m = 1; m <= order; ++m) CHECK(s[i - 1][j - 1][m] == d->ctilde(i, j, m));
    }
}

TEST_CASE("displayed expansions") {
    CHECK(row(*make_cartan("A1"), 1, 1, 7) == std::vector<int64_t>{1, 0, -1, 0, 1, 0, -1});
    const CartanPtr a2 = make_cartan("A2");
    CHECK(row(*a2, 1, 1, 11) == std::vector<int64_t>{1, 0, 0, 0, -1, 0, 1, 0, 0, 0, -1});
    CHECK(row(*a2, 1, 2, 11) == std::vector<int64_t>{0, 1, 0, -1, 0, 0, 0, 1, 0, -1, 0});
    const CartanPtr b2 = make_cartan("B2");
    for (int64_t m : {3, 9, 15}) CHECK(b2->ctilde(2, 1, m) == (m == 9 ? -1 : 1));
    CHECK(b2->full_period() == 12);
    for (int64_t m = 1; m <= 30; ++m) CHECK(b2->ctilde(1, 2, m + 6) == -b2->ctilde(1, 2, m));
}

TEST_CASE("type A closed formula") {
    for (int n = 1; n <= 6; ++n) {
        const CartanPtr d = make_cartan("A" + std::to_string(n));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                CHECK(ctilde_typeA_closed(n, i, j, 0) == 0);
                for (int64_t m = 1; m <= 4 * (n + 1); ++m) CHECK(ctilde_typeA_closed(n, i, j, m) == d->ctilde(i, j, m));
            }
    }
}

TEST_CASE("N exponents") {
    const CartanPtr a2 = make_cartan("A2");
    for (int i = 1; i <= 2; ++i)
        for (int64_t a = -6; a <= 12; ++a) CHECK(n_exponent(*a2, a, i, 3, i, 3) == 0);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int64_t a = 1; a <= 5; ++a) {
                CHECK(n_exponent(*a2, -a, i, 0, j, a) == (i == j ? 1 : 0));
                CHECK(n_exponent(*a2, -a - 1, i, 0, j, a) == 0);
            }
    const CartanPtr a1 = make_cartan("A1");
    for (int64_t p = -3; p <= 3; ++p)
        for (int64_t s = p + 1; s <= p + 4; ++s) CHECK(n_sequence(*a1, 1, 2 * p, 1, 2 * s).at(2 * (s - p)) == 2);
}

TEST_CASE("n_sequence is skew and depends on s - p only") {
    for (const char* t : {"A3", "D4", "B2"}) {
        const CartanPtr d = make_cartan(t);
        for (int i = 1; i <= d->rank(); ++i)
            for (int j = 1; j <= d->rank(); ++j)
                for (int64_t s = -5; s <= 5; ++s) {
                    const ExpSeq e = n_sequence(*d, i, 0, j, s);
                    CHECK(e == -n_sequence(*d, j, s, i, 0));
                    CHECK(e == n_sequence(*d, i, 7, j, s + 7));
                    for (int64_t a = -12; a <= 40; ++a) REQUIRE(e.at(a) == 2 * n_exponent(*d, a, i, 0, j, s));
                }
    }
}

TEST_CASE("bipartite parity: only even parameters occur") {
    const CartanPtr d = make_cartan("A3");
    const int64_t xi[] = {0, 1, 0};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int64_t k = -3; k <= 3; ++k) {
                const ExpSeq e = n_sequence(*d, i, xi[i - 1], j, xi[j - 1] + 2 * k);
                for (int64_t a = -11; a <= 41; a += 2) CHECK(e.at(a) == 0);
            }
}

TEST_CASE("A versus Y") {
    const CartanPtr a3 = make_cartan("A3");
    CHECK(ay_sequence(*a3, 1, 1, 2, 2).is_zero());
    CHECK(ay_closed_form(1, 0, 2, 3).is_zero());
    const ExpSeq e = ay_closed_form(2, 0, 2, 3);
    CHECK(e == ExpSeq::unit(-4, 2) - ExpSeq::unit(-2, 2) - ExpSeq::unit(2, 2) + ExpSeq::unit(4, 2));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            for (int64_t r = -3; r <= 3; ++r)
                for (int64_t s = r - 5; s <= r + 5; ++s) {
                    if ((r - s + i - j) % 2 == 0) continue;
                    CHECK(ay_sequence(*a3, i, r, j, s) == ay_closed_form(i, r, j, s));
                }
}

TEST_CASE("unknown types") {
    CHECK_THROWS_AS(make_cartan("G2"), Error);
    CHECK_THROWS_AS(make_cartan("A9"), Error);
    CHECK_THROWS_AS(make_cartan("D3"), Error);
    CHECK(make_cartan("E8")->coxeter() == 30);
}
