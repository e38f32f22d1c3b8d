#include "torclus/cluster.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <exception>
#include <functional>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

namespace torclus {

QMatrix compute_Q(const std::vector<TorusElement>& vars) {
    const size_t n = vars.size();
    QMatrix Q(n, std::vector<ParamMonomial>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Q[i][j] = commutator_factor(vars[i], vars[j]);
            Q[j][i] = Q[i][j].inverse();
        }
    return Q;
}

ToroidalSeed make_seed(BackendPtr backend, std::vector<TorusElement> vars, IntMatrix B, int m) {
    if (static_cast<int>(B.size()) != static_cast<int>(vars.size()))
        throw Error(ErrorKind::ParseError, "B must have one row per variable");
    for (const auto& row : B)
        if (static_cast<int>(row.size()) != m) throw Error(ErrorKind::ParseError, "B must have one column per exchangeable variable");
    ToroidalSeed s;
    s.backend = std::move(backend);
    s.Q = compute_Q(vars);
    s.vars = std::move(vars);
    s.B = std::move(B);
    s.m = m;
    return s;
}

// ---------------------------------------------------------------- compatibility

namespace {

struct Rational {
    int64_t num = 0, den = 1;
};

Rational make_rat(int64_t n, int64_t d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const int64_t g = std::gcd(n, d);
    return g > 1 ? Rational{n / g, d / g} : Rational{n, d};
}

Rational rsub(Rational a, Rational b) {
    return make_rat(checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den)), checked_mul(a.den, b.den));
}
Rational rmul(Rational a, Rational b) { return make_rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den)); }
Rational rdiv(Rational a, Rational b) { return make_rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num)); }

// Solves A x = b over Q; A is rows x cols. Returns one solution or nothing.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const size_t rows = A.size(), cols = rows ? A[0].size() : 0;
    std::vector<size_t> pivcol;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && A[p][c].num == 0) ++p;
        if (p == rows) continue;
        std::swap(A[p], A[r]);
        std::swap(b[p], b[r]);
        const Rational piv = A[r][c];
        for (auto& x : A[r]) x = rdiv(x, piv);
        b[r] = rdiv(b[r], piv);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || A[i][c].num == 0) continue;
            const Rational f = A[i][c];
            for (size_t k = 0; k < cols; ++k) A[i][k] = rsub(A[i][k], rmul(f, A[r][k]));
            b[i] = rsub(b[i], rmul(f, b[r]));
        }
        pivcol.push_back(c);
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (b[i].num != 0) return std::nullopt;
    std::vector<Rational> x(cols);
    for (size_t i = 0; i < r; ++i) x[pivcol[i]] = b[i];
    return x;
}

// Indices on which the given sequences can differ from their eventual periodic behaviour, plus one joint period.
std::vector<int64_t> coordinate_window(const std::vector<const ExpSeq*>& seqs) {
    int64_t lo = 0, hi = 0, P = 1;
    bool any = false;
    for (const ExpSeq* e : seqs) {
        if (e->is_zero()) continue;
        lo = any ? std::min(lo, e->a_min()) : e->a_min();
        hi = any ? std::max(hi, e->a_tail()) : e->a_tail();
        if (e->has_tail()) P = std::lcm(P, e->period());
        any = true;
    }
    std::vector<int64_t> idx;
    if (!any) return idx;
    for (int64_t a = lo; a < hi + P; ++a) idx.push_back(a);
    return idx;
}

}  // namespace

std::optional<std::vector<int64_t>> express_in_basis(const ParamMonomial& m, const std::vector<ParamMonomial>& basis,
                                                     const QuotientContext& ctx) {
    const ParamMonomial target = ctx.reduce(m);
    std::vector<ParamMonomial> rb;
    for (const auto& b : basis) rb.push_back(ctx.reduce(b));
    std::vector<const ExpSeq*> seqs{&target.exps()};
    for (const auto& b : rb) seqs.push_back(&b.exps());
    const auto idx = coordinate_window(seqs);
    std::vector<std::vector<Rational>> A(idx.size(), std::vector<Rational>(rb.size()));
    std::vector<Rational> rhs(idx.size());
    for (size_t r = 0; r < idx.size(); ++r) {
        for (size_t c = 0; c < rb.size(); ++c) A[r][c] = {rb[c].exps().at(idx[r]), 1};
        rhs[r] = {target.exps().at(idx[r]), 1};
    }
    const auto sol = solve_rational(A, rhs);
    if (!sol) return std::nullopt;
    std::vector<int64_t> doubled;
    ExpSeq check;
    for (size_t c = 0; c < rb.size(); ++c) {
        const Rational x = (*sol)[c];
        if ((2 * x.num) % x.den != 0) return std::nullopt;
        const int64_t d = 2 * x.num / x.den;
        doubled.push_back(d);
        check = check + rb[c].exps().scaled(d);
    }
    // Solving on a window is exact only if the recombination matches everywhere.
    if (!(ctx.reduce(ParamMonomial(check.halved())) == target)) return std::nullopt;
    return doubled;
}

CompatibilityReport check_compatibility(const ToroidalSeed& seed, const std::vector<ParamMonomial>& basis) {
    CompatibilityReport rep;
    const QuotientContext& ctx = seed.backend->quotient();
    const int n = seed.n();
    for (int k = 0; k < seed.m; ++k) {
        for (int j = 0; j < n; ++j) {
            ExpSeq acc;
            for (int i = 0; i < n; ++i)
                if (seed.B[i][k] != 0) acc = acc + seed.Q[i][j].exps().scaled(seed.B[i][k]);
            const ParamMonomial pm = ctx.reduce(ParamMonomial(acc));
            if (j == k) rep.diagonal.push_back(pm);
            else if (!pm.is_one()) rep.residues.emplace_back(k, j, pm);
        }
    }
    for (const auto& [k, j, pm] : rep.residues)
        rep.failures.push_back("residue at (" + std::to_string(k + 1) + "," + std::to_string(j + 1) + "): " + pm.str());

    if (!basis.empty()) {
        for (int k = 0; k < seed.m; ++k) {
            const auto x = express_in_basis(rep.diagonal[k], basis, ctx);
            if (!x) {
                rep.failures.push_back("diagonal " + std::to_string(k + 1) + " is not a product of the basis");
                continue;
            }
            for (size_t b = 0; b < basis.size(); ++b) rep.per_parameter[static_cast<int64_t>(b) + 1].push_back((*x)[b]);
        }
    } else {
        std::vector<const ExpSeq*> seqs;
        for (const auto& d : rep.diagonal) seqs.push_back(&d.exps());
        for (int64_t a : coordinate_window(seqs)) {
            std::vector<int64_t> col;
            bool nonzero = false;
            for (const auto& d : rep.diagonal) {
                col.push_back(d.exps().at(a));
                nonzero = nonzero || col.back() != 0;
            }
            if (nonzero) rep.per_parameter[a] = col;
        }
    }
    for (const auto& [a, col] : rep.per_parameter) {
        const bool pos = std::all_of(col.begin(), col.end(), [](int64_t v) { return v > 0; });
        const bool neg = std::all_of(col.begin(), col.end(), [](int64_t v) { return v < 0; });
        const bool zero = std::all_of(col.begin(), col.end(), [](int64_t v) { return v == 0; });
        if (!(pos || neg || zero)) rep.failures.push_back("diagonal signs differ for parameter " + std::to_string(a));
    }
    rep.ok = rep.failures.empty();
    return rep;
}

std::string CompatibilityReport::str() const {
    std::string s = ok ? "compatible\n" : "NOT compatible\n";
    for (size_t k = 0; k < diagonal.size(); ++k) s += "  diag[" + std::to_string(k + 1) + "] = " + diagonal[k].str() + "\n";
    for (const auto& [a, col] : per_parameter) {
        s += "  param " + std::to_string(a) + ":";
        for (int64_t v : col) s += " " + exponent_text(v);
        s += "\n";
    }
    for (const auto& f : failures) s += "  " + f + "\n";
    return s;
}

// ---------------------------------------------------------------- mutation

IntMatrix mutate_B(const IntMatrix& B, int k) {
    IntMatrix R = B;
    for (size_t i = 0; i < B.size(); ++i)
        for (size_t j = 0; j < B[i].size(); ++j) {
            if (static_cast<int>(i) == k || static_cast<int>(j) == k) {
                R[i][j] = -B[i][j];
                continue;
            }
            const int64_t bik = B[i][k], bkj = B[k][j];
            if (bik > 0 && bkj > 0) R[i][j] = B[i][j] + bik * bkj;
            else if (bik < 0 && bkj < 0) R[i][j] = B[i][j] - bik * bkj;
        }
    return R;
}

namespace {

IntMatrix e_matrix(int n, int k, const IntMatrix& B) {
    IntMatrix E(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j != k) E[i][j] = i == j ? 1 : 0;
            else if (i == k) E[i][j] = -1;
            else E[i][j] = std::max<int64_t>(0, -B[i][k]);
        }
    }
    return E;
}

}  // namespace

IntMatrix mutate_Lambda(const IntMatrix& L, int k, const IntMatrix& B) {
    const int n = static_cast<int>(L.size());
    const IntMatrix E = e_matrix(n, k, B);
    IntMatrix R(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int a = 0; a < n; ++a) {
                if (E[a][i] == 0) continue;
                for (int b = 0; b < n; ++b) R[i][j] += E[a][i] * L[a][b] * E[b][j];
            }
    return R;
}

QMatrix mutate_Q(const QMatrix& Q, int k, const IntMatrix& B, const QuotientContext& ctx) {
    const int n = static_cast<int>(Q.size());
    const IntMatrix E = e_matrix(n, k, B);
    QMatrix R(n, std::vector<ParamMonomial>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            ExpSeq acc;
            for (int a = 0; a < n; ++a) {
                if (E[a][i] == 0) continue;
                for (int b = 0; b < n; ++b)
                    if (E[b][j] != 0 && !Q[a][b].is_one()) acc = acc + Q[a][b].exps().scaled(E[a][i] * E[b][j]);
            }
            R[i][j] = ctx.reduce(ParamMonomial(acc));
        }
    return R;
}

IntMatrix B_times_Lambda(const IntMatrix& B, const IntMatrix& L) {
    const size_t n = B.size(), m = n ? B[0].size() : 0;
    IntMatrix R(m, std::vector<int64_t>(n, 0));
    for (size_t k = 0; k < m; ++k)
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) R[k][j] += B[i][k] * L[i][j];
    return R;
}

std::pair<ParamMonomial, ParamMonomial> mutation_uv(const ToroidalSeed& seed, int k) {
    ExpSeq up, vp;
    for (int i = 0; i < seed.n(); ++i) {
        const int64_t b = seed.B[i][k];
        if (b > 0) up = up + seed.Q[k][i].exps().scaled(-b);
        else if (b < 0) vp = vp + seed.Q[k][i].exps().scaled(b);
    }
    const QuotientContext& ctx = seed.backend->quotient();
    return {ctx.reduce(ParamMonomial(up.halved())), ctx.reduce(ParamMonomial(vp.halved()))};
}

TorusElement cluster_monomial(const ToroidalSeed& seed, const std::vector<int64_t>& u) {
    TorusElement prod = TorusElement::one(seed.backend);
    ExpSeq corr;
    for (int i = 0; i < seed.n(); ++i) {
        if (u[i] == 0) continue;
        if (u[i] < 0) throw Error(ErrorKind::NotDivisible, "negative exponent in a cluster monomial");
        prod = star(prod, star_pow(seed.vars[i], u[i]));
        for (int j = i + 1; j < seed.n(); ++j)
            if (u[j] != 0) corr = corr + seed.Q[j][i].exps().scaled(u[i] * u[j]);
    }
    return prod.times(ParamMonomial(corr.halved()));
}

std::pair<TorusElement, TorusElement> exchange_terms(const ToroidalSeed& seed, int k) {
    const auto [u, v] = mutation_uv(seed, k);
    std::vector<int64_t> plus(seed.n(), 0), minus(seed.n(), 0);
    for (int i = 0; i < seed.n(); ++i) {
        if (seed.B[i][k] > 0) plus[i] = seed.B[i][k];
        else if (seed.B[i][k] < 0) minus[i] = -seed.B[i][k];
    }
    return {cluster_monomial(seed, plus).times(u), cluster_monomial(seed, minus).times(v)};
}

ToroidalSeed mutate_seed(const ToroidalSeed& seed, int k) {
    if (k < 0 || k >= seed.m) throw Error(ErrorKind::UnknownLabel, "direction " + std::to_string(k + 1) + " is not exchangeable");
    const auto [p, q] = exchange_terms(seed, k);
    ToroidalSeed out = seed;
    out.vars[k] = exact_divide_right(p + q, seed.vars[k]);
    out.B = mutate_B(seed.B, k);
    out.Q = mutate_Q(seed.Q, k, seed.B, seed.backend->quotient());
    return out;
}

ToroidalSeed mutate_word(const ToroidalSeed& seed, const std::vector<int>& word) {
    ToroidalSeed s = seed;
    for (int k : word) s = mutate_seed(s, k);
    return s;
}

// ---------------------------------------------------------------- exchange graph

ToroidalSeed canonical_seed(const ToroidalSeed& seed, std::vector<int>* perm_out) {
    std::vector<std::string> text;
    for (int i = 0; i < seed.m; ++i) text.push_back(seed.vars[i].str());
    std::vector<int> perm(seed.m);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return text[a] < text[b]; });
    std::vector<int> full(seed.n());
    std::iota(full.begin(), full.end(), 0);
    for (int i = 0; i < seed.m; ++i) full[i] = perm[i];
    ToroidalSeed out = seed;
    for (int i = 0; i < seed.n(); ++i) {
        out.vars[i] = seed.vars[full[i]];
        for (int c = 0; c < seed.m; ++c) out.B[i][c] = seed.B[full[i]][perm[c]];
        for (int j = 0; j < seed.n(); ++j) out.Q[i][j] = seed.Q[full[i]][full[j]];
    }
    if (perm_out) *perm_out = perm;
    return out;
}

std::string seed_key(const ToroidalSeed& s) {
    std::string key;
    for (const auto& v : s.vars) key += v.str() + "\n";
    for (const auto& row : s.B) {
        for (int64_t x : row) key += std::to_string(x) + ",";
        key += ";";
    }
    return key;
}

ExchangeGraph exchange_graph(const ToroidalSeed& seed, size_t max_nodes, int jobs, bool allow_partial) {
    ExchangeGraph g;
    std::unordered_map<std::string, size_t> index;
    const ToroidalSeed root = canonical_seed(seed);
    index.emplace(seed_key(root), 0);
    g.nodes.push_back(root);
    std::set<std::pair<size_t, size_t>> seen_edges;
    std::vector<size_t> frontier{0};
    bool truncated = false;
    jobs = std::max(1, jobs);

    while (!frontier.empty() && !truncated) {
        std::vector<std::pair<size_t, int>> tasks;
        for (size_t u : frontier)
            for (int k = 0; k < seed.m; ++k) tasks.emplace_back(u, k);
        std::vector<std::pair<ToroidalSeed, std::string>> results(tasks.size());
        std::vector<std::exception_ptr> errors(tasks.size());
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t t = next++; t < tasks.size(); t = next++) {
                try {
                    ToroidalSeed s = canonical_seed(mutate_seed(g.nodes[tasks[t].first], tasks[t].second));
                    std::string key = seed_key(s);
                    results[t] = {std::move(s), std::move(key)};
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            }
        };
        if (jobs == 1 || tasks.size() < 2) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        std::vector<size_t> next_frontier;
        for (size_t t = 0; t < tasks.size(); ++t) {
            if (errors[t]) std::rethrow_exception(errors[t]);
            auto it = index.find(results[t].second);
            size_t v;
            if (it == index.end()) {
                if (g.nodes.size() >= max_nodes) {
                    truncated = true;
                    break;
                }
                v = g.nodes.size();
                index.emplace(results[t].second, v);
                g.nodes.push_back(std::move(results[t].first));
                next_frontier.push_back(v);
            } else {
                v = it->second;
            }
            const size_t u = tasks[t].first;
            if (seen_edges.insert({std::min(u, v), std::max(u, v)}).second) g.edges.emplace_back(u, tasks[t].second, v);
        }
        frontier = std::move(next_frontier);
    }
    if (truncated && !allow_partial)
        throw Error(ErrorKind::Truncated, "exchange graph exceeds " + std::to_string(max_nodes) + " seeds");
    g.finite = !truncated;
    return g;
}

std::string ExchangeGraph::dot() const {
    std::string s = "graph exchange {\n";
    for (size_t i = 0; i < nodes.size(); ++i) {
        std::string label;
        for (int k = 0; k < nodes[i].m; ++k) label += (k ? "\\n" : "") + nodes[i].vars[k].str();
        s += "  n" + std::to_string(i) + " [label=\"" + label + "\"];\n";
    }
    for (const auto& [u, k, v] : edges)
        s += "  n" + std::to_string(u) + " -- n" + std::to_string(v) + " [label=\"" + std::to_string(k + 1) + "\"];\n";
    return s + "}\n";
}

std::string ExchangeGraph::summary() const {
    return "nodes=" + std::to_string(nodes.size()) + " edges=" + std::to_string(edges.size()) + " finite=" + (finite ? "true" : "false");
}

// ---------------------------------------------------------------- Laurent expansions

LaurentReport laurent_report(const ToroidalSeed& initial, const TorusElement& variable) {
    const int n = initial.n();
    std::vector<YMonomial> base;
    std::set<YVariable> support;
    for (const auto& v : initial.vars) {
        if (v.size() != 1 || !v.terms().begin()->second.is_one())
            throw Error(ErrorKind::NotDivisible, "initial variables must be monomials with coefficient 1");
        base.push_back(v.terms().begin()->first);
        for (const auto& [y, e] : base.back().exps()) support.insert(y);
    }
    for (const auto& [m, c] : variable.terms())
        for (const auto& [y, e] : m.exps()) support.insert(y);
    const std::vector<YVariable> vars(support.begin(), support.end());

    LaurentReport rep;
    for (const auto& [m, c] : variable.terms()) {
        std::vector<std::vector<Rational>> A(vars.size(), std::vector<Rational>(n));
        std::vector<Rational> rhs(vars.size());
        for (size_t r = 0; r < vars.size(); ++r) {
            for (int k = 0; k < n; ++k) A[r][k] = {base[k].exponent(vars[r]), 1};
            rhs[r] = {m.exponent(vars[r]), 1};
        }
        const auto sol = solve_rational(A, rhs);
        if (!sol) throw Error(ErrorKind::NoSolution, "monomial outside the initial torus");
        std::vector<int64_t> x;
        for (const auto& q : *sol) {
            if (q.den != 1) throw Error(ErrorKind::NoSolution, "fractional exponent in initial coordinates");
            x.push_back(q.num);
        }
        rep.coefficients[x] += c;
        rep.positive = rep.positive && c.is_positive();
    }
    return rep;
}

std::string LaurentReport::str() const {
    std::string s;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        std::string mono;
        for (size_t k = 0; k < it->first.size(); ++k) {
            if (it->first[k] == 0) continue;
            mono += (mono.empty() ? "" : " ") + std::string("X[") + std::to_string(k + 1) + "]";
            if (it->first[k] != 1) mono += "^" + std::to_string(it->first[k]);
        }
        if (mono.empty()) mono = "1";
        s += (s.empty() ? "" : " + ") + (it->second.is_one() ? mono : "(" + it->second.str() + ") * " + mono);
    }
    return s + (positive ? "  [positive]" : "  [NOT positive]");
}

// ---------------------------------------------------------------- classical oracle

ClassicalPoly classical_mul(const ClassicalPoly& x, const ClassicalPoly& y) {
    ClassicalPoly r;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            const YMonomial m = a * b;
            int64_t& slot = r[m];
            slot = checked_add(slot, checked_mul(ca, cb));
            if (slot == 0) r.erase(m);
        }
    return r;
}

namespace {

void classical_add_into(ClassicalPoly& r, const ClassicalPoly& x, int64_t sign) {
    for (const auto& [m, c] : x) {
        int64_t& slot = r[m];
        slot = checked_add(slot, checked_mul(sign, c));
        if (slot == 0) r.erase(m);
    }
}

}  // namespace

ClassicalPoly classical_divide(const ClassicalPoly& x, const ClassicalPoly& d) {
    if (d.empty()) throw Error(ErrorKind::NotDivisible, "division by zero");
    ClassicalPoly q, r = x;
    const auto& [ld, lc] = *d.rbegin();
    const YMonomial ld_inv = ld.inverse();
    const YMonomial floor_m = x.empty() ? YMonomial() : x.begin()->first * d.begin()->first.inverse();
    for (int iter = 0; !r.empty(); ++iter) {
        if (iter > 200000) throw Error(ErrorKind::NotDivisible, "classical division does not terminate");
        const auto& [lr, cr] = *r.rbegin();
        if (cr % lc != 0) throw Error(ErrorKind::NotDivisible, "classical coefficient");
        const YMonomial mq = lr * ld_inv;
        if (mq < floor_m) throw Error(ErrorKind::NotDivisible, "classical remainder");
        const ClassicalPoly term{{mq, cr / lc}};
        classical_add_into(q, term, 1);
        classical_add_into(r, classical_mul(term, d), -1);
    }
    return q;
}

std::string classical_text(const ClassicalPoly& x, bool finite) {
    if (x.empty()) return "0";
    std::string s;
    for (auto it = x.rbegin(); it != x.rend(); ++it) {
        const std::string mono = ymonomial_text(it->first, finite);
        std::string t = it->second == 1 ? mono : it->second == -1 ? "-" + mono : std::to_string(it->second) + " * " + mono;
        if (s.empty()) s = t;
        else if (t[0] == '-') s += " - " + t.substr(1);
        else s += " + " + t;
    }
    return s;
}

ClassicalSeed classical_specialize(const ToroidalSeed& seed) {
    ClassicalSeed c;
    c.m = seed.m;
    c.B = seed.B;
    for (const auto& v : seed.vars) c.vars.push_back(specialize_at_one(v));
    return c;
}

ClassicalSeed classical_mutate(const ClassicalSeed& seed, int k) {
    ClassicalPoly plus{{YMonomial(), 1}}, minus{{YMonomial(), 1}};
    for (size_t i = 0; i < seed.vars.size(); ++i) {
        const int64_t b = seed.B[i][k];
        for (int64_t e = 0; e < (b > 0 ? b : -b); ++e) {
            if (b > 0) plus = classical_mul(plus, seed.vars[i]);
            else minus = classical_mul(minus, seed.vars[i]);
        }
    }
    classical_add_into(plus, minus, 1);
    ClassicalSeed out = seed;
    out.vars[k] = classical_divide(plus, seed.vars[k]);
    // b'_ij = b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2 off the k-th row and column.
    for (size_t i = 0; i < seed.B.size(); ++i)
        for (int j = 0; j < seed.m; ++j) {
            const int64_t bik = seed.B[i][k], bkj = seed.B[k][j];
            if (static_cast<int>(i) == k || j == k) out.B[i][j] = -seed.B[i][j];
            else out.B[i][j] = seed.B[i][j] + (std::llabs(bik) * bkj + bik * std::llabs(bkj)) / 2;
        }
    return out;
}

ClassicalGraph classical_graph(const ClassicalSeed& seed, size_t max_nodes, bool finite_vars) {
    auto canon = [&](const ClassicalSeed& s) {
        std::vector<int> perm(s.m);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::string> text;
        for (int i = 0; i < s.m; ++i) text.push_back(classical_text(s.vars[i], finite_vars));
        std::sort(perm.begin(), perm.end(), [&](int a, int b) { return text[a] < text[b]; });
        ClassicalSeed out = s;
        std::string key;
        for (int i = 0; i < static_cast<int>(s.vars.size()); ++i) {
            const int src = i < s.m ? perm[i] : i;
            out.vars[i] = s.vars[src];
            for (int c = 0; c < s.m; ++c) out.B[i][c] = s.B[src][perm[c]];
            key += classical_text(out.vars[i], finite_vars) + "\n";
        }
        for (const auto& row : out.B)
            for (int64_t x : row) key += std::to_string(x) + ",";
        return std::make_pair(out, key);
    };
    ClassicalGraph g;
    std::vector<ClassicalSeed> nodes;
    std::unordered_map<std::string, size_t> index;
    std::set<std::pair<size_t, size_t>> edges;
    auto [root, key] = canon(seed);
    index.emplace(key, 0);
    nodes.push_back(root);
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        const size_t u = queue.front();
        queue.pop_front();
        for (int k = 0; k < seed.m; ++k) {
            auto [s, kk] = canon(classical_mutate(nodes[u], k));
            auto it = index.find(kk);
            size_t v;
            if (it == index.end()) {
                if (nodes.size() >= max_nodes) {
                    g.nodes = nodes.size();
                    g.edges = edges.size();
                    g.finite = false;
                    return g;
                }
                v = nodes.size();
                index.emplace(kk, v);
                nodes.push_back(s);
                queue.push_back(v);
            } else {
                v = it->second;
            }
            edges.insert({std::min(u, v), std::max(u, v)});
        }
    }
    g.nodes = nodes.size();
    g.edges = edges.size();
    g.finite = true;
    return g;
}

// ---------------------------------------------------------------- quivers

IntMatrix principal_part(const IntMatrix& B, int m) {
    IntMatrix P(m, std::vector<int64_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) P[i][j] = B[i][j];
    return P;
}

std::string dynkin_label(const IntMatrix& Bp) {
    const int n = static_cast<int>(Bp.size());
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (Bp[i][j] != -Bp[j][i]) return "";
            if (Bp[i][j] == 0) continue;
            if (std::llabs(Bp[i][j]) != 1) return "";
            adj[i].push_back(j);
        }
    std::vector<int> comp(n, -1);
    std::vector<std::string> labels;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> members{s};
        comp[s] = s;
        for (size_t t = 0; t < members.size(); ++t)
            for (int w : adj[members[t]])
                if (comp[w] == -1) {
                    comp[w] = s;
                    members.push_back(w);
                }
        size_t edge_ends = 0;
        for (int v : members) edge_ends += adj[v].size();
        const size_t k = members.size();
        if (edge_ends / 2 != k - 1) return "";  // not a tree
        std::vector<int> branch;
        for (int v : members) {
            if (adj[v].size() > 3) return "";
            if (adj[v].size() == 3) branch.push_back(v);
        }
        if (branch.empty()) {
            labels.push_back("A" + std::to_string(k));
            continue;
        }
        if (branch.size() > 1) return "";
        std::vector<size_t> arms;
        for (int w : adj[branch[0]]) {
            size_t len = 1;
            int prev = branch[0], cur = w;
            while (adj[cur].size() == 2) {
                const int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) labels.push_back("D" + std::to_string(k));
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) labels.push_back("E" + std::to_string(k));
        else return "";
    }
    std::sort(labels.begin(), labels.end());
    std::string out;
    for (const auto& l : labels) out += (out.empty() ? "" : "x") + l;
    return out;
}

QuiverClass quiver_mutation_class(const IntMatrix& Bp, size_t max_nodes) {
    QuiverClass qc;
    std::set<IntMatrix> seen{Bp};
    std::deque<IntMatrix> queue{Bp};
    const int m = static_cast<int>(Bp.size());
    while (!queue.empty()) {
        IntMatrix cur = std::move(queue.front());
        queue.pop_front();
        ++qc.explored;
        const std::string label = dynkin_label(cur);
        if (!label.empty()) {
            qc.label = label;
            qc.finite = true;
            return qc;
        }
        for (int k = 0; k < m; ++k) {
            IntMatrix nb = mutate_B(cur, k);
            if (seen.count(nb)) continue;
            if (seen.size() >= max_nodes) throw Error(ErrorKind::Truncated, "quiver mutation class exceeds " + std::to_string(max_nodes));
            seen.insert(nb);
            queue.push_back(std::move(nb));
        }
    }
    qc.label = "UNKNOWN";
    qc.finite = true;
    return qc;
}

}  // namespace torclus
