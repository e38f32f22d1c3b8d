#pragma once

// Randomized property suites. Each suite returns how many cases ran and which failed,
// so the unit tests and the acceptance runner share one implementation.

#include <random>
#include <string>
#include <vector>

#include "torclus/groth.hpp"

namespace props {

using namespace torclus;

struct Outcome {
    std::string name;
    size_t cases = 0;
    size_t failures = 0;
    std::string first_failure;

    void record(bool ok, const std::string& what) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first_failure = what;
    }
    bool ok() const { return failures == 0 && cases > 0; }
};

inline ParamMonomial random_pm(std::mt19937_64& rng, int64_t lo = -4, int64_t hi = 4) {
    std::uniform_int_distribution<int64_t> idx(lo, hi), val(-3, 3);
    std::uniform_int_distribution<int> count(0, 3);
    ExpSeq e;
    for (int k = count(rng); k > 0; --k) e = e + ExpSeq::unit(idx(rng), val(rng));
    return ParamMonomial(e);
}

inline ParamLaurent random_pl(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 2);
    std::uniform_int_distribution<int64_t> coef(-2, 2);
    ParamLaurent out;
    for (int k = count(rng); k > 0; --k) {
        int64_t c = coef(rng);
        out += ParamLaurent(random_pm(rng), c == 0 ? 1 : c);
    }
    return out.is_zero() ? ParamLaurent(1) : out;
}

inline YMonomial random_ym(std::mt19937_64& rng, const BackendPtr& b) {
    std::map<YVariable, int64_t> m;
    std::uniform_int_distribution<int> count(0, 3);
    std::uniform_int_distribution<int64_t> exp(-2, 2);
    if (const auto* fb = dynamic_cast<const FiniteBackend*>(b.get())) {
        std::uniform_int_distribution<int> node(1, fb->size());
        for (int k = count(rng); k > 0; --k) m[YVariable{node(rng), 0}] += exp(rng);
    } else {
        const auto& d = dynamic_cast<const CartanBackend&>(*b).cartan();
        std::uniform_int_distribution<int> node(1, d.rank());
        std::uniform_int_distribution<int64_t> r(-3, 3);
        for (int k = count(rng); k > 0; --k) {
            const int i = node(rng);
            m[YVariable{i, 2 * r(rng) + (i % 2)}] += exp(rng);
        }
    }
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return YMonomial::from_map(m);
}

inline TorusElement random_element(std::mt19937_64& rng, const BackendPtr& b, int max_terms = 3) {
    std::uniform_int_distribution<int> count(1, max_terms);
    TorusElement out(b);
    for (int k = count(rng); k > 0; --k) out += TorusElement(b, random_ym(rng, b), random_pl(rng));
    return out;
}

inline std::vector<BackendPtr> sample_backends() {
    return {
        make_cartan_backend(make_cartan("A2")),
        make_cartan_backend(make_cartan("A2"), QuotientContext::standard()),
        make_cartan_backend(make_cartan("B2")),
        make_finite_backend(3, {1, 2}, {{{0, 1, -1}, {-1, 0, 0}, {1, 0, 0}}, {{0, 0, -1}, {0, 0, 0}, {1, 0, 0}}}),
    };
}

inline Outcome star_associativity(uint64_t seed, size_t n = 240) {
    Outcome o{"star associativity"};
    std::mt19937_64 rng(seed);
    const auto backends = sample_backends();
    for (size_t c = 0; c < n; ++c) {
        const BackendPtr& b = backends[c % backends.size()];
        const TorusElement x = random_element(rng, b), y = random_element(rng, b), z = random_element(rng, b);
        o.record(star(star(x, y), z) == star(x, star(y, z)), x.str() + " | " + y.str() + " | " + z.str());
    }
    return o;
}

inline Outcome bar_properties(uint64_t seed, size_t n = 240) {
    Outcome o{"bar anti-multiplicative involution"};
    std::mt19937_64 rng(seed);
    const auto backends = sample_backends();
    for (size_t c = 0; c < n; ++c) {
        const BackendPtr& b = backends[c % backends.size()];
        const TorusElement x = random_element(rng, b), y = random_element(rng, b);
        o.record(bar(star(x, y)) == star(bar(y), bar(x)) && bar(bar(x)) == x, x.str() + " | " + y.str());
    }
    return o;
}

inline Outcome quotient_congruence(uint64_t seed, size_t n = 240) {
    Outcome o{"quotient equality congruence"};
    std::mt19937_64 rng(seed);
    const std::vector<QuotientContext> qs{QuotientContext::standard(), profile_b2_qflat().quotient,
                                          QuotientContext::custom({ParamMonomial::t(1, 2) * ParamMonomial::t(3, -4)})};
    for (size_t c = 0; c < n; ++c) {
        const QuotientContext& q = qs[c % qs.size()];
        const ParamMonomial a = random_pm(rng, -8, 8), z = random_pm(rng, -8, 8);
        ParamMonomial rel;
        if (q.kind() == QuotientContext::Kind::Standard) {
            std::uniform_int_distribution<int64_t> k(2, 4), e(-2, 2);
            const int64_t kk = k(rng);
            rel = (ParamMonomial::t(-2 * kk) * ParamMonomial::t(2 * kk) * ParamMonomial::t(-2).inverse() * ParamMonomial::t(2).inverse()).pow(e(rng));
        } else {
            std::uniform_int_distribution<int64_t> e(-2, 2);
            rel = q.relations()[0].pow(e(rng));
        }
        const ParamMonomial b = a * rel;
        const bool ok = q.equal(a, b) && q.equal(a * z, b * z) && q.equal(a.inverse(), b.inverse()) && q.reduce(q.reduce(a)) == q.reduce(a) &&
                        q.equal(a, q.reduce(a)) && q.reduce(a) == q.reduce(b) && q.reduce(a * z) == q.reduce(q.reduce(a) * z);
        o.record(ok, a.str() + " | " + z.str() + " | " + q.str());
    }
    return o;
}

// Lattice membership against an exhaustive search over small coefficient vectors.
inline Outcome lattice_bruteforce(uint64_t seed, size_t n = 240) {
    Outcome o{"brute-force lattice agreement"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> nrel(1, 3), val(-1, 1), coef(-2, 2);
    constexpr int K = 5;  // exponents live on t_0 .. t_4
    size_t members = 0;
    auto vec_pm = [](const std::vector<int64_t>& v) {
        ExpSeq e;
        for (int a = 0; a < K; ++a) e = e + ExpSeq::unit(a, 2 * v[static_cast<size_t>(a)]);
        return ParamMonomial(e);
    };
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<int64_t>> rels;
        for (int r = nrel(rng); r > 0; --r) {
            std::vector<int64_t> v(K);
            for (auto& x : v) x = val(rng);
            rels.push_back(v);
        }
        std::vector<ParamMonomial> pms;
        for (const auto& r : rels) pms.push_back(vec_pm(r));
        const QuotientContext q = QuotientContext::custom(pms);
        std::vector<int64_t> d(K, 0), eps(K, 0);
        for (const auto& r : rels) {
            const int cc = coef(rng);
            for (int a = 0; a < K; ++a) d[a] += cc * r[a];
        }
        if (c % 2 == 1)
            for (auto& x : eps) x = val(rng);
        for (int a = 0; a < K; ++a) d[a] += eps[a];
        // eps is in the lattice iff some coefficient vector in [-4, 4]^r reaches it
        bool found = false;
        const size_t R = rels.size();
        std::vector<int> cv(R, -4);
        while (!found) {
            std::vector<int64_t> s(K, 0);
            for (size_t r = 0; r < R; ++r)
                for (int a = 0; a < K; ++a) s[a] += cv[r] * rels[r][a];
            found = s == eps;
            size_t p = 0;
            while (p < R && ++cv[p] > 4) cv[p++] = -4;
            if (p == R) break;
        }
        members += found ? 1 : 0;
        o.record(q.in_lattice(vec_pm(d)) == found, vec_pm(d).str() + " | " + q.str());
    }
    o.record(members > n / 2 && members < n, "sample lacks members or non-members: " + std::to_string(members));
    return o;
}

inline Outcome division_round_trip(uint64_t seed, size_t n = 240) {
    Outcome o{"exact-division round trips"};
    std::mt19937_64 rng(seed);
    const auto backends = sample_backends();
    for (size_t c = 0; c < n; ++c) {
        const BackendPtr& b = backends[c % backends.size()];
        const TorusElement q = random_element(rng, b);
        const TorusElement d = random_element(rng, b, 2);
        bool ok = true;
        try {
            ok = exact_divide_right(star(q, d), d) == q && exact_divide_left(star(d, q), d) == q;
        } catch (const Error&) {
            ok = false;
        }
        o.record(ok, q.str() + " | " + d.str());
    }
    return o;
}

struct SeedCase {
    std::string name;
    ToroidalSeed seed;
};

inline std::vector<SeedCase> seed_cases() {
    std::vector<SeedCase> out;
    out.push_back({"two-parameter", two_param_seed()});
    for (const char* t : {"A2", "A3", "D4"}) {
        const CartanPtr d = make_cartan(t);
        out.push_back({std::string("C1 ") + t, build_c1_seed(d, bipartite_height(*d))});
    }
    const CategoryProfile ob = profile_c1_ob(make_cartan("A2"));
    const BackendPtr b = ob.backend();
    out.push_back({"C1ob A2", make_seed(b, {parse_element(b, "Y[1,2]"), parse_element(b, "Y[2,3]"), parse_element(b, "Y[1,0] Y[1,2]"),
                                            parse_element(b, "Y[2,1] Y[2,3]")},
                                        {{0, 1}, {-1, 0}, {-1, 0}, {1, -1}}, 2)});
    return out;
}

inline Outcome mutation_involution(size_t min_cases = 200) {
    Outcome o{"mutation involutivity and compatibility preservation"};
    for (const auto& sc : seed_cases()) {
        const ExchangeGraph g = exchange_graph(sc.seed, 5000);
        for (size_t u = 0; u < g.nodes.size(); ++u) {
            const ToroidalSeed& s = g.nodes[u];
            for (int k = 0; k < s.m; ++k) {
                const ToroidalSeed t = mutate_seed(s, k);
                const ToroidalSeed back = mutate_seed(t, k);
                const bool ok = back.vars == s.vars && back.B == s.B && back.Q == s.Q && check_compatibility(t).ok &&
                                t.Q == mutate_Q(s.Q, k, s.B, s.backend->quotient()) && t.Q == compute_Q(t.vars);
                o.record(ok, sc.name + " node " + std::to_string(u) + " direction " + std::to_string(k + 1));
            }
        }
    }
    if (o.cases < min_cases) o.record(false, "too few cases");
    return o;
}

inline Outcome classical_equivalence(uint64_t seed, size_t n = 240) {
    Outcome o{"classical-specialization equivalence"};
    std::mt19937_64 rng(seed);
    const auto cases = seed_cases();
    std::uniform_int_distribution<int> len(1, 7);
    for (size_t c = 0; c < n; ++c) {
        const SeedCase& sc = cases[c % cases.size()];
        ToroidalSeed s = sc.seed;
        ClassicalSeed cs = classical_specialize(s);
        std::uniform_int_distribution<int> dir(0, s.m - 1);
        std::string word;
        int prev = -1;
        for (int l = len(rng); l > 0; --l) {
            int k = dir(rng);
            if (k == prev && s.m > 1) k = (k + 1) % s.m;
            prev = k;
            word += std::to_string(k + 1);
            s = mutate_seed(s, k);
            cs = classical_mutate(cs, k);
        }
        bool ok = true;
        for (int i = 0; i < s.n(); ++i) ok = ok && specialize_at_one(s.vars[static_cast<size_t>(i)]) == cs.vars[static_cast<size_t>(i)];
        o.record(ok && s.B == cs.B, sc.name + " word " + word);
    }
    return o;
}

inline std::vector<Outcome> all_suites(uint64_t seed = 7) {
    return {star_associativity(seed),          bar_properties(seed + 1), mutation_involution(),
            quotient_congruence(seed + 2),     lattice_bruteforce(seed + 3), division_round_trip(seed + 4),
            classical_equivalence(seed + 5)};
}

}  // namespace props
