#include <doctest.h>

#include "torclus/groth.hpp"

using namespace torclus;

TEST_CASE("q-characters of fundamental modules have the expected dimensions") {
    struct Case {
        const char* type;
        int node;
        size_t dim;
    };
    for (const Case& c : {Case{"A1", 1, 2}, Case{"A3", 1, 4}, Case{"A3", 2, 6}, Case{"A3", 3, 4}, Case{"A4", 2, 10}, Case{"B2", 1, 4},
                          Case{"B2", 2, 5}}) {
        CAPTURE(c.type);
        CAPTURE(c.node);
        const CartanPtr d = make_cartan(c.type);
        const auto chi = q_character_thin(*d, YMonomial::var(c.node, 0));
        CHECK(chi.size() == c.dim);
        size_t dominant = 0;
        for (const auto& [m, k] : chi) dominant += m.is_dominant() ? 1 : 0;
        CHECK(dominant == 1);
        for (const auto& [m, k] : chi) CHECK(nakajima_leq(m, YMonomial::var(c.node, 0), *d));
    }
}

TEST_CASE("KR modules of type A are thin") {
    const CartanPtr a2 = make_cartan("A2");
    const auto chi = q_character_thin(*a2, YMonomial::var(1, 0) * YMonomial::var(1, 2));
    CHECK(chi.size() == 6);
}

TEST_CASE("non-thin inputs are refused") {
    const CartanPtr a1 = make_cartan("A1");
    CHECK_THROWS_AS(q_character_thin(*a1, YMonomial::var(1, 0) * YMonomial::var(1, 4)), Error);
    const BackendPtr d4 = make_cartan_backend(make_cartan("D4"));
    CHECK_THROWS_AS(fundamental_class_thin(d4, 1, 0), Error);
}

TEST_CASE("height functions") {
    const CartanPtr d4 = make_cartan("D4");
    const HeightFunction h = bipartite_height(*d4);
    CHECK(h.is_bipartite(*d4));
    CHECK(h(1) == 0);
    HeightFunction bad{{0, 0, 1, 1}};
    CHECK_FALSE(bad.is_bipartite(*d4));
    CHECK_THROWS_AS(build_c1_seed(d4, bad), Error);
}

TEST_CASE("C1 classes") {
    const CartanPtr a2 = make_cartan("A2");
    const HeightFunction xi = bipartite_height(*a2);
    const BackendPtr b = profile_c1(a2, xi).backend();
    CHECK(truncated_class_C1(b, xi, C1Label::Top, 1) == parse_element(b, "Y[1,2]"));
    CHECK(truncated_class_C1(b, xi, C1Label::KR, 2) == parse_element(b, "Y[2,1] Y[2,3]"));
    CHECK(truncated_class_C1(b, xi, C1Label::Bottom, 1) == parse_element(b, "Y[1,0] + Y[1,2]^-1 Y[2,1] + Y[2,3]^-1"));
    CHECK(truncated_class_C1(b, xi, C1Label::Bottom, 2) == parse_element(b, "Y[2,1] + Y[1,2] Y[2,3]^-1"));
    CHECK(minimal_affinization_C1(b, 1) == parse_element(b, "Y[1,0] Y[2,3] + Y[1,2]^-1 Y[2,1] Y[2,3]"));
    CHECK_THROWS_AS(truncated_class_C1(b, xi, C1Label::Top, 3), Error);
}

TEST_CASE("C1 Lambda matrices") {
    const CartanPtr a2 = make_cartan("A2");
    const HeightFunction xi = bipartite_height(*a2);
    const IntMatrix L0 = c1_lambda(*a2, xi, 0);
    for (size_t i = 0; i < L0.size(); ++i)
        for (size_t j = 0; j < L0.size(); ++j) CHECK(L0[i][j] == -L0[j][i]);
    const ToroidalSeed s = build_c1_seed(a2, xi);
    CHECK(s.m == 2);
    CHECK(s.n() == 4);
}

TEST_CASE("E-blocks") {
    const CartanPtr a2 = make_cartan("A2");
    const BackendPtr b = make_cartan_backend(a2);
    CHECK(e_block(b, 1, YMonomial::var(1, 0)) == parse_element(b, "Y[1,0] + Y[1,2]^-1 Y[2,1]"));
    CHECK(e_block(b, 1, YMonomial::var(2, 1)) == parse_element(b, "Y[2,1]"));
    CHECK_THROWS_AS(e_block(b, 1, YMonomial::var(1, 0, -1)), Error);
    for (int k = 1; k <= 3; ++k) {
        CHECK(verify_e_block_formula(a2, 1, 0, k));
        CHECK(verify_e_block_quotient(a2, 2, 1, k));
    }
}

TEST_CASE("sl2 classes") {
    const BackendPtr b = make_cartan_backend(make_cartan("A1"), QuotientContext::standard());
    CHECK(kr_class_sl2(b, 0, 0) == TorusElement::one(b));
    CHECK(kr_class_sl2(b, 2, 0) == parse_element(b, "Y[1,0] Y[1,2] + Y[1,0] Y[1,4]^-1 + Y[1,2]^-1 Y[1,4]^-1"));
    for (int k = 1; k <= 4; ++k) CHECK(tsystem_sl2(b, k, 0));
    for (int l = 2; l <= 5; ++l) CHECK(kr_recursion_sl2(b, l, 2));
}

TEST_CASE("fit_identity") {
    const BackendPtr b = make_cartan_backend(make_cartan("A1"));
    const TorusElement x = parse_element(b, "Y[1,0]"), y = parse_element(b, "Y[1,2]^-1");
    const TorusElement lhs = x.times(ParamMonomial::t(0)) + y.times(ParamLaurent(2));
    const auto c = fit_identity(lhs, {x, y});
    CHECK(c[0] == ParamLaurent(ParamMonomial::t(0)));
    CHECK(c[1] == ParamLaurent(2));
    CHECK_THROWS_AS(fit_identity(lhs, {x, x}), Error);
    CHECK_THROWS_AS(fit_identity(lhs + TorusElement::one(b), {x, y}), Error);
}

TEST_CASE("Report") {
    Report r("demo");
    r.check("a", true);
    r.equal("b", std::string("x"), std::string("y"));
    r.guard("c", [] { throw Error(ErrorKind::NotThin, "boom"); });
    CHECK(r.items().size() == 3);
    CHECK(r.failures() == 2);
    CHECK_FALSE(r.ok());
    CHECK(r.text().find("FAIL b") != std::string::npos);
    CHECK(r.text().rfind("demo: 1/3 passed", 0) == 0);
}

TEST_CASE("verify ids are all known") {
    CHECK(verify_ids().size() == 13);
    CHECK_THROWS_AS(run_verify("nope"), Error);
}

TEST_CASE("golden corpus") {
    for (const auto& id : verify_ids()) {
        CAPTURE(id);
        const Report r = run_verify(id);
        INFO(r.text());
        CHECK(r.ok());
    }
}
