#include <doctest.h>

#include "torclus/groth.hpp"
#include "torclus/seedio.hpp"

using namespace torclus;

TEST_CASE("seed files round-trip") {
    const ToroidalSeed s = two_param_seed();
    const std::string text = seed_to_json(s);
    const ToroidalSeed back = seed_from_json(text);
    CHECK(back.vars == s.vars);
    CHECK(back.B == s.B);
    CHECK(back.Q == s.Q);
    CHECK(seed_to_json(back) == text);

    const CartanPtr d = make_cartan("A3");
    const ToroidalSeed c1 = mutate_seed(build_c1_seed(d, bipartite_height(*d)), 1);
    const std::string t2 = seed_to_json(c1);
    CHECK(t2.find("\"project\"") != std::string::npos);
    CHECK(seed_to_json(seed_from_json(t2)) == t2);

    const BackendPtr bq = profile_b2_qflat().backend();
    const ToroidalSeed b2s = make_seed(bq, {TorusElement::y(bq, 2, 5), parse_element(bq, "Y[1,2] Y[1,4]")}, {{}, {}}, 0);
    const std::string t3 = seed_to_json(b2s);
    CHECK(seed_from_json(t3).backend->quotient().kind() == QuotientContext::Kind::Custom);
    CHECK(seed_to_json(seed_from_json(t3)) == t3);
}

TEST_CASE("malformed seed files") {
    CHECK_THROWS_AS(seed_from_json("{"), Error);
    CHECK_THROWS_AS(seed_from_json(R"({"type": "A2", "backend": {"kind": "cartan"}})"), Error);
    CHECK_THROWS_AS(seed_from_json(R"({"type": "A2", "backend": {"kind": "other"}, "variables": [], "B": [], "exchangeable": 0})"), Error);
    CHECK_THROWS_AS(seed_from_json(R"({"type": "A2", "backend": {"kind": "cartan"}, "variables": ["Y[1,0]"], "B": [[1, 2]], "exchangeable": 1})"),
                    Error);
    CHECK_THROWS_AS(seed_from_json(R"({"type": "A2", "backend": {"kind": "cartan"}, "quotient": "weird", "variables": [], "B": [], "exchangeable": 0})"),
                    Error);
}
