#include <doctest.h>

#include "torclus/params.hpp"

using namespace torclus;

TEST_CASE("eventually periodic sequences are stored canonically") {
    const ExpSeq a = ExpSeq::periodic(0, {1, 2}, {1, 2});
    const ExpSeq b = ExpSeq::periodic(0, {}, {1, 2, 1, 2});
    CHECK(a == b);
    CHECK(a.period() == 2);
    CHECK(a.at(7) == 2);
    CHECK(a.at(-1) == 0);
    CHECK(ExpSeq::finite(-3, {0, 0, 4, 0}) == ExpSeq::unit(-1, 4));
    CHECK((ExpSeq::unit(2, 3) - ExpSeq::unit(2, 3)).is_zero());
}

TEST_CASE("sums of periodic sequences align their tails") {
    const ExpSeq x = ExpSeq::periodic(0, {}, {1, -1});
    const ExpSeq y = ExpSeq::periodic(3, {5}, {2, 0, 0});
    const ExpSeq s = x + y;
    for (int64_t a = -2; a < 40; ++a) CHECK(s.at(a) == x.at(a) + y.at(a));
    CHECK(s.period() == 6);
    CHECK(ExpSeq::compare(x, x) == 0);
    CHECK(ExpSeq::compare(ExpSeq::unit(0, 2), ExpSeq{}) != 0);
}

TEST_CASE("halving and projection") {
    CHECK(ExpSeq::unit(4, 6).halved() == ExpSeq::unit(4, 3));
    CHECK_THROWS_AS(ExpSeq::unit(4, 3).halved(), Error);
    const ExpSeq p = ExpSeq::periodic(-2, {2, 0, 4}, {-2, 2});
    CHECK(p.projected({-2, 0, 5}) == ExpSeq::unit(-2, 2) + ExpSeq::unit(0, 4) + ExpSeq::unit(5, -2));
}

TEST_CASE("parameter monomial text round-trips") {
    const ParamMonomial m = ParamMonomial::t(-2) * ParamMonomial::t(0, -1) * ParamMonomial(ExpSeq::periodic(8, {}, {-6, 0, 6, 0, 0, 0}));
    CHECK(m.str() == "t[-2] t[0]^{-1/2} *PER(5,6)[0,0,0,-3,0,3]");
    CHECK(parse_param_monomial(m.str()) == m);
    CHECK(ParamMonomial().str() == "1");
    CHECK(exponent_text(-1) == "-1/2");
    CHECK(exponent_text(4) == "2");
    CHECK_THROWS_AS(parse_param_monomial("t[1"), Error);
}

TEST_CASE("standard quotient moves far parameters onto t_{-2}, t_2") {
    const QuotientContext q = QuotientContext::standard();
    CHECK(q.reduce(ParamMonomial::t(-4)) == ParamMonomial::t(-2) * ParamMonomial::t(2) * ParamMonomial::t(4).inverse());
    CHECK(q.in_lattice(ParamMonomial::t(-4) * ParamMonomial::t(4) * ParamMonomial::t(-2).inverse() * ParamMonomial::t(2).inverse()));
    CHECK(q.in_lattice(ParamMonomial::t(-4) * ParamMonomial::t(-2).inverse() * ParamMonomial::t(2).inverse() * ParamMonomial::t(4)));
    CHECK_FALSE(q.in_lattice(ParamMonomial::t(0)));
    CHECK_FALSE(q.in_lattice(ParamMonomial::t(-2) * ParamMonomial::t(0, -4) * ParamMonomial::t(2)));
    CHECK_FALSE(q.in_lattice(ParamMonomial(ExpSeq::periodic(0, {}, {2}))));
}

TEST_CASE("custom quotients reduce to a canonical representative") {
    const ParamMonomial r = ParamMonomial::t(1) * ParamMonomial::t(3, -4);
    const QuotientContext q = QuotientContext::custom({r});
    CHECK(q.in_lattice(r.pow(3)));
    CHECK_FALSE(q.in_lattice(ParamMonomial::t(3)));
    CHECK(q.reduce(ParamMonomial::t(1, 5)) == q.reduce(ParamMonomial::t(1, 5) * r.inverse()));
    CHECK_THROWS_AS(QuotientContext::custom({ParamMonomial(ExpSeq::periodic(0, {}, {2}))}), Error);
}

TEST_CASE("specialization weights") {
    const ParamMonomial m = ParamMonomial::t(1, 3) * ParamMonomial::t(2, -2);
    CHECK(pm_specialize(m, {{{1, 2}}, 0}) == 6);
    CHECK(pm_specialize(m, {{}, 1}) == 1);
    const ParamMonomial tail(ExpSeq::periodic(0, {}, {2, -2}));
    CHECK_THROWS_AS(pm_specialize(tail, {{}, 1}), Error);
    CHECK(pm_specialize(tail, {{{0, 1}, {3, 1}}, 0}) == 0);
}

TEST_CASE("Laurent polynomials in the parameters") {
    const QuotientContext none;
    const ParamLaurent x(ParamMonomial::t(0));
    const ParamLaurent one_minus = ParamLaurent(1) - x;
    const ParamLaurent sq = pl_mul(one_minus, one_minus, none);
    CHECK(sq == ParamLaurent(1) - x.scaled(2) + ParamLaurent(ParamMonomial::t(0, 4)));
    CHECK(pl_divide(sq, one_minus, none) == one_minus);
    CHECK_THROWS_AS(pl_divide(ParamLaurent(1) + x, one_minus, none), Error);
    CHECK(pl_pow(one_minus, 3, none).value_at_one() == 0);
    CHECK((ParamLaurent(1) + x).is_positive());
    CHECK_FALSE(one_minus.is_positive());
    CHECK(one_minus.bar() == ParamLaurent(1) - ParamLaurent(ParamMonomial::t(0).inverse()));
    CHECK(parse_param_laurent(sq.str()) == sq);
}
