#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "p4/ratfun.hpp"
#include "support.hpp"

#include <optional>

using namespace p4;
using namespace p4::test;

namespace {

// Evaluate a RatFun at a point where its denominator does not vanish.
std::optional<BigRat> at(const RatFun &f, const BigRat &t) {
    BigRat d = f.den().eval(t);
    if (sgn(d) == 0)
        return std::nullopt;
    return BigRat(f.num().eval(t) / d);
}

} // namespace

TEST_CASE("rationals print and parse canonically") {
    CHECK(to_string(Q("6/4")) == "3/2");
    CHECK(to_string(Q("-0/5")) == "0");
    CHECK(to_string(Q("  7 ")) == "7");
    CHECK(Q("-3/6") == BigRat(-1, 2));
    CHECK_THROWS_AS(parse_rat("3/-6"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK_THROWS_AS(parse_rat("2/"), ParseError);
}

TEST_CASE("poly_derivative") {
    CHECK(poly_derivative(P({"1"})).is_zero());
    CHECK(poly_derivative(P({"0", "2"})) == P({"2"}));
    CHECK(poly_derivative(P({"-2", "0", "4"})) == P({"0", "8"}));
}

TEST_CASE("poly canonical form") {
    CHECK(P({"1", "0", "0"}).degree() == 0);
    CHECK(P({"0"}).is_zero());
    CHECK(Poly().degree() == -1);
    CHECK((P({"1", "1"}) - P({"1", "1"})).coeffs().empty());
}

TEST_CASE("division, gcd and squarefree") {
    Rng rng(7);
    for (int it = 0; it < 40; ++it) {
        Poly a = rng.poly(6), b = rng.poly(4);
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
        Poly c = rng.poly(3);
        Poly g = gcd(a * c, b * c);
        CHECK(g.lead() == 1);
        CHECK(divmod(a * c, g).rem.is_zero());
        CHECK(divmod(b * c, g).rem.is_zero());
        CHECK(divmod(g, c.monic()).rem.is_zero());
        auto eg = ext_gcd(a, b);
        CHECK(eg.s * a + eg.t * b == eg.g);
    }
    CHECK_THROWS_AS(divmod(P({"1"}), Poly()), DivisionByZero);
    CHECK(gcd(Poly(), Poly()).is_zero());

    Poly p = P({"3"}) * pow(P({"-1", "1"}), 3) * P({"1", "0", "1"});
    auto sq = squarefree(p);
    REQUIRE(sq.size() == 3);
    CHECK(sq[0] == P({"1", "0", "1"}));
    CHECK(sq[1] == P({"1"}));
    CHECK(sq[2] == P({"-1", "1"}));
}

TEST_CASE("ratfun_arith examples") {
    RatFun inv_x(P({"1"}), P({"0", "1"}));
    CHECK(ratfun_arith(inv_x, -inv_x, ArithOp::add).is_zero());
    RatFun a(P({"0", "1"}), P({"1", "1"}));
    RatFun b(P({"1", "1"}), P({"0", "1"}));
    CHECK(ratfun_arith(a, b, ArithOp::mul) == RatFun(1));
    RatFun c(P({"-1", "0", "1"}), P({"-1", "1"}));
    CHECK(c.num() == P({"1", "1"}));
    CHECK(c.den() == P({"1"}));
    CHECK_THROWS_AS(ratfun_arith(a, RatFun(), ArithOp::div), DivisionByZero);
    CHECK_THROWS_AS(RatFun(P({"1"}), Poly()), DivisionByZero);
}

TEST_CASE("normalization makes the denominator monic and coprime") {
    RatFun f(P({"2", "2"}), P({"4", "0", "-4"})); // 2(x+1) / (-4)(x^2-1)
    CHECK(f.den() == P({"-1", "1"}));
    CHECK(f.num() == P({"-1/2"}));
}

TEST_CASE("arithmetic agrees with pointwise evaluation") {
    Rng rng(11);
    for (int it = 0; it < 60; ++it) {
        RatFun f(rng.poly(4), rng.poly(3));
        RatFun g(rng.poly(4), rng.poly(3));
        BigRat t = rng.rat(20);
        auto ft = at(f, t), gt = at(g, t);
        if (!ft || !gt)
            continue;
        CHECK(at(f + g, t) == BigRat(*ft + *gt));
        CHECK(at(f - g, t) == BigRat(*ft - *gt));
        CHECK(at(f * g, t) == BigRat(*ft * *gt));
        if (sgn(*gt) != 0 && !g.is_zero())
            CHECK(at(f / g, t) == BigRat(*ft / *gt));
    }
}

TEST_CASE("round trip f*g/g = f") {
    Rng rng(13);
    for (int it = 0; it < 40; ++it) {
        RatFun f(rng.poly(5), rng.poly(4));
        RatFun g(rng.poly(5), rng.poly(4));
        CHECK(f * g / g == f);
    }
}

TEST_CASE("log_derivative") {
    CHECK(log_derivative(RatFun(5)).is_zero());
    CHECK(log_derivative(RatFun::x()) == RatFun(P({"1"}), P({"0", "1"})));
    CHECK(log_derivative(RatFun(P({"1", "0", "1"}))) == RatFun(P({"0", "2"}), P({"1", "0", "1"})));
    CHECK_THROWS_AS(log_derivative(RatFun()), DivisionByZero);

    Rng rng(17);
    for (int it = 0; it < 30; ++it) {
        RatFun f(rng.poly(4), rng.poly(3));
        RatFun g(rng.poly(4), rng.poly(3));
        CHECK(log_derivative(f * g) == log_derivative(f) + log_derivative(g));
    }
}

TEST_CASE("derivative obeys the product and quotient rules") {
    Rng rng(19);
    for (int it = 0; it < 40; ++it) {
        Poly p = rng.poly(6), q = rng.poly(6);
        CHECK(poly_derivative(p * q) == poly_derivative(p) * q + p * poly_derivative(q));
        RatFun f(p, q);
        CHECK(f.derivative() == RatFun(p.derivative() * q - p * q.derivative(), q * q));
    }
}

TEST_CASE("wronskian") {
    CHECK(wronskian(std::vector<Poly>{P({"0", "2"})}) == P({"0", "2"}));
    CHECK(wronskian(std::vector<Poly>{P({"0", "2"}), P({"1"})}) == P({"-2"}));
    CHECK(wronskian(std::vector<Poly>{P({"-2", "0", "4"}), P({"0", "2"})}) == P({"-4", "0", "-8"}));
    // linearly dependent entries
    CHECK(wronskian(std::vector<Poly>{P({"1", "1"}), P({"2", "2"})}).is_zero());
}

TEST_CASE("wronskian is alternating and matches cofactor expansion") {
    Rng rng(23);
    for (int it = 0; it < 12; ++it) {
        std::vector<Poly> fs;
        long k = rng.integer(2, 4);
        for (long i = 0; i < k; ++i)
            fs.push_back(rng.poly(6));
        Poly w = wronskian(fs);
        long a = rng.integer(0, k - 1), b = (a + 1) % k;
        std::swap(fs[a], fs[b]);
        CHECK(wronskian(fs) == -w);
    }
    // explicit 3x3 cofactor expansion as oracle
    for (int it = 0; it < 10; ++it) {
        std::vector<Poly> fs{rng.poly(5), rng.poly(5), rng.poly(5)};
        std::vector<std::vector<Poly>> m(3);
        for (int c = 0; c < 3; ++c) {
            m[0].push_back(fs[c]);
            m[1].push_back(fs[c].derivative());
            m[2].push_back(fs[c].derivative().derivative());
        }
        Poly cof = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        CHECK(wronskian(fs) == cof);
    }
}

TEST_CASE("integrate_ratfun") {
    CHECK(integrate_ratfun(RatFun(P({"0", "0", "8/9"}))) == RatFun(P({"0", "0", "0", "8/27"})));
    CHECK_THROWS_AS(integrate_ratfun(RatFun(P({"1"}), P({"0", "1"}))), NonRationalIntegral);
    CHECK(integrate_ratfun(RatFun(P({"-1"}), P({"0", "0", "1"}))) == RatFun(P({"1"}), P({"0", "1"})));
    CHECK(integrate_ratfun(RatFun()).is_zero());
    // finite at 0: F(0) = 0
    RatFun F = integrate_ratfun(RatFun(P({"0", "-2"}), pow(P({"1", "0", "1"}), 2)));
    CHECK(F == RatFun(P({"1"}), P({"1", "0", "1"})) - RatFun(1));
    CHECK(F.num().eval(0) == 0);
}

TEST_CASE("integrate inverts differentiation") {
    Rng rng(29);
    for (int it = 0; it < 30; ++it) {
        Poly p = rng.poly(7);
        p = p - Poly::constant(p.coeff(0));
        CHECK(integrate_ratfun(RatFun(p.derivative())) == RatFun(p));
        RatFun f(rng.poly(5), rng.poly(4) * rng.poly(2));
        RatFun fx = f.derivative();
        RatFun F = integrate_ratfun(fx);
        CHECK(F.derivative() == fx);
        CHECK((F - f).is_constant());
    }
}
