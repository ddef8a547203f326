#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "p4/io.hpp"
#include "support.hpp"

using namespace p4;
using namespace p4::test;
using p4::io::json;

TEST_CASE("value forms") {
    CHECK(io::to_json(Q("-3/6")) == "-1/2");
    CHECK(io::to_json(Q("4")) == "4");
    CHECK(io::to_json(P({"1", "0", "-2/3"})) == json::array({"1", "0", "-2/3"}));
    CHECK(io::to_json(Poly{}) == json::array());
    RatFun f(P({"1"}), P({"0", "2"}));
    json j = io::to_json(f);
    CHECK(io::ratfun_from_json(j) == f);
    CHECK(io::rat_from_json("6/4") == Q("3/2"));
}

TEST_CASE("strict readers") {
    CHECK_THROWS_AS(io::rat_from_json(json(3)), ParseError);
    CHECK_THROWS_AS(io::rat_from_json("1/0"), ParseError);
    CHECK_THROWS_AS(io::rat_from_json("x"), ParseError);
    CHECK_THROWS_AS(io::poly_from_json(json{{"a", 1}}), ParseError);
    CHECK_THROWS_AS(io::ratfun_from_json(json{{"num", {"1"}}, {"den", json::array()}}), ParseError);
    CHECK_THROWS_AS(io::ratfun_from_json(json{{"num", {"1"}}}), ParseError);
    CHECK_THROWS_AS(io::parse("{\"a\":"), ParseError);
}

TEST_CASE("random round trips") {
    Rng rng(11);
    for (int t = 0; t < 50; ++t) {
        Poly p = rng.poly(6, false);
        CHECK(io::poly_from_json(io::to_json(p)) == p);
        RatFun f(rng.poly(5), rng.poly(4));
        CHECK(io::ratfun_from_json(io::parse(io::to_json(f).dump())) == f);
    }
}

TEST_CASE("record round trips") {
    Generated g = gen_2x(2, 3, false);
    P4Solution y = io::p4_from_json(io::record(g.y));
    CHECK(y.y == g.y.y);
    CHECK(y.a == g.y.a);
    CHECK(y.b == g.y.b);
    RhoSolution r = io::rho_from_json(io::record(g.rho));
    CHECK(r.rho == g.rho.rho);
    CHECK(r.mu_sq == g.rho.mu_sq);
    CHECK(r.nu == g.rho.nu);

    SymMultiplet m = build_multiplet(g.rho);
    VTriple v = multiplet_vtriple(g.rho);
    auto [m2, v2] = io::multiplet_from_json(io::record(m, v));
    CHECK(m2 == m);
    CHECK(v2 == v);
    json nov = io::record(m, v);
    nov.erase("v");
    CHECK(io::multiplet_from_json(nov).second == v);

    HamiltonianFrame fr = frame_from_rho(g.rho, -1);
    CHECK(io::frame_from_json(io::record(fr)) == fr);
}

TEST_CASE("latex") {
    CHECK(io::latex(Q("-3/4")) == "-\\frac{3}{4}");
    CHECK(io::latex(P({"1", "0", "-2"})) == "-2x^{2} + 1");
    CHECK(io::latex(P({"0", "1/2"})) == "\\frac{1}{2}x");
    CHECK(io::latex(RatFun(P({"1"}), P({"0", "1"}))) == "\\frac{1}{x}");
    CHECK(io::latex(RatFun(Poly{})) == "0");
}
