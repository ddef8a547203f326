#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "p4/solutions.hpp"
#include "support.hpp"

using namespace p4;
using namespace p4::test;

namespace {

const RatFun X = RatFun::x();

RatFun lin(const char *c) { return RatFun(Poly::monomial(Q(c), 1)); }
RatFun inv_x() { return RatFun(P({"1"}), P({"0", "1"})); }

RhoSolution rho0() { return {RatFun(P({"0", "0", "0", "8/27"})), Q("4/9"), 0}; }
RhoSolution rho22() { return {RatFun(P({"0", "8"}), P({"1", "0", "2"})), 9, -1}; }
RhoSolution rho11() { return gen_2x(1, 1, false).rho; }

// Painleve IV residual with plain RatFun arithmetic: an oracle independent of
// the denominator-cleared evaluation.
RatFun p4_direct(const P4Solution &s) {
    const RatFun &y = s.y;
    RatFun y1 = y.derivative(), y2 = y1.derivative();
    return RatFun(2) * y * y2 - y1 * y1 - RatFun(3) * y * y * y * y - RatFun(8) * X * y * y * y -
           RatFun(4) * (X * X + RatFun(s.b)) * y * y + RatFun(4 * s.a);
}

void check_p4(const P4Solution &s) {
    Report r = verify_p4(s);
    CHECK(r.passed());
    CHECK(p4_direct(s).is_zero());
}

} // namespace

TEST_CASE("verify_p4 examples") {
    RatFun y = lin("-2/3") + inv_x();
    check_p4({y, Q("4/9"), -1});
    check_p4({-inv_x() - lin("2"), 4, -1});
    Report bad = verify_p4({y, Q("4/9"), 0});
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.checks.at(0).residual.is_zero());
    CHECK_FALSE(p4_direct({y, Q("4/9"), 0}).is_zero());
    CHECK_THROWS_AS(verify_p4({RatFun(), 1, 1}), ZeroFunction);
}

TEST_CASE("verify_rho examples") {
    CHECK(verify_rho(rho0()).passed());
    CHECK(verify_rho(rho0()).checks.size() == 2);
    CHECK(verify_rho({RatFun(P({"0", "-4/3", "0", "8/27"})), Q("1/9"), 1}).passed());
    CHECK_FALSE(verify_rho({rho0().rho, 1, 0}).passed());
    // C enters only the unfactorized form
    RhoSolution lin_rho{lin("1"), 0, 0};
    // rho = x: 0 = 4*0 - 2 - 0 + 0 - 8C  =>  C = -1/4
    CHECK_FALSE(verify_rho(lin_rho).passed());
    Report withc = verify_rho(lin_rho, Q("-1/4"));
    CHECK(withc.passed());
    CHECK(withc.checks.size() == 1);
}

TEST_CASE("verify_rho_third_order examples") {
    CHECK(verify_rho_third_order(rho0()).passed());
    CHECK(verify_rho_third_order({RatFun(P({"0", "4/3", "0", "8/27"})), Q("1/9"), -1}).passed());
    CHECK(verify_rho_third_order({RatFun(), 0, 0}).passed());
    CHECK_FALSE(verify_rho_third_order({rho0().rho, 1, 0}).passed());
}

TEST_CASE("y_from_rho") {
    P4Solution m = y_from_rho(rho0(), Sign::minus);
    CHECK(m.y == lin("-2/3") + inv_x());
    CHECK(m.a == Q("4/9"));
    CHECK(m.b == -1);
    P4Solution p = y_from_rho(rho0(), Sign::plus);
    CHECK(p.y == lin("-2/3") - inv_x());
    CHECK(p.b == 1);
    P4Solution y22 = y_from_rho(rho22(), Sign::minus);
    CHECK(y22.a == 9);
    CHECK(y22.b == -2);
    check_p4(y22);
    CHECK_THROWS_AS(y_from_rho({RatFun(7), 0, 0}, Sign::plus), DegenerateRho);
}

TEST_CASE("rational_sqrt and signed_mu") {
    CHECK(rational_sqrt(Q("4/9")) == Q("2/3"));
    CHECK_FALSE(rational_sqrt(2).has_value());
    CHECK_FALSE(rational_sqrt(-1).has_value());
    CHECK(rational_sqrt(0) == BigRat(0));
    CHECK(signed_mu(Q("4/9"), Sign::minus) == Q("-2/3"));
    CHECK_THROWS_AS(signed_mu(Q("1/2"), Sign::plus), IrrationalMu);
}

TEST_CASE("rho_shift") {
    RhoSolution i = rho_shift(rho0(), Branch::i);
    CHECK(i.rho == RatFun(P({"0", "-4/3", "0", "8/27"})));
    CHECK(i.mu_sq == Q("1/9"));
    CHECK(i.nu == 1);
    RhoSolution j = rho_shift(rho0(), Branch::j);
    CHECK(j.rho == RatFun(P({"0", "4/3", "0", "8/27"})));
    CHECK(j.mu_sq == Q("1/9"));
    CHECK(j.nu == -1);
    for (long n = 1; n <= 4; ++n) {
        for (long k = 1; k <= n; ++k) {
            RhoSolution r = gen_2x(k, n, false).rho;
            RhoSolution s = rho_shift(r, Branch::i);
            CHECK(s.nu == n + k + 1);
            CHECK(s.mu_sq == (n - k + 1) * (n - k + 1));
            CHECK(verify_rho(s).passed());
            for (auto sg : {Sign::plus, Sign::minus})
                for (auto br : {Branch::i, Branch::j})
                    CHECK(verify_rho(rho_shift(r, br, sg)).passed());
        }
    }
    CHECK_THROWS_AS(rho_shift({rho0().rho, 2, 0}, Branch::i), IrrationalMu);
}

TEST_CASE("build_multiplet and verify_symmetric") {
    SymMultiplet m = build_multiplet(rho0());
    CHECK(m.f[1] == lin("-2/3") - inv_x());
    CHECK(m.f[0] + m.f[1] + m.f[2] == lin("-2"));
    CHECK(m.alpha[0] + m.alpha[1] + m.alpha[2] == -2);
    CHECK(m.alpha[1] == Q("4/3"));
    CHECK(verify_symmetric(m).passed());
    SymMultiplet bad = m;
    bad.f[0] += RatFun(1);
    CHECK_FALSE(verify_symmetric(bad).passed());
    CHECK(verify_symmetric(build_multiplet(rho22())).passed());
    CHECK(verify_symmetric(build_multiplet(rho0(), Sign::minus)).passed());
    CHECK(verify_symmetric(build_multiplet(rho22(), Sign::minus)).passed());
    VTriple v = multiplet_vtriple(rho0());
    CHECK(alphas_from_v(v) == m.alpha);
    CHECK(v.vk() == 0);
}

TEST_CASE("bilinear and Riccati identities") {
    for (const auto &r : {rho0(), rho11(), rho22()}) {
        for (auto sg : {Sign::plus, Sign::minus}) {
            Report rep = verify_bilinear_and_riccati(r, sg);
            CHECK(rep.passed());
            CHECK(rep.find("bilinear[ijk]") != nullptr);
            CHECK(rep.find("rho_eqi[k]") != nullptr);
        }
    }
    RhoSolution off = rho0();
    off.nu = 1;
    off.mu_sq = Q("1/9");
    Report rep = verify_bilinear_and_riccati(off);
    CHECK_FALSE(rep.find("riccati_plus[k]")->ok());
}

TEST_CASE("dressing chain") {
    for (const auto &r : {rho0(), rho22(), gen_2x3(1, 1, 1, Sign::plus).rho}) {
        SymMultiplet m = build_multiplet(r);
        Report rep = verify_dressing_chain(m);
        CHECK(rep.passed());
        CHECK(rep.find("rhojeq") != nullptr);
        RatFun sigma = dressing_sigma(m);
        Report shifted = verify_dressing_chain_with_sigma(m, sigma + RatFun(1));
        CHECK_FALSE(shifted.find("f2rho")->ok());
        CHECK(shifted.find("dchain")->ok());
    }
}

TEST_CASE("gen_2x") {
    Generated g = gen_2x(2, 2, false);
    CHECK(g.rho.rho == rho22().rho);
    CHECK(g.rho.nu == -1);
    CHECK(g.rho.mu_sq == 9);
    Generated g11 = gen_2x(1, 1, false);
    CHECK(g11.y.y == -inv_x() - lin("2"));
    CHECK(g11.y.a == 4);
    CHECK(g11.y.b == -1);
    CHECK_FALSE(g11.notes.empty());
    CHECK_THROWS_AS(gen_2x(1, 0, false), DegenerateRho);
    CHECK_THROWS_AS(gen_2x(0, 1, false), DomainError);
    CHECK_THROWS_AS(gen_2x(3, 1, false), DomainError);

    for (long n = 1; n <= 5; ++n) {
        for (long k = 1; k <= n; ++k) {
            for (bool hat : {false, true}) {
                Generated h = gen_2x(k, n, hat);
                CHECK(verify_rho(h.rho).passed());
                CHECK(verify_rho_third_order(h.rho).passed());
                CHECK(verify_p4(h.y).passed());
                CHECK(h.y.b == h.rho.nu - 1);
                CHECK(verify_p4(y_from_rho(h.rho, Sign::plus)).passed());
                CHECK(h.y.y == (hat ? forms::wyfq(k, n) : forms::wyfr(k, n)));
            }
        }
    }
}

TEST_CASE("gen_1x") {
    Generated g = gen_1x(1, 1, 1, false);
    // 2 d/dx ln(e^{-x^2} H_1)
    CHECK(g.rho.rho == lin("-4") + RatFun(2) * inv_x());
    CHECK_FALSE(verify_rho({lin("-2") + inv_x(), 1, 3}).passed());
    CHECK(g.y.a == 1);
    CHECK(g.y.b == 4);
    check_p4(g.y);
    Generated g2 = gen_1x(1, 1, 2, false);
    CHECK(g2.rho.mu_sq == 1);
    CHECK(g2.rho.nu == -3);
    CHECK(g2.y.b == -2);
    check_p4(g2.y);
    CHECK_THROWS_AS(gen_1x(2, 1, 1, false), DomainError);
    CHECK_THROWS_AS(gen_1x(1, 1, 3, false), DomainError);

    for (long n = 1; n <= 4; ++n) {
        for (long k = 1; k <= n; ++k) {
            auto [a1, b1] = forms::y1kn(k, n);
            CHECK(a1 == b1);
            CHECK(gen_1x(k, n, 1, false).y.y == a1);
            auto [a2, b2] = forms::y2kn(k, n);
            CHECK(a2 == b2);
            CHECK(gen_1x(k, n, 2, false).y.y == a2);
            auto [c2, d2] = forms::hwiiiq(k, n);
            CHECK(c2 == d2);
            CHECK(c2 == a2);
            auto [h1, h1b] = forms::hy2kn(k, n);
            CHECK(h1 == h1b);
            CHECK(gen_1x(k, n, 1, true).y.y == h1);
            auto [h2, h2b] = forms::hy2kn1(k, n);
            CHECK(h2 == h2b);
            CHECK(gen_1x(k, n, 2, true).y.y == h2);
            for (int var : {1, 2})
                for (bool hat : {false, true}) {
                    Generated e = gen_1x(k, n, var, hat);
                    CHECK(verify_rho(e.rho).passed());
                    CHECK(verify_p4(e.y).passed());
                    CHECK(e.y.b == e.rho.nu + 1);
                }
        }
    }
}

TEST_CASE("triple sum identity") {
    for (long n = 1; n <= 5; ++n)
        for (long k = 1; k <= n; ++k)
            for (bool hat : {false, true})
                CHECK(verify_triple_sum(k, n, hat).passed());
}

TEST_CASE("gen_2x3") {
    Generated g = gen_2x3(1, 0, 0, Sign::plus);
    CHECK(g.rho.rho == RatFun(P({"0", "-4/3", "0", "8/27"})));
    CHECK(g.y.a == Q("1/9"));
    CHECK(g.y.b == 2);
    check_p4(g.y);
    Generated v2 = gen_2x3(2, 1, 0, Sign::plus);
    CHECK(v2.rho.mu_sq == Q("4/9"));
    CHECK(v2.rho.nu == -2);
    check_p4(v2.y);
    CHECK_THROWS_AS(gen_2x3(1, -1, 0, Sign::plus), DomainError);

    for (long n = 0; n <= 3; ++n) {
        for (long k = 0; k <= 3; ++k) {
            for (int var : {1, 2}) {
                for (auto dir : {Sign::plus, Sign::minus}) {
                    Generated h = gen_2x3(var, n, k, dir);
                    CHECK(verify_rho(h.rho).passed());
                    CHECK(verify_p4(h.y).passed());
                    CHECK(h.y.y == forms::y2x3(var, n, k, dir));
                }
            }
            if (k <= n + 1)
                CHECK(gen_2x3(2, n, k, Sign::plus).rho.rho == gen_2x3(1, n, 1 + n - k, Sign::minus).rho.rho);
            if (k <= n - 1)
                CHECK(gen_2x3(1, n, k, Sign::plus).rho.rho == gen_2x3(2, n, n - 1 - k, Sign::minus).rho.rho);
        }
    }
}

TEST_CASE("rho_0n") {
    for (long n = 0; n <= 4; ++n) {
        for (auto dir : {Sign::plus, Sign::minus}) {
            RhoSolution r = rho_0n(n, dir);
            CHECK(r.rho == rho_0n_explicit(n, dir));
            CHECK(verify_rho(r).passed());
        }
    }
}
