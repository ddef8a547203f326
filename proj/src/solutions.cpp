#include "p4/solutions.hpp"

#include "cleared.hpp"

#include <string>

namespace p4 {

using detail::Cleared;
using detail::ClearedField;

namespace {

RatFun lin(const BigRat &c) { return RatFun(Poly::monomial(c, 1)); }

const RatFun &xfun() {
    static const RatFun x = RatFun::x();
    return x;
}

// -(2(x f' - f) + s f'') / (2 f')
RatFun y_formula(const RatFun &f, int s) {
    RatFun fx = f.derivative();
    if (fx.is_zero())
        throw DegenerateRho("rho_x vanishes identically");
    RatFun fxx = fx.derivative();
    RatFun top = RatFun(2) * (xfun() * fx - f) + (s > 0 ? fxx : -fxx);
    return -top / (RatFun(2) * fx);
}

void require(bool cond, const std::string &what) {
    if (!cond)
        throw DomainError(what + " required");
}

RatFun ldw(long from, long to, bool hatted) {
    if (from < to)
        return {};
    Poly w = wronskian(hermite_run(from, to, hatted));
    if (w.is_zero())
        throw SingularFamily("Wronskian of H_" + std::to_string(from) + ".." + std::to_string(to) + " vanishes");
    return log_derivative(RatFun(w));
}

} // namespace

std::optional<BigRat> rational_sqrt(const BigRat &q) {
    if (sgn(q) < 0)
        return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0)
        return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    BigRat r(n, d);
    r.canonicalize();
    return r;
}

BigRat signed_mu(const BigRat &mu_sq, Sign mu_sign) {
    auto mu = rational_sqrt(mu_sq);
    if (!mu)
        throw IrrationalMu("mu^2 = " + to_string(mu_sq) + " is not the square of a rational");
    return mu_sign == Sign::plus ? *mu : BigRat(-*mu);
}

Report verify_p4(const P4Solution &s) {
    if (s.y.is_zero())
        throw ZeroFunction("verify_p4: y is identically zero");
    ClearedField fld(s.y.den());
    Cleared y = fld.of(s.y);
    Cleared y1 = fld.deriv(y);
    Cleared y2 = fld.deriv(y1);
    Cleared yy = fld.mul(y, y);
    Cleared xp = fld.lift(Poly::x());
    Cleared acc = fld.scale(fld.mul(y, y2), 2);
    acc = fld.sub(acc, fld.mul(y1, y1));
    acc = fld.sub(acc, fld.scale(fld.mul(yy, yy), 3));
    acc = fld.sub(acc, fld.scale(fld.mul(xp, fld.mul(yy, y)), 8));
    Cleared x2b = fld.lift(Poly{s.b, 0, 1});
    acc = fld.sub(acc, fld.scale(fld.mul(x2b, yy), 4));
    acc = fld.add(acc, fld.lift(Poly::constant(4 * s.a)));
    Report rep;
    rep.add("painleve_iv", acc.num);
    return rep;
}

Report verify_rho(const RhoSolution &r, const BigRat &c) {
    ClearedField fld(r.rho.den());
    Cleared rho = fld.of(r.rho);
    Cleared r1 = fld.deriv(rho);
    Cleared r2 = fld.deriv(r1);
    Cleared xr1 = fld.sub(fld.mul(fld.lift(Poly::x()), r1), rho); // x rho' - rho
    Cleared r1sq = fld.mul(r1, r1);
    const BigRat m = r.mu_sq - r.nu * r.nu;

    // rho''^2 - [4(x rho' - rho)^2 - 2 rho'^3 - 8 nu rho'^2 + 8(mu^2 - nu^2) rho' - 8C]
    Cleared rhs = fld.scale(fld.mul(xr1, xr1), 4);
    rhs = fld.sub(rhs, fld.scale(fld.mul(r1sq, r1), 2));
    rhs = fld.sub(rhs, fld.scale(r1sq, 8 * r.nu));
    rhs = fld.add(rhs, fld.scale(r1, 8 * m));
    rhs = fld.sub(rhs, fld.lift(Poly::constant(8 * c)));
    Report rep;
    rep.add("jmo", fld.sub(fld.mul(r2, r2), rhs).num);
    if (sgn(c) == 0) {
        // (2(x rho' - rho) + rho'')(2(x rho' - rho) - rho'') =
        //   2 rho' [rho' - 2(mu - nu)][rho' + 2(mu + nu)]
        // and the bracket product is rho'^2 + 4 nu rho' - 4(mu^2 - nu^2).
        Cleared two = fld.scale(xr1, 2);
        Cleared lhs = fld.mul(fld.add(two, r2), fld.sub(two, r2));
        Cleared br = fld.add(r1sq, fld.scale(r1, 4 * r.nu));
        br = fld.sub(br, fld.lift(Poly::constant(4 * m)));
        Cleared rhs2 = fld.scale(fld.mul(r1, br), 2);
        rep.add("jmo_factorized", fld.sub(lhs, rhs2).num);
    }
    return rep;
}

Report verify_rho_third_order(const RhoSolution &r) {
    ClearedField fld(r.rho.den());
    Cleared rho = fld.of(r.rho);
    Cleared r1 = fld.deriv(rho);
    Cleared r3 = fld.deriv(fld.deriv(r1));
    Cleared acc = fld.scale(fld.mul(fld.lift(Poly{0, 0, 1}), r1), -1);
    acc = fld.add(acc, fld.mul(fld.lift(Poly::x()), rho));
    acc = fld.add(acc, fld.scale(r3, BigRat(1, 4)));
    acc = fld.add(acc, fld.scale(r1, 2 * r.nu));
    acc = fld.add(acc, fld.scale(fld.mul(r1, r1), BigRat(3, 4)));
    acc = fld.sub(acc, fld.lift(Poly::constant(r.mu_sq - r.nu * r.nu)));
    Report rep;
    rep.add("rho_third_order", acc.num);
    return rep;
}

P4Solution y_from_rho(const RhoSolution &r, Sign sign) {
    int s = sign_value(sign);
    return {y_formula(r.rho, s), r.mu_sq, r.nu + s};
}

RhoSolution rho_shift(const RhoSolution &r, Branch branch, Sign mu_sign) {
    const BigRat mu = signed_mu(r.mu_sq, mu_sign);
    const BigRat &nu = r.nu;
    if (branch == Branch::i) {
        BigRat m = (mu + nu) / 2;
        return {r.rho - lin(2 * (mu - nu)), m * m, BigRat(3 * mu / 2 - nu / 2)};
    }
    BigRat m = (mu - nu) / 2;
    return {r.rho + lin(2 * (mu + nu)), m * m, BigRat(-3 * mu / 2 - nu / 2)};
}

VTriple multiplet_vtriple(const RhoSolution &r, Sign mu_sign) {
    return v_from_mu_nu(signed_mu(r.mu_sq, mu_sign), r.nu);
}

SymMultiplet build_multiplet(const RhoSolution &r, Sign mu_sign) {
    const BigRat mu = signed_mu(r.mu_sq, mu_sign);
    RatFun f1 = y_formula(r.rho, +1);
    RatFun f2 = y_formula(r.rho + lin(2 * (mu + r.nu)), -1);
    RatFun f0 = lin(-2) - f1 - f2;
    return {{f0, f1, f2}, alphas_from_v(v_from_mu_nu(mu, r.nu))};
}

Report verify_symmetric(const SymMultiplet &m) {
    Report rep;
    for (int j = 0; j < 3; ++j) {
        const RatFun &f = m.f[j];
        RatFun rhs = f * (m.f[(j + 1) % 3] - m.f[(j + 2) % 3]) + RatFun(m.alpha[j]);
        rep.add_identity("symmetric[" + std::to_string(j) + "]", f.derivative(), rhs);
    }
    rep.add_identity("sum_f", m.f[0] + m.f[1] + m.f[2], lin(-2));
    rep.add("sum_alpha", Poly::constant(m.alpha[0] + m.alpha[1] + m.alpha[2] + 2));
    return rep;
}

RhoTriple rho_triple(const RhoSolution &r, Sign mu_sign) {
    RhoTriple t;
    t.rho[0] = rho_shift(r, Branch::i, mu_sign);
    t.rho[1] = rho_shift(r, Branch::j, mu_sign);
    t.rho[2] = r;
    for (int n = 0; n < 3; ++n) {
        t.y_plus[n] = y_formula(t.rho[n].rho, +1);
        t.y_minus[n] = y_formula(t.rho[n].rho, -1);
    }
    return t;
}

Report verify_bilinear_and_riccati(const RhoSolution &r, Sign mu_sign) {
    static const char *label[3] = {"i", "j", "k"};
    RhoTriple t = rho_triple(r, mu_sign);
    std::array<RatFun, 3> rx;
    for (int n = 0; n < 3; ++n)
        rx[n] = t.rho[n].rho.derivative();
    Report rep;
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            if (a == b)
                continue;
            int c = 3 - a - b;
            std::string tag = std::string(label[a]) + label[b] + label[c];
            rep.add_identity("bilinear[" + tag + "]", t.y_plus[a] * t.y_minus[b], rx[c] * RatFun(BigRat(1, 2)));
            // rho^(b)' + 2 nu^(b) = (rho^(a)' + rho^(c)') / 2
            rep.add_identity("rho2nu[" + tag + "]", rx[b] + RatFun(2 * t.rho[b].nu),
                             (rx[a] + rx[c]) * RatFun(BigRat(1, 2)));
        }
    }
    const RatFun &x = xfun();
    RatFun prod = RatFun(2) * rx[0] * rx[1] * rx[2];
    for (int n = 0; n < 3; ++n) {
        const RatFun &yp = t.y_plus[n];
        const RatFun &ym = t.y_minus[n];
        RatFun nu2(2 * t.rho[n].nu);
        rep.add_identity(std::string("riccati_plus[") + label[n] + "]", rx[n],
                         yp.derivative() - yp * yp - RatFun(2) * x * yp - nu2);
        rep.add_identity(std::string("riccati_minus[") + label[n] + "]", rx[n],
                         -ym.derivative() - ym * ym - RatFun(2) * x * ym - nu2);
        const RatFun &f = t.rho[n].rho;
        RatFun two = RatFun(2) * (x * rx[n] - f);
        RatFun fxx = rx[n].derivative();
        rep.add_identity(std::string("rho_eqi[") + label[n] + "]", (two + fxx) * (two - fxx), prod);
        rep.merge(std::string("rho[") + label[n] + "].", verify_rho(t.rho[n]));
    }
    return rep;
}

Report verify_dressing_chain_with_sigma(const SymMultiplet &m, const RatFun &sigma) {
    const RatFun &x = xfun();
    const auto &[f0, f1, f2] = m.f;
    const RatFun a1(m.alpha[1]);
    const RatFun a2(m.alpha[2]);
    const RatFun half(BigRat(1, 2));
    RatFun f12 = f1 * f2;
    RatFun sx = sigma.derivative();
    RatFun sxx = sx.derivative();
    Report rep;
    rep.add_identity("sigma_j_forms", f0 * f1 + f1.derivative(), f12 + a1);
    rep.add_identity("sigma_j_x", sx * half, f12 + a1);
    if (sx.is_zero()) {
        rep.add("sigma_j_x_nonzero", Poly::constant(1));
        return rep;
    }
    if ((f12 + a1).is_zero()) {
        rep.add("bar_f2_defined", Poly::constant(1));
        return rep;
    }
    RatFun fbar = f1 * (f12 - a2) / (f12 + a1);
    RatFun l = log_derivative(sx);
    rep.add_identity("fbarf2", fbar - f2, -l);
    RatFun chain = sx - RatFun(2) * a1 - a2;
    rep.add_identity("riccati", -f2.derivative() - f2 * f2 - RatFun(2) * x * f2, chain);
    rep.add_identity("dchain", fbar.derivative() - fbar * fbar - RatFun(2) * x * fbar, chain);
    rep.add_identity("firstorder", f2.derivative() + f2 * l, half * l.derivative() + half * l * l - x * l);
    RatFun two = RatFun(2) * (x * sx - sigma);
    RatFun den = RatFun(2) * sx;
    rep.add_identity("f2rho", f2, -(two - sxx) / den);
    rep.add_identity("barf2rho", fbar, -(two + sxx) / den);
    RatFun si_x = RatFun(2) * f12;
    RatFun sk_x = RatFun(2) * (f12 - a2);
    rep.add_identity("f2rhoa", f2 * fbar, (half * si_x) * (half * sk_x) / (half * sx));
    rep.add_identity("rhojeq", (two - sxx) * (two + sxx), RatFun(2) * si_x * sx * sk_x);
    return rep;
}

RatFun dressing_sigma(const SymMultiplet &m) {
    RatFun sx = RatFun(2) * (m.f[1] * m.f[2] + RatFun(m.alpha[1]));
    RatFun sigma = integrate_ratfun(sx);
    if (sx.is_zero())
        return sigma;
    // f2 = formula(sigma + c) = formula(sigma) + c / sigma_x
    RatFun two = RatFun(2) * (xfun() * sx - sigma);
    RatFun formula = -(two - sx.derivative()) / (RatFun(2) * sx);
    RatFun c = (m.f[2] - formula) * sx;
    if (c.is_constant())
        sigma += c;
    return sigma;
}

Report verify_dressing_chain(const SymMultiplet &m) {
    RatFun sigma = dressing_sigma(m);
    Report rep = verify_dressing_chain_with_sigma(m, sigma);
    rep.notes.push_back("sigma_j integration constant matched against f2");
    return rep;
}

// ---------------------------------------------------------------------------
// Hierarchies

Generated gen_2x(long k, long n, bool hatted) {
    require(k >= 1, "k >= 1");
    require(n >= k - 1, "n >= k - 1");
    Generated g;
    g.rho.rho = RatFun(2) * ldw(n, n - k + 1, hatted);
    g.rho.mu_sq = BigRat((n + 1) * (n + 1));
    g.rho.nu = hatted ? BigRat(-n + 2 * k - 1) : BigRat(n - 2 * k + 1);
    if (k == 1)
        g.notes.emplace_back("k = 1: single-entry Wronskian, extension of the k > 1 family");
    g.y = y_from_rho(g.rho, Sign::minus);
    return g;
}

Generated gen_1x(long k, long n, int variant, bool hatted) {
    require(k >= 1, "k >= 1");
    require(n >= k, "n >= k");
    require(variant == 1 || variant == 2, "variant in {1, 2}");
    Generated g;
    GaugedFamily fam;
    if (!hatted && variant == 1) {
        fam = {BigRat(-1), hermite_run(n, n - k + 1, false)};
        g.rho.nu = n + k + 1;
        g.rho.mu_sq = (n - k + 1) * (n - k + 1);
    } else if (!hatted) {
        fam = {BigRat(1), hermite_run(n, k, true)};
        g.rho.nu = -2 * n + k - 2;
        g.rho.mu_sq = k * k;
    } else if (variant == 1) {
        fam = {BigRat(-1), hermite_run(n, k, false)};
        g.rho.nu = 2 * n - k + 2;
        g.rho.mu_sq = k * k;
    } else {
        fam = {BigRat(1), hermite_run(n, n - k + 1, true)};
        g.rho.nu = -n - k - 1;
        g.rho.mu_sq = (n - k + 1) * (n - k + 1);
    }
    g.rho.rho = RatFun(2) * gauged_log_wronskian(fam);
    g.y = y_from_rho(g.rho, Sign::plus);
    return g;
}

namespace {

std::vector<Poly> okamoto_family(long n, long k, unsigned upper, bool hatted) {
    std::vector<Poly> out;
    for (long m = 0; m < n; ++m)
        out.push_back(okamoto_poly(static_cast<unsigned>(m), 1, hatted));
    for (long m = 0; m < k; ++m)
        out.push_back(okamoto_poly(static_cast<unsigned>(m), upper, hatted));
    return out;
}

RatFun ldw_family(const std::vector<Poly> &fam) {
    if (fam.empty())
        return {};
    Poly w = wronskian(fam);
    if (w.is_zero())
        throw SingularFamily("Wronskian of the F-family vanishes");
    return log_derivative(RatFun(w));
}

RatFun rho0() { return RatFun(Poly::monomial(BigRat(8, 27), 3)); }

} // namespace

Generated gen_2x3(int variant, long n, long k, Sign direction) {
    require(variant == 1 || variant == 2, "variant in {1, 2}");
    require(n >= 0, "n >= 0");
    require(k >= 0, "k >= 0");
    const bool plus = direction == Sign::plus;
    const BigRat third(1, 3);
    Generated g;
    RatFun base = rho0() + lin(variant == 1 ? BigRat(-4, 3) : BigRat(4, 3));
    unsigned upper = 0;
    if (plus) {
        upper = variant == 1 ? 2 : 0;
        BigRat m = variant == 1 ? BigRat(third + n) : BigRat(third - n);
        g.rho.mu_sq = m * m;
        g.rho.nu = variant == 1 ? 1 - n + 2 * k : -1 - n + 2 * k;
    } else {
        upper = variant == 1 ? 0 : 2;
        BigRat m = variant == 1 ? BigRat(third - n) : BigRat(third + n);
        g.rho.mu_sq = m * m;
        g.rho.nu = variant == 1 ? 1 + n - 2 * k : -1 + n - 2 * k;
    }
    BigRat slope = BigRat(4, 3) * (n - 2 * k);
    if (!plus)
        slope = -slope;
    g.rho.rho = base + lin(slope) + RatFun(2) * ldw_family(okamoto_family(n, k, upper, !plus));
    g.y = y_from_rho(g.rho, direction);
    return g;
}

RhoSolution rho_0n(long n, Sign direction) {
    require(n >= 0, "n >= 0");
    const bool plus = direction == Sign::plus;
    RhoSolution r{rho0(), BigRat(4, 9), BigRat(plus ? 2 * n : -2 * n)};
    if (n > 0)
        r.rho += RatFun(2) * gauged_log_wronskian({plus ? BigRat(-2, 3) : BigRat(2, 3), okamoto_family(n, 0, 1, !plus)});
    return r;
}

RatFun rho_0n_explicit(long n, Sign direction) {
    require(n >= 0, "n >= 0");
    const bool plus = direction == Sign::plus;
    BigRat slope = BigRat(8, 3) * n;
    return rho0() + lin(plus ? BigRat(-slope) : slope) + RatFun(2) * ldw_family(okamoto_family(n, 0, 1, !plus));
}

namespace forms {

RatFun wyfr(long k, long n) {
    require(k >= 1 && n >= k, "1 <= k <= n");
    return ldw(n, n - k, false) - ldw(n, n - k + 1, false) - lin(2);
}

RatFun wyfq(long k, long n) {
    require(k >= 1 && n >= k - 1, "k >= 1, n >= k - 1");
    return -(ldw(n, n - k + 1, true) - ldw(n, n - k + 2, true)) - lin(2);
}

std::pair<RatFun, RatFun> y1kn(long k, long n) {
    require(k >= 1 && n >= k, "1 <= k <= n");
    return {ldw(n, n - k + 1, false) - ldw(n + 1, n - k + 1, false), ldw(n, k, true) - ldw(n + 1, k + 1, true)};
}

std::pair<RatFun, RatFun> y2kn(long k, long n) {
    require(k >= 1 && n >= k, "1 <= k <= n");
    return {ldw(n, k, true) - ldw(n - 1, k, true), ldw(n, n - k + 1, false) - ldw(n - 1, n - k, false)};
}

std::pair<RatFun, RatFun> hwiiiq(long k, long n) {
    require(k >= 1 && n >= k, "1 <= k <= n");
    const long kp = n - k;
    const long np = n - 1;
    return {ldw(np + 1, np - kp + 1, true) - ldw(np, np - kp + 1, true),
            ldw(np + 1, kp + 1, false) - ldw(np, kp, false)};
}

std::pair<RatFun, RatFun> hy2kn(long k, long n) {
    require(k >= 1 && n >= k, "1 <= k <= n");
    return {ldw(n, k, false) - ldw(n + 1, k, false), ldw(n, n - k + 1, true) - ldw(n + 1, n - k + 2, true)};
}

std::pair<RatFun, RatFun> hy2kn1(long k, long n) {
    require(k >= 1 && n >= k, "1 <= k <= n");
    return {ldw(n, n - k + 1, true) - ldw(n - 1, n - k + 1, true), ldw(n, k, false) - ldw(n - 1, k - 1, false)};
}

RatFun y2x3(int variant, long n, long k, Sign direction) {
    require(variant == 1 || variant == 2, "variant in {1, 2}");
    require(n >= 0 && k >= 0, "n, k >= 0");
    const bool plus = direction == Sign::plus;
    unsigned upper = plus ? (variant == 1 ? 2U : 0U) : (variant == 1 ? 0U : 2U);
    RatFun ratio = ldw_family(okamoto_family(n, k + 1, upper, !plus)) - ldw_family(okamoto_family(n, k, upper, !plus));
    return (plus ? -ratio : ratio) - lin(BigRat(2, 3));
}

} // namespace forms

Report verify_triple_sum(long k, long n, bool hatted) {
    RatFun ym = gen_2x(k, n, hatted).y.y;
    RatFun y1 = gen_1x(k, n, 1, hatted).y.y;
    RatFun y2 = gen_1x(k, n, 2, hatted).y.y;
    Report rep;
    rep.add_identity("triple_sum", ym + y1 + y2, lin(-2) - log_derivative(ym));
    return rep;
}

} // namespace p4
