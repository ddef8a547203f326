#pragma once

#include "p4/ratfun.hpp"
#include "p4/report.hpp"
#include "p4/special.hpp"
#include "p4/vtriple.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace p4 {

class ZeroFunction : public Error {
public:
    using Error::Error;
};

class DegenerateRho : public Error {
public:
    using Error::Error;
};

class IrrationalMu : public Error {
public:
    using Error::Error;
};

enum class Sign { plus, minus };

inline int sign_value(Sign s) { return s == Sign::plus ? 1 : -1; }

/// rho-function with the parameters (mu^2, nu) of its quadratic equation.
struct RhoSolution {
    RatFun rho;
    BigRat mu_sq;
    BigRat nu;
};

/// Candidate Painleve IV solution y(x) with parameters (a, b).
struct P4Solution {
    RatFun y;
    BigRat a;
    BigRat b;
};

/// (f0, f1, f2; alpha0, alpha1, alpha2) of the symmetric system.
struct SymMultiplet {
    std::array<RatFun, 3> f;
    std::array<BigRat, 3> alpha;

    friend bool operator==(const SymMultiplet &, const SymMultiplet &) = default;
};

/// Rational square root, if one exists.
std::optional<BigRat> rational_sqrt(const BigRat &q);

/// 2 y y'' - y'^2 - 3y^4 - 8x y^3 - 4(x^2 + b) y^2 + 4a = 0, denominators cleared.
Report verify_p4(const P4Solution &s);

/// rho'' ^2 = 4(x rho' - rho)^2 - 2 rho'^3 - 8 nu rho'^2 + 8(mu^2 - nu^2) rho' - 8C;
/// for C = 0 the factorized form is checked as well.
Report verify_rho(const RhoSolution &r, const BigRat &c = 0);

/// -x^2 rho' + x rho + rho'''/4 + 2 nu rho' + (3/4) rho'^2 = mu^2 - nu^2.
Report verify_rho_third_order(const RhoSolution &r);

/// y_(+/-) = -(2(x rho' - rho) +/- rho'') / (2 rho'), with a = mu^2 and
/// b = nu +/- 1. Throws DegenerateRho when rho' = 0.
P4Solution y_from_rho(const RhoSolution &r, Sign sign);

enum class Branch { i, j };

/// rho -> rho - 2(mu - nu)x (branch i) or rho + 2(mu + nu)x (branch j), with
/// mu = mu_sign * sqrt(mu^2). Throws IrrationalMu if mu^2 is not a square.
RhoSolution rho_shift(const RhoSolution &r, Branch branch, Sign mu_sign = Sign::plus);

/// mu = mu_sign * sqrt(mu^2); throws IrrationalMu.
BigRat signed_mu(const BigRat &mu_sq, Sign mu_sign);

/// Symmetric multiplet of a rho-solution: f1 = y_+^(k), f2 = y_-^(j),
/// f0 = -2x - f1 - f2, alphas from the v-triple with mu = v_j - v_i.
SymMultiplet build_multiplet(const RhoSolution &r, Sign mu_sign = Sign::plus);

/// v-triple that belongs to build_multiplet(r, mu_sign).
VTriple multiplet_vtriple(const RhoSolution &r, Sign mu_sign = Sign::plus);

/// f_j' = f_j (f_{j+1} - f_{j+2}) + alpha_j plus sum f = -2x, sum alpha = -2.
Report verify_symmetric(const SymMultiplet &m);

/// The three shifted rho's (i, j, k) of a solution and their y_(+/-).
struct RhoTriple {
    std::array<RhoSolution, 3> rho; // order: i, j, k (k is the input)
    std::array<RatFun, 3> y_plus;
    std::array<RatFun, 3> y_minus;
};
RhoTriple rho_triple(const RhoSolution &r, Sign mu_sign = Sign::plus);

/// Bilinear identity y^(a)_+ y^(b)_- = rho^(c)'/2, the Riccati forms of
/// rho^(n)', the partial-fraction relation and the product form of the
/// rho-equation, over all index assignments.
Report verify_bilinear_and_riccati(const RhoSolution &r, Sign mu_sign = Sign::plus);

/// Dressing chain of a multiplet for an explicitly supplied sigma^(j).
Report verify_dressing_chain_with_sigma(const SymMultiplet &m, const RatFun &sigma_j);

/// sigma^(j) from 2(f1 f2 + alpha1) by rational integration, its integration
/// constant matched to f2 once, then verify_dressing_chain_with_sigma.
/// Throws NonRationalIntegral.
Report verify_dressing_chain(const SymMultiplet &m);

/// The integrated and constant-matched sigma^(j) used above.
RatFun dressing_sigma(const SymMultiplet &m);

/// A hierarchy member: the rho-solution and the P-IV solution built from it.
struct Generated {
    RhoSolution rho;
    P4Solution y;
    std::vector<std::string> notes;
};

/// "-2x" hierarchy: rho = 2 d/dx ln W_k[H_n, ..., H_{n-k+1}] (hatted: pseudo-
/// Hermite), y = y_-. Requires k >= 1, n >= k - 1.
Generated gen_2x(long k, long n, bool hatted);

/// "-1/x" hierarchy from the gauged rho^(1), rho^(2) (variant 1 or 2), y = y_+.
/// Requires 1 <= k <= n.
Generated gen_1x(long k, long n, int variant, bool hatted);

/// "-2x/3" hierarchy rho^(variant, +-n, +-k) with y_+ (direction +) or y_-
/// (direction -). Requires n, k >= 0.
Generated gen_2x3(int variant, long n, long k, Sign direction);

/// G^(+-n) acting on rho^(0) = 8x^3/27, via the gauged Wronskian of F^(1).
RhoSolution rho_0n(long n, Sign direction);
/// The same value from the ungauged form plus its explicit linear term.
RatFun rho_0n_explicit(long n, Sign direction);

/// Closed Wronskian-ratio forms of the hierarchy solutions, used as
/// independent cross-checks of the generators.
namespace forms {
RatFun wyfr(long k, long n);               // y_-,(k,n)
RatFun wyfq(long k, long n);               // hatted y_-
std::pair<RatFun, RatFun> y1kn(long k, long n);  // H-form, pseudo-Hermite form
std::pair<RatFun, RatFun> y2kn(long k, long n);
std::pair<RatFun, RatFun> hwiiiq(long k, long n); // same value re-indexed by k' = n-k, n' = n-1
std::pair<RatFun, RatFun> hy2kn(long k, long n);  // reciprocal ratio, see gen_1x
std::pair<RatFun, RatFun> hy2kn1(long k, long n);
RatFun y2x3(int variant, long n, long k, Sign direction);
} // namespace forms

/// y_- + y^(1) + y^(2) = -2x - (ln y_-)' for the (k, n) members of the
/// -2x and -1/x hierarchies (hatted or not).
Report verify_triple_sum(long k, long n, bool hatted);

} // namespace p4
