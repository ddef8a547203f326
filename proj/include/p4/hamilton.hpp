#pragma once

#include "p4/report.hpp"
#include "p4/solutions.hpp"
#include "p4/vtriple.hpp"

#include <optional>

namespace p4 {

class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

/// (epsilon, v, H, Q, P) of the generalized Okamoto Hamiltonian
///   H = 2P^2 Q - eps (Q^2 + 2xQ + 2(v_j - v_i)) P + (v_k - v_i) Q - 2 v_i x.
struct HamiltonianFrame {
    int epsilon = 1;
    VTriple v;
    RatFun H, Q, P;

    friend bool operator==(const HamiltonianFrame &, const HamiltonianFrame &) = default;
};

/// Q and P recovered from H and its derivatives for the given v and epsilon:
///   Q = (2(xH' - H) - eps H'') / (-2 (H' + 2v_k)),
///   P = (2(xH' - H) + eps H'') / (4 eps (H' + 2v_j)).
/// Throws DegenerateDenominator.
HamiltonianFrame frame_from_H(const RatFun &H, const VTriple &v, int epsilon);

/// H = (rho - 4 v_k x)/2 with v from (mu, nu) as in build_multiplet.
/// Throws DegenerateDenominator, IrrationalMu, DomainError (epsilon not +-1).
HamiltonianFrame frame_from_rho(const RhoSolution &r, int epsilon, Sign mu_sign = Sign::plus);

/// Hamilton equations, the Hamiltonian itself, H_x = -2 eps QP - 2v_i, the
/// 2QP identity, x H_x - H, the quadratic identity for H, its rho-form on
/// rho = 2H + 4 v_k x, and Q as a Painleve IV solution with
/// a = (v_j - v_i)^2, b = -eps - 3 v_k.
Report verify_hamilton(const HamiltonianFrame &f);

enum class Perm { pi12, pi13, pi23 };

/// Exchanges two v's, keeps H, recomputes Q and P. Throws DegenerateDenominator.
HamiltonianFrame pi_on_frame(Perm p, const HamiltonianFrame &f);

/// The eta in {+1, -1} for which the Lukashevich-type relabeling
///   b' = -3/2 eps - b/2 + 3/2 eta sqrt(a),  a' = (b + eps + eta sqrt(a))^2 / 4
/// maps the (a, b) of `before` to that of `after`; nullopt if neither does
/// or sqrt(a) is irrational.
std::optional<int> lukashevich_eta(const HamiltonianFrame &before, const HamiltonianFrame &after);

/// (a, b) of the Painleve IV equation solved by Q.
std::pair<BigRat, BigRat> frame_parameters(const HamiltonianFrame &f);

} // namespace p4
