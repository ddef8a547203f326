#pragma once

#include "p4/ratfun.hpp"

#include <array>

namespace p4 {

/// Root-lattice coordinates (v1, v2, v3), summing to zero.
///
/// The distinct-index statements of the theory are instantiated with
/// (i, j, k) = (2, 1, 3): v_i = v2, v_j = v1, v_k = v3.
struct VTriple {
    BigRat v1, v2, v3;

    VTriple() = default;
    /// Throws Error unless the entries sum to zero.
    VTriple(BigRat a, BigRat b, BigRat c);

    static VTriple from_roles(const BigRat &vi, const BigRat &vj, const BigRat &vk) { return {vj, vi, vk}; }

    [[nodiscard]] const BigRat &vi() const { return v2; }
    [[nodiscard]] const BigRat &vj() const { return v1; }
    [[nodiscard]] const BigRat &vk() const { return v3; }

    friend bool operator==(const VTriple &, const VTriple &) = default;
};

/// (alpha0, alpha1, alpha2) = (2(v_k - v_j) - 2, 2(v_j - v_i), 2(v_i - v_k)).
std::array<BigRat, 3> alphas_from_v(const VTriple &v);
/// Inverse of alphas_from_v; requires alpha0 + alpha1 + alpha2 = -2.
VTriple v_from_alphas(const std::array<BigRat, 3> &alpha);

/// v-coordinates of a rho-solution with parameters (mu, nu):
/// mu = v_j - v_i, nu = -3 v_k.
VTriple v_from_mu_nu(const BigRat &mu, const BigRat &nu);

} // namespace p4
