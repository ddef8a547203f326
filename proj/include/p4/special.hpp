#pragma once

#include "p4/ratfun.hpp"

#include <vector>

namespace p4 {

class SingularFamily : public Error {
public:
    using Error::Error;
};

/// Physicists' Hermite polynomial H_n.
Poly hermite(unsigned n);

/// e^{-x^2} d^n/dx^n e^{x^2}, i.e. (-i)^n H_n(ix).
Poly pseudo_hermite(unsigned n);

/// p' + 2cx p: conjugation of d/dx by the weight e^{cx^2}.
Poly twisted_derivative(const Poly &p, const BigRat &c);

/// F_n^(k) = e^{x^2/3} d^{3n+k} e^{-x^2/3} / (2^n n!); the hatted variant
/// swaps the sign of the exponent. k must be 0, 1 or 2.
Poly okamoto_poly(unsigned n, unsigned k, bool hatted);

/// Entries of a Wronskian that all carry the weight e^{gauge x^2}.
struct GaugedFamily {
    BigRat gauge;
    std::vector<Poly> entries;
};

/// W[e^{cx^2} p_1, ..., e^{cx^2} p_k] / e^{k c x^2}: the determinant built
/// from repeated twisted derivatives. Equals wronskian(entries) at c = 0.
Poly gauged_determinant(const GaugedFamily &fam);

/// d/dx ln W_k[e^{cx^2} p_1, ...] = 2kc x + D'/D with D the gauged
/// determinant. Throws SingularFamily when D vanishes identically.
RatFun gauged_log_wronskian(const GaugedFamily &fam);

/// Convenience lists used by the hierarchies.
std::vector<Poly> hermite_run(long from, long to, bool hatted); // H_from, ..., H_to (descending)

} // namespace p4
