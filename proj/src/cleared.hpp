#pragma once

// Denominator-cleared evaluation of differential polynomials in a single
// rational function: every value is N / D^e for one fixed D, so identities
// can be checked without any gcd computation.

#include "p4/ratfun.hpp"

#include <vector>

namespace p4::detail {

struct Cleared {
    Poly num;
    unsigned e = 0;
};

class ClearedField {
public:
    explicit ClearedField(Poly den) : d_(std::move(den)), dp_(d_.derivative()) { pows_.push_back(Poly::constant(1)); }

    [[nodiscard]] Cleared lift(const Poly &p) const { return {p, 0}; }
    [[nodiscard]] Cleared of(const RatFun &f) const {
        if (f.den() != d_)
            throw Error("ClearedField: denominator mismatch");
        return {f.num(), d_.degree() > 0 ? 1U : 0U};
    }

    Cleared deriv(const Cleared &c) {
        if (d_.degree() <= 0)
            return {c.num.derivative(), c.e};
        // (N / D^e)' = (N' D - e N D') / D^{e+1}
        return {c.num.derivative() * d_ - c.num * dp_ * BigRat(c.e), c.e + 1};
    }
    Cleared mul(const Cleared &a, const Cleared &b) { return {a.num * b.num, a.e + b.e}; }
    Cleared scale(const Cleared &a, const BigRat &s) { return {a.num * s, a.e}; }
    Cleared add(const Cleared &a, const Cleared &b) {
        if (a.e == b.e)
            return {a.num + b.num, a.e};
        if (a.e < b.e)
            return {a.num * pow_d(b.e - a.e) + b.num, b.e};
        return {a.num + b.num * pow_d(a.e - b.e), a.e};
    }
    Cleared sub(const Cleared &a, const Cleared &b) { return add(a, scale(b, -1)); }

    const Poly &pow_d(unsigned e) {
        while (pows_.size() <= e)
            pows_.push_back(pows_.back() * d_);
        return pows_[e];
    }

private:
    Poly d_, dp_;
    std::vector<Poly> pows_;
};

} // namespace p4::detail
