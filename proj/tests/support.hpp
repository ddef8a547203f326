#pragma once

#include "p4/ratfun.hpp"

#include <initializer_list>
#include <random>

namespace p4::test {

inline BigRat Q(const char *s) { return parse_rat(s); }

// Ascending coefficients written as strings: P({"-2", "0", "4"}) = 4x^2 - 2.
inline Poly P(std::initializer_list<const char *> cs) {
    std::vector<BigRat> v;
    for (const char *c : cs)
        v.push_back(parse_rat(c));
    return Poly(std::move(v));
}

inline RatFun R(const Poly &num, const Poly &den) { return RatFun(num, den); }

class Rng {
public:
    explicit Rng(unsigned seed) : g_(seed) {}
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
    BigRat rat(long span = 9) {
        BigRat r(integer(-span, span), integer(1, span));
        r.canonicalize();
        return r;
    }
    Poly poly(long max_degree, bool nonzero = true) {
        for (;;) {
            std::vector<BigRat> c;
            long d = integer(0, max_degree);
            for (long i = 0; i <= d; ++i)
                c.push_back(rat());
            Poly p(std::move(c));
            if (!nonzero || !p.is_zero())
                return p;
        }
    }

private:
    std::mt19937_64 g_;
};

} // namespace p4::test
