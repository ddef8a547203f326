#include "p4/special.hpp"

#include <string>

namespace p4 {

Poly hermite(unsigned n) {
    Poly prev = Poly::constant(1);
    if (n == 0)
        return prev;
    Poly cur = Poly::monomial(2, 1);
    const Poly two_x = Poly::monomial(2, 1);
    for (unsigned m = 1; m < n; ++m) {
        Poly next = two_x * cur - prev * BigRat(2 * static_cast<long>(m));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Poly twisted_derivative(const Poly &p, const BigRat &c) {
    return p.derivative() + Poly::monomial(2 * c, 1) * p;
}

Poly pseudo_hermite(unsigned n) {
    Poly p = Poly::constant(1);
    for (unsigned m = 0; m < n; ++m)
        p = twisted_derivative(p, 1);
    return p;
}

Poly okamoto_poly(unsigned n, unsigned k, bool hatted) {
    if (k > 2)
        throw Error("okamoto_poly: k must be 0, 1 or 2, got " + std::to_string(k));
    const BigRat c = hatted ? BigRat(1, 3) : BigRat(-1, 3);
    Poly p = Poly::constant(1);
    for (unsigned m = 0; m < 3 * n + k; ++m)
        p = twisted_derivative(p, c);
    mpz_class norm = 1;
    for (unsigned m = 1; m <= n; ++m)
        norm *= 2 * m;
    return p * BigRat(1, norm);
}

Poly gauged_determinant(const GaugedFamily &fam) {
    const std::size_t k = fam.entries.size();
    if (k == 0)
        throw Error("gauged_determinant: empty family");
    if (sgn(fam.gauge) == 0)
        return wronskian(fam.entries);
    std::vector<std::vector<Poly>> m(k, std::vector<Poly>(k));
    for (std::size_t c = 0; c < k; ++c) {
        Poly d = fam.entries[c];
        for (std::size_t r = 0; r < k; ++r) {
            m[r][c] = d;
            if (r + 1 < k)
                d = twisted_derivative(d, fam.gauge);
        }
    }
    return determinant(std::move(m));
}

RatFun gauged_log_wronskian(const GaugedFamily &fam) {
    Poly d = gauged_determinant(fam);
    if (d.is_zero())
        throw SingularFamily("Wronskian of the family vanishes identically");
    RatFun out = log_derivative(RatFun(d));
    if (sgn(fam.gauge) != 0)
        out += RatFun(Poly::monomial(2 * fam.gauge * static_cast<unsigned long>(fam.entries.size()), 1));
    return out;
}

std::vector<Poly> hermite_run(long from, long to, bool hatted) {
    std::vector<Poly> out;
    for (long m = from; m >= to; --m) {
        if (m < 0)
            throw Error("hermite_run: negative index " + std::to_string(m));
        out.push_back(hatted ? pseudo_hermite(static_cast<unsigned>(m)) : hermite(static_cast<unsigned>(m)));
    }
    return out;
}

} // namespace p4
