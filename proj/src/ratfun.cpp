#include "p4/ratfun.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace p4 {

std::string to_string(const BigRat &r) { return r.get_str(10); }

BigRat parse_rat(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw ParseError("empty rational literal");
    std::string s(text.substr(first, last - first + 1));
    // mpq_set_str is lenient about some forms; enforce [-]digits[/digits].
    std::size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_run = false;
    for (; pos < s.size(); ++pos) {
        char ch = s[pos];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digit_run = true;
        } else if (ch == '/' && !seen_slash && digit_run) {
            seen_slash = true;
            digit_run = false;
        } else {
            throw ParseError("malformed rational literal '" + s + "'");
        }
    }
    if (!digit_run)
        throw ParseError("malformed rational literal '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("malformed rational literal '" + s + "'");
    if (mpz_sgn(q.get_den_mpz_t()) == 0)
        throw ParseError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers, used for multiplication and gcd.

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly &p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

// p = zp / den with zp integral.
ZPoly to_integral(const Poly &p, mpz_class &den) {
    den = 1;
    for (const auto &c : p.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) {
        mpz_class v = den / c.get_den();
        out.emplace_back(v * c.get_num());
    }
    return out;
}

void make_primitive(ZPoly &p) {
    ztrim(p);
    if (p.empty())
        return;
    mpz_class g = 0;
    for (const auto &c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    if (p.back() < 0)
        g = -g;
    if (g != 1)
        for (auto &c : p)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Pseudo-remainder of a by b (b nonzero), result made primitive.
ZPoly prem_primitive(ZPoly a, const ZPoly &b) {
    const std::size_t db = b.size() - 1;
    const mpz_class &lb = b.back();
    while (!a.empty() && a.size() - 1 >= db) {
        mpz_class la = a.back();
        std::size_t shift = a.size() - 1 - db;
        for (auto &c : a)
            c *= lb;
        for (std::size_t i = 0; i <= db; ++i)
            a[i + shift] -= la * b[i];
        ztrim(a);
        make_primitive(a);
    }
    return a;
}

Poly from_integral(const ZPoly &zp, const mpz_class &den) {
    std::vector<BigRat> c;
    c.reserve(zp.size());
    for (const auto &v : zp) {
        BigRat q(v, den);
        q.canonicalize();
        c.push_back(std::move(q));
    }
    return Poly(std::move(c));
}

} // namespace

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<BigRat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(const BigRat &c) { return Poly(std::vector<BigRat>{c}); }

Poly Poly::monomial(const BigRat &c, std::size_t degree) {
    std::vector<BigRat> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::x() { return monomial(1, 1); }

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

BigRat Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRat(0); }

const BigRat &Poly::lead() const {
    if (c_.empty())
        throw Error("leading coefficient of the zero polynomial");
    return c_.back();
}

BigRat Poly::eval(const BigRat &at) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return {};
    std::vector<BigRat> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (c_.empty())
        return {};
    BigRat inv = 1 / c_.back();
    Poly out = *this;
    out *= inv;
    return out;
}

Poly &Poly::operator+=(const Poly &o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly &Poly::operator-=(const Poly &o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly &Poly::operator*=(const Poly &o) {
    *this = *this * o;
    return *this;
}

Poly &Poly::operator*=(const BigRat &s) {
    if (sgn(s) == 0) {
        c_.clear();
        return *this;
    }
    for (auto &c : c_)
        c *= s;
    return *this;
}

Poly operator*(const Poly &a, const Poly &b) {
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.c_.size() == 1)
        return b * a.c_[0];
    if (b.c_.size() == 1)
        return a * b.c_[0];
    // Convolve over the integers; canonicalizing an mpq per multiply-add is
    // far slower than one division per output coefficient.
    mpz_class da, db;
    ZPoly za = to_integral(a, da);
    ZPoly zb = to_integral(b, db);
    ZPoly zc(za.size() + zb.size() - 1);
    for (std::size_t i = 0; i < za.size(); ++i) {
        if (za[i] == 0)
            continue;
        for (std::size_t j = 0; j < zb.size(); ++j)
            mpz_addmul(zc[i + j].get_mpz_t(), za[i].get_mpz_t(), zb[j].get_mpz_t());
    }
    mpz_class den = da * db;
    return from_integral(zc, den);
}

Poly operator-(Poly a) {
    for (auto &c : a.c_)
        c = -c;
    return a;
}

Poly pow(const Poly &p, unsigned e) {
    Poly result = Poly::constant(1);
    Poly base = p;
    while (e != 0) {
        if (e & 1U)
            result *= base;
        e >>= 1U;
        if (e != 0)
            base = base * base;
    }
    return result;
}

PolyDivMod divmod(const Poly &a, const Poly &b) {
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly{}, a};
    std::vector<BigRat> rem = a.coeffs();
    const auto &bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<BigRat> quot(rem.size() - db);
    BigRat inv_lead = 1 / bc.back();
    for (std::size_t k = rem.size() - 1 + 1; k-- > db;) {
        if (sgn(rem[k]) == 0)
            continue;
        BigRat q = rem[k] * inv_lead;
        std::size_t shift = k - db;
        for (std::size_t i = 0; i <= db; ++i)
            rem[i + shift] -= q * bc[i];
        quot[shift] = std::move(q);
    }
    rem.resize(db);
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly &a, const Poly &b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw Error("exact_div: nonzero remainder");
    return q;
}

Poly gcd(const Poly &a, const Poly &b) {
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    if (a.degree() == 0 || b.degree() == 0)
        return Poly::constant(1);
    mpz_class da, db;
    ZPoly x = to_integral(a, da);
    ZPoly y = to_integral(b, db);
    make_primitive(x);
    make_primitive(y);
    if (x.size() < y.size())
        std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = prem_primitive(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return from_integral(x, 1).monic();
}

ExtGcd ext_gcd(const Poly &a, const Poly &b) {
    // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(1), s1;
    Poly t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero())
        return {};
    BigRat inv = 1 / r0.lead();
    return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<Poly> squarefree(const Poly &p) {
    std::vector<Poly> out;
    if (p.degree() <= 0)
        return out;
    Poly a = p.monic();
    Poly da = a.derivative();
    Poly g = gcd(a, da);
    Poly b = exact_div(a, g);
    Poly c = exact_div(da, g);
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly ai = gcd(b, d);
        b = exact_div(b, ai);
        c = exact_div(d, ai);
        d = c - b.derivative();
        out.push_back(std::move(ai));
    }
    // Drop trailing trivial factors so the last entry carries the top power.
    while (!out.empty() && out.back().degree() == 0)
        out.pop_back();
    return out;
}

Poly poly_derivative(const Poly &p) { return p.derivative(); }

// ---------------------------------------------------------------------------
// RatFun

RatFun::RatFun(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

void RatFun::normalize() {
    if (den_.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    if (den_.lead() != 1) {
        BigRat inv = 1 / den_.lead();
        num_ *= inv;
        den_ *= inv;
    }
}

BigRat RatFun::constant_value() const {
    if (!is_constant())
        throw Error("rational function is not constant");
    return num_.coeff(0);
}

RatFun RatFun::derivative() const {
    if (is_poly())
        return RatFun(num_.derivative());
    // (n/d)' = (n'd - nd')/d^2; with g = gcd(d, d') the common factor is
    // removed up front.
    Poly dd = den_.derivative();
    Poly g = gcd(den_, dd);
    Poly d_over_g = exact_div(den_, g);
    Poly num = num_.derivative() * d_over_g - num_ * exact_div(dd, g);
    return RatFun(std::move(num), den_ * d_over_g);
}

RatFun &RatFun::operator+=(const RatFun &o) {
    if (den_ == o.den_) {
        *this = RatFun(num_ + o.num_, den_);
        return *this;
    }
    Poly g = gcd(den_, o.den_);
    Poly d1 = exact_div(den_, g);
    Poly d2 = exact_div(o.den_, g);
    *this = RatFun(num_ * d2 + o.num_ * d1, den_ * d2);
    return *this;
}

RatFun &RatFun::operator-=(const RatFun &o) { return *this += -o; }

RatFun &RatFun::operator*=(const RatFun &o) {
    if (is_zero() || o.is_zero()) {
        *this = RatFun();
        return *this;
    }
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly n = exact_div(num_, g1) * exact_div(o.num_, g2);
    Poly d = exact_div(den_, g2) * exact_div(o.den_, g1);
    BigRat inv = 1 / d.lead();
    *this = RatFun(n * inv, d * inv, Normalized{});
    return *this;
}

RatFun &RatFun::operator/=(const RatFun &o) {
    if (o.is_zero())
        throw DivisionByZero("division by the zero rational function");
    BigRat inv = 1 / o.num_.lead();
    return *this *= RatFun(o.den_ * inv, o.num_ * inv, Normalized{});
}

RatFun operator-(const RatFun &a) { return RatFun(-a.num_, a.den_, RatFun::Normalized{}); }

RatFun ratfun_arith(const RatFun &a, const RatFun &b, ArithOp op) {
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    case ArithOp::div:
        return a / b;
    }
    throw Error("unknown arithmetic operation");
}

RatFun log_derivative(const RatFun &f) {
    if (f.is_zero())
        throw DivisionByZero("logarithmic derivative of zero");
    // (n/d)'/(n/d) = n'/n - d'/d
    RatFun a(f.num().derivative(), f.num());
    if (f.is_poly())
        return a;
    return a - RatFun(f.den().derivative(), f.den());
}

Poly determinant(std::vector<std::vector<Poly>> m) {
    const std::size_t n = m.size();
    if (n == 0)
        return Poly::constant(1);
    for (const auto &row : m)
        if (row.size() != n)
            throw Error("determinant of a non-square matrix");
    bool negate = false;
    Poly prev = Poly::constant(1);
    for (std::size_t p = 0; p + 1 < n; ++p) {
        std::size_t piv = p;
        // Smallest-degree nonzero pivot keeps the intermediate entries small.
        for (std::size_t r = p; r < n; ++r)
            if (!m[r][p].is_zero() && (m[piv][p].is_zero() || m[r][p].degree() < m[piv][p].degree()))
                piv = r;
        if (m[piv][p].is_zero())
            return {};
        if (piv != p) {
            std::swap(m[piv], m[p]);
            negate = !negate;
        }
        for (std::size_t i = p + 1; i < n; ++i) {
            for (std::size_t j = p + 1; j < n; ++j) {
                Poly t = m[p][p] * m[i][j] - m[i][p] * m[p][j];
                m[i][j] = (prev.degree() == 0) ? t * (1 / prev.lead()) : exact_div(t, prev);
            }
            m[i][p] = Poly{};
        }
        prev = m[p][p];
    }
    Poly d = m[n - 1][n - 1];
    return negate ? -d : d;
}

Poly wronskian(std::span<const Poly> fs) {
    const std::size_t k = fs.size();
    std::vector<std::vector<Poly>> m(k, std::vector<Poly>(k));
    for (std::size_t c = 0; c < k; ++c) {
        Poly d = fs[c];
        for (std::size_t r = 0; r < k; ++r) {
            m[r][c] = d;
            if (r + 1 < k)
                d = d.derivative();
        }
    }
    return determinant(std::move(m));
}

namespace {

// s*a + t*b = c with deg s < deg b; requires gcd(a, b) = 1.
std::pair<Poly, Poly> solve_diophantine(const Poly &a, const Poly &b, const Poly &c) {
    ExtGcd e = ext_gcd(a, b);
    if (e.g.degree() != 0)
        throw Error("solve_diophantine: arguments not coprime");
    Poly s = divmod(e.s * c, b).rem;
    Poly t = exact_div(c - s * a, b);
    return {s, t};
}

Poly integrate_poly(const Poly &p) {
    std::vector<BigRat> c(p.coeffs().size() + 1);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        c[i + 1] = p.coeffs()[i] / static_cast<unsigned long>(i + 1);
    return Poly(std::move(c));
}

} // namespace

RatFun integrate_ratfun(const RatFun &f) {
    if (f.is_zero())
        return {};
    auto [q, a] = divmod(f.num(), f.den());
    Poly poly_part = integrate_poly(q);
    RatFun reduced;
    Poly d = f.den();
    if (!a.is_zero()) {
        // Mack's linear form of Hermite reduction over the squarefree factors.
        std::vector<Poly> sqf = squarefree(d);
        for (std::size_t idx = 1; idx < sqf.size(); ++idx) {
            const Poly &v = sqf[idx];
            if (v.degree() <= 0)
                continue;
            const unsigned i = static_cast<unsigned>(idx + 1);
            Poly u = exact_div(d, pow(v, i));
            Poly uv1 = u * v.derivative();
            for (unsigned j = i - 1; j >= 1; --j) {
                Poly rhs = a * BigRat(-1, j);
                auto [b, c] = solve_diophantine(uv1, v, rhs);
                reduced += RatFun(b, pow(v, j));
                a = c * BigRat(-static_cast<long>(j)) - u * b.derivative();
            }
            d = u * v;
        }
        auto [q2, r2] = divmod(a, d);
        poly_part += integrate_poly(q2);
        if (!r2.is_zero())
            throw NonRationalIntegral("integral has a logarithmic part");
    }
    RatFun result = RatFun(poly_part) + reduced;
    BigRat d0 = result.den().eval(0);
    if (sgn(d0) != 0) {
        BigRat at0 = result.num().eval(0) / d0;
        if (sgn(at0) != 0)
            result -= RatFun(at0);
    }
    return result;
}

} // namespace p4
