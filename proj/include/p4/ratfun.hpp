#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace p4 {

/// Exact rational scalar. Always kept canonical (gcd 1, positive denominator).
using BigRat = mpq_class;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class NonRationalIntegral : public Error {
public:
    using Error::Error;
};

/// An argument lies outside the domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Canonical text form: "p/q", or "p" when q = 1.
std::string to_string(const BigRat &r);
/// Inverse of to_string; also accepts surrounding whitespace. Throws ParseError.
BigRat parse_rat(std::string_view text);

/// Dense univariate polynomial in x over BigRat, ascending coefficients, no
/// trailing zeros. The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<BigRat> coeffs);
    Poly(std::initializer_list<BigRat> coeffs);

    static Poly constant(const BigRat &c);
    static Poly monomial(const BigRat &c, std::size_t degree);
    static Poly x();

    /// -1 for the zero polynomial.
    [[nodiscard]] long degree() const { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] bool is_constant() const { return c_.size() <= 1; }
    [[nodiscard]] const std::vector<BigRat> &coeffs() const { return c_; }
    /// Coefficient of x^i (zero past the degree).
    [[nodiscard]] BigRat coeff(std::size_t i) const;
    [[nodiscard]] const BigRat &lead() const;
    [[nodiscard]] BigRat eval(const BigRat &at) const;

    [[nodiscard]] Poly derivative() const;
    [[nodiscard]] Poly monic() const;

    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const Poly &o);
    Poly &operator*=(const BigRat &s);

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(const Poly &a, const Poly &b);
    friend Poly operator*(Poly a, const BigRat &s) { return a *= s; }
    friend Poly operator*(const BigRat &s, Poly a) { return a *= s; }
    friend Poly operator-(Poly a);
    friend bool operator==(const Poly &, const Poly &) = default;

private:
    void trim();
    std::vector<BigRat> c_;
};

Poly pow(const Poly &p, unsigned e);

struct PolyDivMod {
    Poly quot;
    Poly rem;
};

/// Euclidean division. Throws DivisionByZero when the divisor is zero.
PolyDivMod divmod(const Poly &a, const Poly &b);
/// Division known to be exact; throws Error when a remainder is left.
Poly exact_div(const Poly &a, const Poly &b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly &a, const Poly &b);

/// s*a + t*b = gcd(a, b) (monic).
struct ExtGcd {
    Poly g, s, t;
};
ExtGcd ext_gcd(const Poly &a, const Poly &b);

/// Squarefree decomposition: p = lc * prod factors[i]^(i+1), factors monic.
std::vector<Poly> squarefree(const Poly &p);

Poly poly_derivative(const Poly &p);

/// Quotient of polynomials kept with gcd(num, den) = 1 and den monic.
class RatFun {
public:
    RatFun() : den_(Poly::constant(1)) {}
    RatFun(Poly p); // NOLINT(google-explicit-constructor)
    RatFun(const BigRat &c) : RatFun(Poly::constant(c)) {} // NOLINT
    RatFun(long c) : RatFun(BigRat(c)) {}                   // NOLINT
    RatFun(Poly num, Poly den);

    static RatFun x() { return RatFun(Poly::x()); }

    [[nodiscard]] const Poly &num() const { return num_; }
    [[nodiscard]] const Poly &den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_poly() const { return den_.degree() == 0; }
    [[nodiscard]] bool is_constant() const { return is_poly() && num_.degree() <= 0; }
    /// Constant value; throws Error when not constant.
    [[nodiscard]] BigRat constant_value() const;

    [[nodiscard]] RatFun derivative() const;

    RatFun &operator+=(const RatFun &o);
    RatFun &operator-=(const RatFun &o);
    RatFun &operator*=(const RatFun &o);
    RatFun &operator/=(const RatFun &o);

    friend RatFun operator+(RatFun a, const RatFun &b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun &b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun &b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun &b) { return a /= b; }
    friend RatFun operator-(const RatFun &a);
    friend bool operator==(const RatFun &, const RatFun &) = default;

private:
    struct Normalized {};
    RatFun(Poly num, Poly den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Poly num_;
    Poly den_;
};

enum class ArithOp { add, sub, mul, div };
RatFun ratfun_arith(const RatFun &a, const RatFun &b, ArithOp op);

/// f_x / f. Throws DivisionByZero for f = 0.
RatFun log_derivative(const RatFun &f);

/// Determinant of a square polynomial matrix by fraction-free (Bareiss)
/// elimination with row pivoting.
Poly determinant(std::vector<std::vector<Poly>> m);

/// Row r holds the r-th derivatives of the entries, columns in given order.
Poly wronskian(std::span<const Poly> fs);

/// Rational antiderivative via Hermite reduction. The constant is fixed so
/// that F(0) = 0 when F is finite at 0, otherwise the polynomial part has no
/// constant term. Throws NonRationalIntegral when a logarithmic part remains.
RatFun integrate_ratfun(const RatFun &f);

} // namespace p4
