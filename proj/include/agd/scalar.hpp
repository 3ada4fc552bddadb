#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "agd/errors.hpp"

namespace agd {

using Rat = mpq_class;

Rat factorial(unsigned long n);

// Binomial coefficient C(x, k) for rational (or integer) x and natural k,
// i.e. x(x-1)...(x-k+1)/k!.
Rat binom(const Rat& x, unsigned long k);

std::string rat_str(const Rat& v);

// Dense univariate polynomial over the rationals in the indeterminate T.
class Poly {
  public:
    Poly() = default;
    Poly(long v);
    Poly(const Rat& v);

    static Poly var();
    static Poly monomial(const Rat& c, std::size_t k);

    bool is_zero() const { return c_.empty(); }
    // degree of 0 is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rat coeff(std::size_t k) const;
    const Rat& leading() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly pow(unsigned long e) const;
    Rat eval(const Rat& x) const;

    // Euclidean division: a = q*b + r with deg r < deg b.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    // Monic greatest common divisor; gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);

    // Splits p = content * primitive where primitive has coprime integer
    // coefficients and positive leading coefficient.
    void content_split(Rat& content, Poly& primitive) const;

    std::string str() const;

  private:
    std::vector<Rat> c_; // c_[k] is the coefficient of T^k; no trailing zeros
    void trim();
};

// Rational function in T over the rationals, kept in reduced canonical form:
// gcd(num, den) = 1, den monic, zero is 0/1.
class Scalar {
  public:
    Scalar() : num_(), den_(1L) {}
    Scalar(long v) : num_(v), den_(1L) {}
    Scalar(const Rat& v) : num_(v), den_(1L) {}
    Scalar(Poly num) : num_(std::move(num)), den_(1L) { reduce(); }
    Scalar(Poly num, Poly den);

    static Scalar T() { return Scalar(Poly::var()); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_rational() const { return is_polynomial() && num_.degree() <= 0; }
    Rat as_rational() const;

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    Scalar pow(long e) const;

    // Substitute T = alpha; throws PoleAtEvaluation if the denominator
    // vanishes there.
    Scalar eval_T(const Rat& alpha) const;
    // Substitute T by an arbitrary scalar (e.g. -T).
    Scalar subst_T(const Scalar& s) const;

    // Canonical text form, e.g. "(T^2 - T)/2"; parse() inverts it.
    std::string str() const;
    static Scalar parse(const std::string& text);

  private:
    Poly num_, den_;
    void reduce();
};

// Exponent of the form a + b*T with rational a and integer b.
struct ShiftExponent {
    Rat a;
    long b = 0;

    ShiftExponent() : a(0) {}
    ShiftExponent(const Rat& a_, long b_ = 0) : a(a_), b(b_) {}
    ShiftExponent(long a_, long b_ = 0) : a(a_), b(b_) {}

    static ShiftExponent T() { return ShiftExponent(0L, 1); }

    ShiftExponent operator-() const { return ShiftExponent(-a, -b); }
    ShiftExponent operator+(const ShiftExponent& o) const { return {a + o.a, b + o.b}; }
    ShiftExponent operator-(const ShiftExponent& o) const { return {a - o.a, b - o.b}; }
    ShiftExponent operator+(long k) const { return {a + k, b}; }
    ShiftExponent operator-(long k) const { return {a - k, b}; }

    bool operator==(const ShiftExponent& o) const { return a == o.a && b == o.b; }
    bool operator!=(const ShiftExponent& o) const { return !(*this == o); }

    bool is_zero() const { return b == 0 && a == 0; }
    // "integral" exponents admit pos/neg part splitting and residues
    bool integral() const { return b == 0 && a.get_den() == 1; }
    long int_value() const;

    Scalar to_scalar() const;
    // Compact rendering used inside brackets and exponents: "T-2", "2T+1",
    // "5/2", "-T", "0".
    std::string str() const;
};

// (x choose k) as an element of the coefficient ring: prod_{j=0}^{k-1}(x - j)/k!.
Scalar binomial_ring(const Scalar& x, unsigned long k);
inline Scalar binomial_ring(const ShiftExponent& x, unsigned long k) {
    return binomial_ring(x.to_scalar(), k);
}

// Interpolation coefficient Q_{m,l}(arg) = (l!/m!) * prod_{k=l}^{m-1}(arg + k),
// defined for 1 <= l <= m.
Scalar q_coeff(unsigned long m, unsigned long l, const Scalar& arg);

} // namespace agd
