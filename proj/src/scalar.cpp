#include "agd/scalar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace agd {

Rat factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rat(r);
}

Rat binom(const Rat& x, unsigned long k) {
    Rat p(1);
    for (unsigned long j = 0; j < k; ++j) p *= x - Rat(static_cast<long>(j));
    return p / factorial(k);
}

std::string rat_str(const Rat& v) { return v.get_str(); }

// ---------------------------------------------------------------- Poly

Poly::Poly(long v) {
    if (v != 0) c_.assign(1, Rat(v));
}

Poly::Poly(const Rat& v) {
    Rat w(v);
    w.canonicalize();
    if (w != 0) c_.assign(1, w);
}

Poly Poly::var() { return monomial(Rat(1), 1); }

Poly Poly::monomial(const Rat& c, std::size_t k) {
    Poly p;
    Rat w(c);
    w.canonicalize();
    if (w != 0) {
        p.c_.assign(k + 1, Rat(0));
        p.c_[k] = w;
    }
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::coeff(std::size_t k) const {
    if (k >= c_.size()) return Rat(0);
    return c_[k];
}

const Rat& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly Poly::pow(unsigned long e) const {
    Poly r(1L), base(*this);
    while (e > 0) {
        if (e & 1UL) r *= base;
        base *= base;
        e >>= 1UL;
    }
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    q = Poly();
    r = a;
    const long db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
        Rat c = r.leading() / b.leading();
        Poly t = Poly::monomial(c, shift);
        q += t;
        r -= t * b;
    }
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a *= Rat(1) / a.leading();
    return a;
}

void Poly::content_split(Rat& content, Poly& primitive) const {
    if (is_zero()) {
        content = 0;
        primitive = Poly();
        return;
    }
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& c : c_) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    content = Rat(num_gcd, den_lcm);
    content.canonicalize();
    if (leading() < 0) content = -content;
    primitive = *this;
    primitive *= Rat(1) / content;
}

namespace {

// Renders one power of T with its (positive) coefficient magnitude.
std::string term_str(const Rat& mag, std::size_t k) {
    std::string s;
    if (k == 0) return rat_str(mag);
    if (mag != 1) {
        if (mag.get_den() == 1)
            s += rat_str(mag);
        else
            s += "(" + rat_str(mag) + ")";
    }
    s += "T";
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

} // namespace

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rat& c = c_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        s += term_str(mag, i);
    }
    return s;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("scalar with zero denominator");
    reduce();
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = Poly(1L);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        Poly q, r;
        Poly::divmod(num_, g, q, r);
        num_ = std::move(q);
        Poly::divmod(den_, g, q, r);
        den_ = std::move(q);
    }
    const Rat lead = den_.leading();
    if (lead != 1) {
        const Rat inv = Rat(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

bool Scalar::is_one() const { return den_.degree() == 0 && num_ == Poly(1L); }

Rat Scalar::as_rational() const {
    if (!is_rational()) throw std::domain_error("scalar is not a constant: " + str());
    return num_.coeff(0);
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("scalar division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero scalar");
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r(1L), base(*this);
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1UL) r *= base;
        base *= base;
        k >>= 1UL;
    }
    return r;
}

Scalar Scalar::eval_T(const Rat& alpha) const {
    const Rat d = den_.eval(alpha);
    if (d == 0) throw PoleAtEvaluation("pole at T = " + rat_str(alpha) + " in " + str());
    return Scalar(num_.eval(alpha) / d);
}

Scalar Scalar::subst_T(const Scalar& s) const {
    Scalar n(0L), d(0L);
    for (long k = num_.degree(); k >= 0; --k) n = n * s + Scalar(num_.coeff(static_cast<std::size_t>(k)));
    for (long k = den_.degree(); k >= 0; --k) d = d * s + Scalar(den_.coeff(static_cast<std::size_t>(k)));
    if (d.is_zero()) throw PoleAtEvaluation("substitution produces zero denominator in " + str());
    return n / d;
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    Rat cn, cd;
    Poly N, D;
    num_.content_split(cn, N);
    den_.content_split(cd, D);
    const Rat r = cn / cd;
    const Poly P = N * Rat(r.get_num());
    const Poly Q = D * Rat(r.get_den());
    if (Q == Poly(1L)) return P.str();

    std::string ns = P.str();
    if (ns.find(' ') != std::string::npos) ns = "(" + ns + ")";
    std::string ds;
    if (Q.degree() == 0) {
        ds = rat_str(Q.coeff(0));
    } else if (Q.leading() == 1 && Q == Poly::monomial(Rat(1), static_cast<std::size_t>(Q.degree()))) {
        ds = Q.str();
    } else {
        ds = "(" + Q.str() + ")";
    }
    return ns + "/" + ds;
}

// ---------------------------------------------------------------- parsing

namespace {

class ScalarParser {
  public:
    explicit ScalarParser(const std::string& s) : s_(s) {}

    Scalar run() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("scalar parse error at position " + std::to_string(pos_) + ": " + why +
                         " in \"" + s_ + "\"");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+'))
                v += term();
            else if (eat('-'))
                v -= term();
            else
                return v;
        }
    }

    // Adjacent factors multiply implicitly, so "2T" and "2(T+1)" parse.
    Scalar term() {
        Scalar v = factor();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                v *= factor();
            } else if (c == '/') {
                ++pos_;
                v /= factor();
            } else if (c == 'T' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
                v *= factor();
            } else {
                return v;
            }
        }
    }

    Scalar factor() {
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        Scalar v = atom();
        while (peek() == '^') {
            ++pos_;
            bool neg = false;
            if (eat('-')) neg = true;
            const long e = integer();
            v = v.pow(neg ? -e : e);
        }
        return v;
    }

    Scalar atom() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'T') {
            ++pos_;
            return Scalar::T();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(Rat(mpz_class(digits())));
        fail("expected atom");
    }

    long integer() {
        const char c = peek();
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected integer");
        return std::stol(digits());
    }

    std::string digits() {
        skip_ws();
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        return d;
    }
};

} // namespace

Scalar Scalar::parse(const std::string& text) { return ScalarParser(text).run(); }

// ---------------------------------------------------------------- ShiftExponent

long ShiftExponent::int_value() const {
    if (!integral()) throw NonIntegralShift("exponent " + str() + " is not an integer");
    return static_cast<long>(a.get_num().get_si());
}

Scalar ShiftExponent::to_scalar() const {
    return Scalar(a) + Scalar(static_cast<long>(b)) * Scalar::T();
}

std::string ShiftExponent::str() const {
    if (b == 0) return rat_str(a);
    std::string s;
    if (b == -1)
        s = "-T";
    else if (b == 1)
        s = "T";
    else
        s = std::to_string(b) + "T";
    if (a != 0) {
        if (a > 0)
            s += "+" + rat_str(a);
        else
            s += "-" + rat_str(Rat(-a));
    }
    return s;
}

// ---------------------------------------------------------------- binomials

Scalar binomial_ring(const Scalar& x, unsigned long k) {
    Scalar p(1L);
    for (unsigned long j = 0; j < k; ++j) p *= x - Scalar(static_cast<long>(j));
    return p / Scalar(factorial(k));
}

Scalar q_coeff(unsigned long m, unsigned long l, const Scalar& arg) {
    if (l < 1 || l > m) throw std::invalid_argument("q_coeff requires 1 <= l <= m");
    Scalar p(factorial(l) / factorial(m));
    for (unsigned long k = l; k < m; ++k) p *= arg + Scalar(static_cast<long>(k));
    return p;
}

} // namespace agd
