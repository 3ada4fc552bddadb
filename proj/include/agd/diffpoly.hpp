#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "agd/scalar.hpp"

namespace agd {

// A generator u_{base+offset} of a differential polynomial algebra. The tag
// separates independent families sharing one arithmetic engine (W-algebra
// coefficients, Cartan coordinates, fresh formal test functions, ...).
struct GenId {
    std::string tag;
    long offset = 0;

    GenId() = default;
    GenId(std::string t, long off) : tag(std::move(t)), offset(off) {}

    auto operator<=>(const GenId&) const = default;
};

// One factor u_g^{(order)} raised to `power`.
struct VarPow {
    GenId g;
    long order = 0;
    long power = 1;

    auto operator<=>(const VarPow&) const = default;
};

// Commutative monomial: factors sorted by (tag, offset, order), powers > 0.
struct Monomial {
    std::vector<VarPow> factors;

    auto operator<=>(const Monomial&) const = default;

    bool is_one() const { return factors.empty(); }
    long total_degree() const;
    long derivative_weight() const;
    static Monomial merge(const Monomial& a, const Monomial& b);
};

// Maps generator ids to display strings; defaults to "tag[offset]".
using VarNamer = std::function<std::string(const GenId&)>;

VarNamer default_namer();
// Renders offsets against a symbolic base, e.g. base -T gives "u[-T+2]".
VarNamer offset_namer(const std::string& tag, const ShiftExponent& base, VarNamer fallback = default_namer());
// Renders a single-generator tag bare ("f" instead of "f[0]").
VarNamer bare_namer(const std::string& tag, VarNamer fallback = default_namer());

// Sparse differential polynomial with Scalar coefficients.
class DiffPoly {
  public:
    DiffPoly() = default;
    DiffPoly(const Scalar& c);
    DiffPoly(long c) : DiffPoly(Scalar(c)) {}

    static DiffPoly gen(const GenId& g, long order = 0);
    static DiffPoly mono(Monomial m, Scalar c);

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    Scalar scalar_part() const; // coefficient of the empty monomial
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    DiffPoly operator-() const;
    DiffPoly& operator+=(const DiffPoly& o);
    DiffPoly& operator-=(const DiffPoly& o);
    DiffPoly& operator*=(const DiffPoly& o);
    DiffPoly& operator*=(const Scalar& s);

    friend DiffPoly operator+(DiffPoly a, const DiffPoly& b) { return a += b; }
    friend DiffPoly operator-(DiffPoly a, const DiffPoly& b) { return a -= b; }
    friend DiffPoly operator*(DiffPoly a, const DiffPoly& b) { return a *= b; }
    friend DiffPoly operator*(DiffPoly a, const Scalar& s) { return a *= s; }
    friend DiffPoly operator*(const Scalar& s, DiffPoly a) { return a *= s; }

    bool operator==(const DiffPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiffPoly& o) const { return !(*this == o); }

    DiffPoly pow(unsigned long e) const;

    // Adds `c * m` in place.
    void add_term(const Monomial& m, const Scalar& c);

    long total_degree() const;      // max over monomials of summed powers
    long derivative_weight() const; // max over monomials of summed order*power

    std::string str(const VarNamer& namer = default_namer()) const;

  private:
    std::map<Monomial, Scalar> terms_;
};

// Total derivation: Leibniz rule, u^{(k)} -> u^{(k+1)}, scalars are constants.
DiffPoly derive(const DiffPoly& p);
DiffPoly derive(const DiffPoly& p, unsigned long times);

// Formal partial derivative with respect to u_g^{(k)}.
DiffPoly partial(const DiffPoly& p, const GenId& g, long k);

// Substitutes T = alpha in every coefficient.
DiffPoly evaluate_T(const DiffPoly& p, const Rat& alpha);

// Substitutes whole generator families: every occurrence of u_g^{(k)} becomes
// the k-th derivative of repl[g]. Generators not in the map are untouched.
DiffPoly subst_gens(const DiffPoly& p, const std::map<GenId, DiffPoly>& repl);

// True if p contains a generator with the given tag.
bool mentions_tag(const DiffPoly& p, const std::string& tag);

// Decomposes a polynomial that is linear in the generators of `tag`:
// p = sum_k coeff[k] * u^{(k)} + rest (rest collects the tag-free part).
// Throws UnknownGenerator if any monomial is nonlinear in the tag.
void split_linear(const DiffPoly& p, const std::string& tag,
                  std::map<long, DiffPoly>& coeff_by_order, DiffPoly& rest);

} // namespace agd
