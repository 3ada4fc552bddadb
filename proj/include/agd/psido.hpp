#pragma once

#include <limits>
#include <map>

#include "agd/diffpoly.hpp"

namespace agd {

// Sentinel for "known to every order" (finite exact symbols).
inline constexpr long kHorizonInf = std::numeric_limits<long>::max() / 4;

long sat_add(long a, long b);

// Pseudodifferential symbol sum_k coeff[k] * D^{shift - k} over a differential
// polynomial algebra. Coefficients are stored for finitely many offsets k and
// are meaningful exactly for k < horizon; querying at or beyond the horizon is
// an error, never a silent zero.
class PsiDO {
  public:
    PsiDO() : shift_(0L), horizon_(kHorizonInf) {}

    static PsiDO zero(const ShiftExponent& shift, long horizon = kHorizonInf);
    static PsiDO identity();
    // D^e, exactly known
    static PsiDO dpow(const ShiftExponent& e);
    static PsiDO from_coeffs(const ShiftExponent& shift, std::map<long, DiffPoly> coeffs,
                             long horizon);

    const ShiftExponent& shift() const { return shift_; }
    long horizon() const { return horizon_; }
    const std::map<long, DiffPoly>& coeffs() const { return coeffs_; }

    // smallest offset that might carry a nonzero coefficient
    long effective_top() const;

    // coefficient of D^{shift - k}; throws HorizonExhausted for k >= horizon
    const DiffPoly& coeff(long k) const;

    // offset 0 coefficient is 1 and no negative offsets: monic of shifted degree 0
    bool is_monic_degree0() const;

    void set_coeff(long k, DiffPoly c);
    PsiDO truncated(long new_horizon) const;

    PsiDO operator-() const;
    PsiDO operator+(const PsiDO& o) const;
    PsiDO operator-(const PsiDO& o) const;
    friend PsiDO operator*(const Scalar& s, PsiDO a);
    friend PsiDO operator*(const DiffPoly& d, PsiDO a);

    bool operator==(const PsiDO& o) const {
        return shift_ == o.shift_ && horizon_ == o.horizon_ && coeffs_ == o.coeffs_;
    }

    // equality of all coefficients up to (excluding) offset `upto`
    bool agrees_with(const PsiDO& o, long upto) const;

    std::string str(const VarNamer& namer = default_namer()) const;

  private:
    ShiftExponent shift_;
    std::map<long, DiffPoly> coeffs_; // offset -> coefficient, no zero entries
    long horizon_;
};

// Product of symbols. The result horizon is the tightest sound bound derived
// from the operands (unknown tails cannot influence reported coefficients),
// additionally clipped to `cap`. Products whose expansion is an infinite
// series (non-natural exponent against non-constant coefficients) require a
// finite cap and throw HorizonExhausted otherwise.
PsiDO mul(const PsiDO& A, const PsiDO& B, long cap = kHorizonInf);

// Adjoint: writing A = sum_k A_k D^{shift+k} (k running over negated offsets),
// the k-th term acquires (-1)^k and the exponent factor moves left:
// A* = sum (-1)^k D^{shift+k} ∘ A_k. Involutive.
PsiDO adjoint(const PsiDO& A, long cap = kHorizonInf);

// Splitting into D^{>=0} and D^{<0} parts and the D^{-1} coefficient; these
// require an integral shift.
PsiDO pos_part(const PsiDO& A);
PsiDO neg_part(const PsiDO& A);
DiffPoly residue(const PsiDO& A);

// Two-sided inverse of a monic degree-0 symbol, solved by forward
// substitution: mul(L, result) agrees with the identity through offset depth.
PsiDO invert(const PsiDO& L, long depth);

// Substitutes T = alpha in the shift and every coefficient.
PsiDO evaluate_T(const PsiDO& A, const Rat& alpha);

// Applies a generator substitution to every coefficient.
PsiDO subst_gens(const PsiDO& A, const std::map<GenId, DiffPoly>& repl);

// Symbols as shifted series in z: same data, commutative reading.
struct Symbol {
    ShiftExponent shift;
    std::map<long, DiffPoly> coeffs;
    long horizon = kHorizonInf;

    bool operator==(const Symbol& o) const {
        return shift == o.shift && coeffs == o.coeffs && horizon == o.horizon;
    }
};

Symbol symbol(const PsiDO& A);
PsiDO from_symbol(const Symbol& s);

// A(z+d) * B(z): the composition rule for symbols, evaluated by expanding the
// left factor's powers of (z+d) against the right factor's z-series.
Symbol symbol_compose(const PsiDO& A, const PsiDO& B, long cap = kHorizonInf);

} // namespace agd
