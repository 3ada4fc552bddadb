#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "agd/psido.hpp"

namespace agd {

// Polynomial in a formal bracket variable λ with DiffPoly coefficients.
class LambdaPoly {
  public:
    LambdaPoly() = default;
    LambdaPoly(const DiffPoly& c) { add_term(0, c); }
    LambdaPoly(long c) : LambdaPoly(DiffPoly(c)) {}

    static LambdaPoly lambda(long degree = 1) {
        LambdaPoly p;
        p.add_term(degree, DiffPoly(1L));
        return p;
    }

    void add_term(long degree, DiffPoly c);
    const std::map<long, DiffPoly>& terms() const { return terms_; }
    const DiffPoly& coeff(long degree) const;
    bool is_zero() const { return terms_.empty(); }
    long max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    LambdaPoly operator-() const;
    LambdaPoly& operator+=(const LambdaPoly& o);
    LambdaPoly& operator-=(const LambdaPoly& o);
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator*(const DiffPoly& d, LambdaPoly p);
    friend LambdaPoly operator*(LambdaPoly p, const DiffPoly& d) { return d * std::move(p); }
    friend LambdaPoly operator*(const Scalar& s, LambdaPoly p) { return DiffPoly(s) * std::move(p); }

    bool operator==(const LambdaPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LambdaPoly& o) const { return !(*this == o); }

    std::string str(const VarNamer& namer = default_namer()) const;

  private:
    std::map<long, DiffPoly> terms_; // degree -> coefficient, no zero entries
};

// Polynomial in two independent bracket variables λ and μ.
class LambdaPoly2 {
  public:
    void add_term(long dl, long dm, DiffPoly c);
    const std::map<std::pair<long, long>, DiffPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LambdaPoly2& operator+=(const LambdaPoly2& o);
    LambdaPoly2& operator-=(const LambdaPoly2& o);
    friend LambdaPoly2 operator+(LambdaPoly2 a, const LambdaPoly2& b) { return a += b; }
    friend LambdaPoly2 operator-(LambdaPoly2 a, const LambdaPoly2& b) { return a -= b; }
    bool operator==(const LambdaPoly2& o) const { return terms_ == o.terms_; }

    std::string str(const VarNamer& namer = default_namer()) const;

  private:
    std::map<std::pair<long, long>, DiffPoly> terms_;
};

// (λ+∂)^k x, or (−λ−∂)^k x when negated; ∂ lands on x.
LambdaPoly shifted_pow(long k, const DiffPoly& x, bool negated = false);
LambdaPoly shifted_pow(long k, const LambdaPoly& x, bool negated = false);

// P(λ+∂) x for P = Σ c_d λ^d: coefficients stay put, the shifted powers act on x.
LambdaPoly apply_shifted(const LambdaPoly& P, const LambdaPoly& x);

// Σ_d (−λ−∂)^d c_d: the transform entering the skew-symmetry condition.
LambdaPoly neg_conjugate(const LambdaPoly& P);

LambdaPoly evaluate_T(const LambdaPoly& p, const Rat& alpha);
LambdaPoly subst_gens(const LambdaPoly& p, const std::map<GenId, DiffPoly>& repl);

// The Adler map of a monic degree-0 symbol L with shift α, applied to F of
// shift −α: (LF)_+ L − L (FL)_+. Coefficients beyond `cap` are not computed.
PsiDO adler(const PsiDO& L, const PsiDO& F, long cap = kHorizonInf);

// Probe handling for adler_entry. On the locus of adjoint-fixed operators
// only the adjoint-odd part of a probe pairs with tangent variations, so the
// probe must be replaced by (F − adjoint(F))/2 there; the Adler image of such
// a probe is itself adjoint-fixed, which keeps the flows on the locus.
enum class ProbeSymmetry { none, anti_adjoint };

// Matrix entry by the residue formula: probe with a fresh generator f,
// F = ∂^{−α+i} ∘ f, read Res(adler(F) ∘ ∂^{−α+j}) as a polynomial in λ via
// the coefficients of f, f', f'', ...
LambdaPoly adler_entry(const PsiDO& L, long i_offset, long j_offset,
                       ProbeSymmetry sym = ProbeSymmetry::none);

// Lazily computed, cached bracket entry table over one generator family.
// Entry (i, j) is the bracket of generators directly: {u_i λ u_j} = H_{ij}.
class BracketMatrix {
  public:
    using EntryFn = std::function<LambdaPoly(long, long)>;

    BracketMatrix(std::string tag, std::vector<long> offsets, EntryFn entries);

    const std::string& tag() const { return tag_; }
    const std::vector<long>& offsets() const { return offsets_; }
    bool has_offset(long o) const;

    const LambdaPoly& entry(long i, long j) const;
    LambdaPoly bracket(long a, long b) const { return entry(a, b); }

  private:
    std::string tag_;
    std::vector<long> offsets_;
    EntryFn entries_;
    struct Cache {
        std::mutex mu;
        std::map<std::pair<long, long>, LambdaPoly> entries;
    };
    std::shared_ptr<Cache> cache_;
};

// Entry table of the Adler construction for L; generator offset k names the
// coefficient of L at offset k+1 (one past the monic head).
BracketMatrix adler_matrix(PsiDO L, std::string tag = "u", std::vector<long> offsets = {});

// {f λ g} = Σ ∂g/∂u_n^(i) (λ+∂)^i H_{nm}(λ+∂) (−λ−∂)^j ∂f/∂u_m^(j).
LambdaPoly master_bracket(const BracketMatrix& H, const DiffPoly& f, const DiffPoly& g);

struct SkewEntry {
    long a, b;
    LambdaPoly residual;
    bool pass;
};
struct JacobiEntry {
    long a, b, c;
    LambdaPoly2 residual;
    bool pass;
};

// Residual of {u_a λ u_b} + {u_b −λ−∂ u_a} per pair; zero means skew holds.
std::vector<SkewEntry> check_skew(const BracketMatrix& H,
                                  const std::vector<std::pair<long, long>>& pairs);

// Residual of {a λ {b μ c}} − {b μ {a λ c}} − {{a λ b} λ+μ c} per triple.
std::vector<JacobiEntry> check_jacobi(const BracketMatrix& H,
                                      const std::vector<std::array<long, 3>>& triples);

LambdaPoly2 jacobi_residual(const BracketMatrix& H, long a, long b, long c);

} // namespace agd
