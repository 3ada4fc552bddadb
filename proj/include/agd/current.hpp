#pragma once

// Finite-rank classical Lie algebras in their standard matrix representations,
// the negative-mode enveloping algebra in PBW normal form, the level-k action
// of nonnegative modes on the vacuum module, and the partition-sum families of
// central vectors built from (anti)symmetrized partial traces.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "agd/errors.hpp"
#include "agd/scalar.hpp"

namespace agd {

enum class LieFamily { glA, soB, spC };

// Small dense matrix over exact rationals, row-major.
struct LieMat {
    long n = 0;
    std::vector<Rat> e;

    explicit LieMat(long size = 0) : n(size), e(static_cast<size_t>(size * size), Rat(0)) {}
    Rat& at(long i, long j) { return e[static_cast<size_t>(i * n + j)]; }
    const Rat& at(long i, long j) const { return e[static_cast<size_t>(i * n + j)]; }
    bool operator==(const LieMat& o) const { return n == o.n && e == o.e; }
};

LieMat commutator(const LieMat& a, const LieMat& b);
Rat trace_product(const LieMat& a, const LieMat& b);

// A classical Lie algebra with a fixed ordered basis of matrices: the full
// matrix-unit basis for the general linear family, and a canonical independent
// subset of the reflection-adjusted units F_ij = E_ij - eps_i eps_j E_{j'i'}
// (j' = N+1-j) for the orthogonal and symplectic families.
class LieData {
  public:
    static LieData gl(long n);
    static LieData so(long N); // bilinear form along the anti-diagonal
    static LieData sp(long N); // N even; signed anti-diagonal form

    LieFamily family() const { return family_; }
    long matrix_size() const { return N_; }
    long dim() const { return static_cast<long>(basis_.size()); }
    const std::string& name(long a) const { return names_[static_cast<size_t>(a)]; }
    const LieMat& matrix(long a) const { return basis_[static_cast<size_t>(a)]; }

    // [basis_a, basis_b] expanded over the basis
    const std::vector<std::pair<long, Rat>>& bracket(long a, long b) const;
    // Invariant form: tr(xy) - tr(x)tr(y)/n for gl_n (the identity direction
    // is isotropic), half the standard-representation trace for so_N and sp_N.
    const Rat& form(long a, long b) const;

    // The level at which the partition-sum vectors below become invariant:
    // -n for gl_n, -(N-2) for so_N, -(N+2) for sp_N. In every family the
    // product (critical level) * form is minus one half of the Killing form.
    Scalar critical_level() const;

    // Matrix-unit-labelled generator (1-based i, j) as a basis combination;
    // resolves the F_ij = -eps_i eps_j F_{j'i'} relation, possibly to zero.
    std::vector<std::pair<long, Rat>> generator(long i, long j) const;
    // canonical basis position of the (i, j) label, or -1
    long index_of(long i, long j) const;
    // (i, j) label of a canonical basis position (inverse of index_of)
    std::pair<long, long> label(long a) const { return labels_[static_cast<size_t>(a)]; }

  private:
    LieData(LieFamily family, long N) : family_(family), N_(N) {}
    void push(long i, long j, LieMat m);
    long eps(long i) const; // half-space sign for the symplectic form

    LieFamily family_;
    long N_;
    std::vector<LieMat> basis_;
    std::vector<std::string> names_;
    std::vector<std::pair<long, long>> labels_;
    std::map<std::pair<long, long>, long> position_;
    mutable std::map<std::pair<long, long>, std::vector<std::pair<long, Rat>>> bracket_cache_;
    mutable std::map<std::pair<long, long>, Rat> form_cache_;
};

// One PBW factor: basis element number `basis` at mode t^{-depth}, depth >= 1.
// Monomials are sorted by (depth descending, basis ascending).
struct ModeGen {
    long basis = 0;
    long depth = 1;

    bool operator==(const ModeGen& o) const { return basis == o.basis && depth == o.depth; }
    bool operator<(const ModeGen& o) const {
        if (depth != o.depth) return depth > o.depth;
        return basis < o.basis;
    }
    bool operator>(const ModeGen& o) const { return o < *this; }
};

using UMono = std::vector<ModeGen>;

// Element of the enveloping algebra of the negative-mode current algebra in
// PBW normal form, with rational-function coefficients. The empty monomial is
// the vacuum.
class UEnvElement {
  public:
    UEnvElement() = default;

    static UEnvElement one();
    static UEnvElement gen(long basis, long depth);

    void add_term(UMono mono, const Scalar& c);
    const std::map<UMono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    UEnvElement operator-() const;
    UEnvElement& operator+=(const UEnvElement& o);
    UEnvElement& operator-=(const UEnvElement& o);
    friend UEnvElement operator+(UEnvElement a, const UEnvElement& b) { return a += b; }
    friend UEnvElement operator-(UEnvElement a, const UEnvElement& b) { return a -= b; }
    friend UEnvElement operator*(const Scalar& s, UEnvElement a);

    bool operator==(const UEnvElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const UEnvElement& o) const { return !(*this == o); }

    // text form like `(2)*E[1,1](-2) + (1)*E[1,2](-1)*E[2,1](-1)`
    std::string str(const LieData& g) const;

  private:
    std::map<UMono, Scalar> terms_;
};

// Product with PBW straightening: adjacent out-of-order factors are swapped,
// producing the commutator correction [x t^{-a}, y t^{-b}] = [x,y] t^{-a-b}.
UEnvElement mul(const LieData& g, const UEnvElement& a, const UEnvElement& b);

// Action of (basis element x) t^m, m >= 0, on P applied to the vacuum: the
// factor moves rightward by commutators; matching depths contribute the
// central term m * level * B(x, y); reaching the vacuum annihilates.
UEnvElement affine_act(const LieData& g, long x_basis, long m, const Scalar& level,
                       const UEnvElement& P);

// True iff every basis element at every mode 0..max_mode kills P at the
// algebra's critical level.
bool is_central(const LieData& g, const UEnvElement& P, long max_mode);

// Image under the symmetrization map into the symmetric algebra on the mode
// variables: monomials are read as commutative words. PBW normal forms are
// already canonically sorted, so the data is carried over unchanged; equality
// of images compares the full coefficient lists.
UEnvElement symmetrize(const UEnvElement& P);

// Coefficientwise evaluation of the parameter.
UEnvElement eval_T(const UEnvElement& P, const Rat& alpha);

// All partitions of m, parts non-increasing.
std::vector<std::vector<long>> partitions_of(long m);
// Number of permutations of cycle type lambda: m!/(prod k^{m_k} m_k!).
Rat cycle_type_count(const std::vector<long>& lambda);

enum class SSVariant { anti, sym };

// Partition sums over (anti)symmetrized partial traces in the matrix-unit
// basis; `anti` weights each partition by c_{lambda} Q_{m,l}(n) with the
// signed symmetrizer, `sym` by c_{lambda} (-1)^l Q_{m,l}(n) with the unsigned
// one.
UEnvElement ss_vector_A(long m, long n, SSVariant variant);

// Even-length-partition variant with the reflection-adjusted generators:
// unsigned symmetrizer with Q_{m,l}(N-1) in the orthogonal family, signed with
// Q_{m,l}(-N) in the symplectic family. Odd m raises OddM.
UEnvElement ss_vector_BC(long m, const LieData& g);

// Same sums with the weight argument left symbolic, realized at rank n;
// evaluating the parameter at n reproduces ss_vector_A(m, n, variant).
UEnvElement ss_vector_interp(long m, long n, SSVariant variant);

} // namespace agd
