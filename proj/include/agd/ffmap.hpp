#pragma once
// Free-field realization of the affine centers: projection of central vectors
// onto the diagonal current subalgebra, Miura-type factorizations producing
// the expected images, and the cross-checks tying both to the W-algebra side.

#include <map>
#include <string>
#include <vector>

#include "agd/current.hpp"

namespace agd {

// Elements of the commutative algebra generated by the diagonal modes
// h_i t^{-r}, r >= 1. The PBW container is reused with one convention change:
// ModeGen::basis holds the diagonal SLOT index i-1 (position in the list of
// independent diagonal generators), not a LieData basis index. Slot-indexed
// elements of equal-rank algebras are therefore directly comparable, which is
// what the duality between the orthogonal and symplectic towers needs.
using CartanElement = UEnvElement;

// Number of independent diagonal generators: n for gl_n, so_{2n+1}, sp_{2n}.
long cartan_rank(const LieData& g);
// Basis positions of the diagonal generators, in slot order.
std::vector<long> cartan_indices(const LieData& g);

// Commutative product: factor lists merge and sort with no correction terms.
CartanElement cartan_mul(const CartanElement& a, const CartanElement& b);
// The derivation h t^{-r} -> r h t^{-r-1}, extended by the Leibniz rule.
CartanElement cartan_derive(const CartanElement& p);
// Rendering with slot letters named after g's diagonal generators.
std::string cartan_str(const CartanElement& p, const LieData& g);

// Truncated formal operator sum_k c_k D^k with CartanElement coefficients and
// integer exponents. Terms below `floor` are discarded on insertion, so a
// chain of compositions is exact only in degrees the caller budgeted headroom
// for; purely differential operators (floor 0) never truncate.
class CartanOp {
  public:
    explicit CartanOp(long floor) : floor_(floor) {}

    static CartanOp identity(long floor);
    // D + c for c a single slot letter, the factor all expansions are built of
    static CartanOp affine_factor(long slot, const Scalar& sign, long floor);

    long floor() const { return floor_; }
    const std::map<long, CartanElement>& terms() const { return terms_; }
    CartanElement coeff(long degree) const;
    void add_term(long degree, const CartanElement& c);

    bool operator==(const CartanOp& o) const {
        return floor_ == o.floor_ && terms_ == o.terms_;
    }

  private:
    long floor_;
    std::map<long, CartanElement> terms_; // degree -> coefficient, no zeros
};

// Composition by the generalized Leibniz rule, exact above the result floor
// (= max of the operand floors) provided the operands were exact above
// their floors minus the partner's top degree.
CartanOp op_mul(const CartanOp& a, const CartanOp& b);
// Two-sided inverse of a monic differential operator of order p, computed as
// D^{-p} + sum_{k=1..count} c_k D^{-p-k}.
CartanOp op_invert(const CartanOp& l, long count);

enum class MiuraKind { elementary, complete };

// The defining factorization of the free-field image, composed left to right:
//   gl_n:      (D + a_n)(D + a_{n-1}) ... (D + a_1)
//   so_{2n+1}: (D + a_1)...(D + a_n) D (D - a_n)...(D - a_1)
//   sp_{2n}:   (D + a_1)...(D + a_n)(D - a_n)...(D - a_1)
// (a_i = i-th diagonal slot letter at depth 1).
CartanOp miura_operator(const LieData& g);

// The expected projections of the central vectors. `elementary` reads the
// coefficients of the factorization itself (all n for gl, the even-index ones
// for so/sp); `complete` reads the inverse with alternating signs,
//   L^{-1} = D^{-p} - H_1 D^{-p-1} + H_2 D^{-p-2} - ...
// and returns the H_k (even k only for so/sp).
std::vector<CartanElement> miura_generators(const LieData& g, MiuraKind kind);

// Ordered word sums in the letters y_k = D + a_k of the gl factorization:
// `elementary` m sums the strictly decreasing words y_{k_1}...y_{k_m}
// (k_1 > ... > k_m), `complete` the weakly increasing ones. These satisfy the
// operator identity sum_i (-1)^i e_{m-i} h_i = delta_{m,0} for every m.
CartanOp miura_word(const LieData& g, MiuraKind kind, long m);

// Projection onto diagonal modes: monomials are straightened into the order
// (raising, diagonal, lowering) for gl and (lowering, diagonal, raising) for
// so/sp, every monomial still containing an off-diagonal factor is dropped,
// and the survivors are relabelled to slot indices. Requires P of weight
// zero (all diagonal mode-0 actions vanish); throws NotWeightZero otherwise.
CartanElement hc_project(const UEnvElement& p, const LieData& g);

// Type A central vectors normalized as vacuum constant terms of the
// (anti)symmetrizer-traced words in (tau + E t^{-1}), tau the depth-bump
// token. These are the representatives whose diagonal projections equal the
// Miura generators on the nose; they differ from ss_vector_A by derivative
// corrections of lower vectors (first cases: phi_2 shifts by the derivative
// of phi_1, psi_2 by -(n+1) times the derivative of psi_1).
UEnvElement ss_vector_det(long m, long n, SSVariant variant);

// One verification row: rendered sides, their difference, and the verdict.
struct CheckReport {
    std::string check;
    std::string inputs;
    std::string lhs;
    std::string rhs;
    std::string residual;
    bool pass = false;

    std::string to_json() const;
};

std::string reports_to_json(const std::vector<CheckReport>& reports);

// Free-field correspondence checks for one algebra. For gl_n: projections of
// both normalized vector families against both generator kinds, the
// derivative-correction identities tying them to the partial-trace vectors,
// and a negative control with one partition weight corrupted. For so_3/sp_2:
// the projection of the even partial-trace vector against the factorization
// of the OTHER family one size over/under (the correspondence swaps the two
// towers and shifts the matrix size by one).
std::vector<CheckReport> check_ff(const LieData& g);

// Commuting-square checks for gl_n, so_n or sp_n (n = the algebra label):
// interpolated vectors evaluated at T = n against the classical ones, their
// projections against the Miura generators, and the W-algebra side (generator
// projection under Pr_n, the substituted classical operator against the
// factorization, and the inverse-operator generators against the complete
// family). The so/sp squares run against the other family's factorization
// one size down/up.
std::vector<CheckReport> check_square(long n, LieFamily family);

} // namespace agd
