#pragma once
// Named verification suites shared by the command-line tool, the acceptance
// runner and the language bindings. Every suite returns one CheckReport per
// property instance; a suite passes when every row does.

#include <vector>

#include "agd/ffmap.hpp"
#include "agd/winterp.hpp"

namespace agd {

// q_coeff(m, l, n) against the closed binomial-ratio form, all 1 <= l <= m,
// integer arguments 1 <= n <= max_n.
std::vector<CheckReport> verify_qcoeff(long max_m = 6, long max_n = 10);

// Symbol engine: product associativity on random triples, adjoint involution
// and product-reversal, symbol composition rule, and inversion.
std::vector<CheckReport> verify_psido_engine(unsigned long seed, long triples, long samples,
                                             long horizon = 8);

// L * invert(L) = 1 through the horizon for random monic operators.
std::vector<CheckReport> verify_invert(unsigned long seed, long samples, long horizon = 8);

// Skew-symmetry of the symbolic-parameter bracket on all generator pairs with
// offsets <= max_offset.
std::vector<CheckReport> verify_skew(long max_offset = 3, long horizon = 6);

// Jacobi identity on all classical-range generator triples of the evaluated
// algebra at parameter t.
std::vector<CheckReport> verify_jacobi(WFamily family, long t, long horizon = 6);

// Self-adjointness of the even tower: operator fixed by the adjoint, the
// first eliminated coefficient in closed form, vanishing even-order
// constraints.
std::vector<CheckReport> verify_selfadj(long horizon = 8);

// Evaluation before truncation: Pr_n of the evaluated symbolic bracket equals
// the natively computed finite-rank bracket, n = min_n..max_n.
std::vector<CheckReport> verify_eval_square(long min_n = 2, long max_n = 4);

// Parameter negation is a bracket anti-isomorphism on generator pairs within
// the given depth.
std::vector<CheckReport> verify_pi(WFamily family, const Rat& alpha, long depth = 2);

// Centrality of the partial-trace vectors at the critical level, widths up to
// max_width (even widths only for so/sp), action modes up to max_mode.
std::vector<CheckReport> verify_central(const LieData& g, long max_width = 2, long max_mode = 2,
                                        bool include_sym = true);

// Interpolated vectors evaluated at integer parameters reproduce the directly
// constructed finite-rank vectors.
std::vector<CheckReport> verify_interp_eval(long max_width = 2, long min_n = 2, long max_n = 3);

// Diagram algebra: symbolic idempotent contraction, realization carrying
// composition to matrix contraction on random pairs, and injectivity of the
// realized basis above the dimension threshold.
std::vector<CheckReport> verify_diagrams(unsigned long seed, long pairs = 50);

} // namespace agd
