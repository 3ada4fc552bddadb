#pragma once

#include <utility>
#include <vector>

#include "agd/bracket.hpp"

namespace agd {

enum class WFamily { GlT, PoT };

// Self-adjointness elimination for a monic symbol D^p + sum_k u_k D^{p-k}:
// equating the symbol with its adjoint determines the odd coefficients. For
// odd r the closed form of u_r in the even generators is returned (prior
// eliminations substituted); for even r the residual constraint is returned
// and must reduce to zero.
DiffPoly sa_eliminate(long r, const ShiftExponent& param = ShiftExponent::T());

// A W-algebra presented by its defining operator. `horizon` is the managed
// window: it bounds the coefficients materialized in `L`, the generator list,
// and the depth available to dual_generators. Bracket entries are exact at
// every offset regardless of the window: the generator tower is infinite by
// construction, so entry evaluation materializes deeper coefficients on
// demand.
struct WAlgebra {
    WFamily family;
    ShiftExponent param; // symbolic T or an evaluated rational
    long horizon;
    std::vector<GenId> generators; // offsets 0,1,... (gl) or 2,4,... (po)
    PsiDO L;
    BracketMatrix brackets;
};

// D^p + u[0] D^{p-1} + ... with one generator per coefficient. Rejects p = 0,
// where the structure degenerates.
WAlgebra build_w_gl(const ShiftExponent& param, long horizon);

// The self-adjoint tower: even coefficients are generators, odd ones their
// eliminations. Verifies adjoint(L) = L through the window at build time.
WAlgebra build_w_po(const ShiftExponent& param, long horizon);

// The finite comparison operators: differential operators with zero tails,
// hence exactly known at every order.
PsiDO classical_gl_operator(long n);
PsiDO classical_po_operator(long N);

// Sends generators beyond the classical range of an evaluated algebra to
// zero and keeps the rest. Throws NotEvaluated on a symbolic parameter.
DiffPoly project_pr_n(const WAlgebra& w, const DiffPoly& elem);
LambdaPoly project_pr_n(const WAlgebra& w, const LambdaPoly& elem);

// Reads H_k off the inverse operator with the alternating-sign convention
// L^{-1} = D^{-p} - H_1 D^{-p-1} + H_2 D^{-p-2} - ...; count is limited by
// the window.
std::vector<DiffPoly> dual_generators(const WAlgebra& w, long count);

struct PiAntiEntry {
    long a, b;
    LambdaPoly residual;
    bool pass;
};

struct PiAntiReport {
    // generator of the mirror algebra -> its image among the inverse's
    // coefficients
    std::vector<std::pair<GenId, DiffPoly>> correspondence;
    std::vector<PiAntiEntry> checks;
    bool all_pass = true;
};

// The parameter-negation correspondence: the algebra at -alpha maps onto the
// coefficients of invert(L) of the algebra at alpha. Verifies the
// anti-homomorphism law {pi(a) lambda pi(b)} = -pi({a lambda b}) on the given
// generator-offset pairs.
PiAntiReport pi_anti(const WAlgebra& w, const std::vector<std::pair<long, long>>& pairs);

} // namespace agd
