#include "agd/winterp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace agd {

namespace {

constexpr const char* kGenTag = "u";

// One term of the adjoint-equality right-hand side at offset r.
DiffPoly adjoint_term(const std::vector<DiffPoly>& c, long k, long r, const ShiftExponent& param) {
    const Scalar sign((k % 2) ? -1L : 1L);
    return sign * binomial_ring(param - k, static_cast<unsigned long>(r - k)) *
           derive(c[static_cast<std::size_t>(k)], static_cast<unsigned long>(r - k));
}

// Coefficients 0..depth of the self-adjoint tower: offset 0 is 1, even
// offsets carry generators, odd offsets the eliminated closed forms. Even
// offsets also contribute a consistency constraint which must vanish.
std::vector<DiffPoly> sa_coeffs(long depth, const ShiftExponent& param) {
    std::vector<DiffPoly> c;
    c.reserve(static_cast<std::size_t>(depth) + 1);
    c.push_back(DiffPoly(1L));
    for (long r = 1; r <= depth; ++r) {
        DiffPoly rhs;
        for (long k = 0; k < r; ++k) rhs += adjoint_term(c, k, r, param);
        if (r % 2) {
            c.push_back(Scalar(Rat(1, 2)) * rhs);
        } else {
            if (!rhs.is_zero())
                throw InconsistentConstraint("self-adjointness constraint at offset " +
                                             std::to_string(r) + " does not vanish");
            c.push_back(DiffPoly::gen(GenId(kGenTag, r)));
        }
    }
    return c;
}

// The tower operator with one generator per coefficient, materialized through
// offset `depth`.
PsiDO deep_gl_operator(const ShiftExponent& param, long depth) {
    std::map<long, DiffPoly> c;
    c.emplace(0, DiffPoly(1L));
    for (long m = 1; m <= depth; ++m) c.emplace(m, DiffPoly::gen(GenId(kGenTag, m - 1)));
    return PsiDO::from_coeffs(param, std::move(c), depth + 1);
}

// The self-adjoint tower materialized through offset `depth`.
PsiDO deep_po_operator(const ShiftExponent& param, long depth) {
    std::vector<DiffPoly> cs = sa_coeffs(depth, param);
    std::map<long, DiffPoly> c;
    for (long k = 0; k <= depth; ++k)
        if (!cs[static_cast<std::size_t>(k)].is_zero())
            c.emplace(k, std::move(cs[static_cast<std::size_t>(k)]));
    return PsiDO::from_coeffs(param, std::move(c), depth + 1);
}

BracketMatrix::EntryFn gl_entries(ShiftExponent param) {
    return [param](long i, long j) {
        return adler_entry(deep_gl_operator(param, i + j + 2), i, j);
    };
}

BracketMatrix::EntryFn po_entries(ShiftExponent param) {
    return [param](long i, long j) {
        if (i < 2 || j < 2 || i % 2 || j % 2)
            throw std::invalid_argument("the self-adjoint family has generators at even "
                                        "offsets starting from 2");
        // generators sit at even coefficient offsets; probe slots are one less
        return adler_entry(deep_po_operator(param, i + j), i - 1, j - 1,
                           ProbeSymmetry::anti_adjoint);
    };
}

} // namespace

DiffPoly sa_eliminate(long r, const ShiftExponent& param) {
    if (r < 1) throw std::invalid_argument("elimination offset must be positive");
    const std::vector<DiffPoly> c = sa_coeffs(r - 1, param);
    DiffPoly rhs;
    for (long k = 0; k < r; ++k) rhs += adjoint_term(c, k, r, param);
    if (r % 2) return Scalar(Rat(1, 2)) * rhs;
    return rhs;
}

WAlgebra build_w_gl(const ShiftExponent& param, long horizon) {
    if (horizon < 2) throw std::invalid_argument("the window needs horizon >= 2");
    if (param.is_zero())
        throw std::invalid_argument("the parameter 0 is singular for this family and the "
                                    "structure is not defined there");
    std::vector<GenId> gens;
    for (long m = 0; m < horizon; ++m) gens.emplace_back(kGenTag, m);
    std::vector<long> offs;
    for (long m = 0; m <= 3 * horizon + 1; ++m) offs.push_back(m);
    return WAlgebra{WFamily::GlT,
                    param,
                    horizon,
                    std::move(gens),
                    deep_gl_operator(param, horizon),
                    BracketMatrix(kGenTag, std::move(offs), gl_entries(param))};
}

WAlgebra build_w_po(const ShiftExponent& param, long horizon) {
    if (horizon < 4) throw std::invalid_argument("the window needs horizon >= 4");
    PsiDO L = deep_po_operator(param, horizon); // checks even constraints eagerly
    if (!adjoint(L, horizon + 1).agrees_with(L, horizon + 1))
        throw InconsistentConstraint("eliminations failed to make the operator self-adjoint");
    std::vector<GenId> gens;
    for (long m = 2; m <= horizon; m += 2) gens.emplace_back(kGenTag, m);
    std::vector<long> offs;
    for (long m = 2; m <= 3 * horizon + 2; m += 2) offs.push_back(m);
    return WAlgebra{WFamily::PoT,
                    param,
                    horizon,
                    std::move(gens),
                    std::move(L),
                    BracketMatrix(kGenTag, std::move(offs), po_entries(param))};
}

PsiDO classical_gl_operator(long n) {
    if (n < 1) throw std::invalid_argument("classical rank must be positive");
    std::map<long, DiffPoly> c;
    c.emplace(0, DiffPoly(1L));
    for (long m = 1; m <= n; ++m) c.emplace(m, DiffPoly::gen(GenId(kGenTag, m - 1)));
    return PsiDO::from_coeffs(ShiftExponent(n), std::move(c), kHorizonInf);
}

PsiDO classical_po_operator(long N) {
    if (N < 2) throw std::invalid_argument("classical rank must be at least 2");
    const long top = 2 * (N / 2);
    const long margin = N + 6;
    const std::vector<DiffPoly> cs = sa_coeffs(margin, ShiftExponent(N));
    std::map<GenId, DiffPoly> kill;
    for (long m = top + 2; m <= margin; m += 2) kill.emplace(GenId(kGenTag, m), DiffPoly());
    std::map<long, DiffPoly> c;
    for (long k = 0; k <= margin; ++k) {
        DiffPoly v = subst_gens(cs[static_cast<std::size_t>(k)], kill);
        if (k > N) {
            // beyond the order of the differential operator everything must
            // collapse; anything left would mean the eliminations do not close
            if (!v.is_zero())
                throw InconsistentConstraint(
                    "projected self-adjoint tower does not terminate at offset " +
                    std::to_string(k));
            continue;
        }
        if (!v.is_zero()) c.emplace(k, std::move(v));
    }
    return PsiDO::from_coeffs(ShiftExponent(N), std::move(c), kHorizonInf);
}

namespace {

long classical_top_offset(const WAlgebra& w) {
    if (!w.param.integral())
        throw NotEvaluated("projection needs the parameter evaluated at an integer, have " +
                           w.param.str());
    const long n = w.param.int_value();
    if (n < 1) throw std::invalid_argument("projection target rank must be positive");
    return w.family == WFamily::GlT ? n - 1 : 2 * (n / 2);
}

} // namespace

DiffPoly project_pr_n(const WAlgebra& w, const DiffPoly& elem) {
    const long top = classical_top_offset(w);
    std::map<GenId, DiffPoly> kill;
    for (const auto& [m, c] : elem.terms())
        for (const auto& vp : m.factors)
            if (vp.g.tag == kGenTag && vp.g.offset > top) kill.emplace(vp.g, DiffPoly());
    return kill.empty() ? elem : subst_gens(elem, kill);
}

LambdaPoly project_pr_n(const WAlgebra& w, const LambdaPoly& elem) {
    LambdaPoly out;
    for (const auto& [d, c] : elem.terms()) out.add_term(d, project_pr_n(w, c));
    return out;
}

std::vector<DiffPoly> dual_generators(const WAlgebra& w, long count) {
    if (count < 1) throw std::invalid_argument("need a positive number of dual generators");
    const PsiDO X = invert(w.L, count);
    std::vector<DiffPoly> out;
    out.reserve(static_cast<std::size_t>(count));
    Scalar sign(1L);
    for (long k = 1; k <= count; ++k) {
        sign *= Scalar(-1L);
        out.push_back(sign * X.coeff(k));
    }
    return out;
}

PiAntiReport pi_anti(const WAlgebra& w, const std::vector<std::pair<long, long>>& pairs) {
    if (w.param.b != 0)
        throw NotEvaluated("parameter negation needs an evaluated parameter, have " +
                           w.param.str());
    const bool gl = w.family == WFamily::GlT;
    const WAlgebra mirror =
        gl ? build_w_gl(-w.param, w.horizon) : build_w_po(-w.param, w.horizon);

    long need = 4;
    for (const auto& [a, b] : pairs) need = std::max(need, a + b + 2);
    const PsiDO X = invert(gl ? deep_gl_operator(w.param, need + 1)
                              : deep_po_operator(w.param, need + 1),
                           need);

    // the mirror's canonical operator matches invert(L) coefficient by
    // coefficient, so generators map to raw inverse coefficients
    std::map<GenId, DiffPoly> repl;
    for (long m = gl ? 0 : 2; m <= (gl ? need - 1 : need); m += gl ? 1 : 2)
        repl.emplace(GenId(kGenTag, m), X.coeff(gl ? m + 1 : m));

    PiAntiReport rep;
    for (const auto& [g, h] : repl) rep.correspondence.emplace_back(g, h);
    for (const auto& [a, b] : pairs) {
        const LambdaPoly rhs = subst_gens(mirror.brackets.bracket(a, b), repl);
        const LambdaPoly lhs =
            master_bracket(w.brackets, repl.at(GenId(kGenTag, a)), repl.at(GenId(kGenTag, b)));
        LambdaPoly residual = lhs + rhs;
        const bool pass = residual.is_zero();
        if (!pass) rep.all_pass = false;
        rep.checks.push_back(PiAntiEntry{a, b, std::move(residual), pass});
    }
    return rep;
}

} // namespace agd
