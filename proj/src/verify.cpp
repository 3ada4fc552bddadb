#include "agd/verify.hpp"

#include <array>
#include <random>
#include <sstream>

#include "agd/diagrams.hpp"
#include "agd/errors.hpp"

namespace agd {

namespace {

CheckReport row(std::string check, std::string inputs, std::string lhs, std::string rhs,
                bool pass) {
    CheckReport r;
    r.check = std::move(check);
    r.inputs = std::move(inputs);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.residual = pass ? "0" : "nonzero";
    r.pass = pass;
    return r;
}

DiffPoly random_coeff(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> offset(0, 2), order(0, 2), num(-4, 4);
    DiffPoly p;
    for (int t = 0; t < 2; ++t)
        p += Scalar(Rat(num(rng))) * DiffPoly::gen(GenId("u", offset(rng)), order(rng));
    return p;
}

PsiDO random_symbol(std::mt19937_64& rng, const ShiftExponent& shift, int maxoff, bool monic) {
    std::map<long, DiffPoly> cs;
    cs[0] = monic ? DiffPoly(1L) : random_coeff(rng) + DiffPoly(1L);
    for (long k = 1; k <= maxoff; ++k) cs[k] = random_coeff(rng);
    return PsiDO::from_coeffs(shift, std::move(cs), kHorizonInf);
}

} // namespace

std::vector<CheckReport> verify_qcoeff(long max_m, long max_n) {
    std::vector<CheckReport> rows;
    for (long m = 1; m <= max_m; ++m) {
        for (long l = 1; l <= m; ++l) {
            bool pass = true;
            std::ostringstream bad;
            for (long n = 1; n <= max_n; ++n) {
                Rat got = q_coeff(static_cast<unsigned long>(m), static_cast<unsigned long>(l),
                                  Scalar(Rat(n)))
                              .as_rational();
                Rat want = binom(Rat(n + m - 1), static_cast<unsigned long>(m)) /
                           binom(Rat(n + l - 1), static_cast<unsigned long>(l));
                if (got != want) {
                    pass = false;
                    bad << " n=" << n;
                }
            }
            std::ostringstream in;
            in << "m=" << m << " l=" << l << " n=1.." << max_n;
            rows.push_back(row("qcoeff_binomial_ratio", in.str(),
                               pass ? "ratio" : "mismatch at" + bad.str(), "ratio", pass));
        }
    }
    return rows;
}

std::vector<CheckReport> verify_psido_engine(unsigned long seed, long triples, long samples,
                                             long horizon) {
    std::vector<CheckReport> rows;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> sh(-2, 2);
    {
        bool pass = true;
        for (long it = 0; it < triples; ++it) {
            PsiDO a = random_symbol(rng, ShiftExponent(sh(rng)), 2, false);
            PsiDO b = random_symbol(rng, ShiftExponent(sh(rng)), 2, false);
            PsiDO c = random_symbol(rng, ShiftExponent(sh(rng)), 2, false);
            PsiDO l = mul(mul(a, b, horizon), c, horizon);
            PsiDO r = mul(a, mul(b, c, horizon), horizon);
            pass = pass && l.agrees_with(r, horizon);
        }
        std::ostringstream in;
        in << "triples=" << triples << " horizon=" << horizon << " seed=" << seed;
        rows.push_back(row("psido_associative", in.str(), "(AB)C", "A(BC)", pass));
    }
    {
        bool invol = true, reversal = true;
        for (long it = 0; it < samples; ++it) {
            PsiDO a = random_symbol(rng, ShiftExponent(sh(rng)), 2, false);
            PsiDO b = random_symbol(rng, ShiftExponent(sh(rng)), 2, false);
            invol = invol && adjoint(adjoint(a, horizon), horizon).agrees_with(a, horizon);
            reversal = reversal && adjoint(mul(a, b, horizon), horizon)
                                       .agrees_with(mul(adjoint(b, horizon), adjoint(a, horizon),
                                                        horizon),
                                                    horizon);
        }
        std::ostringstream in;
        in << "samples=" << samples << " horizon=" << horizon;
        rows.push_back(row("psido_adjoint_involution", in.str(), "adj(adj(A))", "A", invol));
        rows.push_back(
            row("psido_adjoint_reversal", in.str(), "adj(AB)", "adj(B)adj(A)", reversal));
    }
    {
        bool pass = true;
        for (long it = 0; it < samples; ++it) {
            PsiDO a = random_symbol(rng, ShiftExponent(sh(rng)), 2, false);
            PsiDO b = random_symbol(rng, ShiftExponent(sh(rng)), 2, false);
            Symbol composed = symbol_compose(a, b, horizon);
            Symbol direct = symbol(mul(a, b, horizon));
            pass = pass && composed == direct;
        }
        std::ostringstream in;
        in << "samples=" << samples << " horizon=" << horizon;
        rows.push_back(row("psido_symbol_composition", in.str(), "A(z+d)B(z)", "Symb(AB)", pass));
    }
    for (const auto& r : verify_invert(seed + 1, samples, horizon)) rows.push_back(r);
    return rows;
}

std::vector<CheckReport> verify_invert(unsigned long seed, long samples, long horizon) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> sh(-2, 2);
    bool pass = true;
    for (long it = 0; it < samples; ++it) {
        PsiDO l = random_symbol(rng, ShiftExponent(sh(rng)), 3, true);
        PsiDO inv = invert(l, horizon);
        pass = pass && mul(l, inv, horizon).agrees_with(PsiDO::identity(), horizon) &&
               mul(inv, l, horizon).agrees_with(PsiDO::identity(), horizon);
    }
    std::ostringstream in;
    in << "samples=" << samples << " horizon=" << horizon << " seed=" << seed;
    return {row("psido_invert_two_sided", in.str(), "L*invert(L), invert(L)*L", "1", pass)};
}

std::vector<CheckReport> verify_skew(long max_offset, long horizon) {
    WAlgebra w = build_w_gl(ShiftExponent::T(), horizon);
    std::vector<std::pair<long, long>> pairs;
    for (long a = 0; a <= max_offset; ++a)
        for (long b = 0; b <= max_offset; ++b) pairs.emplace_back(a, b);
    std::vector<CheckReport> rows;
    for (const auto& e : check_skew(w.brackets, pairs)) {
        std::ostringstream in;
        in << "family=glT symbolic a=" << e.a << " b=" << e.b << " horizon=" << horizon;
        rows.push_back(row("skew_pair", in.str(), "{u_a l u_b}", "-{u_b -l-d u_a}", e.pass));
        if (!e.pass) rows.back().residual = e.residual.str();
    }
    return rows;
}

std::vector<CheckReport> verify_jacobi(WFamily family, long t, long horizon) {
    std::vector<long> offsets;
    WAlgebra w = family == WFamily::GlT ? build_w_gl(ShiftExponent(Rat(t)), horizon)
                                        : build_w_po(ShiftExponent(Rat(t)), horizon);
    if (family == WFamily::GlT) {
        for (long k = 0; k < t; ++k) offsets.push_back(k);
    } else {
        for (long k = 2; k <= t; k += 2) offsets.push_back(k);
    }
    std::vector<std::array<long, 3>> triples;
    for (long a : offsets)
        for (long b : offsets)
            for (long c : offsets) triples.push_back({a, b, c});
    std::vector<CheckReport> rows;
    for (const auto& e : check_jacobi(w.brackets, triples)) {
        std::ostringstream in;
        in << "family=" << (family == WFamily::GlT ? "glT" : "poT") << " t=" << t << " a=" << e.a
           << " b=" << e.b << " c=" << e.c;
        rows.push_back(row("jacobi_triple", in.str(), "{a l {b m c}} - {b m {a l c}}",
                           "{{a l b} l+m c}", e.pass));
    }
    return rows;
}

std::vector<CheckReport> verify_selfadj(long horizon) {
    std::vector<CheckReport> rows;
    WAlgebra w = build_w_po(ShiftExponent::T(), horizon);
    {
        bool pass = adjoint(w.L, horizon).agrees_with(w.L, horizon);
        std::ostringstream in;
        in << "family=poT symbolic horizon=" << horizon;
        rows.push_back(row("selfadj_operator", in.str(), "adjoint(L)", "L", pass));
    }
    {
        DiffPoly got = sa_eliminate(3);
        DiffPoly want = Scalar::parse("(T - 2)/2") * DiffPoly::gen(GenId("u", 2), 1);
        rows.push_back(row("selfadj_first_elimination", "r=3", got.str(), want.str(), got == want));
    }
    for (long r = 2; r <= horizon; r += 2) {
        DiffPoly res = sa_eliminate(r);
        std::ostringstream in;
        in << "r=" << r;
        rows.push_back(row("selfadj_even_residual", in.str(), res.str(), "0", res.is_zero()));
    }
    return rows;
}

std::vector<CheckReport> verify_eval_square(long min_n, long max_n) {
    std::vector<CheckReport> rows;
    WAlgebra sym = build_w_gl(ShiftExponent::T(), max_n);
    for (long n = min_n; n <= max_n; ++n) {
        WAlgebra wn = build_w_gl(ShiftExponent(Rat(n)), n);
        BracketMatrix native = adler_matrix(classical_gl_operator(n));
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) {
                LambdaPoly lhs = project_pr_n(wn, evaluate_T(sym.brackets.entry(i, j), Rat(n)));
                LambdaPoly rhs = native.entry(i, j);
                std::ostringstream in;
                in << "n=" << n << " i=" << i << " j=" << j;
                CheckReport r = row("eval_then_project", in.str(), lhs.str(), rhs.str(),
                                    lhs == rhs);
                if (!r.pass) r.residual = (lhs - rhs).str();
                rows.push_back(r);
            }
        }
    }
    return rows;
}

std::vector<CheckReport> verify_pi(WFamily family, const Rat& alpha, long depth) {
    WAlgebra w = family == WFamily::GlT ? build_w_gl(ShiftExponent(alpha), 2 * depth + 2)
                                        : build_w_po(ShiftExponent(alpha), 2 * depth + 2);
    std::vector<std::pair<long, long>> pairs;
    for (long a = 0; a < depth; ++a)
        for (long b = 0; b < depth; ++b)
            pairs.emplace_back(w.generators[static_cast<size_t>(a)].offset,
                               w.generators[static_cast<size_t>(b)].offset);
    PiAntiReport rep = pi_anti(w, pairs);
    std::vector<CheckReport> rows;
    for (const auto& e : rep.checks) {
        std::ostringstream in;
        in << "family=" << (family == WFamily::GlT ? "glT" : "poT") << " alpha=" << alpha
           << " a=" << e.a << " b=" << e.b;
        CheckReport r = row("pi_anti_homomorphism", in.str(), "{Pi(a) l Pi(b)}", "-Pi({a l b})",
                            e.pass);
        if (!e.pass) r.residual = e.residual.str();
        rows.push_back(r);
    }
    return rows;
}

std::vector<CheckReport> verify_central(const LieData& g, long max_width, long max_mode,
                                        bool include_sym) {
    std::vector<CheckReport> rows;
    std::string fam = g.family() == LieFamily::glA ? "gl"
                      : g.family() == LieFamily::soB ? "so"
                                                     : "sp";
    auto add = [&](const char* kind, long m, const UEnvElement& v) {
        std::ostringstream in;
        in << "family=" << fam << " size=" << g.matrix_size() << " width=" << m
           << " level=" << g.critical_level().str() << " modes<=" << max_mode;
        rows.push_back(row(std::string("central_") + kind, in.str(), "[x t^m, v]|critical", "0",
                           is_central(g, v, max_mode)));
    };
    if (g.family() == LieFamily::glA) {
        long n = g.matrix_size();
        for (long m = 1; m <= max_width; ++m) {
            add("antisym", m, ss_vector_A(m, n, SSVariant::anti));
            if (include_sym) add("sym", m, ss_vector_A(m, n, SSVariant::sym));
        }
    } else {
        for (long m = 2; m <= max_width; m += 2) add("partial_trace", m, ss_vector_BC(m, g));
    }
    return rows;
}

std::vector<CheckReport> verify_interp_eval(long max_width, long min_n, long max_n) {
    std::vector<CheckReport> rows;
    for (long n = min_n; n <= max_n; ++n) {
        LieData g = LieData::gl(n);
        for (long m = 1; m <= max_width; ++m) {
            UEnvElement lhs = eval_T(ss_vector_interp(m, n, SSVariant::anti), Rat(n));
            UEnvElement rhs = ss_vector_A(m, n, SSVariant::anti);
            std::ostringstream in;
            in << "n=" << n << " width=" << m;
            CheckReport r = row("interp_eval", in.str(), lhs.str(g), rhs.str(g), lhs == rhs);
            if (!r.pass) r.residual = (lhs - rhs).str(g);
            rows.push_back(r);
        }
    }
    return rows;
}

std::vector<CheckReport> verify_diagrams(unsigned long seed, long pairs) {
    std::vector<CheckReport> rows;
    const Scalar alpha = Scalar::T();
    {
        DiagramSum e_gl(Diagram::make(parse_word("*o"), parse_word("*o"), {{0, 1}, {2, 3}}));
        DiagramSum e_f(Diagram::make(parse_word("**"), parse_word("**"), {{0, 1}, {2, 3}}));
        bool gl_ok = compose(e_gl, e_gl, alpha, DiagramFamily::GL) == alpha * e_gl;
        bool o_ok = compose(e_f, e_f, alpha, DiagramFamily::O) == alpha * e_f;
        bool sp_ok = compose(e_f, e_f, alpha, DiagramFamily::Sp) == (Scalar(0L) - alpha) * e_f;
        rows.push_back(row("diagram_idempotent", "family=GL symbolic", "e.e", "T*e", gl_ok));
        rows.push_back(row("diagram_idempotent", "family=O symbolic", "e.e", "T*e", o_ok));
        rows.push_back(row("diagram_idempotent", "family=Sp symbolic", "e.e", "-T*e", sp_ok));
    }
    std::mt19937_64 rng(seed);
    for (DiagramFamily family : {DiagramFamily::GL, DiagramFamily::O, DiagramFamily::Sp}) {
        const char* name = family == DiagramFamily::GL ? "GL" : family == DiagramFamily::O ? "O"
                                                                                           : "Sp";
        std::vector<long> dims = family == DiagramFamily::Sp ? std::vector<long>{2, 4}
                                                             : std::vector<long>{2, 3, 4};
        std::uniform_int_distribution<int> len(0, 2), col(0, 1);
        auto random_word_for = [&]() {
            Word w;
            int L = len(rng);
            for (int k = 0; k < L; ++k)
                w.push_back(family == DiagramFamily::GL
                                ? (col(rng) ? Color::filled : Color::hollow)
                                : Color::filled);
            return w;
        };
        bool pass = true;
        long done = 0, attempts = 0;
        while (done < pairs && attempts < 100 * pairs) {
            ++attempts;
            Word w1 = random_word_for(), w2 = random_word_for(), w3 = random_word_for();
            auto xs = enumerate_diagrams(w1, w2, family);
            auto ys = enumerate_diagrams(w2, w3, family);
            if (xs.empty() || ys.empty()) continue;
            const Diagram& x = xs[rng() % xs.size()];
            const Diagram& y = ys[rng() % ys.size()];
            for (long N : dims) {
                DiagramSum yx = compose(DiagramSum(y), DiagramSum(x), Scalar(Rat(N)), family);
                pass = pass &&
                       realize(yx, N, family) ==
                           contract(realize(y, N, family), realize(x, N, family));
            }
            ++done;
        }
        std::ostringstream in;
        in << "family=" << name << " pairs=" << done << " seed=" << seed;
        rows.push_back(
            row("diagram_realize_multiplicative", in.str(), "realize(Y.X)", "realize(Y)realize(X)",
                pass && done == pairs));
    }
    {
        bool pass = true;
        for (const auto& [b, t] : std::vector<std::pair<Word, Word>>{
                 {parse_word("*o"), parse_word("*o")},
                 {parse_word("**"), parse_word("**")},
                 {parse_word("*o*"), parse_word("o")},
                 {parse_word("**"), parse_word("oo")}}) {
            long total = static_cast<long>(b.size() + t.size());
            for (long N = total; N <= total + 1; ++N)
                pass = pass && interp_rank_check(b, t, N, DiagramFamily::GL).injective;
        }
        pass = pass && interp_rank_check(parse_word("**"), parse_word("**"), 4, DiagramFamily::O)
                           .injective;
        pass = pass && interp_rank_check(parse_word("**"), parse_word("**"), 4, DiagramFamily::Sp)
                           .injective;
        pass = pass && !interp_rank_check(parse_word("**"), parse_word("**"), 1, DiagramFamily::O)
                            .injective;
        rows.push_back(row("diagram_rank_threshold", "words length<=4",
                           "rank of realized basis", "domain dimension", pass));
    }
    return rows;
}

} // namespace agd
