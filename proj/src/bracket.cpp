#include "agd/bracket.hpp"

#include <set>
#include <stdexcept>

#include "agd/errors.hpp"

namespace agd {

namespace {
const DiffPoly kZero;
}

void LambdaPoly::add_term(long degree, DiffPoly c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(degree, std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const DiffPoly& LambdaPoly::coeff(long degree) const {
    const auto it = terms_.find(degree);
    return it == terms_.end() ? kZero : it->second;
}

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, -c);
    return r;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

LambdaPoly operator*(const DiffPoly& d, LambdaPoly p) {
    LambdaPoly r;
    for (auto& [deg, c] : p.terms_) r.add_term(deg, d * c);
    return r;
}

namespace {

std::string lambda_term(const std::string& var, long deg, const std::string& cs) {
    std::string pw = var;
    if (deg > 1) pw += "^" + std::to_string(deg);
    if (deg == 0) return cs;
    if (cs == "1") return pw;
    if (cs == "-1") return "-" + pw;
    const bool wrap = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    return (wrap ? "(" + cs + ")" : cs) + "*" + pw;
}

} // namespace

namespace {

void join_term(std::string& s, const std::string& body) {
    if (!s.empty() && body.front() == '-') {
        s += " - " + body.substr(1);
    } else {
        if (!s.empty()) s += " + ";
        s += body;
    }
}

} // namespace

std::string LambdaPoly::str(const VarNamer& namer) const {
    std::string s;
    for (const auto& [d, c] : terms_) {
        std::string body = lambda_term("λ", d, c.str(namer));
        if (d == 0 && (body.find(" + ") != std::string::npos || body.find(" - ") != std::string::npos))
            body = "(" + body + ")";
        join_term(s, body);
    }
    return s.empty() ? "0" : s;
}

void LambdaPoly2::add_term(long dl, long dm, DiffPoly c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::make_pair(dl, dm), std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LambdaPoly2& LambdaPoly2::operator+=(const LambdaPoly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

LambdaPoly2& LambdaPoly2::operator-=(const LambdaPoly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

std::string LambdaPoly2::str(const VarNamer& namer) const {
    std::string s;
    for (const auto& [k, c] : terms_) {
        std::string body;
        if (k.first == 0 && k.second == 0) {
            body = c.str(namer);
            if (body.find(" + ") != std::string::npos || body.find(" - ") != std::string::npos)
                body = "(" + body + ")";
        } else if (k.second == 0) {
            body = lambda_term("λ", k.first, c.str(namer));
        } else if (k.first == 0) {
            body = lambda_term("μ", k.second, c.str(namer));
        } else {
            std::string mu = "μ";
            if (k.second > 1) mu += "^" + std::to_string(k.second);
            body = lambda_term("λ", k.first, c.str(namer)) + "*" + mu;
        }
        join_term(s, body);
    }
    return s.empty() ? "0" : s;
}

LambdaPoly shifted_pow(long k, const DiffPoly& x, bool negated) {
    LambdaPoly r;
    const Scalar sign((negated && k % 2) ? -1L : 1L);
    Scalar bin(1L);
    DiffPoly d = x;
    for (long s = 0; s <= k; ++s) {
        if (s > 0) {
            bin *= Scalar(Rat(k - s + 1, s));
            d = derive(d);
        }
        if (d.is_zero()) break;
        r.add_term(k - s, sign * bin * d);
    }
    return r;
}

LambdaPoly shifted_pow(long k, const LambdaPoly& x, bool negated) {
    LambdaPoly r;
    for (const auto& [e, c] : x.terms()) {
        const LambdaPoly part = shifted_pow(k, c, negated);
        for (const auto& [d, q] : part.terms()) r.add_term(e + d, q);
    }
    return r;
}

LambdaPoly apply_shifted(const LambdaPoly& P, const LambdaPoly& x) {
    LambdaPoly r;
    for (const auto& [d, c] : P.terms()) r += c * shifted_pow(d, x);
    return r;
}

LambdaPoly neg_conjugate(const LambdaPoly& P) {
    LambdaPoly r;
    for (const auto& [d, c] : P.terms()) r += shifted_pow(d, c, true);
    return r;
}

LambdaPoly evaluate_T(const LambdaPoly& p, const Rat& alpha) {
    LambdaPoly r;
    for (const auto& [d, c] : p.terms()) r.add_term(d, evaluate_T(c, alpha));
    return r;
}

LambdaPoly subst_gens(const LambdaPoly& p, const std::map<GenId, DiffPoly>& repl) {
    LambdaPoly r;
    for (const auto& [d, c] : p.terms()) r.add_term(d, subst_gens(c, repl));
    return r;
}

PsiDO adler(const PsiDO& L, const PsiDO& F, long cap) {
    if (!L.is_monic_degree0()) throw NonMonic("Adler map requires a monic degree-0 symbol");
    if (!(F.shift() == -L.shift()))
        throw ShiftMismatch("Adler argument must have shift " + (-L.shift()).str() + ", got " +
                            F.shift().str());
    const PsiDO lf_pos = pos_part(mul(L, F, 1));
    const PsiDO fl_pos = pos_part(mul(F, L, 1));
    return mul(lf_pos, L, cap) - mul(L, fl_pos, cap);
}

namespace {

std::string fresh_tag(const PsiDO& L) {
    std::string tag = "f";
    for (;;) {
        bool used = false;
        for (const auto& [k, c] : L.coeffs())
            if (mentions_tag(c, tag)) {
                used = true;
                break;
            }
        if (!used) return tag;
        tag += "f";
    }
}

} // namespace

LambdaPoly adler_entry(const PsiDO& L, long i_offset, long j_offset, ProbeSymmetry sym) {
    if (i_offset < 0 || j_offset < 0)
        throw std::invalid_argument("entry offsets must be non-negative");
    const ShiftExponent alpha = L.shift();
    const GenId probe(fresh_tag(L), 0);

    // ∂^{−α+i} ∘ f expands to Σ_r C(−α+i, r) f^{(r)} ∂^{−α+i−r}. Its adjoint
    // is (−1)^i f ∘ ∂^{−α+i}, so projecting onto the adjoint-odd part halves
    // every derivative term and leaves the r = 0 coefficient as f for odd i
    // and 0 for even i.
    std::map<long, DiffPoly> fc;
    for (long r = 0; r <= i_offset; ++r) {
        DiffPoly c = binomial_ring(-alpha + i_offset, static_cast<unsigned long>(r)) *
                     DiffPoly::gen(probe, r);
        if (sym == ProbeSymmetry::anti_adjoint) {
            if (r == 0)
                c = (i_offset % 2 != 0) ? DiffPoly::gen(probe, 0) : DiffPoly();
            else
                c = Scalar(Rat(1, 2)) * c;
        }
        if (!c.is_zero()) fc.emplace(r - i_offset, std::move(c));
    }
    const PsiDO F = PsiDO::from_coeffs(-alpha, std::move(fc), 1);

    const PsiDO G = mul(adler(L, F, j_offset + 2), PsiDO::dpow(-alpha + j_offset), j_offset + 2);
    std::map<long, DiffPoly> by_order;
    DiffPoly rest;
    split_linear(residue(G), probe.tag, by_order, rest);
    if (!rest.is_zero()) throw std::logic_error("bracket entry is not linear in the probe");

    LambdaPoly out;
    for (auto& [k, c] : by_order) out.add_term(k, std::move(c));
    return out;
}

BracketMatrix::BracketMatrix(std::string tag, std::vector<long> offsets, EntryFn entries)
    : tag_(std::move(tag)), offsets_(std::move(offsets)), entries_(std::move(entries)),
      cache_(std::make_shared<Cache>()) {}

bool BracketMatrix::has_offset(long o) const {
    for (long k : offsets_)
        if (k == o) return true;
    return false;
}

const LambdaPoly& BracketMatrix::entry(long i, long j) const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    const auto key = std::make_pair(i, j);
    auto it = cache_->entries.find(key);
    if (it == cache_->entries.end()) it = cache_->entries.emplace(key, entries_(i, j)).first;
    return it->second;
}

BracketMatrix adler_matrix(PsiDO L, std::string tag, std::vector<long> offsets) {
    if (offsets.empty()) {
        long top = 0;
        if (!L.coeffs().empty()) top = L.coeffs().rbegin()->first;
        top = std::min(top, L.horizon() - 1);
        for (long k = 1; k <= top; ++k) offsets.push_back(k - 1);
    }
    return BracketMatrix(std::move(tag), std::move(offsets),
                         [L = std::move(L)](long i, long j) { return adler_entry(L, i, j); });
}

namespace {

// orders of (tag, offset) generators appearing in p, by offset
std::map<long, long> tag_orders(const DiffPoly& p, const std::string& tag) {
    std::map<long, long> top;
    for (const auto& [m, c] : p.terms())
        for (const auto& vp : m.factors)
            if (vp.g.tag == tag) {
                auto [it, ins] = top.try_emplace(vp.g.offset, vp.order);
                if (!ins && vp.order > it->second) it->second = vp.order;
            }
    return top;
}

void require_known(const DiffPoly& p, const BracketMatrix& H, const char* side) {
    for (const auto& [m, c] : p.terms())
        for (const auto& vp : m.factors)
            if (vp.g.tag != H.tag() || !H.has_offset(vp.g.offset))
                throw UnknownGenerator(std::string(side) + " argument mentions " + vp.g.tag + "[" +
                                       std::to_string(vp.g.offset) +
                                       "], which is outside the bracket's generator family");
}

} // namespace

LambdaPoly master_bracket(const BracketMatrix& H, const DiffPoly& f, const DiffPoly& g) {
    require_known(f, H, "first");
    require_known(g, H, "second");

    const auto f_top = tag_orders(f, H.tag());
    const auto g_top = tag_orders(g, H.tag());

    LambdaPoly acc;
    for (const auto& [m, jtop] : f_top) {
        for (long j = 0; j <= jtop; ++j) {
            const DiffPoly pf = partial(f, GenId(H.tag(), m), j);
            if (pf.is_zero()) continue;
            const LambdaPoly x0 = shifted_pow(j, pf, true);
            for (const auto& [n, itop] : g_top) {
                const LambdaPoly x1 = apply_shifted(H.entry(m, n), x0);
                for (long i = 0; i <= itop; ++i) {
                    const DiffPoly pg = partial(g, GenId(H.tag(), n), i);
                    if (pg.is_zero()) continue;
                    acc += pg * shifted_pow(i, x1);
                }
            }
        }
    }
    return acc;
}

std::vector<SkewEntry> check_skew(const BracketMatrix& H,
                                  const std::vector<std::pair<long, long>>& pairs) {
    std::vector<SkewEntry> out;
    out.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
        LambdaPoly r = H.bracket(a, b) + neg_conjugate(H.bracket(b, a));
        const bool pass = r.is_zero();
        out.push_back(SkewEntry{a, b, std::move(r), pass});
    }
    return out;
}

LambdaPoly2 jacobi_residual(const BracketMatrix& H, long a, long b, long c) {
    const GenId ga(H.tag(), a), gb(H.tag(), b), gc(H.tag(), c);
    const DiffPoly ua = DiffPoly::gen(ga), ub = DiffPoly::gen(gb), uc = DiffPoly::gen(gc);

    LambdaPoly2 res;

    // {a λ {b μ c}}
    const LambdaPoly bc = H.bracket(b, c);
    for (const auto& [e, p] : bc.terms()) {
        const LambdaPoly outer = master_bracket(H, ua, p);
        for (const auto& [d, q] : outer.terms()) res.add_term(d, e, q);
    }

    // − {b μ {a λ c}}
    const LambdaPoly ac = H.bracket(a, c);
    for (const auto& [d, p] : ac.terms()) {
        const LambdaPoly outer = master_bracket(H, ub, p);
        for (const auto& [e, q] : outer.terms()) res.add_term(d, e, -q);
    }

    // − {{a λ b} λ+μ c}: inner λ-degrees ride along, ν ↦ λ+μ binomially
    const LambdaPoly ab = H.bracket(a, b);
    for (const auto& [d, p] : ab.terms()) {
        const LambdaPoly inner = master_bracket(H, p, uc);
        for (const auto& [e, q] : inner.terms()) {
            Scalar bin(1L);
            for (long s = 0; s <= e; ++s) {
                if (s > 0) bin *= Scalar(Rat(e - s + 1, s));
                res.add_term(d + s, e - s, -(bin * q));
            }
        }
    }
    return res;
}

std::vector<JacobiEntry> check_jacobi(const BracketMatrix& H,
                                      const std::vector<std::array<long, 3>>& triples) {
    std::vector<JacobiEntry> out;
    out.reserve(triples.size());
    for (const auto& t : triples) {
        LambdaPoly2 r = jacobi_residual(H, t[0], t[1], t[2]);
        const bool pass = r.is_zero();
        out.push_back(JacobiEntry{t[0], t[1], t[2], std::move(r), pass});
    }
    return out;
}

} // namespace agd
