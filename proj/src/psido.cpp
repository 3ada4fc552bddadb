#include "agd/psido.hpp"

#include <algorithm>

namespace agd {

namespace {

const DiffPoly kZeroPoly{};

bool natural_exponent(const ShiftExponent& e) {
    return e.b == 0 && e.a.get_den() == 1 && e.a >= 0;
}

// true when D^e composed with a coefficient family can only produce finitely
// many terms against the given coefficient
bool pair_terminates(const ShiftExponent& e, const DiffPoly& coeff) {
    return natural_exponent(e) || coeff.is_scalar();
}

} // namespace

long sat_add(long a, long b) {
    if (a >= kHorizonInf || b >= kHorizonInf) return kHorizonInf;
    const long s = a + b;
    return s >= kHorizonInf ? kHorizonInf : s;
}

PsiDO PsiDO::zero(const ShiftExponent& shift, long horizon) {
    PsiDO p;
    p.shift_ = shift;
    p.horizon_ = horizon;
    return p;
}

PsiDO PsiDO::identity() { return dpow(ShiftExponent(0L)); }

PsiDO PsiDO::dpow(const ShiftExponent& e) {
    PsiDO p;
    p.shift_ = e;
    p.horizon_ = kHorizonInf;
    p.coeffs_.emplace(0L, DiffPoly(1L));
    return p;
}

PsiDO PsiDO::from_coeffs(const ShiftExponent& shift, std::map<long, DiffPoly> coeffs, long horizon) {
    PsiDO p;
    p.shift_ = shift;
    p.horizon_ = horizon;
    for (auto& [k, c] : coeffs) {
        if (k >= horizon) throw HorizonExhausted("coefficient stored beyond its own horizon");
        if (!c.is_zero()) p.coeffs_.emplace(k, std::move(c));
    }
    return p;
}

long PsiDO::effective_top() const {
    const long stored = coeffs_.empty() ? kHorizonInf : coeffs_.begin()->first;
    return std::min(stored, horizon_);
}

const DiffPoly& PsiDO::coeff(long k) const {
    if (k >= horizon_)
        throw HorizonExhausted("coefficient at offset " + std::to_string(k) +
                               " is beyond the horizon " + std::to_string(horizon_));
    const auto it = coeffs_.find(k);
    return it == coeffs_.end() ? kZeroPoly : it->second;
}

bool PsiDO::is_monic_degree0() const {
    if (!coeffs_.empty() && coeffs_.begin()->first < 0) return false;
    return coeff(0) == DiffPoly(1L);
}

void PsiDO::set_coeff(long k, DiffPoly c) {
    if (c.is_zero())
        coeffs_.erase(k);
    else
        coeffs_[k] = std::move(c);
}

PsiDO PsiDO::truncated(long new_horizon) const {
    PsiDO r = *this;
    r.horizon_ = std::min(horizon_, new_horizon);
    r.coeffs_.erase(r.coeffs_.lower_bound(r.horizon_), r.coeffs_.end());
    return r;
}

PsiDO PsiDO::operator-() const {
    PsiDO r = *this;
    for (auto& [k, c] : r.coeffs_) c = -c;
    return r;
}

PsiDO PsiDO::operator+(const PsiDO& o) const {
    const bool lz = coeffs_.empty() && horizon_ >= kHorizonInf;
    const bool rz = o.coeffs_.empty() && o.horizon_ >= kHorizonInf;
    if (lz) return o;
    if (rz) return *this;
    if (shift_ != o.shift_)
        throw ShiftMismatch("cannot add symbols of shifts " + shift_.str() + " and " + o.shift_.str());
    PsiDO r;
    r.shift_ = shift_;
    r.horizon_ = std::min(horizon_, o.horizon_);
    for (const auto& [k, c] : coeffs_)
        if (k < r.horizon_) r.coeffs_.emplace(k, c);
    for (const auto& [k, c] : o.coeffs_) {
        if (k >= r.horizon_) continue;
        auto [it, inserted] = r.coeffs_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) r.coeffs_.erase(it);
        }
    }
    return r;
}

PsiDO PsiDO::operator-(const PsiDO& o) const { return *this + (-o); }

PsiDO operator*(const Scalar& s, PsiDO a) {
    if (s.is_zero()) return PsiDO::zero(a.shift_, a.horizon_);
    for (auto& [k, c] : a.coeffs_) c *= s;
    return a;
}

PsiDO operator*(const DiffPoly& d, PsiDO a) {
    PsiDO r = PsiDO::zero(a.shift_, a.horizon_);
    for (auto& [k, c] : a.coeffs_) {
        DiffPoly p = d * c;
        if (!p.is_zero()) r.coeffs_.emplace(k, std::move(p));
    }
    return r;
}

bool PsiDO::agrees_with(const PsiDO& o, long upto) const {
    if (horizon_ < upto || o.horizon_ < upto)
        throw HorizonExhausted("comparison through offset " + std::to_string(upto) +
                               " exceeds a horizon");
    if (shift_ != o.shift_) return false;
    for (const auto& [k, c] : coeffs_)
        if (k < upto && o.coeff(k) != c) return false;
    for (const auto& [k, c] : o.coeffs_)
        if (k < upto && coeff(k) != c) return false;
    return true;
}

std::string PsiDO::str(const VarNamer& namer) const {
    std::string s;
    for (const auto& [k, c] : coeffs_) {
        const ShiftExponent e = shift_ - k;
        std::string body;
        if (e.is_zero()) {
            body = c.str(namer);
            if (body.find(" + ") != std::string::npos || body.find(" - ") != std::string::npos)
                body = "(" + body + ")";
        } else {
            std::string ds = "∂";
            if (!(e.b == 0 && e.a == 1)) {
                const bool bare = (e.b == 1 && e.a == 0) || (e.b == 0 && e.a.get_den() == 1 && e.a >= 0);
                ds += "^" + (bare ? e.str() : "(" + e.str() + ")");
            }
            const std::string cs = c.str(namer);
            if (cs == "1") {
                body = ds;
            } else {
                const bool wrap = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
                body = (wrap ? "(" + cs + ")" : cs) + "*" + ds;
            }
        }
        if (!s.empty() && body.front() == '-') {
            s += " - " + body.substr(1);
        } else {
            if (!s.empty()) s += " + ";
            s += body;
        }
    }
    if (s.empty()) s = "0";
    if (horizon_ < kHorizonInf) s += " + O(∂^(" + (shift_ - horizon_).str() + "))";
    return s;
}

namespace {

void add_into(std::map<long, DiffPoly>& acc, long k, DiffPoly term) {
    if (term.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(k, std::move(term));
    if (!inserted) {
        it->second += term;
        if (it->second.is_zero()) acc.erase(it);
    }
}

// Shared product engine: accumulates C(shiftA - i, r) * A_i * B_j^(r) at
// offset i + j + r for all offsets below hz. Callers guarantee via
// require_finite_expansion that every (i, j) walk terminates.
std::map<long, DiffPoly> accumulate_product(const PsiDO& A, const PsiDO& B, long hz) {
    std::map<long, DiffPoly> acc;
    std::map<long, std::vector<DiffPoly>> ladders; // j -> derivatives of B_j
    for (const auto& [j, Bj] : B.coeffs()) ladders.emplace(j, std::vector<DiffPoly>{Bj});

    for (const auto& [i, Ai] : A.coeffs()) {
        const Scalar es = (A.shift() - i).to_scalar();
        std::vector<Scalar> bins{Scalar(1L)}; // bins[r] = C(es, r)
        for (const auto& [j, Bj] : B.coeffs()) {
            auto& ladder = ladders.at(j);
            for (long r = 0;; ++r) {
                const long k = i + j + r;
                if (k >= hz) break;
                while (static_cast<long>(bins.size()) <= r)
                    bins.push_back(bins.back() * (es - Scalar(static_cast<long>(bins.size()) - 1)) /
                                   Scalar(static_cast<long>(bins.size())));
                const Scalar& bin = bins[static_cast<std::size_t>(r)];
                if (bin.is_zero()) break;
                while (static_cast<long>(ladder.size()) <= r) ladder.push_back(derive(ladder.back()));
                const DiffPoly& dj = ladder[static_cast<std::size_t>(r)];
                if (dj.is_zero()) break;
                add_into(acc, k, Ai * dj * bin);
            }
        }
    }
    return acc;
}

void require_finite_expansion(const PsiDO& A, const PsiDO& B, long hz, const char* op) {
    if (hz < kHorizonInf) return;
    for (const auto& [i, Ai] : A.coeffs()) {
        const ShiftExponent e = A.shift() - i;
        for (const auto& [j, Bj] : B.coeffs())
            if (!pair_terminates(e, Bj))
                throw HorizonExhausted(std::string(op) +
                                       " has an infinite expansion; supply a finite horizon cap");
    }
}

} // namespace

PsiDO mul(const PsiDO& A, const PsiDO& B, long cap) {
    const ShiftExponent sh = A.shift() + B.shift();
    long hz = std::min(sat_add(A.horizon(), B.effective_top()),
                       sat_add(B.horizon(), A.effective_top()));
    hz = std::min(hz, cap);
    require_finite_expansion(A, B, hz, "product");
    PsiDO r = PsiDO::zero(sh, hz);
    if (A.coeffs().empty() || B.coeffs().empty()) return r;
    for (auto& [k, c] : accumulate_product(A, B, hz)) r.set_coeff(k, std::move(c));
    return r;
}

PsiDO adjoint(const PsiDO& A, long cap) {
    const long hz = std::min(A.horizon(), cap);
    if (hz >= kHorizonInf)
        for (const auto& [m, Am] : A.coeffs())
            if (!pair_terminates(A.shift() - m, Am))
                throw HorizonExhausted("adjoint has an infinite expansion; supply a finite horizon cap");

    PsiDO r = PsiDO::zero(A.shift(), hz);
    for (const auto& [m, Am] : A.coeffs()) {
        const ShiftExponent e = A.shift() - m;
        const Scalar es = e.to_scalar();
        const Scalar sign(((m % 2) != 0) ? -1L : 1L);
        DiffPoly d = Am;
        Scalar bin(1L);
        for (long rr = 0;; ++rr) {
            if (rr > 0) {
                bin *= (es - Scalar(rr - 1)) / Scalar(rr);
                d = derive(d);
            }
            const long k = m + rr;
            if (k >= hz) break;
            if (bin.is_zero() || d.is_zero()) break;
            DiffPoly term = d * (sign * bin);
            if (!term.is_zero()) {
                DiffPoly cur = r.coeff(k);
                cur += term;
                r.set_coeff(k, std::move(cur));
            }
        }
    }
    return r;
}

PsiDO pos_part(const PsiDO& A) {
    if (!A.shift().integral())
        throw NonIntegralShift("positive part requires an integral shift, got " + A.shift().str());
    const long a = A.shift().int_value();
    if (A.horizon() <= a)
        throw HorizonExhausted("positive part needs coefficients through offset " + std::to_string(a));
    PsiDO r = PsiDO::zero(A.shift(), kHorizonInf);
    for (const auto& [k, c] : A.coeffs())
        if (k <= a) r.set_coeff(k, c);
    return r;
}

PsiDO neg_part(const PsiDO& A) {
    if (!A.shift().integral())
        throw NonIntegralShift("negative part requires an integral shift, got " + A.shift().str());
    const long a = A.shift().int_value();
    if (A.horizon() <= a)
        throw HorizonExhausted("negative part needs coefficients through offset " + std::to_string(a));
    PsiDO r = PsiDO::zero(A.shift(), A.horizon());
    for (const auto& [k, c] : A.coeffs())
        if (k > a) r.set_coeff(k, c);
    return r;
}

DiffPoly residue(const PsiDO& A) {
    if (!A.shift().integral())
        throw NonIntegralShift("residue requires an integral shift, got " + A.shift().str());
    const long k = A.shift().int_value() + 1;
    return A.coeff(k); // throws HorizonExhausted when k >= horizon
}

namespace {

// Coefficient at offset k of A∘B counting stored coefficients only.
DiffPoly known_product_coeff(const PsiDO& A, const PsiDO& B, long k) {
    DiffPoly s;
    for (const auto& [i, Ai] : A.coeffs()) {
        const ShiftExponent e = A.shift() - i;
        const Scalar es = e.to_scalar();
        for (const auto& [j, Bj] : B.coeffs()) {
            const long r = k - i - j;
            if (r < 0) continue;
            const Scalar bin = binomial_ring(es, static_cast<unsigned long>(r));
            if (bin.is_zero()) continue;
            s += Ai * derive(Bj, static_cast<unsigned long>(r)) * bin;
        }
    }
    return s;
}

} // namespace

PsiDO invert(const PsiDO& L, long depth) {
    if (!L.is_monic_degree0()) throw NonMonic("inverse requires a monic symbol of shifted degree 0");
    if (L.horizon() <= depth)
        throw HorizonExhausted("inverse to depth " + std::to_string(depth) +
                               " needs horizon above it, have " + std::to_string(L.horizon()));
    PsiDO X = PsiDO::zero(-L.shift(), depth + 1);
    X.set_coeff(0, DiffPoly(1L));
    for (long k = 1; k <= depth; ++k) {
        DiffPoly s = known_product_coeff(L, X, k);
        if (!s.is_zero()) X.set_coeff(k, -s);
    }
    return X;
}

PsiDO evaluate_T(const PsiDO& A, const Rat& alpha) {
    const ShiftExponent sh(A.shift().a + Rat(A.shift().b) * alpha, 0);
    PsiDO r = PsiDO::zero(sh, A.horizon());
    for (const auto& [k, c] : A.coeffs()) r.set_coeff(k, evaluate_T(c, alpha));
    return r;
}

PsiDO subst_gens(const PsiDO& A, const std::map<GenId, DiffPoly>& repl) {
    PsiDO r = PsiDO::zero(A.shift(), A.horizon());
    for (const auto& [k, c] : A.coeffs()) r.set_coeff(k, subst_gens(c, repl));
    return r;
}

Symbol symbol(const PsiDO& A) { return Symbol{A.shift(), A.coeffs(), A.horizon()}; }

PsiDO from_symbol(const Symbol& s) {
    return PsiDO::from_coeffs(s.shift, s.coeffs, s.horizon);
}

Symbol symbol_compose(const PsiDO& A, const PsiDO& B, long cap) {
    const ShiftExponent sh = A.shift() + B.shift();
    long hz = std::min(sat_add(A.horizon(), B.effective_top()),
                       sat_add(B.horizon(), A.effective_top()));
    hz = std::min(hz, cap);
    require_finite_expansion(A, B, hz, "symbol composition");

    // (z+d)^{e} B_j z^{beta-j} expanded through the Pascal recurrence on r
    Symbol out{sh, {}, hz};
    for (const auto& [j, Bj] : B.coeffs()) {
        std::vector<DiffPoly> ladder{Bj};
        for (const auto& [i, Ai] : A.coeffs()) {
            const Scalar es = (A.shift() - i).to_scalar();
            Scalar bin(1L);
            for (long r = 0;; ++r) {
                const long k = i + j + r;
                if (k >= hz) break;
                if (r > 0) bin *= (es - Scalar(r - 1)) / Scalar(r);
                if (bin.is_zero()) break;
                while (static_cast<long>(ladder.size()) <= r) ladder.push_back(derive(ladder.back()));
                const DiffPoly& dj = ladder[static_cast<std::size_t>(r)];
                if (dj.is_zero()) break;
                add_into(out.coeffs, k, Ai * dj * bin);
            }
        }
    }
    return out;
}

} // namespace agd
