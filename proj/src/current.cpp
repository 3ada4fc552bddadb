#include "agd/current.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace agd {

LieMat commutator(const LieMat& a, const LieMat& b) {
    LieMat out(a.n);
    for (long i = 0; i < a.n; ++i)
        for (long k = 0; k < a.n; ++k) {
            const Rat& aik = a.at(i, k);
            const Rat& bik = b.at(i, k);
            if (aik == 0 && bik == 0) continue;
            for (long j = 0; j < a.n; ++j)
                out.at(i, j) += aik * b.at(k, j) - bik * a.at(k, j);
        }
    return out;
}

Rat trace_product(const LieMat& a, const LieMat& b) {
    Rat t(0);
    for (long i = 0; i < a.n; ++i)
        for (long k = 0; k < a.n; ++k) t += a.at(i, k) * b.at(k, i);
    return t;
}

void LieData::push(long i, long j, LieMat m) {
    position_[{i, j}] = static_cast<long>(basis_.size());
    std::ostringstream name;
    name << (family_ == LieFamily::glA ? "E[" : "F[") << i << "," << j << "]";
    names_.push_back(name.str());
    labels_.emplace_back(i, j);
    basis_.push_back(std::move(m));
}

long LieData::eps(long i) const {
    if (family_ != LieFamily::spC) return 1;
    return i <= N_ / 2 ? 1 : -1;
}

LieData LieData::gl(long n) {
    if (n < 1) throw std::invalid_argument("LieData::gl: rank must be positive");
    LieData g(LieFamily::glA, n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) {
            LieMat m(n);
            m.at(i - 1, j - 1) = 1;
            g.push(i, j, std::move(m));
        }
    return g;
}

namespace {

LieMat reflected_unit(long N, long i, long j, long sign) {
    // E_ij - sign * E_{j'i'} with the reflection k' = N+1-k
    LieMat m(N);
    m.at(i - 1, j - 1) += 1;
    m.at(N - j, N - i) -= sign;
    return m;
}

} // namespace

LieData LieData::so(long N) {
    if (N < 2) throw std::invalid_argument("LieData::so: matrix size must be at least 2");
    LieData g(LieFamily::soB, N);
    for (long i = 1; i <= N; ++i)
        for (long j = 1; j <= N; ++j) {
            if (j == N + 1 - i) continue;                       // F_{i,i'} vanishes
            const long pi = N + 1 - j, pj = N + 1 - i;          // partner label
            if (std::make_pair(pi, pj) < std::make_pair(i, j)) continue;
            g.push(i, j, reflected_unit(N, i, j, 1));
        }
    return g;
}

LieData LieData::sp(long N) {
    if (N < 2 || N % 2) throw std::invalid_argument("LieData::sp: matrix size must be even");
    LieData g(LieFamily::spC, N);
    for (long i = 1; i <= N; ++i)
        for (long j = 1; j <= N; ++j) {
            const long pi = N + 1 - j, pj = N + 1 - i;
            if (std::make_pair(pi, pj) < std::make_pair(i, j)) continue;
            g.push(i, j, reflected_unit(N, i, j, g.eps(i) * g.eps(j)));
        }
    return g;
}

long LieData::index_of(long i, long j) const {
    auto it = position_.find({i, j});
    return it == position_.end() ? -1 : it->second;
}

std::vector<std::pair<long, Rat>> LieData::generator(long i, long j) const {
    if (i < 1 || i > N_ || j < 1 || j > N_)
        throw std::invalid_argument("LieData::generator: label out of range");
    const long direct = index_of(i, j);
    if (direct >= 0) return {{direct, Rat(1)}};
    if (family_ == LieFamily::soB && j == N_ + 1 - i) return {}; // zero generator
    const long partner = index_of(N_ + 1 - j, N_ + 1 - i);
    if (partner < 0) throw std::logic_error("LieData::generator: missing partner");
    return {{partner, Rat(-eps(i) * eps(j))}};
}

const std::vector<std::pair<long, Rat>>& LieData::bracket(long a, long b) const {
    auto it = bracket_cache_.find({a, b});
    if (it != bracket_cache_.end()) return it->second;

    const LieMat m = commutator(matrix(a), matrix(b));
    std::vector<std::pair<long, Rat>> combo;
    LieMat check(N_);
    for (const auto& [label, idx] : position_) {
        Rat c = m.at(label.first - 1, label.second - 1);
        if (family_ == LieFamily::spC && label.second == N_ + 1 - label.first) c /= 2;
        if (c == 0) continue;
        combo.emplace_back(idx, c);
        const LieMat& bm = basis_[static_cast<size_t>(idx)];
        for (size_t k = 0; k < check.e.size(); ++k) check.e[k] += c * bm.e[k];
    }
    if (!(check == m)) throw std::logic_error("LieData::bracket: expansion failed to close");
    std::sort(combo.begin(), combo.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return bracket_cache_.emplace(std::make_pair(a, b), std::move(combo)).first->second;
}

const Rat& LieData::form(long a, long b) const {
    auto it = form_cache_.find({a, b});
    if (it != form_cache_.end()) return it->second;
    Rat value = trace_product(matrix(a), matrix(b));
    if (family_ == LieFamily::glA) {
        Rat ta(0), tb(0);
        for (long i = 0; i < N_; ++i) {
            ta += matrix(a).at(i, i);
            tb += matrix(b).at(i, i);
        }
        value -= ta * tb / Rat(N_);
    } else {
        value /= 2;
    }
    return form_cache_.emplace(std::make_pair(a, b), std::move(value)).first->second;
}

Scalar LieData::critical_level() const {
    switch (family_) {
    case LieFamily::glA: return Scalar(Rat(-N_));
    case LieFamily::soB: return Scalar(Rat(-(N_ - 2)));
    case LieFamily::spC: return Scalar(Rat(-(N_ + 2)));
    }
    throw std::logic_error("LieData::critical_level: bad family");
}

UEnvElement UEnvElement::one() {
    UEnvElement e;
    e.add_term({}, Scalar(1L));
    return e;
}

UEnvElement UEnvElement::gen(long basis, long depth) {
    if (depth < 1) throw std::invalid_argument("UEnvElement::gen: depth must be positive");
    UEnvElement e;
    e.add_term({ModeGen{basis, depth}}, Scalar(1L));
    return e;
}

void UEnvElement::add_term(UMono mono, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(std::move(mono), c);
    if (fresh) return;
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

UEnvElement UEnvElement::operator-() const {
    UEnvElement out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, Scalar(0L) - c);
    return out;
}

UEnvElement& UEnvElement::operator+=(const UEnvElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

UEnvElement& UEnvElement::operator-=(const UEnvElement& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Scalar(0L) - c);
    return *this;
}

UEnvElement operator*(const Scalar& s, UEnvElement a) {
    UEnvElement out;
    if (s.is_zero()) return out;
    for (const auto& [m, c] : a.terms_) out.add_term(m, s * c);
    return out;
}

std::string UEnvElement::str(const LieData& g) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (m.empty()) {
            os << "*1";
            continue;
        }
        for (const auto& f : m) os << "*" << g.name(f.basis) << "(-" << f.depth << ")";
    }
    return os.str();
}

namespace {

// Rewrites an arbitrary factor word into PBW normal form, accumulating into
// `out`: an out-of-order adjacent pair is swapped at the cost of the single
// lower-length correction [x t^{-a}, y t^{-b}] = [x,y] t^{-(a+b)}.
void straighten_into(const LieData& g, UMono mono, Scalar coeff, UEnvElement& out) {
    std::vector<std::pair<UMono, Scalar>> work;
    work.emplace_back(std::move(mono), std::move(coeff));
    while (!work.empty()) {
        auto [m, c] = std::move(work.back());
        work.pop_back();
        size_t bad = m.size();
        for (size_t i = 0; i + 1 < m.size(); ++i)
            if (m[i + 1] < m[i]) {
                bad = i;
                break;
            }
        if (bad == m.size()) {
            out.add_term(std::move(m), c);
            continue;
        }
        const long depth = m[bad].depth + m[bad + 1].depth;
        for (const auto& [z, cz] : g.bracket(m[bad].basis, m[bad + 1].basis)) {
            UMono reduced(m.begin(), m.begin() + static_cast<long>(bad));
            reduced.push_back(ModeGen{z, depth});
            reduced.insert(reduced.end(), m.begin() + static_cast<long>(bad) + 2, m.end());
            work.emplace_back(std::move(reduced), Scalar(cz) * c);
        }
        std::swap(m[bad], m[bad + 1]);
        work.emplace_back(std::move(m), std::move(c));
    }
}

} // namespace

UEnvElement mul(const LieData& g, const UEnvElement& a, const UEnvElement& b) {
    UEnvElement out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            UMono joined = ma;
            joined.insert(joined.end(), mb.begin(), mb.end());
            straighten_into(g, std::move(joined), ca * cb, out);
        }
    return out;
}

namespace {

// Action of (basis x) t^m on the suffix mono[pos..] applied to the vacuum.
UEnvElement act_mono(const LieData& g, long x, long m, const UMono& mono, size_t pos,
                     const Scalar& level) {
    UEnvElement out;
    if (pos == mono.size()) return out; // nonnegative modes annihilate the vacuum
    const ModeGen f = mono[pos];
    const long shift = m - f.depth;
    for (const auto& [z, cz] : g.bracket(x, f.basis)) {
        if (shift < 0) {
            UMono created{ModeGen{z, -shift}};
            created.insert(created.end(), mono.begin() + static_cast<long>(pos) + 1, mono.end());
            straighten_into(g, std::move(created), Scalar(cz), out);
        } else {
            out += Scalar(cz) * act_mono(g, z, shift, mono, pos + 1, level);
        }
    }
    if (shift == 0) {
        const Scalar central = Scalar(m) * level * Scalar(g.form(x, f.basis));
        out.add_term(UMono(mono.begin() + static_cast<long>(pos) + 1, mono.end()), central);
    }
    UEnvElement tail = act_mono(g, x, m, mono, pos + 1, level);
    for (const auto& [tm, tc] : tail.terms()) {
        UMono joined{f};
        joined.insert(joined.end(), tm.begin(), tm.end());
        straighten_into(g, std::move(joined), tc, out);
    }
    return out;
}

} // namespace

UEnvElement affine_act(const LieData& g, long x_basis, long m, const Scalar& level,
                       const UEnvElement& P) {
    if (x_basis < 0 || x_basis >= g.dim())
        throw std::invalid_argument("affine_act: basis index out of range");
    if (m < 0) throw std::invalid_argument("affine_act: mode must be nonnegative");
    UEnvElement out;
    for (const auto& [mono, c] : P.terms()) out += c * act_mono(g, x_basis, m, mono, 0, level);
    return out;
}

bool is_central(const LieData& g, const UEnvElement& P, long max_mode) {
    const Scalar level = g.critical_level();
    for (long x = 0; x < g.dim(); ++x)
        for (long m = 0; m <= max_mode; ++m)
            if (!affine_act(g, x, m, level, P).is_zero()) return false;
    return true;
}

UEnvElement symmetrize(const UEnvElement& P) {
    // The normal-form monomials are already canonically sorted, so they serve
    // directly as representatives of their commutative images.
    return P;
}

UEnvElement eval_T(const UEnvElement& P, const Rat& alpha) {
    UEnvElement out;
    for (const auto& [m, c] : P.terms()) out.add_term(m, c.eval_T(alpha));
    return out;
}

namespace {

void partitions_rec(long remaining, long max_part, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<long>> partitions_of(long m) {
    if (m < 0) throw std::invalid_argument("partitions_of: negative argument");
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    partitions_rec(m, m == 0 ? 1 : m, cur, out);
    return out;
}

Rat cycle_type_count(const std::vector<long>& lambda) {
    long m = 0;
    Rat z(1);
    long run_part = 0, run_len = 0;
    auto flush = [&] {
        for (long k = 1; k <= run_len; ++k) z *= Rat(k);       // multiplicity factorial
        for (long k = 0; k < run_len; ++k) z *= Rat(run_part); // part^multiplicity
    };
    for (long p : lambda) {
        if (p < 1) throw std::invalid_argument("cycle_type_count: parts must be positive");
        m += p;
        if (p == run_part) {
            ++run_len;
            continue;
        }
        flush();
        run_part = p;
        run_len = 1;
    }
    flush();
    return factorial(static_cast<unsigned long>(m)) / z;
}

namespace {

int perm_sign(const std::vector<long>& sigma) {
    int s = 1;
    for (size_t i = 0; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) s = -s;
    return s;
}

// Shared partition-sum assembly: for each partition of m (optionally only
// those of even length) and each permutation sigma of its l slots, sums the
// products  prod_k G(i_k, i_{sigma^{-1}(k)}) t^{-lambda_{sigma^{-1}(k)}}  over
// index tuples i in [1..range]^l, weighted by
// c_lambda * q_weight(l) * (sgn sigma)^{signed_sym} / l!.
UEnvElement ss_core(const LieData& g, long m, long range, bool signed_sym, bool even_only,
                    const std::function<Scalar(long)>& q_weight) {
    if (m < 1) throw std::invalid_argument("ss vector: order must be positive");
    UEnvElement out;
    for (const auto& lambda : partitions_of(m)) {
        const long ell = static_cast<long>(lambda.size());
        if (even_only && ell % 2 != 0) continue;
        const Scalar weight = Scalar(cycle_type_count(lambda)) * q_weight(ell) *
                              Scalar(Rat(1) / factorial(static_cast<unsigned long>(ell)));
        std::vector<long> sigma(static_cast<size_t>(ell));
        std::iota(sigma.begin(), sigma.end(), 0L);
        do {
            std::vector<long> inv(sigma.size());
            for (size_t k = 0; k < sigma.size(); ++k)
                inv[static_cast<size_t>(sigma[k])] = static_cast<long>(k);
            const Scalar coeff =
                signed_sym && perm_sign(sigma) < 0 ? Scalar(0L) - weight : weight;
            std::vector<long> idx(static_cast<size_t>(ell), 1);
            for (;;) {
                UEnvElement prod = UEnvElement::one();
                for (size_t k = 0; k < idx.size() && !prod.is_zero(); ++k) {
                    const size_t src = static_cast<size_t>(inv[k]);
                    UEnvElement factor;
                    for (const auto& [b, c] : g.generator(idx[k], idx[src]))
                        factor.add_term({ModeGen{b, lambda[src]}}, Scalar(c));
                    prod = mul(g, prod, factor);
                }
                out += coeff * prod;
                size_t p = 0;
                while (p < idx.size() && idx[p] == range) idx[p++] = 1;
                if (p == idx.size()) break;
                ++idx[p];
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return out;
}

} // namespace

UEnvElement ss_vector_A(long m, long n, SSVariant variant) {
    const LieData g = LieData::gl(n);
    const bool anti = variant == SSVariant::anti;
    auto q_weight = [&](long ell) {
        Scalar q = q_coeff(static_cast<unsigned long>(m), static_cast<unsigned long>(ell),
                           Scalar(Rat(n)));
        return anti || ell % 2 == 0 ? q : Scalar(0L) - q;
    };
    return ss_core(g, m, n, anti, false, q_weight);
}

UEnvElement ss_vector_BC(long m, const LieData& g) {
    if (m % 2 != 0) throw OddM("ss_vector_BC: defined for even orders only");
    if (g.family() == LieFamily::glA)
        throw std::invalid_argument("ss_vector_BC: expects an orthogonal or symplectic algebra");
    const bool symplectic = g.family() == LieFamily::spC;
    const Rat arg = symplectic ? Rat(-g.matrix_size()) : Rat(g.matrix_size() - 1);
    auto q_weight = [&](long ell) {
        return q_coeff(static_cast<unsigned long>(m), static_cast<unsigned long>(ell),
                       Scalar(arg));
    };
    return ss_core(g, m, g.matrix_size(), symplectic, true, q_weight);
}

UEnvElement ss_vector_interp(long m, long n, SSVariant variant) {
    const LieData g = LieData::gl(n);
    const bool anti = variant == SSVariant::anti;
    auto q_weight = [&](long ell) {
        Scalar q =
            q_coeff(static_cast<unsigned long>(m), static_cast<unsigned long>(ell), Scalar::T());
        return anti || ell % 2 == 0 ? q : Scalar(0L) - q;
    };
    return ss_core(g, m, n, anti, false, q_weight);
}

} // namespace agd
