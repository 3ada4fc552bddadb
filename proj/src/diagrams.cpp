#include "agd/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace agd {

namespace {

bool all_filled(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](Color c) { return c == Color::filled; });
}

// Half-space sign for the antisymmetric pairing on even-dimensional space:
// the first half of the basis carries +1, the reflected half -1.
int half_sign(long digit, long N) { return digit < N / 2 ? 1 : -1; }

long checked_pow(long base, long exp) {
    long r = 1;
    for (long i = 0; i < exp; ++i) {
        if (r > (1L << 40) / std::max(base, 1L))
            throw std::invalid_argument("realized tensor span too large");
        r *= base;
    }
    return r;
}

} // namespace

std::string word_str(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (Color c : w) s.push_back(c == Color::filled ? '*' : 'o');
    return s;
}

Word parse_word(const std::string& text) {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        if (c == '*')
            w.push_back(Color::filled);
        else if (c == 'o')
            w.push_back(Color::hollow);
        else if (c == ' ')
            continue;
        else
            throw ParseError(std::string("unexpected character in word: '") + c + "'");
    }
    return w;
}

Word filled_word(long n) {
    if (n < 0) throw std::invalid_argument("word length must be nonnegative");
    return Word(static_cast<size_t>(n), Color::filled);
}

Diagram Diagram::make(Word bottom, Word top, std::vector<std::pair<long, long>> pairs) {
    Diagram d;
    d.bottom_ = std::move(bottom);
    d.top_ = std::move(top);
    const long total = d.bottom_size() + d.top_size();
    if (total % 2 != 0)
        throw std::invalid_argument("diagram needs an even total number of vertices");
    std::vector<int> seen(static_cast<size_t>(total), 0);
    for (auto& [a, b] : pairs) {
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= total || a == b)
            throw std::invalid_argument("diagram pair out of range");
        if (seen[static_cast<size_t>(a)]++ || seen[static_cast<size_t>(b)]++)
            throw std::invalid_argument("diagram vertex matched twice");
    }
    if (2 * static_cast<long>(pairs.size()) != total)
        throw std::invalid_argument("diagram must match every vertex");
    std::sort(pairs.begin(), pairs.end());
    d.pairs_ = std::move(pairs);
    return d;
}

Diagram Diagram::identity(const Word& w) {
    const long n = static_cast<long>(w.size());
    std::vector<std::pair<long, long>> pairs;
    pairs.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) pairs.emplace_back(i, n + i);
    return make(w, w, std::move(pairs));
}

Diagram Diagram::permutation(const Word& w, const std::vector<long>& sigma) {
    const long n = static_cast<long>(w.size());
    if (static_cast<long>(sigma.size()) != n)
        throw std::invalid_argument("permutation length does not match word");
    Word top(w.size(), Color::filled);
    std::vector<std::pair<long, long>> pairs;
    pairs.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        if (sigma[static_cast<size_t>(i)] < 0 || sigma[static_cast<size_t>(i)] >= n)
            throw std::invalid_argument("permutation image out of range");
        top[static_cast<size_t>(sigma[static_cast<size_t>(i)])] = w[static_cast<size_t>(i)];
        pairs.emplace_back(i, n + sigma[static_cast<size_t>(i)]);
    }
    return make(w, std::move(top), std::move(pairs));
}

Color Diagram::color(long v) const {
    if (v < bottom_size()) return bottom_[static_cast<size_t>(v)];
    return top_[static_cast<size_t>(v - bottom_size())];
}

std::string Diagram::str() const {
    auto label = [&](long v) {
        std::ostringstream os;
        if (v < bottom_size())
            os << 'b' << v + 1;
        else
            os << 't' << v - bottom_size() + 1;
        return os.str();
    };
    std::string s = "[";
    bool first = true;
    for (const auto& [a, b] : pairs_) {
        if (!first) s += ",";
        first = false;
        s += "(" + label(a) + "," + label(b) + ")";
    }
    return s + "]";
}

bool Diagram::operator==(const Diagram& o) const {
    return bottom_ == o.bottom_ && top_ == o.top_ && pairs_ == o.pairs_;
}

bool Diagram::operator<(const Diagram& o) const {
    if (bottom_ != o.bottom_) return bottom_ < o.bottom_;
    if (top_ != o.top_) return top_ < o.top_;
    return pairs_ < o.pairs_;
}

bool valid_for(const Diagram& d, DiagramFamily family) {
    if (family != DiagramFamily::GL)
        return all_filled(d.bottom()) && all_filled(d.top());
    for (const auto& [a, b] : d.pairs()) {
        const bool same_row = d.is_top_vertex(a) == d.is_top_vertex(b);
        if (same_row && d.color(a) == d.color(b)) return false;
        if (!same_row && d.color(a) != d.color(b)) return false;
    }
    return true;
}

long crossing_count(const Diagram& d) {
    const long nb = d.bottom_size();
    const long nt = d.top_size();
    // Boundary order walks the bottom row left to right, then the top row
    // right to left, so that every pair becomes a chord on a circle.
    auto boundary = [&](long v) { return v < nb ? v : nb + (nt - 1 - (v - nb)); };
    std::vector<std::pair<long, long>> chords;
    chords.reserve(d.pairs().size());
    for (const auto& [a, b] : d.pairs()) {
        long pa = boundary(a), pb = boundary(b);
        if (pa > pb) std::swap(pa, pb);
        chords.emplace_back(pa, pb);
    }
    long count = 0;
    for (size_t i = 0; i < chords.size(); ++i)
        for (size_t j = i + 1; j < chords.size(); ++j) {
            const auto& [a1, b1] = chords[i];
            const auto& [a2, b2] = chords[j];
            if ((a1 < a2 && a2 < b1 && b1 < b2) || (a2 < a1 && a1 < b2 && b2 < b1)) ++count;
        }
    return count;
}

Diagram tensor(const Diagram& a, const Diagram& b) {
    Word bottom = a.bottom();
    bottom.insert(bottom.end(), b.bottom().begin(), b.bottom().end());
    Word top = a.top();
    top.insert(top.end(), b.top().begin(), b.top().end());
    const long nb = static_cast<long>(bottom.size());
    auto remap_a = [&](long v) { return v < a.bottom_size() ? v : v - a.bottom_size() + nb; };
    auto remap_b = [&](long v) {
        return v < b.bottom_size() ? v + a.bottom_size() : v - b.bottom_size() + nb + a.top_size();
    };
    std::vector<std::pair<long, long>> pairs;
    pairs.reserve(a.pairs().size() + b.pairs().size());
    for (const auto& [x, y] : a.pairs()) pairs.emplace_back(remap_a(x), remap_a(y));
    for (const auto& [x, y] : b.pairs()) pairs.emplace_back(remap_b(x), remap_b(y));
    return Diagram::make(std::move(bottom), std::move(top), std::move(pairs));
}

void DiagramSum::add_term(const Diagram& d, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiagramSum DiagramSum::operator-() const {
    DiagramSum r;
    for (const auto& [d, c] : terms_) r.terms_.emplace(d, Scalar(0L) - c);
    return r;
}

DiagramSum& DiagramSum::operator+=(const DiagramSum& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

DiagramSum& DiagramSum::operator-=(const DiagramSum& o) {
    for (const auto& [d, c] : o.terms_) add_term(d, Scalar(0L) - c);
    return *this;
}

DiagramSum operator*(const Scalar& s, DiagramSum a) {
    DiagramSum r;
    for (const auto& [d, c] : a.terms_) r.add_term(d, s * c);
    return r;
}

std::string DiagramSum::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.str() + ")*" + d.str();
    }
    return s;
}

DiagramSum tensor(const DiagramSum& a, const DiagramSum& b) {
    DiagramSum r;
    for (const auto& [da, ca] : a.terms())
        for (const auto& [db, cb] : b.terms()) r.add_term(tensor(da, db), ca * cb);
    return r;
}

namespace {

// Stacks y over x, resolves the shared middle row, and reports the surviving
// boundary matching together with the number of closed middle components.
struct StackResult {
    std::vector<std::pair<long, long>> pairs;
    long loops = 0;
};

StackResult stack(const Diagram& y, const Diagram& x) {
    const long bx = x.bottom_size();
    const long m = x.top_size();
    const long ty = y.top_size();
    auto partner_of = [](const Diagram& d) {
        std::vector<long> p(static_cast<size_t>(d.bottom_size() + d.top_size()), -1);
        for (const auto& [a, b] : d.pairs()) {
            p[static_cast<size_t>(a)] = b;
            p[static_cast<size_t>(b)] = a;
        }
        return p;
    };
    const std::vector<long> px = partner_of(x);
    const std::vector<long> py = partner_of(y);

    std::vector<char> used(static_cast<size_t>(m), 0);
    // Walks from a boundary vertex of the composite to its partner, flagging
    // every middle vertex passed on the way. `in_x` selects the layer and
    // `v` is a vertex id within that layer.
    auto trace = [&](bool in_x, long v) -> long {
        for (;;) {
            if (in_x) {
                const long p = px[static_cast<size_t>(v)];
                if (p < bx) return p; // composite bottom vertex
                const long j = p - bx;
                used[static_cast<size_t>(j)] = 1;
                in_x = false;
                v = j; // enter the upper layer at its bottom row
            } else {
                const long p = py[static_cast<size_t>(v)];
                if (p >= m) return bx + (p - m); // composite top vertex
                used[static_cast<size_t>(p)] = 1;
                in_x = true;
                v = bx + p;
            }
        }
    };

    StackResult r;
    std::vector<char> done(static_cast<size_t>(bx + ty), 0);
    for (long s = 0; s < bx + ty; ++s) {
        if (done[static_cast<size_t>(s)]) continue;
        const long e = s < bx ? trace(true, s) : trace(false, m + (s - bx));
        done[static_cast<size_t>(s)] = 1;
        done[static_cast<size_t>(e)] = 1;
        r.pairs.emplace_back(s, e);
    }
    for (long j = 0; j < m; ++j) {
        if (used[static_cast<size_t>(j)]) continue;
        ++r.loops;
        long cur = j;
        do {
            used[static_cast<size_t>(cur)] = 1;
            const long viax = px[static_cast<size_t>(bx + cur)] - bx; // stays in the middle
            used[static_cast<size_t>(viax)] = 1;
            cur = py[static_cast<size_t>(viax)];
        } while (cur != j);
    }
    return r;
}

} // namespace

DiagramSum compose(const DiagramSum& Y, const DiagramSum& X, const Scalar& alpha,
                   DiagramFamily family) {
    const Scalar loop_value =
        family == DiagramFamily::Sp ? Scalar(0L) - alpha : alpha;
    DiagramSum r;
    for (const auto& [dy, cy] : Y.terms())
        for (const auto& [dx, cx] : X.terms()) {
            if (dx.top() != dy.bottom())
                throw WordMismatch("compose: top word " + word_str(dx.top()) +
                                   " does not match bottom word " + word_str(dy.bottom()));
            StackResult st = stack(dy, dx);
            Scalar c = cy * cx;
            for (long l = 0; l < st.loops; ++l) c = c * loop_value;
            r.add_term(Diagram::make(dx.bottom(), dy.top(), std::move(st.pairs)), c);
        }
    return r;
}

DiagramSum braiding(const Word& w, const Word& wp, bool twisted) {
    const long n = static_cast<long>(w.size());
    const long np = static_cast<long>(wp.size());
    Word bottom = w;
    bottom.insert(bottom.end(), wp.begin(), wp.end());
    Word top = wp;
    top.insert(top.end(), w.begin(), w.end());
    std::vector<std::pair<long, long>> pairs;
    pairs.reserve(static_cast<size_t>(n + np));
    const long nb = n + np;
    for (long i = 0; i < n; ++i) pairs.emplace_back(i, nb + np + i);
    for (long j = 0; j < np; ++j) pairs.emplace_back(n + j, nb + j);
    const Scalar coeff((twisted && (n * np) % 2 != 0) ? -1L : 1L);
    return DiagramSum(Diagram::make(std::move(bottom), std::move(top), std::move(pairs)), coeff);
}

DiagramSum symmetrizer(long n, bool signed_) {
    if (n < 0) throw std::invalid_argument("symmetrizer size must be nonnegative");
    const Word w = filled_word(n);
    std::vector<long> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0L);
    const Rat norm = Rat(1) / factorial(static_cast<unsigned long>(n));
    DiagramSum r;
    do {
        long inversions = 0;
        for (size_t i = 0; i < sigma.size(); ++i)
            for (size_t j = i + 1; j < sigma.size(); ++j)
                if (sigma[i] > sigma[j]) ++inversions;
        const Rat c = (signed_ && inversions % 2 != 0) ? -norm : norm;
        r.add_term(Diagram::permutation(w, sigma), Scalar(c));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return r;
}

long RealizedTensor::bottom_span() const { return checked_pow(dim, bottom_len); }
long RealizedTensor::top_span() const { return checked_pow(dim, top_len); }

RealizedTensor& RealizedTensor::operator+=(const RealizedTensor& o) {
    if (bottom_len != o.bottom_len || top_len != o.top_len || dim != o.dim)
        throw WordMismatch("tensor sum: incompatible shapes");
    for (const auto& [key, v] : o.entries) {
        Rat& slot = entries[key];
        slot += v;
        if (slot == 0) entries.erase(key);
    }
    return *this;
}

RealizedTensor operator*(const Rat& s, RealizedTensor t) {
    if (s == 0) {
        t.entries.clear();
        return t;
    }
    for (auto& [key, v] : t.entries) v *= s;
    return t;
}

bool RealizedTensor::operator==(const RealizedTensor& o) const {
    return bottom_len == o.bottom_len && top_len == o.top_len && dim == o.dim &&
           entries == o.entries;
}

RealizedTensor realize(const Diagram& d, long N, DiagramFamily family) {
    if (N < 1) throw std::invalid_argument("realization dimension must be positive");
    if (family == DiagramFamily::Sp && N % 2 != 0)
        throw std::invalid_argument("antisymmetric realization needs an even dimension");
    if (!valid_for(d, family))
        throw std::invalid_argument("diagram is not valid for the requested family");

    const long nb = d.bottom_size();
    const long nt = d.top_size();
    RealizedTensor out;
    out.bottom_len = nb;
    out.top_len = nt;
    out.dim = N;
    (void)out.bottom_span();
    (void)out.top_span();

    const auto& pairs = d.pairs();
    const long ne = static_cast<long>(pairs.size());
    const long cross_sign =
        (family == DiagramFamily::Sp && crossing_count(d) % 2 != 0) ? -1 : 1;

    std::vector<long> digit(static_cast<size_t>(ne), 0);
    std::vector<long> bdig(static_cast<size_t>(nb), 0);
    std::vector<long> tdig(static_cast<size_t>(nt), 0);
    for (;;) {
        int coeff = cross_sign;
        for (long e = 0; e < ne; ++e) {
            const auto& [a, b] = pairs[static_cast<size_t>(e)];
            const long da = digit[static_cast<size_t>(e)];
            const bool same_row = d.is_top_vertex(a) == d.is_top_vertex(b);
            long db = da;
            if (same_row && family != DiagramFamily::GL) db = N - 1 - da;
            if (same_row && family == DiagramFamily::Sp)
                coeff *= half_sign(d.is_top_vertex(a) ? db : da, N);
            auto put = [&](long v, long dv) {
                if (d.is_top_vertex(v))
                    tdig[static_cast<size_t>(v - nb)] = dv;
                else
                    bdig[static_cast<size_t>(v)] = dv;
            };
            put(a, da);
            put(b, db);
        }
        long bidx = 0;
        for (long i = nb - 1; i >= 0; --i) bidx = bidx * N + bdig[static_cast<size_t>(i)];
        long tidx = 0;
        for (long i = nt - 1; i >= 0; --i) tidx = tidx * N + tdig[static_cast<size_t>(i)];
        Rat& slot = out.entries[{tidx, bidx}];
        slot += coeff;
        if (slot == 0) out.entries.erase({tidx, bidx});

        long e = 0;
        while (e < ne && ++digit[static_cast<size_t>(e)] == N) {
            digit[static_cast<size_t>(e)] = 0;
            ++e;
        }
        if (e == ne) break;
    }
    return out;
}

RealizedTensor realize(const DiagramSum& s, long N, DiagramFamily family) {
    RealizedTensor out;
    out.dim = N;
    bool shaped = false;
    for (const auto& [d, c] : s.terms()) {
        const Rat cv = c.eval_T(Rat(N)).as_rational();
        RealizedTensor t = realize(d, N, family);
        if (!shaped) {
            out.bottom_len = t.bottom_len;
            out.top_len = t.top_len;
            shaped = true;
        }
        if (cv == 0) continue;
        out += cv * t;
    }
    return out;
}

RealizedTensor contract(const RealizedTensor& Y, const RealizedTensor& X) {
    if (Y.dim != X.dim || Y.bottom_len != X.top_len)
        throw WordMismatch("contract: inner boundary shapes do not match");
    std::map<long, std::vector<std::pair<long, Rat>>> by_top;
    for (const auto& [key, v] : X.entries) by_top[key.first].emplace_back(key.second, v);
    RealizedTensor out;
    out.dim = Y.dim;
    out.bottom_len = X.bottom_len;
    out.top_len = Y.top_len;
    for (const auto& [ykey, yv] : Y.entries) {
        const auto it = by_top.find(ykey.second);
        if (it == by_top.end()) continue;
        for (const auto& [b, xv] : it->second) {
            Rat& slot = out.entries[{ykey.first, b}];
            slot += yv * xv;
            if (slot == 0) out.entries.erase({ykey.first, b});
        }
    }
    return out;
}

Rat trace(const RealizedTensor& t) {
    if (t.bottom_len != t.top_len)
        throw WordMismatch("trace needs matching boundary lengths");
    Rat s = 0;
    for (const auto& [key, v] : t.entries)
        if (key.first == key.second) s += v;
    return s;
}

namespace {

void enumerate_rec(const std::vector<Color>& colors, long nb, DiagramFamily family,
                   std::vector<long>& partner, std::vector<std::pair<long, long>>& acc,
                   const Word& bottom, const Word& top, std::vector<Diagram>& out) {
    const long total = static_cast<long>(colors.size());
    long a = 0;
    while (a < total && partner[static_cast<size_t>(a)] >= 0) ++a;
    if (a == total) {
        out.push_back(Diagram::make(bottom, top, acc));
        return;
    }
    for (long b = a + 1; b < total; ++b) {
        if (partner[static_cast<size_t>(b)] >= 0) continue;
        const Color ca = colors[static_cast<size_t>(a)];
        const Color cb = colors[static_cast<size_t>(b)];
        const bool same_row = (a < nb) == (b < nb);
        bool ok;
        if (family == DiagramFamily::GL)
            ok = same_row ? ca != cb : ca == cb;
        else
            ok = ca == Color::filled && cb == Color::filled;
        if (!ok) continue;
        partner[static_cast<size_t>(a)] = b;
        partner[static_cast<size_t>(b)] = a;
        acc.emplace_back(a, b);
        enumerate_rec(colors, nb, family, partner, acc, bottom, top, out);
        acc.pop_back();
        partner[static_cast<size_t>(a)] = -1;
        partner[static_cast<size_t>(b)] = -1;
    }
}

} // namespace

std::vector<Diagram> enumerate_diagrams(const Word& bottom, const Word& top,
                                        DiagramFamily family) {
    std::vector<Diagram> out;
    if ((bottom.size() + top.size()) % 2 != 0) return out;
    std::vector<Color> colors = bottom;
    colors.insert(colors.end(), top.begin(), top.end());
    std::vector<long> partner(colors.size(), -1);
    std::vector<std::pair<long, long>> acc;
    enumerate_rec(colors, static_cast<long>(bottom.size()), family, partner, acc, bottom, top,
                  out);
    return out;
}

RankReport interp_rank_check(const Word& w, const Word& wp, long N, DiagramFamily family) {
    const std::vector<Diagram> basis = enumerate_diagrams(w, wp, family);
    RankReport rep;
    rep.dim_domain = static_cast<long>(basis.size());
    if (basis.empty()) {
        rep.injective = true;
        return rep;
    }
    const long span = checked_pow(N, static_cast<long>(w.size())) *
                      checked_pow(N, static_cast<long>(wp.size()));
    std::vector<std::vector<Rat>> rows;
    rows.reserve(basis.size());
    for (const Diagram& d : basis) {
        const RealizedTensor t = realize(d, N, family);
        std::vector<Rat> row(static_cast<size_t>(span), Rat(0));
        const long bspan = t.bottom_span();
        for (const auto& [key, v] : t.entries)
            row[static_cast<size_t>(key.first * bspan + key.second)] = v;
        rows.push_back(std::move(row));
    }
    long rank = 0;
    for (long col = 0; col < span && rank < static_cast<long>(rows.size()); ++col) {
        long pivot = -1;
        for (long r = rank; r < static_cast<long>(rows.size()); ++r)
            if (rows[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(pivot)]);
        const std::vector<Rat>& prow = rows[static_cast<size_t>(rank)];
        for (long r = 0; r < static_cast<long>(rows.size()); ++r) {
            if (r == rank) continue;
            std::vector<Rat>& row = rows[static_cast<size_t>(r)];
            if (row[static_cast<size_t>(col)] == 0) continue;
            const Rat f = row[static_cast<size_t>(col)] / prow[static_cast<size_t>(col)];
            for (long c = col; c < span; ++c)
                row[static_cast<size_t>(c)] -= f * prow[static_cast<size_t>(c)];
        }
        ++rank;
    }
    rep.rank = rank;
    rep.injective = rank == rep.dim_domain;
    return rep;
}

} // namespace agd
