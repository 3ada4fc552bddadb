#include "agd/diffpoly.hpp"

#include <algorithm>

namespace agd {

long Monomial::total_degree() const {
    long d = 0;
    for (const auto& f : factors) d += f.power;
    return d;
}

long Monomial::derivative_weight() const {
    long w = 0;
    for (const auto& f : factors) w += f.order * f.power;
    return w;
}

Monomial Monomial::merge(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors.reserve(a.factors.size() + b.factors.size());
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() && ib != b.factors.end()) {
        const auto key = [](const VarPow& v) { return std::tie(v.g.tag, v.g.offset, v.order); };
        if (key(*ia) == key(*ib)) {
            r.factors.push_back({ia->g, ia->order, ia->power + ib->power});
            ++ia;
            ++ib;
        } else if (key(*ia) < key(*ib)) {
            r.factors.push_back(*ia++);
        } else {
            r.factors.push_back(*ib++);
        }
    }
    r.factors.insert(r.factors.end(), ia, a.factors.end());
    r.factors.insert(r.factors.end(), ib, b.factors.end());
    return r;
}

VarNamer default_namer() {
    return [](const GenId& g) { return g.tag + "[" + std::to_string(g.offset) + "]"; };
}

VarNamer offset_namer(const std::string& tag, const ShiftExponent& base, VarNamer fallback) {
    return [tag, base, fallback](const GenId& g) {
        if (g.tag != tag) return fallback(g);
        return tag + "[" + (base + g.offset).str() + "]";
    };
}

VarNamer bare_namer(const std::string& tag, VarNamer fallback) {
    return [tag, fallback](const GenId& g) {
        if (g.tag != tag) return fallback(g);
        if (g.offset == 0) return tag;
        return tag + "[" + std::to_string(g.offset) + "]";
    };
}

DiffPoly::DiffPoly(const Scalar& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

DiffPoly DiffPoly::gen(const GenId& g, long order) {
    DiffPoly p;
    Monomial m;
    m.factors.push_back({g, order, 1});
    p.terms_.emplace(std::move(m), Scalar(1L));
    return p;
}

DiffPoly DiffPoly::mono(Monomial m, Scalar c) {
    DiffPoly p;
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool DiffPoly::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar DiffPoly::scalar_part() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Scalar() : it->second;
}

void DiffPoly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffPoly DiffPoly::operator-() const {
    DiffPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

DiffPoly& DiffPoly::operator+=(const DiffPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

DiffPoly& DiffPoly::operator-=(const DiffPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const DiffPoly& o) {
    DiffPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(Monomial::merge(ma, mb), ca * cb);
    terms_ = std::move(r.terms_);
    return *this;
}

DiffPoly& DiffPoly::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

DiffPoly DiffPoly::pow(unsigned long e) const {
    DiffPoly r(1L), base(*this);
    while (e > 0) {
        if (e & 1UL) r *= base;
        base *= base;
        e >>= 1UL;
    }
    return r;
}

long DiffPoly::total_degree() const {
    long d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

long DiffPoly::derivative_weight() const {
    long w = 0;
    for (const auto& [m, c] : terms_) w = std::max(w, m.derivative_weight());
    return w;
}

std::string DiffPoly::str(const VarNamer& namer) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find(" - ") == std::string::npos &&
            cs.find(" + ") == std::string::npos) {
            neg = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        std::string body;
        for (const auto& f : m.factors) {
            if (!body.empty()) body += "*";
            body += namer(f.g);
            if (f.order > 0) body += "^(" + std::to_string(f.order) + ")";
            if (f.power > 1) body += "^" + std::to_string(f.power);
        }
        if (body.empty()) {
            s += cs;
        } else {
            if (cs != "1") {
                const bool atom = cs.find(' ') == std::string::npos;
                s += (atom ? cs : "(" + cs + ")") + "*";
            }
            s += body;
        }
    }
    return s;
}

DiffPoly derive(const DiffPoly& p) {
    DiffPoly r;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            const VarPow& f = m.factors[i];
            // d(v^p) = p v^(p-1) v'
            Monomial rest;
            rest.factors.reserve(m.factors.size() + 1);
            for (std::size_t j = 0; j < m.factors.size(); ++j) {
                if (j == i) {
                    if (f.power > 1) rest.factors.push_back({f.g, f.order, f.power - 1});
                } else {
                    rest.factors.push_back(m.factors[j]);
                }
            }
            Monomial bump;
            bump.factors.push_back({f.g, f.order + 1, 1});
            r.add_term(Monomial::merge(rest, bump), c * Scalar(f.power));
        }
    }
    return r;
}

DiffPoly derive(const DiffPoly& p, unsigned long times) {
    DiffPoly r = p;
    for (unsigned long i = 0; i < times; ++i) r = derive(r);
    return r;
}

DiffPoly partial(const DiffPoly& p, const GenId& g, long k) {
    DiffPoly r;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t i = 0; i < m.factors.size(); ++i) {
            const VarPow& f = m.factors[i];
            if (f.g != g || f.order != k) continue;
            Monomial rest;
            for (std::size_t j = 0; j < m.factors.size(); ++j) {
                if (j == i) {
                    if (f.power > 1) rest.factors.push_back({f.g, f.order, f.power - 1});
                } else {
                    rest.factors.push_back(m.factors[j]);
                }
            }
            r.add_term(rest, c * Scalar(f.power));
        }
    }
    return r;
}

DiffPoly evaluate_T(const DiffPoly& p, const Rat& alpha) {
    DiffPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, c.eval_T(alpha));
    return r;
}

DiffPoly subst_gens(const DiffPoly& p, const std::map<GenId, DiffPoly>& repl) {
    // cache of derive^k(repl[g])
    std::map<std::pair<GenId, long>, DiffPoly> dcache;
    const auto deriv_of = [&](const GenId& g, long k) -> const DiffPoly& {
        if (!dcache.count({g, 0})) dcache.emplace(std::make_pair(g, 0L), repl.at(g));
        for (long j = 1; j <= k; ++j)
            if (!dcache.count({g, j}))
                dcache.emplace(std::make_pair(g, j), derive(dcache.at({g, j - 1})));
        return dcache.at({g, k});
    };

    DiffPoly r;
    for (const auto& [m, c] : p.terms()) {
        DiffPoly term(c);
        Monomial untouched;
        for (const auto& f : m.factors) {
            if (repl.count(f.g)) {
                term *= deriv_of(f.g, f.order).pow(static_cast<unsigned long>(f.power));
            } else {
                untouched.factors.push_back(f);
            }
        }
        r += DiffPoly::mono(untouched, Scalar(1L)) * term;
    }
    return r;
}

bool mentions_tag(const DiffPoly& p, const std::string& tag) {
    for (const auto& [m, c] : p.terms())
        for (const auto& f : m.factors)
            if (f.g.tag == tag) return true;
    return false;
}

void split_linear(const DiffPoly& p, const std::string& tag,
                  std::map<long, DiffPoly>& coeff_by_order, DiffPoly& rest) {
    coeff_by_order.clear();
    rest = DiffPoly();
    for (const auto& [m, c] : p.terms()) {
        long order = -1;
        Monomial others;
        for (const auto& f : m.factors) {
            if (f.g.tag == tag) {
                if (order >= 0 || f.power != 1)
                    throw UnknownGenerator("polynomial is not linear in tag '" + tag + "'");
                order = f.order;
            } else {
                others.factors.push_back(f);
            }
        }
        if (order < 0)
            rest.add_term(m, c);
        else
            coeff_by_order[order] += DiffPoly::mono(others, c);
    }
}

} // namespace agd
