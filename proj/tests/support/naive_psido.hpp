#pragma once

// Independent product oracle for integral-shift symbols. Uses only the two
// axioms  d∘u = u d + u'  and  d^{-1}∘u = u d^{-1} - d^{-1}∘u' d^{-1}
// iterated one power at a time, so no binomial coefficients enter anywhere.

#include <map>

#include "agd/psido.hpp"

namespace agd::testsupport {

// plain operator: actual integer exponent -> coefficient
using Plain = std::map<long, DiffPoly>;

inline void plain_add(Plain& a, long e, const DiffPoly& c) {
    if (c.is_zero()) return;
    auto [it, ins] = a.try_emplace(e, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

// d ∘ X
inline Plain d_step(const Plain& x) {
    Plain r;
    for (const auto& [e, c] : x) {
        plain_add(r, e + 1, c);
        plain_add(r, e, derive(c));
    }
    return r;
}

// d^{-1} ∘ X, keeping exponents >= min_exp
inline Plain i_step(const Plain& x, long min_exp) {
    Plain r;
    Plain cur = x;
    bool negate = false;
    for (;;) {
        Plain shifted;
        for (const auto& [e, c] : cur)
            if (e - 1 >= min_exp) plain_add(shifted, e - 1, c);
        if (shifted.empty()) break;
        for (const auto& [e, c] : shifted) plain_add(r, e, negate ? -c : c);
        Plain next;
        for (const auto& [e, c] : shifted) plain_add(next, e, derive(c));
        cur = std::move(next);
        negate = !negate;
        if (cur.empty()) break;
    }
    return r;
}

inline Plain naive_mul(const Plain& a, const Plain& b, long min_exp) {
    Plain r;
    for (const auto& [ea, ca] : a) {
        Plain part = b;
        for (long s = 0; s < ea; ++s) part = d_step(part);
        for (long s = 0; s > ea; --s) part = i_step(part, min_exp - 1);
        for (const auto& [e, c] : part)
            if (e >= min_exp) plain_add(r, e, ca * c);
    }
    return r;
}

inline Plain to_plain(const PsiDO& p, long min_exp) {
    Plain r;
    const long a = p.shift().int_value();
    for (const auto& [k, c] : p.coeffs())
        if (a - k >= min_exp) plain_add(r, a - k, c);
    return r;
}

} // namespace agd::testsupport
