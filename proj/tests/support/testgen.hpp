#pragma once

// Random value builders shared by the property-based tests.

#include <random>

#include "agd/diffpoly.hpp"
#include "agd/scalar.hpp"

namespace agd::testgen {

inline Scalar random_rational(std::mt19937_64& rng, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, 4);
    return Scalar(Rat(num(rng), den(rng)));
}

inline Scalar random_t_poly(std::mt19937_64& rng, int maxdeg = 2) {
    std::uniform_int_distribution<int> deg(0, maxdeg), coef(-4, 4);
    Poly p;
    const int d = deg(rng);
    for (int k = 0; k <= d; ++k) p += Poly::monomial(Rat(coef(rng)), static_cast<std::size_t>(k));
    return Scalar(p);
}

// Random differential polynomial in generators u[0..offsets), derivative
// orders < orders, at most `terms` monomials of degree <= maxdeg.
inline DiffPoly random_diffpoly(std::mt19937_64& rng, const std::string& tag = "u", int offsets = 2,
                                int orders = 3, int terms = 3, int maxdeg = 2, bool t_coeffs = false) {
    std::uniform_int_distribution<int> nterms(1, terms), deg(0, maxdeg), off(0, offsets - 1),
        ord(0, orders - 1);
    DiffPoly p;
    const int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        DiffPoly m(t_coeffs ? random_t_poly(rng) : random_rational(rng));
        const int d = deg(rng);
        for (int i = 0; i < d; ++i) m *= DiffPoly::gen(GenId(tag, off(rng)), ord(rng));
        p += m;
    }
    return p;
}

} // namespace agd::testgen
