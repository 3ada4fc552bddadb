#pragma once

// Parameterized diagram categories: words over a two-letter alphabet, perfect
// matchings between two rows, formal sums with rational-function weights, and
// the loop-counting composition that multiplies by the parameter (or its
// negative) once per closed component. Realization sends a diagram at an
// integer parameter to an explicit tensor over coordinate space, using the
// reflection pairing (and, in the antisymmetric family, half-space signs plus
// a crossing-parity sign) for same-row edges.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "agd/errors.hpp"
#include "agd/scalar.hpp"

namespace agd {

enum class Color : unsigned char { filled, hollow };
enum class DiagramFamily { GL, O, Sp };

using Word = std::vector<Color>;

// Compact text form: '*' for filled, 'o' for hollow.
std::string word_str(const Word& w);
Word parse_word(const std::string& text);
Word filled_word(long n);

// A perfect matching between two labeled rows. Vertices are numbered with the
// bottom row first (0 .. |bottom|-1 left to right) and the top row after it
// (|bottom| .. |bottom|+|top|-1 left to right). Pairs are stored canonically:
// each pair ordered, the list sorted, so equal diagrams compare equal.
class Diagram {
  public:
    static Diagram make(Word bottom, Word top, std::vector<std::pair<long, long>> pairs);
    static Diagram identity(const Word& w);
    // bottom position i connects to top position sigma[i]
    static Diagram permutation(const Word& w, const std::vector<long>& sigma);

    const Word& bottom() const { return bottom_; }
    const Word& top() const { return top_; }
    const std::vector<std::pair<long, long>>& pairs() const { return pairs_; }

    long bottom_size() const { return static_cast<long>(bottom_.size()); }
    long top_size() const { return static_cast<long>(top_.size()); }
    bool is_top_vertex(long v) const { return v >= bottom_size(); }
    Color color(long v) const;

    // Pair-list notation with 1-based row labels, e.g. "[(b1,t1),(b2,b3)]".
    std::string str() const;

    bool operator==(const Diagram& o) const;
    bool operator<(const Diagram& o) const;

  private:
    Word bottom_, top_;
    std::vector<std::pair<long, long>> pairs_;
};

// Family-dependent edge rules: same-row edges must join opposite colors and
// cross-row edges equal colors in the two-letter family; the one-letter
// families accept any matching but only filled letters.
bool valid_for(const Diagram& d, DiagramFamily family);

// Number of interleaving edge pairs when the boundary is read bottom row left
// to right, then top row right to left. Its parity is the planar crossing
// parity and supplies the antisymmetric family's realization sign.
long crossing_count(const Diagram& d);

Diagram tensor(const Diagram& a, const Diagram& b);

// Finite formal sum of diagrams with rational-function coefficients.
class DiagramSum {
  public:
    DiagramSum() = default;
    DiagramSum(const Diagram& d, const Scalar& c = Scalar(1L)) { add_term(d, c); }

    void add_term(const Diagram& d, const Scalar& c);
    const std::map<Diagram, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    DiagramSum operator-() const;
    DiagramSum& operator+=(const DiagramSum& o);
    DiagramSum& operator-=(const DiagramSum& o);
    friend DiagramSum operator+(DiagramSum a, const DiagramSum& b) { return a += b; }
    friend DiagramSum operator-(DiagramSum a, const DiagramSum& b) { return a -= b; }
    friend DiagramSum operator*(const Scalar& s, DiagramSum a);

    bool operator==(const DiagramSum& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiagramSum& o) const { return !(*this == o); }

    std::string str() const;

  private:
    std::map<Diagram, Scalar> terms_;
};

DiagramSum tensor(const DiagramSum& a, const DiagramSum& b);

// Stack Y on top of X (matching words required, else WordMismatch), resolve
// the middle row, and scale each term by alpha (or -alpha in the Sp family)
// once per closed component removed from the middle.
DiagramSum compose(const DiagramSum& Y, const DiagramSum& X, const Scalar& alpha,
                   DiagramFamily family);

// The crossing diagram in Hom(w w', w' w); `twisted` multiplies by
// (-1)^{|w|*|w'|}.
DiagramSum braiding(const Word& w, const Word& wp, bool twisted = false);

// (1/n!) sum of permutation diagrams on n filled letters, with sgn when
// `signed_` — a pair of orthogonal idempotents.
DiagramSum symmetrizer(long n, bool signed_);

// Explicit tensor over N-dimensional coordinate space: entry (t, b) is the
// matrix element between the flattened top and bottom multi-indices (digits
// little-endian by position, base N).
struct RealizedTensor {
    long bottom_len = 0;
    long top_len = 0;
    long dim = 0; // N
    std::map<std::pair<long, long>, Rat> entries;

    long bottom_span() const;
    long top_span() const;

    RealizedTensor& operator+=(const RealizedTensor& o);
    friend RealizedTensor operator*(const Rat& s, RealizedTensor t);
    bool operator==(const RealizedTensor& o) const;
};

RealizedTensor realize(const Diagram& d, long N, DiagramFamily family);
// Coefficients are evaluated at T = N first (PoleAtEvaluation may propagate).
RealizedTensor realize(const DiagramSum& s, long N, DiagramFamily family);

// Matrix product contracting Y's bottom indices against X's top indices.
RealizedTensor contract(const RealizedTensor& Y, const RealizedTensor& X);
Rat trace(const RealizedTensor& t);

// All valid matchings between the two words under the family's edge rules.
std::vector<Diagram> enumerate_diagrams(const Word& bottom, const Word& top,
                                        DiagramFamily family);

// Realizes the full diagram basis of Hom(w, w') at parameter N and reports
// whether the realizations stay linearly independent.
struct RankReport {
    bool injective = false;
    long dim_domain = 0;
    long rank = 0;
};

RankReport interp_rank_check(const Word& w, const Word& wp, long N, DiagramFamily family);

} // namespace agd
