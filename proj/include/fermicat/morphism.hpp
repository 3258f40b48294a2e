#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "fermicat/matching.hpp"
#include "fermicat/rational.hpp"

namespace fermicat {

// Closed loops of an endomorphism of the empty word, kept as a formal
// multiset by winding sense. Only the linear relation "clockwise plus
// counterclockwise equals the identity" is ever applied to them.
struct BubbleCount {
  int clockwise = 0;
  int counterclockwise = 0;

  bool empty() const { return clockwise == 0 && counterclockwise == 0; }

  friend bool operator==(const BubbleCount&, const BubbleCount&) = default;
  friend std::strong_ordering operator<=>(const BubbleCount&, const BubbleCount&) = default;
};

struct MorphismTerm {
  PlanarMatching matching;
  BubbleCount bubbles;
  Rational coeff;
};

// A linear combination of planar matchings (with formal bubbles) between two
// fixed boundary words, optionally pinned to a boundary region label. Kept in
// a sorted, merged normal layout: unique (matching, bubbles) keys, nonzero
// coefficients.
class Morphism {
 public:
  Morphism(SignWord bottom, SignWord top, std::optional<int> source,
           std::vector<MorphismTerm> terms);

  static Morphism zero(SignWord bottom, SignWord top, std::optional<int> source);

  const SignWord& bottom() const { return bottom_; }
  const SignWord& top() const { return top_; }
  std::optional<int> source() const { return source_; }
  const std::vector<MorphismTerm>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  Morphism scaled(const Rational& factor) const;
  Morphism plus(const Morphism& rhs) const;

  // Re-merges and re-sorts the term list; the fixed point of normalization.
  Morphism renormalized() const;

 private:
  SignWord bottom_;
  SignWord top_;
  std::optional<int> source_;
  std::vector<MorphismTerm> terms_;
};

// Exact equality of the represented maps: boundary data must agree and the
// two term lists must coincide after expanding every clockwise bubble through
// the two-sided loop relation (clockwise = identity - counterclockwise).
bool equal_morphisms(const Morphism& lhs, const Morphism& rhs);

}  // namespace fermicat
