#include "fermicat/morphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace fermicat {

namespace {

using TermKey = std::pair<PlanarMatching, BubbleCount>;

std::vector<MorphismTerm> merge_terms(std::vector<MorphismTerm> terms) {
  std::map<TermKey, Rational> merged;
  for (auto& term : terms) {
    merged[{std::move(term.matching), term.bubbles}] += term.coeff;
  }
  std::vector<MorphismTerm> out;
  out.reserve(merged.size());
  for (auto& [key, coeff] : merged) {
    if (!coeff.is_zero()) {
      out.push_back({key.first, key.second, coeff});
    }
  }
  return out;
}

// Coordinates of a term list in the bubble basis made of counterclockwise
// powers only, obtained by expanding clockwise = identity - counterclockwise.
std::map<TermKey, Rational> reduced_coordinates(const Morphism& m) {
  std::map<TermKey, Rational> out;
  // expand(k, m): one clockwise bubble at a time.
  for (const auto& term : m.terms()) {
    std::vector<std::pair<BubbleCount, Rational>> frontier = {{term.bubbles, term.coeff}};
    while (!frontier.empty()) {
      auto [bubbles, coeff] = frontier.back();
      frontier.pop_back();
      if (bubbles.clockwise == 0) {
        auto& slot = out[{term.matching, bubbles}];
        slot += coeff;
        continue;
      }
      BubbleCount dropped{bubbles.clockwise - 1, bubbles.counterclockwise};
      BubbleCount traded{bubbles.clockwise - 1, bubbles.counterclockwise + 1};
      frontier.push_back({dropped, coeff});
      frontier.push_back({traded, -coeff});
    }
  }
  std::erase_if(out, [](const auto& entry) { return entry.second.is_zero(); });
  return out;
}

}  // namespace

Morphism::Morphism(SignWord bottom, SignWord top, std::optional<int> source,
                   std::vector<MorphismTerm> terms)
    : bottom_(std::move(bottom)),
      top_(std::move(top)),
      source_(source),
      terms_(merge_terms(std::move(terms))) {}

Morphism Morphism::zero(SignWord bottom, SignWord top, std::optional<int> source) {
  return Morphism(std::move(bottom), std::move(top), source, {});
}

Morphism Morphism::scaled(const Rational& factor) const {
  std::vector<MorphismTerm> terms = terms_;
  for (auto& term : terms) {
    term.coeff *= factor;
  }
  return Morphism(bottom_, top_, source_, std::move(terms));
}

Morphism Morphism::plus(const Morphism& rhs) const {
  if (bottom_ != rhs.bottom_ || top_ != rhs.top_ || source_ != rhs.source_) {
    throw std::invalid_argument("cannot add maps with different boundary data");
  }
  std::vector<MorphismTerm> terms = terms_;
  terms.insert(terms.end(), rhs.terms_.begin(), rhs.terms_.end());
  return Morphism(bottom_, top_, source_, std::move(terms));
}

Morphism Morphism::renormalized() const {
  return Morphism(bottom_, top_, source_, terms_);
}

bool equal_morphisms(const Morphism& lhs, const Morphism& rhs) {
  if (lhs.bottom() != rhs.bottom() || lhs.top() != rhs.top() || lhs.source() != rhs.source()) {
    return false;
  }
  return reduced_coordinates(lhs) == reduced_coordinates(rhs);
}

}  // namespace fermicat
