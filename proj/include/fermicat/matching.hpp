#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "fermicat/sign_word.hpp"

namespace fermicat {

// One strand endpoint on the boundary of the diagram strip.
struct Endpoint {
  enum class Side : std::int8_t { Bottom = 0, Top = 1 };

  Side side;
  int position;  // 1-based within the boundary word

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
  friend std::strong_ordering operator<=>(const Endpoint&, const Endpoint&) = default;
};

// A crossing-free pairing of all boundary points of a strip diagram between
// two sign words. Arcs joining two bottom points or two top points must pair
// opposite letters (a strand turning around); arcs joining bottom to top must
// pair equal letters (a strand passing through).
class PlanarMatching {
 public:
  PlanarMatching() = default;
  PlanarMatching(SignWord bottom, SignWord top,
                 std::vector<std::pair<Endpoint, Endpoint>> arcs);

  static PlanarMatching identity(const SignWord& word);

  // The deterministic normal-form representative between two words that bound
  // a nonzero diagram: the identity matching when the words agree; otherwise
  // both words are folded down to their common reduced core by repeatedly
  // turning the rightmost adjacent opposite pair around, and the surviving
  // letters are joined in order. Throws std::invalid_argument when no
  // orientation-consistent pairing exists.
  static PlanarMatching canonical(const SignWord& bottom, const SignWord& top);

  const SignWord& bottom() const { return bottom_; }
  const SignWord& top() const { return top_; }
  const std::vector<std::pair<Endpoint, Endpoint>>& arcs() const { return arcs_; }

  bool sign_valid() const;
  bool planar() const;

  friend bool operator==(const PlanarMatching&, const PlanarMatching&) = default;
  friend std::strong_ordering operator<=>(const PlanarMatching&, const PlanarMatching&) = default;

 private:
  SignWord bottom_;
  SignWord top_;
  // Each arc stored with its endpoints in boundary-cycle order and the whole
  // list sorted, so equal matchings compare equal structurally.
  std::vector<std::pair<Endpoint, Endpoint>> arcs_;
};

// True when some crossing-free, orientation-consistent pairing between the
// two words exists. Decided by eliminating adjacent opposite letters on the
// combined boundary cycle.
bool matching_exists(const SignWord& bottom, const SignWord& top);

}  // namespace fermicat
