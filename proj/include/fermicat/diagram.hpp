#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fermicat/sign_word.hpp"

namespace fermicat {

// Raised when two vertically composed diagrams do not share an interface
// word. Carries both words so callers can report them.
struct BoundaryMismatchError : std::runtime_error {
  BoundaryMismatchError(SignWord lower_top, SignWord upper_bottom);
  SignWord lower_top;
  SignWord upper_bottom;
};

// Raised when a turning generator is given two equal signs.
struct OrientationMismatchError : std::runtime_error {
  explicit OrientationMismatchError(const std::string& generator);
};

// A syntactic diagram built from identity strands, turns, crossings, vertical
// composition (bottom to top) and horizontal juxtaposition (left to right).
// Boundary words are computed at construction and interfaces are checked.
class DiagramExpr {
 public:
  enum class Kind {
    Identity,   // parallel strands labelled by a word
    Cap,        // a pair of opposite strands turning around downward ( n shape )
    Cup,        // a pair of opposite strands created upward ( u shape )
    Crossing,   // two strands crossing
    Compose,    // vertical stacking, first below second
    Tensor,     // horizontal juxtaposition, first left of second
  };

  static DiagramExpr identity(SignWord word);
  static DiagramExpr cap(int left_sign, int right_sign);
  static DiagramExpr cup(int left_sign, int right_sign);
  static DiagramExpr crossing(int left_sign, int right_sign);
  static DiagramExpr compose(DiagramExpr lower, DiagramExpr upper);
  static DiagramExpr tensor(DiagramExpr left, DiagramExpr right);

  Kind kind() const { return kind_; }
  const SignWord& bottom() const { return bottom_; }
  const SignWord& top() const { return top_; }

  // Generator payload: the word of an identity, or the two signs of a
  // cap/cup/crossing in left-to-right order.
  const SignWord& generator_word() const { return word_; }

  const DiagramExpr& first() const { return *first_; }
  const DiagramExpr& second() const { return *second_; }

 private:
  DiagramExpr(Kind kind, SignWord word, SignWord bottom, SignWord top)
      : kind_(kind), word_(std::move(word)), bottom_(std::move(bottom)), top_(std::move(top)) {}

  Kind kind_;
  SignWord word_;
  SignWord bottom_;
  SignWord top_;
  std::shared_ptr<const DiagramExpr> first_;
  std::shared_ptr<const DiagramExpr> second_;
};

}  // namespace fermicat
