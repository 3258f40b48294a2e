#include "fermicat/diagram.hpp"

namespace fermicat {

namespace {

SignWord pair_word(int left_sign, int right_sign) {
  return SignWord({static_cast<std::int8_t>(left_sign), static_cast<std::int8_t>(right_sign)});
}

}  // namespace

BoundaryMismatchError::BoundaryMismatchError(SignWord lower_top_arg, SignWord upper_bottom_arg)
    : std::runtime_error("interface mismatch: lower diagram ends in '" +
                         (lower_top_arg.empty() ? std::string("1") : lower_top_arg.str()) +
                         "' but upper diagram starts at '" +
                         (upper_bottom_arg.empty() ? std::string("1") : upper_bottom_arg.str()) + "'"),
      lower_top(std::move(lower_top_arg)),
      upper_bottom(std::move(upper_bottom_arg)) {}

OrientationMismatchError::OrientationMismatchError(const std::string& generator)
    : std::runtime_error("turning generator needs two opposite signs, got '" + generator + "'") {}

DiagramExpr DiagramExpr::identity(SignWord word) {
  SignWord bottom = word;
  SignWord top = word;
  return DiagramExpr(Kind::Identity, std::move(word), std::move(bottom), std::move(top));
}

DiagramExpr DiagramExpr::cap(int left_sign, int right_sign) {
  if (left_sign == right_sign) {
    throw OrientationMismatchError("cap(" + pair_word(left_sign, right_sign).str() + ")");
  }
  SignWord pair = pair_word(left_sign, right_sign);
  return DiagramExpr(Kind::Cap, pair, pair, SignWord());
}

DiagramExpr DiagramExpr::cup(int left_sign, int right_sign) {
  if (left_sign == right_sign) {
    throw OrientationMismatchError("cup(" + pair_word(left_sign, right_sign).str() + ")");
  }
  SignWord pair = pair_word(left_sign, right_sign);
  return DiagramExpr(Kind::Cup, pair, SignWord(), pair);
}

DiagramExpr DiagramExpr::crossing(int left_sign, int right_sign) {
  SignWord pair = pair_word(left_sign, right_sign);
  SignWord swapped = pair_word(right_sign, left_sign);
  return DiagramExpr(Kind::Crossing, pair, pair, swapped);
}

DiagramExpr DiagramExpr::compose(DiagramExpr lower, DiagramExpr upper) {
  if (lower.top() != upper.bottom()) {
    throw BoundaryMismatchError(lower.top(), upper.bottom());
  }
  DiagramExpr out(Kind::Compose, SignWord(), lower.bottom(), upper.top());
  out.first_ = std::make_shared<DiagramExpr>(std::move(lower));
  out.second_ = std::make_shared<DiagramExpr>(std::move(upper));
  return out;
}

DiagramExpr DiagramExpr::tensor(DiagramExpr left, DiagramExpr right) {
  DiagramExpr out(Kind::Tensor, SignWord(), left.bottom().concat(right.bottom()),
                  left.top().concat(right.top()));
  out.first_ = std::make_shared<DiagramExpr>(std::move(left));
  out.second_ = std::make_shared<DiagramExpr>(std::move(right));
  return out;
}

}  // namespace fermicat
