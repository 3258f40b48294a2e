#pragma once

#include <optional>
#include <string>

#include <Eigen/Core>

#include "fermicat/rational.hpp"
#include "fermicat/sign_word.hpp"

namespace fermicat {

using Mat2 = Eigen::Matrix<Rational, 2, 2>;

// A basis state of the two-dimensional state space, or the zero vector.
// level 0 is the vacuum, level 1 the occupied state.
struct FockKet {
  std::optional<int> level;

  bool is_zero() const { return !level.has_value(); }

  friend bool operator==(const FockKet&, const FockKet&) = default;
};

// Applies the word's operator product to the vacuum, rightmost letter first.
// '+' raises 0 -> 1, '-' lowers 1 -> 0; any other transition kills the state.
FockKet apply_to_vacuum(const SignWord& word);

// <apply_to_vacuum(a), apply_to_vacuum(b)>; 0 or 1 since both are basis kets.
int inner_product(const SignWord& a, const SignWord& b);

// 2x2 matrix of a single letter in the (|0>, |1>) basis, acting on column
// vectors: '+' sends |0> to |1>, '-' sends |1> to |0>.
Mat2 letter_matrix(int sign);

// Product of the letter matrices in word order (leftmost letter leftmost in
// the product, so the rightmost letter acts first on kets).
Mat2 matrix_rep(const SignWord& word);

// An operator written in normal order: creation letters before annihilation
// letters. The four coefficients multiply 1, the creation operator, the
// annihilation operator and the occupation-number product, in that order.
struct NormalForm {
  Rational one;
  Rational create;
  Rational annihilate;
  Rational number;

  bool is_zero() const;
  Mat2 matrix() const;
  std::string str() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Rewrites the word's operator product into normal order using the algebra
// relations: swap an annihilator past a creator at the price of a scalar term,
// kill repeated creators/annihilators.
NormalForm normal_order(const SignWord& word);

// Eigenvalue of the shifted occupation operator on |level>: -1/2 on the
// vacuum, +1/2 on the occupied state. Throws std::domain_error otherwise.
Rational hamiltonian_eigenvalue(int level);

}  // namespace fermicat
