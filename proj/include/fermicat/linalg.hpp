#pragma once

#include <vector>

#include <Eigen/Core>

#include "fermicat/rational.hpp"

namespace fermicat {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

struct RowEchelonResult {
  RatMatrix reduced;          // reduced row echelon form
  std::vector<int> pivots;    // pivot column per nonzero row
  int rank = 0;
  RatMatrix kernel;           // columns span the null space
};

// Gauss-Jordan elimination over the rationals; exact, no pivot scaling
// surprises. The kernel basis follows the standard free-column construction,
// free columns in increasing order.
RowEchelonResult row_reduce(const RatMatrix& input);

// Kronecker product, blocks of `right` scaled by entries of `left`.
RatMatrix kron(const RatMatrix& left, const RatMatrix& right);

// Exact entrywise equality, including agreement of the dimensions.
bool same_matrix(const RatMatrix& a, const RatMatrix& b);

}  // namespace fermicat
