#include "fermicat/linalg.hpp"

#include <algorithm>

namespace fermicat {

RowEchelonResult row_reduce(const RatMatrix& input) {
  RowEchelonResult out;
  out.reduced = input;
  RatMatrix& m = out.reduced;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();

  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
    Eigen::Index candidate = -1;
    for (Eigen::Index r = pivot_row; r < rows; ++r) {
      if (!m(r, col).is_zero()) {
        candidate = r;
        break;
      }
    }
    if (candidate < 0) {
      continue;
    }
    if (candidate != pivot_row) {
      m.row(candidate).swap(m.row(pivot_row));
    }
    const Rational inv = Rational(1) / m(pivot_row, col);
    for (Eigen::Index c = col; c < cols; ++c) {
      m(pivot_row, c) *= inv;
    }
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == pivot_row || m(r, col).is_zero()) {
        continue;
      }
      const Rational factor = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) {
        m(r, c) -= factor * m(pivot_row, c);
      }
    }
    out.pivots.push_back(static_cast<int>(col));
    ++pivot_row;
  }
  out.rank = static_cast<int>(out.pivots.size());

  std::vector<int> free_cols;
  free_cols.reserve(static_cast<std::size_t>(cols) - out.pivots.size());
  for (Eigen::Index col = 0; col < cols; ++col) {
    if (!std::binary_search(out.pivots.begin(), out.pivots.end(), static_cast<int>(col))) {
      free_cols.push_back(static_cast<int>(col));
    }
  }
  out.kernel = RatMatrix::Zero(cols, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const int free_col = free_cols[k];
    out.kernel(free_col, static_cast<Eigen::Index>(k)) = Rational(1);
    for (std::size_t r = 0; r < out.pivots.size(); ++r) {
      out.kernel(out.pivots[r], static_cast<Eigen::Index>(k)) =
          -m(static_cast<Eigen::Index>(r), free_col);
    }
  }
  return out;
}

RatMatrix kron(const RatMatrix& left, const RatMatrix& right) {
  RatMatrix out = RatMatrix::Zero(left.rows() * right.rows(), left.cols() * right.cols());
  for (Eigen::Index i = 0; i < left.rows(); ++i) {
    for (Eigen::Index j = 0; j < left.cols(); ++j) {
      if (left(i, j).is_zero()) {
        continue;
      }
      for (Eigen::Index k = 0; k < right.rows(); ++k) {
        for (Eigen::Index l = 0; l < right.cols(); ++l) {
          out(i * right.rows() + k, j * right.cols() + l) = left(i, j) * right(k, l);
        }
      }
    }
  }
  return out;
}

}  // namespace fermicat

namespace fermicat {

bool same_matrix(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      if (!(a(r, c) == b(r, c))) return false;
  return true;
}

}  // namespace fermicat
