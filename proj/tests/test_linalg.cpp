#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "fermicat/linalg.hpp"
#include "fermicat/rational.hpp"

using fermicat::RatMatrix;
using fermicat::Rational;
using fermicat::RowEchelonResult;

namespace {

RatMatrix from_ints(int rows, int cols, const std::vector<int>& entries) {
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = Rational(entries[static_cast<std::size_t>(r * cols + c)]);
  return m;
}

RatMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  RatMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      const int num = static_cast<int>(rng() % 7) - 3;
      const int den = 1 + static_cast<int>(rng() % 3);
      m(r, c) = Rational(num, den);
    }
  return m;
}

bool is_zero(const RatMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("row reduction of pinned matrices") {
  SUBCASE("invertible") {
    const RatMatrix m = from_ints(2, 2, {1, 2, 3, 4});
    const RowEchelonResult r = fermicat::row_reduce(m);
    CHECK(r.rank == 2);
    CHECK(r.pivots == std::vector<int>{0, 1});
    CHECK(fermicat::same_matrix(r.reduced, from_ints(2, 2, {1, 0, 0, 1})));
    CHECK(r.kernel.cols() == 0);
  }
  SUBCASE("rank one") {
    const RatMatrix m = from_ints(2, 2, {1, 2, 2, 4});
    const RowEchelonResult r = fermicat::row_reduce(m);
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<int>{0});
    RatMatrix reduced = from_ints(2, 2, {1, 2, 0, 0});
    CHECK(fermicat::same_matrix(r.reduced, reduced));
    REQUIRE(r.kernel.cols() == 1);
    CHECK(r.kernel(0, 0) == Rational(-2));
    CHECK(r.kernel(1, 0) == Rational(1));
  }
  SUBCASE("wide with a fraction pivot") {
    const RatMatrix m = from_ints(1, 3, {0, 2, 6});
    const RowEchelonResult r = fermicat::row_reduce(m);
    CHECK(r.rank == 1);
    CHECK(r.pivots == std::vector<int>{1});
    CHECK(r.reduced(0, 1) == Rational(1));
    CHECK(r.reduced(0, 2) == Rational(3));
    CHECK(r.kernel.cols() == 2);
  }
  SUBCASE("zero matrix") {
    const RatMatrix m = RatMatrix::Constant(2, 3, Rational(0));
    const RowEchelonResult r = fermicat::row_reduce(m);
    CHECK(r.rank == 0);
    CHECK(r.kernel.cols() == 3);
    CHECK(fermicat::same_matrix(r.kernel, RatMatrix::Identity(3, 3)));
  }
}

TEST_CASE("row reduction properties on random matrices") {
  std::mt19937_64 rng(24680);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % 5);
    const RatMatrix m = random_matrix(rng, rows, cols);
    const RowEchelonResult r = fermicat::row_reduce(m);

    CHECK(r.rank + r.kernel.cols() == cols);
    CHECK(static_cast<int>(r.pivots.size()) == r.rank);
    if (r.kernel.cols() > 0) CHECK(is_zero(m * r.kernel));

    // pivot columns of the reduced form are unit vectors in pivot order
    for (int i = 0; i < r.rank; ++i) {
      for (int row = 0; row < rows; ++row) {
        CHECK(r.reduced(row, r.pivots[static_cast<std::size_t>(i)]) ==
              Rational(row == i ? 1 : 0));
      }
      if (i > 0) CHECK(r.pivots[static_cast<std::size_t>(i - 1)] < r.pivots[static_cast<std::size_t>(i)]);
    }

    // reducing twice changes nothing
    CHECK(fermicat::same_matrix(fermicat::row_reduce(r.reduced).reduced, r.reduced));

    // kernel columns are linearly independent
    if (r.kernel.cols() > 0)
      CHECK(fermicat::row_reduce(r.kernel).rank == r.kernel.cols());
  }
}

TEST_CASE("block product dimensions and entries") {
  const RatMatrix a = from_ints(2, 2, {1, 2, 3, 4});
  const RatMatrix b = from_ints(2, 2, {0, 1, 1, 0});
  const RatMatrix k = fermicat::kron(a, b);
  REQUIRE(k.rows() == 4);
  REQUIRE(k.cols() == 4);
  CHECK(k(0, 0) == Rational(0));
  CHECK(k(0, 1) == Rational(1));
  CHECK(k(0, 3) == Rational(2));
  CHECK(k(1, 0) == Rational(1));
  CHECK(k(3, 2) == Rational(4));
  CHECK(k(2, 1) == Rational(3));

  SUBCASE("mixed shapes and the product rule") {
    std::mt19937_64 rng(112233);
    for (int trial = 0; trial < 20; ++trial) {
      const RatMatrix p = random_matrix(rng, 2, 3);
      const RatMatrix q = random_matrix(rng, 3, 2);
      const RatMatrix u = random_matrix(rng, 2, 2);
      const RatMatrix v = random_matrix(rng, 2, 3);
      // (p (x) u)(q (x) v) = pq (x) uv
      CHECK(fermicat::same_matrix(fermicat::kron(p, u) * fermicat::kron(q, v),
                                  fermicat::kron(RatMatrix(p * q), RatMatrix(u * v))));
    }
  }
}

TEST_CASE("matrix equality is exact and shape aware") {
  const RatMatrix a = from_ints(2, 2, {1, 2, 3, 4});
  RatMatrix b = a;
  CHECK(fermicat::same_matrix(a, b));
  b(1, 1) = Rational(4, 2);  // reduces to 2, no longer the 4 in `a`
  CHECK_FALSE(fermicat::same_matrix(a, b));
  b(1, 1) = Rational(8, 2);  // reduces back to 4
  CHECK(fermicat::same_matrix(a, b));
  CHECK_FALSE(fermicat::same_matrix(a, from_ints(2, 3, {1, 2, 0, 3, 4, 0})));
}
