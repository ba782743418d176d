#include <doctest.h>

#include <random>

#include "subtour/errors.hpp"
#include "subtour/linalg.hpp"

using namespace subtour;

namespace {

RatMatrix mat(const std::vector<std::vector<int>>& rows) {
  RatMatrix a;
  for (const auto& r : rows) {
    RatRow row;
    for (int v : r) row.push_back(Rat(v));
    a.push_back(row);
  }
  return a;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank of hand matrices") {
  CHECK(matrix_rank({}) == 0);
  CHECK(matrix_rank(mat({{0, 0}, {0, 0}})) == 0);
  CHECK(matrix_rank(mat({{1, 2}, {2, 4}})) == 1);
  CHECK(matrix_rank(mat({{1, 2}, {3, 4}})) == 2);
  CHECK(matrix_rank(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);  // row3 = 2*row2 - row1
  // Fraction-exact: a matrix that misbehaves under floating point.
  RatMatrix tiny = {{Rat(1, 3), Rat(1, 7)}, {Rat(2, 3), Rat(2, 7)}};
  CHECK(matrix_rank(tiny) == 1);
}

TEST_CASE("rref produces identity pivots and reports pivot columns") {
  std::vector<int> pivots;
  RatMatrix r = rref(mat({{2, 4, 6}, {1, 3, 5}}), &pivots);
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(r[0] == RatRow{Rat(1), Rat(0), Rat(-1)});
  CHECK(r[1] == RatRow{Rat(0), Rat(1), Rat(2)});
}

TEST_CASE("null space has complementary dimension and annihilates the matrix") {
  RatMatrix a = mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  std::vector<QPoint> ns = null_space(a);
  REQUIRE(ns.size() == 1);  // 3 columns, rank 2
  for (const auto& row : a) {
    Rat s = 0;
    for (size_t j = 0; j < row.size(); ++j) s += row[j] * ns[0][j];
    CHECK(s == 0);
  }
  CHECK(null_space(mat({{1, 0}, {0, 1}})).empty());
}

TEST_CASE("solve_linear finds a solution exactly when consistent") {
  QPoint x;
  CHECK(solve_linear(mat({{1, 1}, {1, -1}}), {Rat(3), Rat(1)}, x));
  CHECK(x == QPoint{Rat(2), Rat(1)});
  // Inconsistent: x + y = 1 and x + y = 2.
  CHECK(!solve_linear(mat({{1, 1}, {1, 1}}), {Rat(1), Rat(2)}, x));
  // Underdetermined stays consistent.
  CHECK(solve_linear(mat({{1, 1, 1}}), {Rat(6)}, x));
  Rat s = x[0] + x[1] + x[2];
  CHECK(s == 6);
}

TEST_CASE("affine rank: points, segments, simplices") {
  CHECK_THROWS_AS(affine_rank({}), DomainError);
  CHECK(affine_rank({{Rat(1), Rat(2)}}) == 0);
  CHECK(affine_rank({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}}) == 1);
  CHECK(affine_rank({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
}

TEST_CASE("in_row_span agrees with a rank computation on random systems") {
  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 50; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 2 + static_cast<int>(rng() % 4);
    RatMatrix a(rows, RatRow(cols));
    for (auto& r : a)
      for (auto& v : r) v = Rat(static_cast<int>(rng() % 7) - 3);
    RatRow probe(cols);
    for (auto& v : probe) v = Rat(static_cast<int>(rng() % 7) - 3);
    RatMatrix b = a;
    b.push_back(probe);
    const bool oracle = matrix_rank(b) == matrix_rank(a);
    CHECK(in_row_span(a, probe) == oracle);
  }
}

}  // TEST_SUITE
