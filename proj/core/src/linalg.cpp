#include "subtour/linalg.hpp"

#include "subtour/errors.hpp"

namespace subtour {

namespace {

// In-place forward elimination to row echelon form; returns pivot columns.
std::vector<int> echelon(RatMatrix& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rat f = a[i][c] / a[r][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int matrix_rank(RatMatrix a) { return static_cast<int>(echelon(a).size()); }

RatMatrix rref(RatMatrix a, std::vector<int>* pivot_cols) {
  const std::vector<int> pivots = echelon(a);
  // Back substitution + pivot normalization.
  for (size_t k = pivots.size(); k-- > 0;) {
    const size_t r = k;
    const size_t c = static_cast<size_t>(pivots[k]);
    const Rat inv = a[r][c];
    for (size_t j = c; j < a[r].size(); ++j) a[r][j] /= inv;
    for (size_t i = 0; i < r; ++i) {
      if (a[i][c] == 0) continue;
      const Rat f = a[i][c];
      for (size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
  }
  a.resize(pivots.size(), a.empty() ? RatRow() : RatRow(a[0].size(), Rat(0)));
  if (pivot_cols) *pivot_cols = pivots;
  return a;
}

std::vector<QPoint> null_space(const RatMatrix& a) {
  if (a.empty()) return {};
  const size_t cols = a[0].size();
  std::vector<int> pivots;
  const RatMatrix r = rref(a, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<QPoint> basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    QPoint v(cols, Rat(0));
    v[free_c] = 1;
    for (size_t k = 0; k < pivots.size(); ++k)
      v[static_cast<size_t>(pivots[k])] = -r[k][free_c];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve_linear(const RatMatrix& a, const QPoint& b, QPoint& out) {
  if (a.size() != b.size()) throw DomainError("solve_linear: row count mismatch");
  if (a.empty()) {
    out.clear();
    return true;
  }
  const size_t cols = a[0].size();
  RatMatrix aug(a.size(), RatRow(cols + 1));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots;
  const RatMatrix r = rref(std::move(aug), &pivots);
  for (size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == static_cast<int>(cols)) return false;  // 0 = 1 row
  out.assign(cols, Rat(0));
  for (size_t k = 0; k < pivots.size(); ++k)
    out[static_cast<size_t>(pivots[k])] = r[k][cols];
  return true;
}

int affine_rank(const std::vector<QPoint>& points) {
  if (points.empty()) throw DomainError("affine_rank: empty point list");
  RatMatrix diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    RatRow d(points[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  if (diffs.empty()) return 0;
  return matrix_rank(std::move(diffs));
}

bool in_row_span(const RatMatrix& a, const RatRow& v) {
  RatMatrix m = a;
  const int base = matrix_rank(m);
  m.push_back(v);
  return matrix_rank(std::move(m)) == base;
}

}  // namespace subtour
