#pragma once

#include <vector>

#include "subtour/errors.hpp"
#include "subtour/rational.hpp"

namespace subtour {

// Dense exact rational vector indexed by edge id (or by free coordinate in
// solver-internal spaces).
using QPoint = std::vector<Rat>;

inline Rat dot(const QPoint& a, const QPoint& b) {
  if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// Sum of x over the given index set (indices must be in range).
inline Rat sum_over(const QPoint& x, const std::vector<int>& indices) {
  Rat s = 0;
  for (int i : indices) {
    if (i < 0 || static_cast<size_t>(i) >= x.size())
      throw DomainError("sum_over: index out of range");
    s += x[static_cast<size_t>(i)];
  }
  return s;
}

// {i : x[i] == value}, ascending.
inline std::vector<int> support_eq(const QPoint& x, const Rat& value) {
  std::vector<int> out;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] == value) out.push_back(static_cast<int>(i));
  return out;
}

// {i : x[i] != 0}, ascending.
inline std::vector<int> support(const QPoint& x) {
  std::vector<int> out;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) out.push_back(static_cast<int>(i));
  return out;
}

inline bool is_zero_one(const QPoint& x) {
  for (const Rat& v : x)
    if (v != 0 && v != 1) return false;
  return true;
}

inline QPoint zero_point(int dim) { return QPoint(static_cast<size_t>(dim), Rat(0)); }

}  // namespace subtour
