#pragma once

#include "subtour/graph.hpp"
#include "subtour/qpoint.hpp"

namespace subtour {

struct CutResult {
  VertexSet u;  // canonical side: contains vertex 0
  Rat value;
};

// Exact global minimum cut under nonnegative edge weights w (indexed by edge
// id; loops contribute nothing). Requires n >= 2 and w >= 0.
//
// For n <= 12 the cut is found by exhaustive scan and ties are broken by the
// lexicographically smallest canonical side (the side containing vertex 0);
// beyond that a deterministic Stoer-Wagner pass is used and only the value is
// canonical. Disconnected weight support is fine (value 0).
CutResult global_min_cut(const Graph& g, const QPoint& w);

// The two strategies, exposed for cross-checks.
CutResult min_cut_exhaustive(const Graph& g, const QPoint& w);  // n <= 20 guard
CutResult min_cut_stoer_wagner(const Graph& g, const QPoint& w);

}  // namespace subtour
