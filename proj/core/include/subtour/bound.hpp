#pragma once

#include <optional>
#include <vector>

#include "subtour/constraint.hpp"
#include "subtour/graph.hpp"
#include "subtour/locked.hpp"
#include "subtour/qpoint.hpp"
#include "subtour/simplex.hpp"

namespace subtour {

struct SeparationResult {
  VertexSet u;    // violated side, canonicalized to contain vertex 0
  Rat violation;  // 2 - x(delta(U)) > 0
};

// Exact separation of the cut rows: global minimum cut under edge weights x.
// Returns the most violated cut when the minimum is below 2 (a zero-weight
// cut when the support of x is disconnected), otherwise nothing.
std::optional<SeparationResult> separate(const Graph& g, const QPoint& x);

enum class CutClass { FacetLocked, RedundantNonLocked };

struct CutClassification {
  CutClass cls = CutClass::RedundantNonLocked;
  // For RedundantNonLocked: the locked-characterization condition failing on
  // the canonical (vertex-0) side; SizeBound also covers the 3..n-2 range.
  LockedFail fail = LockedFail::None;
};

// A cut row is facet-grade when either side of {U, V\U} is a locked subgraph
// of size within [3, n-2]; otherwise it is valid but redundant in the
// irredundant description.
CutClassification classify_cut(const Graph& g, const VertexSet& u);

struct PooledCut {
  VertexSet u;
  Rat violation_when_added;
  CutClassification classification;
};

struct BoundReport {
  LpStatus status = LpStatus::Infeasible;  // of the last LP solved
  Rat bound;                               // final LP value (status Optimal)
  std::vector<Rat> value_history;          // one entry per LP solve
  int iterations = 0;                      // number of LP solves
  bool converged = false;                  // no violated cut remained
  std::vector<PooledCut> pool;
  QPoint final_point;
};

// Cutting-plane lower bound: starting from the box-and-degree system,
// repeatedly solve min weights . x and add the most violated cut until
// separation finds none or max_iter LPs have run (default 10 * m).
BoundReport bound(const Graph& g, const QPoint& weights,
                  std::optional<int> max_iter = std::nullopt);

}  // namespace subtour
