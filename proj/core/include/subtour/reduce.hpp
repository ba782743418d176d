#pragma once

#include <utility>
#include <vector>

#include "subtour/graph.hpp"

namespace subtour {

enum class ReductionKind { DeleteLoop, DeleteParallel, ContractSeries, SplitBlock };

// One preprocessing event; ids and labels always refer to the ORIGINAL graph.
struct ReductionStep {
  ReductionKind kind;
  int kept_edge = -1;      // DeleteParallel / ContractSeries: surviving edge
  int removed_edge = -1;   // deleted loop / parallel copy / contracted edge / bridge witness
  int removed_vertex = -1; // ContractSeries: merged-away endpoint; SplitBlock: cut vertex
};

enum class ReduceStatus {
  Reduced,           // simple, loopless, 2-connected, min degree >= 3
  InfeasibleBridge,  // bridge / cut vertex / disconnected: tour polytope empty
  DegenerateSmall,   // fewer than 3 vertices remain (cycles collapse here)
};

struct ReductionTrace {
  int orig_n = 0;
  int orig_m = 0;
  int reduced_n = 0;
  int reduced_m = 0;
  ReduceStatus status = ReduceStatus::Reduced;
  std::vector<ReductionStep> steps;

  // Per original edge: the reduced-graph edge id whose value it inherits, or
  // -1 when the lifted value is 0 (deleted loops and parallel copies).
  // Populated only for status == Reduced.
  std::vector<int> lift_map;
  // Per original vertex: its reduced-graph label (series-merged vertices map
  // to their survivor's label). Populated only for status == Reduced.
  std::vector<int> vertex_map;
  // Original vertices that were merged away by series contractions.
  std::vector<int> removed_vertices;
};

// Iterates: loop deletion; bridge / cut-vertex / disconnection detection
// (which empties the tour polytope and stops everything); parallel-class
// deletion (lowest edge id kept, weight = class minimum); series contraction
// at degree-2 vertices (lowest edge id kept, weight = pair sum, lower label
// survives) -- until a fixpoint, a sub-3-vertex collapse (DegenerateSmall) or
// an infeasibility witness.
std::pair<Graph, ReductionTrace> preprocess(const Graph& g);

// Pulls a point on the reduced graph back to the original edge space:
// contracted edges inherit their kept partner's value, deleted loops and
// parallel copies get 0. Requires a Reduced trace and a matching dimension.
QPoint lift_point(const ReductionTrace& trace, const QPoint& reduced_point);

}  // namespace subtour
