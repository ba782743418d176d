#pragma once

#include <optional>
#include <vector>

#include "subtour/graph.hpp"

namespace subtour {

// A vertex set U whose induced subgraph H is locked in g: H is induced,
// 2-connected, 3 <= |U| <= n-1, and the subgraph carried by the remaining
// edges E \ E(U) is connected.
struct LockedSubgraph {
  VertexSet u;
  EdgeSet eh;  // induced_edges(g, u)
  int nh = 0;
  int mh = 0;
};

enum class LockedFail {
  None,
  SizeBound,               // |U| outside [3, n-1]
  NotTwoConnected,         // induced subgraph not 2-connected
  ComplementDisconnected,  // (V(E\E(U)), E\E(U)) not connected
};

struct LockedVerdict {
  bool locked = false;
  LockedFail fail = LockedFail::None;
};

// Graph-characterization test. Host graph must be simple, loopless and
// 2-connected with n >= 3 (the shape preprocess guarantees); otherwise a
// DomainError is thrown. Checks, in order: size bound, induced
// 2-connectivity, complement connectivity.
LockedVerdict is_locked(const Graph& g, const VertexSet& u);

// Independent matroid-definition test on an edge set: the cycle-matroid
// restriction M|L and the dual restriction M*|(E\L) are connected matroids
// (no proper separator S with rk(S) + rk(rest) = rk(whole)) and both have
// rank at least 2. Brute force over separators; requires m <= 20.
bool is_locked_matroid_oracle(const Graph& g, const EdgeSet& l);

// All edge sets accepted by the matroid-definition test, via a precomputed
// rank table over all 2^m edge subsets; requires m <= 15. Output sorted by
// (size, lexicographic).
std::vector<EdgeSet> locked_edge_sets_oracle_scan(const Graph& g);

struct EnumLockedResult {
  std::vector<LockedSubgraph> items;  // ordered by (|U|, lexicographic U)
  bool truncated = false;             // true when `limit` cut the list short
};

// Enumerates every locked subgraph by growing connected induced vertex sets
// (each visited once) and filtering with is_locked. Requires n <= 24.
EnumLockedResult enumerate_locked(const Graph& g,
                                  std::optional<long long> limit = std::nullopt);

// Vertex-counting criterion for complement connectivity: for a partition
// (l1, l2) of E \ E(U) into nonempty parts, returns whether
// n_H + n < n_{H u L1} + n_{H u L2}, where n_{H u Li} counts the vertices
// covered by U together with the endpoints of Li.
bool complement_connectivity_counting_check(const Graph& g, const VertexSet& u,
                                            const EdgeSet& l1, const EdgeSet& l2);

}  // namespace subtour
