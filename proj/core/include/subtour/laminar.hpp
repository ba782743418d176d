#pragma once

#include <vector>

#include "subtour/graph.hpp"
#include "subtour/qpoint.hpp"

namespace subtour {

// Pairwise nested-or-disjoint over the given vertex sets.
bool is_laminar(const std::vector<VertexSet>& family);

// A laminar family over a ground set of the given size, with the ground set
// itself excluded, has at most 2*|X| - 1 members.
bool laminar_bound_check(const std::vector<VertexSet>& family, int ground_size);

// Turns a family of x-tight vertex sets (x(E(U)) = |U| - 1) into a laminar
// family of x-tight sets. Crossing pairs are resolved by adding their
// intersection and union (both tight whenever x also satisfies
// x(E(S)) <= |S| - 1 for every S, which every forest-combination point does)
// and then selecting a maximal laminar subfamily greedily by (size,
// lexicographic) order. Singletons are dropped; duplicates are removed. For
// forest-bounded x the result spans every input row modulo unit rows of
// x-zero edges (see tight_system_rank).
//
// Errors: DomainError when x has a negative entry or an input set is not
// tight; ScaleError when closure grows past an internal cap.
std::vector<VertexSet> uncross(const Graph& g, const std::vector<VertexSet>& family,
                               const QPoint& x);

// Rank of the system {incidence rows of E(U) for U in family} augmented with
// one unit row per edge e with x(e) = 0. This is the invariant quantity of
// uncross: the output's augmented rank is never below the input's, and every
// input row lies in the output's augmented span.
int tight_system_rank(const Graph& g, const std::vector<VertexSet>& family, const QPoint& x);

}  // namespace subtour
