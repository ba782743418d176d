#pragma once

#include <vector>

#include "subtour/graph.hpp"
#include "subtour/qpoint.hpp"
#include "subtour/rational.hpp"

namespace subtour {

// Intersection condition: no edge carries value 1 in every family member.
bool satisfies_IC(const std::vector<QPoint>& fam);

// Union condition: every edge carries value 0 in some family member.
bool satisfies_UC(const std::vector<QPoint>& fam);

// For a family of n bases-polytope members: forms s = (1/(n-1)) * sum and
// tests s against the cardinality-n description. When the family satisfies
// UC the trivial and cardinality rows of s are guaranteed (a violation there
// would falsify the guarantee and raises ContradictionError); the subgraph
// rows can genuinely fail, so the full membership verdict is returned.
bool verify_sum_in_Q(const Graph& g, const std::vector<QPoint>& fam);

struct WeightedTree {
  EdgeSet tree;
  Rat lambda;
};

// Writes a bases-polytope member as an exact convex combination of at most m
// spanning trees. Each round picks a spanning tree on the minimal face of
// the remaining mass (support-confined, containing every full-value edge,
// meeting every tight subgraph row's quota) and extracts the largest
// removable multiple.
std::vector<WeightedTree> caratheodory_split(const Graph& g, const QPoint& y);

// Decomposes an extreme point x of the cardinality-n polytope into n
// bases-polytope members averaging to x with IC: a Hamilton circuit yields
// its n Hamilton paths; a fractional extreme point yields a spanning tree T
// of (V, {e : x(e) >= 1/(n-1)}) containing all value-1 edges plus n-1 convex
// combinations packed from the split of ((n-1)x - T)/(n-1).
//
// Errors: DomainError when x is not a member or not extreme (the witness
// convex split is included in the message); ContradictionError if any step
// guaranteed by the structure theory fails.
std::vector<QPoint> decompose_extreme_point(const Graph& g, const QPoint& x);

// 0-1 vector whose support is a spanning connected subgraph with every
// vertex of degree exactly 2.
bool is_hamilton_circuit(const Graph& g, const QPoint& x);

}  // namespace subtour
