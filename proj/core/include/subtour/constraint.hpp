#pragma once

#include <map>
#include <string>
#include <vector>

#include "subtour/graph.hpp"
#include "subtour/qpoint.hpp"
#include "subtour/rational.hpp"

namespace subtour {

enum class Sense { LE, GE, EQ };

// Structured origin of a constraint row.
enum class ConTag {
  NonNeg,    // x(e) >= 0
  UpperOne,  // x(e) <= 1
  Degree,    // x(delta(v)) = 2 (or >= 2 in the widened system)
  Cut,       // x(delta(U)) >= 2
  Subgraph,  // x(E(U)) <= |U| - 1
  Card,      // x(E) = c
};

struct LinearConstraint {
  std::string name;
  std::map<int, Rat> coeffs;  // sparse: edge id -> coefficient, no zero entries
  Sense sense = Sense::LE;
  Rat rhs;
  ConTag tag = ConTag::Card;
  int tag_edge = -1;    // NonNeg / UpperOne
  int tag_vertex = -1;  // Degree
  VertexSet tag_set;    // Cut / Subgraph
};

struct ConstraintSystem {
  int dim = 0;  // ambient dimension (edge count)
  std::vector<LinearConstraint> rows;
};

Rat eval_lhs(const LinearConstraint& c, const QPoint& x);
bool satisfies(const LinearConstraint& c, const QPoint& x);

struct MembershipResult {
  bool member = false;
  int first_violated = -1;  // row index in system order, -1 when member
};

// Exact satisfaction check, reporting the first violated row in system order.
MembershipResult membership(const ConstraintSystem& sys, const QPoint& x);

// Row builders shared by the description constructors. Names are stable:
// nonneg_e<k> / ub1_e<k> with k the 1-based edge id, deg_<v> / deg_ge_<v> and
// cut_<v1>_<v2>_... / sub_<v1>_<v2>_... with 1-based vertex labels, card.
LinearConstraint make_nonneg(int edge);
LinearConstraint make_ub1(int edge);
LinearConstraint make_degree(const Graph& g, int v, Sense sense);
LinearConstraint make_cut(const Graph& g, const VertexSet& u);
LinearConstraint make_subgraph(const Graph& g, const VertexSet& u);
LinearConstraint make_card(const Graph& g, const Rat& rhs);

}  // namespace subtour
