#pragma once

#include <string>
#include <vector>

#include "subtour/constraint.hpp"
#include "subtour/graph.hpp"
#include "subtour/polytope.hpp"

namespace subtour {

// Full tour-relaxation description: nonnegativity and unit bounds for every
// edge, degree-two equalities, and one cut row per canonical {U, V\U} pair
// (representative side contains vertex 0). Requires n <= 12.
ConstraintSystem full_P(const Graph& g);

// The reduced description: box rows, degree equalities for every vertex
// except v0, cut rows only for locked subgraphs, and the cardinality row
// x(E) = n.
ConstraintSystem refined_P(const Graph& g, int v0);

// The irredundant tour-relaxation core: nonnegativity, degree equalities and
// cut rows for locked U with 3 <= |U| <= n-2. Unit bounds are kept by
// default because dropping them changes the feasible set on small graphs;
// certification then reports their per-instance status.
ConstraintSystem minimal_P(const Graph& g, bool keep_ub = true);

// Box rows, cardinality x(E) = n, and one subgraph row x(E(U)) <= |U|-1 per
// locked subgraph.
ConstraintSystem Q_description(const Graph& g);

// The widened system: box rows, cut rows for locked subgraphs, cardinality
// x(E) = n, and degree-at-least-two rows for every vertex.
ConstraintSystem Qprime_description(const Graph& g);

// Spanning-forest/bases polytope: box rows, subgraph rows for locked
// subgraphs, and cardinality x(E) = n-1.
ConstraintSystem K_description(const Graph& g);

enum class RowVerdict { Facet, IrredundantNonFacet, Redundant, ImpliedEquality };

std::string row_verdict_name(RowVerdict v);

struct RowCertification {
  std::string name;
  RowVerdict verdict = RowVerdict::Redundant;
  int face_dim = -1;             // affine dimension of the tight face
  std::vector<QPoint> witness;   // affinely independent tight vertices spanning the face
  std::string certificate;       // LP or duplicate evidence for Redundant rows
};

struct CertificationReport {
  int polytope_dim = -1;
  std::vector<RowCertification> rows;
  bool minimal = false;  // no redundant rows, all inequalities facets, equalities independent
};

// Classifies every row geometrically: exact duplicates of an earlier row are
// Redundant; inequalities tight at every vertex are ImpliedEquality; faces of
// dimension dim-1 are Facet; remaining rows are split by the LP redundancy
// test. Equality rows are ImpliedEquality when irredundant. Requires the
// polytope to be nonempty and within vertex-enumeration scale.
CertificationReport certify(const Graph& g, const ConstraintSystem& sys);

}  // namespace subtour
