#pragma once

#include <string>
#include <vector>

#include "subtour/constraint.hpp"
#include "subtour/qpoint.hpp"

namespace subtour {

// Exact extreme-point set of a bounded polytope, deduplicated and sorted
// lexicographically. Equalities are eliminated first (null-space
// parametrization); the inequalities are then inserted incrementally into a
// bounding box obtained by coordinate LPs.
//
// Errors: ScaleError when dim > 12 or row count > 60; DomainError when the
// feasible set is unbounded.
std::vector<QPoint> enumerate_vertices(const ConstraintSystem& sys);

// Dimension of the affine hull of a nonempty point list.
int affine_dim(const std::vector<QPoint>& points);

// Affine dimension of the face {x in sys : c tight}; -1 when that face is
// empty. c must be valid for sys (checked by LP); the face of a bounded
// polytope is the convex hull of the vertices lying on it.
int face_dim(const ConstraintSystem& sys, const LinearConstraint& c);

struct RedundancyCheck {
  bool redundant = false;
  std::string certificate;  // LP bound(s) proving or refuting implication
};

// Whether dropping rows[row_index] leaves the feasible set unchanged,
// decided by optimizing the row's violation over the remaining system.
RedundancyCheck is_redundant(const ConstraintSystem& sys, int row_index);

}  // namespace subtour
