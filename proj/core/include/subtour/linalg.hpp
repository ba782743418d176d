#pragma once

#include <vector>

#include "subtour/qpoint.hpp"

namespace subtour {

using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>;

// Rank over Q by fraction-exact Gaussian elimination. Takes a copy.
int matrix_rank(RatMatrix a);

// Reduced row echelon form; fills pivot_cols (ascending) when non-null.
RatMatrix rref(RatMatrix a, std::vector<int>* pivot_cols = nullptr);

// Basis of the null space {x : a x = 0}; one vector per free column.
std::vector<QPoint> null_space(const RatMatrix& a);

// One solution of A x = b if the system is consistent (returns false
// otherwise). A and b must have the same number of rows.
bool solve_linear(const RatMatrix& a, const QPoint& b, QPoint& out);

// Dimension of the affine hull of the given points (0 for a single point).
// Throws DomainError on an empty list.
int affine_rank(const std::vector<QPoint>& points);

// True iff v lies in the row span of a.
bool in_row_span(const RatMatrix& a, const RatRow& v);

}  // namespace subtour
