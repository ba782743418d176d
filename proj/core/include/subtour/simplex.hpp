#pragma once

#include "subtour/constraint.hpp"
#include "subtour/qpoint.hpp"

namespace subtour {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class LpDir { Min, Max };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat value;    // objective at the optimum (Optimal only)
  QPoint point;  // optimal point in the original variables (Optimal only)
};

// Exact two-phase primal simplex with Bland's anticycling rule. Variables
// are free unless the system contains a single-variable row forcing a
// nonnegative lower bound, in which case the x = u - v split is skipped for
// that variable. Deterministic for a fixed system ordering.
LpResult lp_solve(const ConstraintSystem& sys, const QPoint& objective, LpDir dir);

}  // namespace subtour
