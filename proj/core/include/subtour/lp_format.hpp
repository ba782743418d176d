#pragma once

#include <optional>
#include <string>

#include "subtour/constraint.hpp"
#include "subtour/qpoint.hpp"

namespace subtour {

// Renders the system as a deterministic LP-format text document: a Minimize
// objective (zero when absent), named Subject To rows, a Bounds section fed
// by the box rows (NonNeg/UpperOne tags), and End. Rationals that have an
// exact finite decimal form are written as decimals; any other row is written
// scaled to integers, with the original fractions kept in a comment line.
std::string emit_lp(const ConstraintSystem& sys,
                    const std::optional<QPoint>& objective = std::nullopt);

}  // namespace subtour
