#pragma once

#include <string>
#include <vector>

#include "subtour/bound.hpp"
#include "subtour/constraint.hpp"
#include "subtour/describe.hpp"
#include "subtour/graph.hpp"
#include "subtour/locked.hpp"
#include "subtour/qpoint.hpp"
#include "subtour/reduce.hpp"
#include "subtour/verify.hpp"

namespace subtour {

// JSON documents carry a top-level "schema" field ("<name>/1"); vertices and
// edge ids are 1-based; rationals are strings ("3/2", "-1", "0"). Output is
// deterministic (fixed key order, sorted containers, two-space indent).

std::string graph_to_json(const Graph& g);

// The reduced graph is embedded only for a successful reduction.
std::string reduction_to_json(const Graph& reduced, const ReductionTrace& trace);

std::string locked_to_json(const EnumLockedResult& result);

std::string system_to_json(const ConstraintSystem& sys);
ConstraintSystem system_from_json(const std::string& text);

std::string certification_to_json(const ConstraintSystem& sys,
                                  const CertificationReport& rep);

std::string bound_to_json(const BoundReport& rep);

std::string decomposition_to_json(const Graph& g, const QPoint& x,
                                  const std::vector<QPoint>& members);

std::string suites_to_json(const std::vector<SuiteResult>& results);

std::string point_to_json(const QPoint& x);
// Accepts {"schema":"point/1","values":[...]} with rational strings or
// integers; enforces the expected dimension when expected_dim >= 0.
QPoint point_from_json(const std::string& text, int expected_dim);

}  // namespace subtour
