#pragma once

#include <string>
#include <vector>

#include "subtour/graph.hpp"

namespace subtour {

// One named invariant suite executed against a host graph.
//
//   status  "pass"    every executed check held
//           "fail"    a check found a counterexample (quoted in `detail`)
//           "skipped" the graph is beyond this suite's scale guards, so
//                     nothing was executed
//
// `checks` counts the individual assertions that actually ran. A suite may
// pass while noting in `detail` that some sub-ranges were skipped for scale.
struct SuiteResult {
  std::string suite;
  std::string status;
  long long checks = 0;
  std::string detail;
};

// Canonical suite names, in canonical order:
//   lemma2.1  vertex-counting criterion for complement connectivity
//   lemma2.2  graph characterization == matroid definition of locked sets
//   lemma2.3  full and reduced tour-relaxation descriptions agree
//   lemma2.4  inclusion chain and integer extreme points of the relaxations
//   thm1.1    cut inequalities of the complete-graph relaxation are facets
//             exactly for 2 <= |U| <= n-2
//   thm2.6    extreme-point decomposition and union-condition averages
//   thm2.10   the subgraph description is minimal (all facets, right dims)
const std::vector<std::string>& suite_names();

bool is_suite_name(const std::string& name);

// Runs one suite. `suite` must be a canonical name (DomainError otherwise).
SuiteResult run_suite(const Graph& g, const std::string& suite);

// Runs one suite or, for selector "all", every suite in canonical order.
std::vector<SuiteResult> run_suites(const Graph& g, const std::string& selector);

}  // namespace subtour
