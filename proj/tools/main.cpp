// Command-line front door: reduce, locked, describe, certify, bound,
// decompose, verify. JSON on stdout is the default machine format ("--lp"
// where meaningful); identical invocations produce byte-identical output.
//
// Exit codes: 0 success; 1 usage, parse, or domain error; 2 infeasible /
// empty polytope (bridge found, infeasible LP); 3 desk-scale limit exceeded;
// 4 a certified structural guarantee failed (or a verify suite failed).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "subtour/bound.hpp"
#include "subtour/decompose.hpp"
#include "subtour/describe.hpp"
#include "subtour/errors.hpp"
#include "subtour/graph.hpp"
#include "subtour/json_io.hpp"
#include "subtour/locked.hpp"
#include "subtour/lp_format.hpp"
#include "subtour/rational.hpp"
#include "subtour/reduce.hpp"
#include "subtour/simplex.hpp"
#include "subtour/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitEmpty = 2;
constexpr int kExitScale = 3;
constexpr int kExitContradiction = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw subtour::ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

subtour::QPoint load_weights(const std::string& path, int m) {
  std::ifstream in(path);
  if (!in) throw subtour::ParseError("cannot open weights file '" + path + "'");
  subtour::QPoint w;
  std::string tok;
  while (in >> tok) w.push_back(subtour::parse_rational(tok));
  if (static_cast<int>(w.size()) != m)
    throw subtour::ParseError("weights file '" + path + "' holds " +
                              std::to_string(w.size()) + " values; the graph has " +
                              std::to_string(m) + " edges");
  return w;
}

subtour::ConstraintSystem build_kind(const subtour::Graph& g, const std::string& kind,
                                     int v0, bool keep_ub) {
  if (kind == "P-full") return subtour::full_P(g);
  if (kind == "P-refined") return subtour::refined_P(g, v0);
  if (kind == "P-minimal") return subtour::minimal_P(g, keep_ub);
  if (kind == "Q") return subtour::Q_description(g);
  if (kind == "Qprime") return subtour::Qprime_description(g);
  if (kind == "K") return subtour::K_description(g);
  throw subtour::DomainError("unknown description kind '" + kind + "'");
}

struct Options {
  std::string command;
  std::string graph_path;
  std::string kind = "P-full";
  std::string suite = "all";
  std::string weights_path;
  std::string point_path;
  int v0 = 1;  // 1-based
  bool keep_ub = true;
  bool want_lp = false;
  bool want_json = false;
  bool oracle = false;
  std::optional<long long> limit;
  std::optional<int> max_iter;
};

int run(const Options& opt) {
  using namespace subtour;
  const Graph g = load_graph_file(opt.graph_path);

  if (opt.command == "reduce") {
    const auto [reduced, trace] = preprocess(g);
    std::cout << reduction_to_json(reduced, trace);
    return trace.status == ReduceStatus::InfeasibleBridge ? kExitEmpty : kExitOk;
  }

  if (opt.command == "locked") {
    EnumLockedResult result;
    if (opt.oracle) {
      std::vector<EdgeSet> sets = locked_edge_sets_oracle_scan(g);
      if (opt.limit && static_cast<long long>(sets.size()) > *opt.limit) {
        sets.resize(static_cast<size_t>(*opt.limit));
        result.truncated = true;
      }
      for (const EdgeSet& eh : sets) {
        LockedSubgraph h;
        h.eh = eh;
        h.u = vertex_support(g, eh);
        h.nh = static_cast<int>(h.u.size());
        h.mh = static_cast<int>(eh.size());
        result.items.push_back(std::move(h));
      }
    } else {
      result = enumerate_locked(g, opt.limit);
    }
    std::cout << locked_to_json(result);
    return kExitOk;
  }

  if (opt.command == "describe") {
    const ConstraintSystem sys = build_kind(g, opt.kind, opt.v0 - 1, opt.keep_ub);
    if (opt.want_lp) {
      std::optional<QPoint> objective;
      if (!opt.weights_path.empty()) objective = load_weights(opt.weights_path, g.m());
      std::cout << emit_lp(sys, objective);
    } else {
      if (!opt.weights_path.empty())
        throw DomainError("--weights with describe requires --lp");
      std::cout << system_to_json(sys);
    }
    return kExitOk;
  }

  if (opt.command == "certify") {
    const ConstraintSystem sys = build_kind(g, opt.kind, opt.v0 - 1, opt.keep_ub);
    if (lp_solve(sys, zero_point(sys.dim), LpDir::Min).status == LpStatus::Infeasible) {
      std::cerr << "error: the description is infeasible (empty polytope)\n";
      return kExitEmpty;
    }
    const CertificationReport rep = certify(g, sys);
    std::cout << certification_to_json(sys, rep);
    return kExitOk;
  }

  if (opt.command == "bound") {
    QPoint w = opt.weights_path.empty() ? QPoint(static_cast<size_t>(g.m()), Rat(1))
                                        : load_weights(opt.weights_path, g.m());
    const BoundReport rep = bound(g, w, opt.max_iter);
    std::cout << bound_to_json(rep);
    return rep.status == LpStatus::Infeasible ? kExitEmpty : kExitOk;
  }

  if (opt.command == "decompose") {
    const QPoint x = point_from_json(read_file(opt.point_path), g.m());
    const std::vector<QPoint> members = decompose_extreme_point(g, x);
    std::cout << decomposition_to_json(g, x, members);
    return kExitOk;
  }

  if (opt.command == "verify") {
    const std::vector<SuiteResult> results = run_suites(g, opt.suite);
    std::cout << suites_to_json(results);
    bool any_fail = false;
    bool all_skipped = !results.empty();
    for (const SuiteResult& r : results) {
      if (r.status == "fail") any_fail = true;
      if (r.status != "skipped") all_skipped = false;
    }
    if (any_fail) return kExitContradiction;
    if (all_skipped) return kExitScale;
    return kExitOk;
  }

  throw DomainError("unknown subcommand '" + opt.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact rational machinery for the subtour relaxation of "
               "undirected graphs"};
  app.require_subcommand(1);

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("graph", opt.graph_path, "graph file (edge-list format)")
        ->required();
    sub->add_flag("--json", opt.want_json, "emit JSON (the default)");
  };

  CLI::App* reduce = app.add_subcommand("reduce", "preprocess: loops, bridges, parallels, series");
  add_graph(reduce);

  CLI::App* locked = app.add_subcommand("locked", "enumerate locked subgraphs");
  add_graph(locked);
  long long limit_val = -1;
  locked->add_option("--limit", limit_val, "keep at most this many items");
  locked->add_flag("--oracle", opt.oracle,
                   "use the exhaustive matroid-definition scan instead of the "
                   "graph characterization");

  const std::vector<std::string> kinds = {"P-full",  "P-refined", "P-minimal",
                                          "Q",       "Qprime",    "K"};
  CLI::App* describe = app.add_subcommand("describe", "print a constraint system");
  add_graph(describe);
  describe->add_option("--kind", opt.kind, "description kind")
      ->check(CLI::IsMember(kinds))
      ->capture_default_str();
  describe->add_option("--v0", opt.v0, "base vertex for P-refined (1-based)")
      ->capture_default_str();
  describe->add_flag("--keep-ub,!--drop-ub", opt.keep_ub,
                     "keep unit upper bounds in P-minimal");
  describe->add_flag("--lp", opt.want_lp, "emit LP format instead of JSON");
  describe->add_option("--weights", opt.weights_path,
                       "objective weights file (with --lp)");

  CLI::App* certify = app.add_subcommand("certify", "certify a description row by row");
  add_graph(certify);
  certify->add_option("--kind", opt.kind, "description kind")
      ->check(CLI::IsMember(kinds))
      ->capture_default_str();
  certify->add_option("--v0", opt.v0, "base vertex for P-refined (1-based)")
      ->capture_default_str();
  certify->add_flag("--keep-ub,!--drop-ub", opt.keep_ub,
                    "keep unit upper bounds in P-minimal");

  CLI::App* bound = app.add_subcommand("bound", "cutting-plane lower bound");
  add_graph(bound);
  bound->add_option("--weights", opt.weights_path,
                    "edge weights file (whitespace-separated rationals in edge "
                    "order; default: all ones)");
  int max_iter_val = -1;
  bound->add_option("--max-iter", max_iter_val, "LP iteration cap (default 10m)");

  CLI::App* decompose = app.add_subcommand("decompose",
                                           "decompose an extreme point of the "
                                           "cardinality-n polytope");
  add_graph(decompose);
  decompose->add_option("--point", opt.point_path, "point JSON file")->required();

  CLI::App* verify = app.add_subcommand("verify", "run invariant suites");
  add_graph(verify);
  verify->add_option("--suite", opt.suite, "suite name or 'all'")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  opt.command = app.get_subcommands().front()->get_name();
  if (limit_val >= 0) opt.limit = limit_val;
  if (max_iter_val >= 0) opt.max_iter = max_iter_val;
  if (opt.command == "verify" && opt.suite != "all" &&
      !subtour::is_suite_name(opt.suite)) {
    std::cerr << "error: unknown suite '" << opt.suite << "' (expected 'all'";
    for (const std::string& s : subtour::suite_names()) std::cerr << ", '" << s << "'";
    std::cerr << ")\n";
    return kExitUsage;
  }

  try {
    return run(opt);
  } catch (const subtour::ScaleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitScale;
  } catch (const subtour::ContradictionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitContradiction;
  } catch (const subtour::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const subtour::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
