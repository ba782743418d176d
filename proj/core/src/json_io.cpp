#include "subtour/json_io.hpp"

#include <json.hpp>
#include <string>
#include <vector>

#include "subtour/errors.hpp"
#include "subtour/rational.hpp"

namespace subtour {

namespace {

using json = nlohmann::ordered_json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json point_json(const QPoint& x) {
  json a = json::array();
  for (const Rat& r : x) a.push_back(rat_to_string(r));
  return a;
}

json vertices_json(const VertexSet& u) {
  json a = json::array();
  for (int v : u) a.push_back(v + 1);
  return a;
}

json edges_json(const EdgeSet& f) {
  json a = json::array();
  for (int e : f) a.push_back(e + 1);
  return a;
}

json graph_json(const Graph& g) {
  json j;
  j["schema"] = "graph/1";
  j["n"] = g.n;
  j["m"] = g.m();
  json edges = json::array();
  for (const Edge& e : g.edges) {
    json je;
    je["id"] = e.id + 1;
    je["u"] = e.u + 1;
    je["v"] = e.v + 1;
    je["w"] = rat_to_string(e.w);
    edges.push_back(je);
  }
  j["edges"] = edges;
  return j;
}

std::string sense_text(Sense s) {
  switch (s) {
    case Sense::LE: return "<=";
    case Sense::GE: return ">=";
    case Sense::EQ: return "=";
  }
  return "=";
}

Sense sense_from(const std::string& s) {
  if (s == "<=") return Sense::LE;
  if (s == ">=") return Sense::GE;
  if (s == "=") return Sense::EQ;
  throw ParseError("unknown sense '" + s + "'");
}

std::string tag_text(ConTag t) {
  switch (t) {
    case ConTag::NonNeg: return "nonneg";
    case ConTag::UpperOne: return "ub1";
    case ConTag::Degree: return "degree";
    case ConTag::Cut: return "cut";
    case ConTag::Subgraph: return "subgraph";
    case ConTag::Card: return "card";
  }
  return "card";
}

ConTag tag_from(const std::string& s) {
  if (s == "nonneg") return ConTag::NonNeg;
  if (s == "ub1") return ConTag::UpperOne;
  if (s == "degree") return ConTag::Degree;
  if (s == "cut") return ConTag::Cut;
  if (s == "subgraph") return ConTag::Subgraph;
  if (s == "card") return ConTag::Card;
  throw ParseError("unknown constraint tag '" + s + "'");
}

json system_json(const ConstraintSystem& sys) {
  json j;
  j["schema"] = "system/1";
  j["dim"] = sys.dim;
  json rows = json::array();
  for (const LinearConstraint& c : sys.rows) {
    json jr;
    jr["name"] = c.name;
    json terms = json::array();
    for (const auto& [e, coef] : c.coeffs)
      terms.push_back(json::array({e + 1, rat_to_string(coef)}));
    jr["coeffs"] = terms;
    jr["sense"] = sense_text(c.sense);
    jr["rhs"] = rat_to_string(c.rhs);
    jr["tag"] = tag_text(c.tag);
    if (c.tag_edge >= 0) jr["edge"] = c.tag_edge + 1;
    if (c.tag_vertex >= 0) jr["vertex"] = c.tag_vertex + 1;
    if (!c.tag_set.empty()) jr["set"] = vertices_json(c.tag_set);
    rows.push_back(jr);
  }
  j["rows"] = rows;
  return j;
}

Rat rat_field(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long long>());
  throw ParseError(where + ": expected a rational string or integer");
}

json parse_document(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(what + ": " + e.what());
  }
}

std::string locked_fail_text(LockedFail f) {
  switch (f) {
    case LockedFail::None: return "none";
    case LockedFail::SizeBound: return "size_bound";
    case LockedFail::NotTwoConnected: return "not_two_connected";
    case LockedFail::ComplementDisconnected: return "complement_disconnected";
  }
  return "none";
}

}  // namespace

std::string graph_to_json(const Graph& g) { return dump(graph_json(g)); }

std::string reduction_to_json(const Graph& reduced, const ReductionTrace& trace) {
  json j;
  j["schema"] = "reduce/1";
  switch (trace.status) {
    case ReduceStatus::Reduced: j["status"] = "reduced"; break;
    case ReduceStatus::InfeasibleBridge: j["status"] = "infeasible_bridge"; break;
    case ReduceStatus::DegenerateSmall: j["status"] = "degenerate_small"; break;
  }
  j["original"] = json{{"n", trace.orig_n}, {"m", trace.orig_m}};
  j["reduced"] = json{{"n", trace.reduced_n}, {"m", trace.reduced_m}};
  json steps = json::array();
  for (const ReductionStep& s : trace.steps) {
    json js;
    switch (s.kind) {
      case ReductionKind::DeleteLoop: js["kind"] = "delete_loop"; break;
      case ReductionKind::DeleteParallel: js["kind"] = "delete_parallel"; break;
      case ReductionKind::ContractSeries: js["kind"] = "contract_series"; break;
      case ReductionKind::SplitBlock: js["kind"] = "split_block"; break;
    }
    if (s.kept_edge >= 0) js["kept_edge"] = s.kept_edge + 1;
    if (s.removed_edge >= 0) js["removed_edge"] = s.removed_edge + 1;
    if (s.removed_vertex >= 0) js["removed_vertex"] = s.removed_vertex + 1;
    steps.push_back(js);
  }
  j["steps"] = steps;
  if (trace.status == ReduceStatus::Reduced) {
    json lift = json::array();
    for (int target : trace.lift_map)
      lift.push_back(target >= 0 ? json(target + 1) : json(nullptr));
    j["lift_map"] = lift;
    json vmap = json::array();
    for (int label : trace.vertex_map) vmap.push_back(label + 1);
    j["vertex_map"] = vmap;
    j["removed_vertices"] = vertices_json(trace.removed_vertices);
    j["reduced_graph"] = graph_json(reduced);
  }
  return dump(j);
}

std::string locked_to_json(const EnumLockedResult& result) {
  json j;
  j["schema"] = "locked/1";
  j["count"] = result.items.size();
  j["truncated"] = result.truncated;
  json items = json::array();
  for (const LockedSubgraph& h : result.items) {
    json ji;
    ji["u"] = vertices_json(h.u);
    ji["edges"] = edges_json(h.eh);
    ji["nh"] = h.nh;
    ji["mh"] = h.mh;
    items.push_back(ji);
  }
  j["items"] = items;
  return dump(j);
}

std::string system_to_json(const ConstraintSystem& sys) {
  return dump(system_json(sys));
}

ConstraintSystem system_from_json(const std::string& text) {
  const json j = parse_document(text, "system JSON");
  if (!j.is_object() || j.value("schema", std::string()) != "system/1")
    throw ParseError("system JSON: expected schema \"system/1\"");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ParseError("system JSON: missing integer \"dim\"");
  ConstraintSystem sys;
  sys.dim = j["dim"].get<int>();
  if (sys.dim < 0) throw ParseError("system JSON: negative dimension");
  if (!j.contains("rows") || !j["rows"].is_array())
    throw ParseError("system JSON: missing \"rows\" array");
  for (const json& jr : j["rows"]) {
    if (!jr.is_object()) throw ParseError("system JSON: row must be an object");
    LinearConstraint c;
    c.name = jr.value("name", std::string());
    if (!jr.contains("sense") || !jr["sense"].is_string())
      throw ParseError("system JSON: row '" + c.name + "' missing sense");
    c.sense = sense_from(jr["sense"].get<std::string>());
    if (!jr.contains("rhs"))
      throw ParseError("system JSON: row '" + c.name + "' missing rhs");
    c.rhs = rat_field(jr["rhs"], "system JSON: rhs of '" + c.name + "'");
    if (!jr.contains("coeffs") || !jr["coeffs"].is_array())
      throw ParseError("system JSON: row '" + c.name + "' missing coeffs");
    for (const json& term : jr["coeffs"]) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
        throw ParseError("system JSON: coeffs must be [edge, coefficient] pairs");
      const int edge = term[0].get<int>() - 1;
      if (edge < 0 || edge >= sys.dim)
        throw ParseError("system JSON: edge id out of range in row '" + c.name + "'");
      const Rat coef = rat_field(term[1], "system JSON: coefficient");
      if (coef != 0) c.coeffs[edge] = coef;
    }
    if (jr.contains("tag")) c.tag = tag_from(jr["tag"].get<std::string>());
    if (jr.contains("edge")) c.tag_edge = jr["edge"].get<int>() - 1;
    if (jr.contains("vertex")) c.tag_vertex = jr["vertex"].get<int>() - 1;
    if (jr.contains("set"))
      for (const json& v : jr["set"]) c.tag_set.push_back(v.get<int>() - 1);
    sys.rows.push_back(std::move(c));
  }
  return sys;
}

std::string certification_to_json(const ConstraintSystem& sys,
                                  const CertificationReport& rep) {
  json j;
  j["schema"] = "certify/1";
  j["dim"] = rep.polytope_dim;
  j["minimal"] = rep.minimal;
  json rows = json::array();
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const RowCertification& rc = rep.rows[i];
    json jr;
    jr["name"] = rc.name;
    if (i < sys.rows.size()) jr["tag"] = tag_text(sys.rows[i].tag);
    jr["verdict"] = row_verdict_name(rc.verdict);
    jr["face_dim"] = rc.face_dim;
    if (!rc.certificate.empty()) jr["certificate"] = rc.certificate;
    json wit = json::array();
    for (const QPoint& p : rc.witness) wit.push_back(point_json(p));
    jr["witness"] = wit;
    rows.push_back(jr);
  }
  j["rows"] = rows;
  return dump(j);
}

std::string bound_to_json(const BoundReport& rep) {
  json j;
  j["schema"] = "bound/1";
  switch (rep.status) {
    case LpStatus::Optimal: j["status"] = "optimal"; break;
    case LpStatus::Infeasible: j["status"] = "infeasible"; break;
    case LpStatus::Unbounded: j["status"] = "unbounded"; break;
  }
  if (rep.status == LpStatus::Optimal)
    j["bound"] = rat_to_string(rep.bound);
  else
    j["bound"] = nullptr;
  j["iterations"] = rep.iterations;
  j["converged"] = rep.converged;
  json hist = json::array();
  for (const Rat& v : rep.value_history) hist.push_back(rat_to_string(v));
  j["history"] = hist;
  json cuts = json::array();
  for (const PooledCut& c : rep.pool) {
    json jc;
    jc["u"] = vertices_json(c.u);
    jc["violation"] = rat_to_string(c.violation_when_added);
    jc["class"] = c.classification.cls == CutClass::FacetLocked
                      ? "facet_locked"
                      : "redundant_nonlocked";
    jc["fail"] = locked_fail_text(c.classification.fail);
    cuts.push_back(jc);
  }
  j["cuts"] = cuts;
  j["point"] = point_json(rep.final_point);
  return dump(j);
}

std::string decomposition_to_json(const Graph& g, const QPoint& x,
                                  const std::vector<QPoint>& members) {
  json j;
  j["schema"] = "decompose/1";
  j["n"] = g.n;
  j["integer"] = is_zero_one(x);
  j["coefficient"] = rat_to_string(Rat(1) / Rat(g.n - 1));
  j["point"] = point_json(x);
  json mem = json::array();
  for (const QPoint& p : members) mem.push_back(point_json(p));
  j["members"] = mem;
  return dump(j);
}

std::string suites_to_json(const std::vector<SuiteResult>& results) {
  json j;
  j["schema"] = "verify/1";
  json arr = json::array();
  for (const SuiteResult& r : results) {
    json jr;
    jr["suite"] = r.suite;
    jr["status"] = r.status;
    jr["checks"] = r.checks;
    jr["detail"] = r.detail;
    arr.push_back(jr);
  }
  j["results"] = arr;
  return dump(j);
}

std::string point_to_json(const QPoint& x) {
  json j;
  j["schema"] = "point/1";
  j["values"] = point_json(x);
  return dump(j);
}

QPoint point_from_json(const std::string& text, int expected_dim) {
  const json j = parse_document(text, "point JSON");
  if (!j.is_object() || j.value("schema", std::string()) != "point/1")
    throw ParseError("point JSON: expected schema \"point/1\"");
  if (!j.contains("values") || !j["values"].is_array())
    throw ParseError("point JSON: missing \"values\" array");
  QPoint x;
  for (const json& v : j["values"])
    x.push_back(rat_field(v, "point JSON: value"));
  if (expected_dim >= 0 && static_cast<int>(x.size()) != expected_dim)
    throw ParseError("point JSON: expected " + std::to_string(expected_dim) +
                     " values, found " + std::to_string(x.size()));
  return x;
}

}  // namespace subtour
