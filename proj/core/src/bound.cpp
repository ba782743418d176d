#include "subtour/bound.hpp"

#include <array>

#include <algorithm>

#include "subtour/errors.hpp"
#include "subtour/mincut.hpp"

namespace subtour {

std::optional<SeparationResult> separate(const Graph& g, const QPoint& x) {
  if (static_cast<int>(x.size()) != g.m())
    throw DomainError("point dimension must equal the edge count");
  for (const Rat& v : x)
    if (v < 0) throw DomainError("separation requires a nonnegative point");
  const CutResult cut = global_min_cut(g, x);
  if (cut.value >= 2) return std::nullopt;
  SeparationResult res;
  res.u = cut.u;
  res.violation = Rat(2) - cut.value;
  return res;
}

CutClassification classify_cut(const Graph& g, const VertexSet& u) {
  check_vertex_set(g, u);
  if (u.empty() || static_cast<int>(u.size()) >= g.n)
    throw DomainError("cut side must be nonempty and proper");
  VertexSet comp;
  {
    size_t k = 0;
    for (int v = 0; v < g.n; ++v) {
      if (k < u.size() && u[k] == v) {
        ++k;
        continue;
      }
      comp.push_back(v);
    }
  }
  CutClassification out;
  const std::array<const VertexSet*, 2> sides{&u, &comp};
  for (const VertexSet* side : sides) {
    const int s = static_cast<int>(side->size());
    if (s < 3 || s > g.n - 2) continue;
    if (is_locked(g, *side).locked) {
      out.cls = CutClass::FacetLocked;
      return out;
    }
  }
  out.cls = CutClass::RedundantNonLocked;
  const VertexSet& canon = (!u.empty() && u.front() == 0) ? u : comp;
  const int cs = static_cast<int>(canon.size());
  if (cs < 3 || cs > g.n - 2)
    out.fail = LockedFail::SizeBound;
  else
    out.fail = is_locked(g, canon).fail;
  return out;
}

BoundReport bound(const Graph& g, const QPoint& weights, std::optional<int> max_iter) {
  require_describable(g, "cutting-plane bound");
  if (static_cast<int>(weights.size()) != g.m())
    throw DomainError("weight vector dimension must equal the edge count");
  const int limit = max_iter.value_or(10 * g.m());
  if (limit <= 0) throw DomainError("iteration limit must be positive");

  ConstraintSystem sys;
  sys.dim = g.m();
  for (int e = 0; e < g.m(); ++e) sys.rows.push_back(make_nonneg(e));
  for (int e = 0; e < g.m(); ++e) sys.rows.push_back(make_ub1(e));
  for (int v = 0; v < g.n; ++v) sys.rows.push_back(make_degree(g, v, Sense::EQ));

  BoundReport rep;
  while (rep.iterations < limit) {
    const LpResult lp = lp_solve(sys, weights, LpDir::Min);
    ++rep.iterations;
    rep.status = lp.status;
    if (lp.status == LpStatus::Infeasible) return rep;
    if (lp.status == LpStatus::Unbounded)
      throw ContradictionError("box-bounded relaxation reported an unbounded LP");
    rep.bound = lp.value;
    rep.value_history.push_back(lp.value);
    rep.final_point = lp.point;
    const std::optional<SeparationResult> sep = separate(g, lp.point);
    if (!sep) {
      rep.converged = true;
      return rep;
    }
    PooledCut pc;
    pc.u = sep->u;
    pc.violation_when_added = sep->violation;
    pc.classification = classify_cut(g, sep->u);
    rep.pool.push_back(std::move(pc));
    sys.rows.push_back(make_cut(g, sep->u));
  }
  return rep;
}

}  // namespace subtour
