#include "subtour/describe.hpp"

#include <algorithm>
#include <map>

#include "subtour/errors.hpp"
#include "subtour/linalg.hpp"
#include "subtour/locked.hpp"

namespace subtour {

namespace {

std::vector<VertexSet> locked_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (const LockedSubgraph& ls : enumerate_locked(g).items) out.push_back(ls.u);
  return out;
}

std::vector<VertexSet> canonical_cut_sides(const Graph& g) {
  // One representative per {U, V\U}: the side containing vertex 0, every
  // nonempty proper U, ordered by (size, lexicographic).
  std::vector<VertexSet> out;
  const int rest = g.n - 1;
  for (long long mask = 0; mask < (1LL << rest); ++mask) {
    VertexSet u{0};
    for (int v = 1; v < g.n; ++v)
      if ((mask >> (v - 1)) & 1) u.push_back(v);
    if (static_cast<int>(u.size()) == g.n) continue;  // proper only
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

void push_box(const Graph& g, ConstraintSystem& sys) {
  for (int e = 0; e < g.m(); ++e) sys.rows.push_back(make_nonneg(e));
  for (int e = 0; e < g.m(); ++e) sys.rows.push_back(make_ub1(e));
}

}  // namespace

ConstraintSystem full_P(const Graph& g) {
  require_describable(g, "full description");
  if (g.n > 12) throw ScaleError("full cut enumeration limited to n <= 12");
  ConstraintSystem sys;
  sys.dim = g.m();
  push_box(g, sys);
  for (int v = 0; v < g.n; ++v) sys.rows.push_back(make_degree(g, v, Sense::EQ));
  for (const VertexSet& u : canonical_cut_sides(g)) sys.rows.push_back(make_cut(g, u));
  return sys;
}

ConstraintSystem refined_P(const Graph& g, int v0) {
  require_describable(g, "reduced description");
  if (v0 < 0 || v0 >= g.n) throw DomainError("v0 out of range");
  ConstraintSystem sys;
  sys.dim = g.m();
  push_box(g, sys);
  for (int v = 0; v < g.n; ++v)
    if (v != v0) sys.rows.push_back(make_degree(g, v, Sense::EQ));
  for (const VertexSet& u : locked_sets(g)) sys.rows.push_back(make_cut(g, u));
  sys.rows.push_back(make_card(g, Rat(g.n)));
  return sys;
}

ConstraintSystem minimal_P(const Graph& g, bool keep_ub) {
  require_describable(g, "irredundant description");
  ConstraintSystem sys;
  sys.dim = g.m();
  for (int e = 0; e < g.m(); ++e) sys.rows.push_back(make_nonneg(e));
  if (keep_ub)
    for (int e = 0; e < g.m(); ++e) sys.rows.push_back(make_ub1(e));
  for (int v = 0; v < g.n; ++v) sys.rows.push_back(make_degree(g, v, Sense::EQ));
  for (const VertexSet& u : locked_sets(g)) {
    const int s = static_cast<int>(u.size());
    if (s >= 3 && s <= g.n - 2) sys.rows.push_back(make_cut(g, u));
  }
  return sys;
}

ConstraintSystem Q_description(const Graph& g) {
  require_describable(g, "subgraph description");
  ConstraintSystem sys;
  sys.dim = g.m();
  push_box(g, sys);
  sys.rows.push_back(make_card(g, Rat(g.n)));
  for (const VertexSet& u : locked_sets(g)) sys.rows.push_back(make_subgraph(g, u));
  return sys;
}

ConstraintSystem Qprime_description(const Graph& g) {
  require_describable(g, "widened description");
  ConstraintSystem sys;
  sys.dim = g.m();
  push_box(g, sys);
  for (const VertexSet& u : locked_sets(g)) sys.rows.push_back(make_cut(g, u));
  sys.rows.push_back(make_card(g, Rat(g.n)));
  for (int v = 0; v < g.n; ++v) sys.rows.push_back(make_degree(g, v, Sense::GE));
  return sys;
}

ConstraintSystem K_description(const Graph& g) {
  require_describable(g, "spanning-forest description");
  ConstraintSystem sys;
  sys.dim = g.m();
  push_box(g, sys);
  for (const VertexSet& u : locked_sets(g)) sys.rows.push_back(make_subgraph(g, u));
  sys.rows.push_back(make_card(g, Rat(g.n - 1)));
  return sys;
}

std::string row_verdict_name(RowVerdict v) {
  switch (v) {
    case RowVerdict::Facet:
      return "Facet";
    case RowVerdict::IrredundantNonFacet:
      return "IrredundantNonFacet";
    case RowVerdict::Redundant:
      return "Redundant";
    case RowVerdict::ImpliedEquality:
      return "ImpliedEquality";
  }
  return "?";
}

namespace {

// Positive-scale normal form for duplicate detection; equalities also fix
// the sign of the leading coefficient.
std::pair<int, std::pair<std::map<int, Rat>, Rat>> dup_key(const LinearConstraint& c) {
  std::map<int, Rat> coeffs = c.coeffs;
  Rat rhs = c.rhs;
  Sense sense = c.sense;
  if (sense == Sense::GE) {
    for (auto& [id, v] : coeffs) v = -v;
    rhs = -rhs;
    sense = Sense::LE;
  }
  if (!coeffs.empty()) {
    Rat lead = coeffs.begin()->second;
    if (sense == Sense::LE && lead < 0) lead = -lead;  // only positive scaling is sound
    if (lead != 0 && lead != 1) {
      for (auto& [id, v] : coeffs) v /= lead;
      rhs /= lead;
    }
  }
  return {static_cast<int>(sense), {coeffs, rhs}};
}

std::vector<QPoint> spanning_witness(const std::vector<QPoint>& tight) {
  std::vector<QPoint> picked;
  for (const QPoint& p : tight) {
    std::vector<QPoint> trial = picked;
    trial.push_back(p);
    if (picked.empty() || affine_rank(trial) > affine_rank(picked)) picked.push_back(p);
  }
  return picked;
}

}  // namespace

CertificationReport certify(const Graph& g, const ConstraintSystem& sys) {
  if (sys.dim != g.m())
    throw DomainError("system dimension does not match the graph's edge count");
  const std::vector<QPoint> verts = enumerate_vertices(sys);
  if (verts.empty()) throw DomainError("cannot certify an empty polytope");

  CertificationReport rep;
  rep.polytope_dim = affine_rank(verts);

  std::map<std::pair<int, std::pair<std::map<int, Rat>, Rat>>, int> seen;
  std::vector<int> duplicate_of(sys.rows.size(), -1);
  for (int i = 0; i < static_cast<int>(sys.rows.size()); ++i) {
    const auto key = dup_key(sys.rows[static_cast<size_t>(i)]);
    auto [it, inserted] = seen.emplace(key, i);
    if (!inserted) duplicate_of[static_cast<size_t>(i)] = it->second;
  }

  int eq_rows = 0;
  RatMatrix eq_mat;
  for (int i = 0; i < static_cast<int>(sys.rows.size()); ++i) {
    const LinearConstraint& c = sys.rows[static_cast<size_t>(i)];
    RowCertification rc;
    rc.name = c.name;

    std::vector<QPoint> tight;
    for (const QPoint& v : verts)
      if (eval_lhs(c, v) == c.rhs) tight.push_back(v);
    rc.face_dim = tight.empty() ? -1 : affine_rank(tight);

    if (duplicate_of[static_cast<size_t>(i)] >= 0) {
      rc.verdict = RowVerdict::Redundant;
      rc.certificate =
          "duplicate of " +
          sys.rows[static_cast<size_t>(duplicate_of[static_cast<size_t>(i)])].name;
      rep.rows.push_back(std::move(rc));
      continue;
    }

    if (c.sense == Sense::EQ) {
      ++eq_rows;
      RatRow aug(static_cast<size_t>(sys.dim) + 1, Rat(0));
      for (const auto& [id, v] : c.coeffs) aug[static_cast<size_t>(id)] = v;
      aug[static_cast<size_t>(sys.dim)] = c.rhs;
      eq_mat.push_back(std::move(aug));
      const RedundancyCheck red = is_redundant(sys, i);
      rc.verdict = red.redundant ? RowVerdict::Redundant : RowVerdict::ImpliedEquality;
      rc.certificate = red.certificate;
      rep.rows.push_back(std::move(rc));
      continue;
    }

    if (tight.size() == verts.size()) {
      rc.verdict = RowVerdict::ImpliedEquality;
    } else if (rc.face_dim == rep.polytope_dim - 1) {
      rc.verdict = RowVerdict::Facet;
      rc.witness = spanning_witness(tight);
    } else {
      const RedundancyCheck red = is_redundant(sys, i);
      rc.verdict = red.redundant ? RowVerdict::Redundant : RowVerdict::IrredundantNonFacet;
      rc.certificate = red.certificate;
      if (!red.redundant) rc.witness = spanning_witness(tight);
    }
    rep.rows.push_back(std::move(rc));
  }

  bool minimal = matrix_rank(eq_mat) == eq_rows;
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const RowCertification& rc = rep.rows[i];
    if (rc.verdict == RowVerdict::Redundant) minimal = false;
    if (sys.rows[i].sense != Sense::EQ && rc.verdict != RowVerdict::Facet) minimal = false;
  }
  rep.minimal = minimal;
  return rep;
}

}  // namespace subtour
