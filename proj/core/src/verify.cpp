#include "subtour/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "subtour/constraint.hpp"
#include "subtour/decompose.hpp"
#include "subtour/describe.hpp"
#include "subtour/errors.hpp"
#include "subtour/locked.hpp"
#include "subtour/polytope.hpp"
#include "subtour/qpoint.hpp"

namespace subtour {

namespace {

std::string vertex_set_text(const VertexSet& u) {
  std::string s = "{";
  for (size_t i = 0; i < u.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(u[i] + 1);
  }
  return s + "}";
}

std::string edge_set_text(const EdgeSet& f) {
  std::string s = "{";
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i] + 1);
  }
  return s + "}";
}

SuiteResult make_skip(const std::string& suite, const std::string& why) {
  SuiteResult r;
  r.suite = suite;
  r.status = "skipped";
  r.checks = 0;
  r.detail = why;
  return r;
}

// Accumulates check outcomes; the first counterexample freezes the detail.
struct Tally {
  long long checks = 0;
  bool failed = false;
  std::string detail;

  bool expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && !failed) {
      failed = true;
      detail = what;
    }
    return ok;
  }

  SuiteResult result(const std::string& suite, const std::string& note) const {
    SuiteResult r;
    r.suite = suite;
    r.status = failed ? "fail" : "pass";
    r.checks = checks;
    r.detail = failed ? detail : note;
    return r;
  }
};

// Simple + loopless + 2-connected + minimum degree 3: the shape produced by
// preprocessing, under which the minimal-description statements are made.
bool reduced_shape(const Graph& g) {
  if (!is_describable(g)) return false;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) < 3) return false;
  return true;
}

// --- vertex-counting criterion for complement connectivity ------------------
//
// For every induced 2-connected subgraph H (vertex set U) and every split of
// the remaining edges into nonempty parts (L1, L2), the counting bound
// n_H + n < n_{H u L1} + n_{H u L2} holds exactly when L1 and L2 share a
// vertex outside U. A disconnected complement is also split along one of its
// components, for which the bound must fail.
SuiteResult suite_lemma21(const Graph& g) {
  if (g.n > 10)
    return make_skip("lemma2.1", "needs n <= 10 for subset enumeration");
  Tally t;
  const long long budget = 200000;
  long long skipped_subgraphs = 0;
  long long subgraphs = 0;
  for (int mask = 1; mask < (1 << g.n) && !t.failed; ++mask) {
    VertexSet u;
    for (int v = 0; v < g.n; ++v)
      if (mask & (1 << v)) u.push_back(v);
    if (static_cast<int>(u.size()) < 3 || static_cast<int>(u.size()) > g.n - 1)
      continue;
    const EdgeSet eh = induced_edges(g, u);
    if (!is_two_connected(g, eh)) continue;
    if (vertex_support(g, eh) != u) continue;  // H must carry exactly U
    const EdgeSet comp = edge_complement(g, eh);
    if (comp.empty()) continue;
    ++subgraphs;

    if (!is_connected_subgraph(g, comp)) {
      // Component split: no shared vertex at all, so the bound must fail.
      const std::vector<VertexSet> comps = connected_components(g, comp);
      EdgeSet l1, l2;
      for (int e : comp) {
        const bool in0 = std::binary_search(comps[0].begin(), comps[0].end(),
                                            g.edges[static_cast<size_t>(e)].u);
        (in0 ? l1 : l2).push_back(e);
      }
      if (!l1.empty() && !l2.empty())
        t.expect(!complement_connectivity_counting_check(g, u, l1, l2),
                 "counting bound accepted a component split of a disconnected "
                 "complement: U=" +
                     vertex_set_text(u));
    }

    const int c = static_cast<int>(comp.size());
    if (c - 1 > 14 || t.checks + (1LL << (c - 1)) > budget) {
      ++skipped_subgraphs;
      continue;
    }
    for (long long pm = 0; pm < (1LL << (c - 1)) && !t.failed; ++pm) {
      EdgeSet l1{comp[0]}, l2;
      for (int i = 1; i < c; ++i)
        (((pm >> (i - 1)) & 1) != 0 ? l1 : l2).push_back(comp[i]);
      if (l2.empty()) continue;
      const bool counting = complement_connectivity_counting_check(g, u, l1, l2);
      const VertexSet s1 = vertex_support(g, l1);
      const VertexSet s2 = vertex_support(g, l2);
      bool shared_outside = false;
      for (size_t i = 0, j = 0; i < s1.size() && j < s2.size();) {
        if (s1[i] < s2[j]) {
          ++i;
        } else if (s2[j] < s1[i]) {
          ++j;
        } else {
          if (!std::binary_search(u.begin(), u.end(), s1[i])) {
            shared_outside = true;
            break;
          }
          ++i;
          ++j;
        }
      }
      t.expect(counting == shared_outside,
               "counting bound mismatch: U=" + vertex_set_text(u) +
                   " L1=" + edge_set_text(l1) + " L2=" + edge_set_text(l2) +
                   " bound=" + (counting ? "true" : "false") +
                   " shared-vertex-outside-U=" + (shared_outside ? "true" : "false"));
    }
  }
  if (t.checks == 0)
    return make_skip("lemma2.1", "no induced 2-connected subgraph within budget");
  std::string note = std::to_string(t.checks) + " partition checks over " +
                     std::to_string(subgraphs) + " subgraphs";
  if (skipped_subgraphs > 0)
    note += " (" + std::to_string(skipped_subgraphs) + " subgraphs skipped for scale)";
  return t.result("lemma2.1", note);
}

// --- graph characterization vs matroid definition ---------------------------
SuiteResult suite_lemma22(const Graph& g) {
  if (g.m() > 15)
    return make_skip("lemma2.2", "needs m <= 15 for the exhaustive matroid scan");
  if (g.n > 24) return make_skip("lemma2.2", "needs n <= 24");
  const std::vector<EdgeSet> oracle = locked_edge_sets_oracle_scan(g);
  const EnumLockedResult enumd = enumerate_locked(g);
  std::vector<EdgeSet> graph_route;
  graph_route.reserve(enumd.items.size());
  for (const LockedSubgraph& h : enumd.items) graph_route.push_back(h.eh);
  auto key = [](const EdgeSet& a, const EdgeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::sort(graph_route.begin(), graph_route.end(), key);

  Tally t;
  t.expect(graph_route.size() == oracle.size(),
           "count mismatch: graph characterization found " +
               std::to_string(graph_route.size()) + " locked sets, matroid scan " +
               std::to_string(oracle.size()));
  if (!t.failed) {
    for (size_t i = 0; i < oracle.size() && !t.failed; ++i)
      t.expect(graph_route[i] == oracle[i],
               "locked-set mismatch at position " + std::to_string(i) +
                   ": graph says " + edge_set_text(graph_route[i]) +
                   ", matroid says " + edge_set_text(oracle[i]));
  }
  return t.result("lemma2.2", "both definitions agree on " +
                                  std::to_string(oracle.size()) + " locked sets");
}

// --- full vs reduced description ---------------------------------------------
SuiteResult suite_lemma23(const Graph& g) {
  std::vector<QPoint> vp;
  try {
    vp = enumerate_vertices(full_P(g));
  } catch (const ScaleError& e) {
    return make_skip("lemma2.3", std::string("scale: ") + e.what());
  }
  Tally t;
  for (int v0 = 0; v0 < g.n && !t.failed; ++v0) {
    std::vector<QPoint> vr;
    try {
      vr = enumerate_vertices(refined_P(g, v0));
    } catch (const ScaleError& e) {
      return make_skip("lemma2.3", std::string("scale: ") + e.what());
    }
    t.expect(vr == vp, "vertex sets differ between the full and the reduced "
                       "description with base vertex " +
                           std::to_string(v0 + 1) + " (" +
                           std::to_string(vp.size()) + " vs " +
                           std::to_string(vr.size()) + " vertices)");
  }
  return t.result("lemma2.3", "identical vertex sets (" + std::to_string(vp.size()) +
                                  " vertices) for all " + std::to_string(g.n) +
                                  " base vertices");
}

// --- inclusion chain and integer extreme points ------------------------------
SuiteResult suite_lemma24(const Graph& g) {
  if (g.m() - 1 > 8)
    return make_skip("lemma2.4", "needs m <= 9 for vertex enumeration");
  const ConstraintSystem qd = Q_description(g);
  const ConstraintSystem qpd = Qprime_description(g);
  std::vector<QPoint> pv, qv, qpv;
  try {
    pv = enumerate_vertices(full_P(g));
    qv = enumerate_vertices(qd);
    qpv = enumerate_vertices(qpd);
  } catch (const ScaleError& e) {
    return make_skip("lemma2.4", std::string("scale: ") + e.what());
  }

  Tally t;
  for (const QPoint& x : pv) {
    t.expect(membership(qd, x).member,
             "tour-relaxation vertex escapes the subgraph description");
    t.expect(membership(qpd, x).member,
             "tour-relaxation vertex escapes the widened description");
  }
  for (const QPoint& x : qv)
    t.expect(membership(qpd, x).member,
             "subgraph-description vertex escapes the widened description");

  std::set<QPoint> tours;
  for (const EdgeSet& h : hamilton_circuits(g)) tours.insert(char_vector(g, h));
  auto integer_vertices_are_tours = [&](const std::vector<QPoint>& vs,
                                        const std::string& which) {
    long long found = 0;
    for (const QPoint& x : vs) {
      if (!is_zero_one(x)) continue;
      ++found;
      t.expect(tours.count(x) == 1, "0-1 vertex of " + which +
                                        " is not a Hamilton circuit indicator");
    }
    t.expect(found == static_cast<long long>(tours.size()),
             which + " has " + std::to_string(found) + " 0-1 vertices but the graph has " +
                 std::to_string(tours.size()) + " Hamilton circuits");
    for (const QPoint& x : tours)
      t.expect(std::binary_search(vs.begin(), vs.end(), x),
               "Hamilton circuit indicator is not a vertex of " + which);
  };
  integer_vertices_are_tours(qv, "the subgraph description");
  integer_vertices_are_tours(qpv, "the widened description");

  return t.result("lemma2.4",
                  "chain holds; " + std::to_string(tours.size()) +
                      " Hamilton circuits = 0-1 vertices on both descriptions");
}

// --- complete-graph cut facets ------------------------------------------------
SuiteResult suite_thm11(const Graph& g) {
  if (!is_simple(g) || has_loops(g) || g.m() != g.n * (g.n - 1) / 2)
    return make_skip("thm1.1", "host must be a complete graph");
  ConstraintSystem sys;
  std::vector<QPoint> verts;
  try {
    sys = full_P(g);
    verts = enumerate_vertices(sys);
  } catch (const ScaleError& e) {
    return make_skip("thm1.1", std::string("scale: ") + e.what());
  }
  if (verts.empty()) return make_skip("thm1.1", "empty polytope");
  const int dim = affine_dim(verts);

  Tally t;
  for (int mask = 1; mask < (1 << g.n) && !t.failed; mask += 2) {  // 0 in U
    VertexSet u;
    for (int v = 0; v < g.n; ++v)
      if (mask & (1 << v)) u.push_back(v);
    if (static_cast<int>(u.size()) > g.n - 1) continue;
    const int fd = face_dim(sys, make_cut(g, u));
    const bool facet = fd == dim - 1;
    const bool expected =
        static_cast<int>(u.size()) >= 2 && static_cast<int>(u.size()) <= g.n - 2;
    t.expect(facet == expected,
             "cut U=" + vertex_set_text(u) + " has face dimension " +
                 std::to_string(fd) + " of " + std::to_string(dim) +
                 (expected ? "; expected a facet" : "; expected a non-facet"));
  }
  return t.result("thm1.1", "cut faces are facets exactly for 2 <= |U| <= n-2 (" +
                                std::to_string(t.checks) + " cuts)");
}

// --- decomposition of extreme points and union-condition averages ------------
SuiteResult suite_thm26(const Graph& g) {
  if (g.m() - 1 > 8)
    return make_skip("thm2.6", "needs m <= 9 for vertex enumeration");
  const ConstraintSystem qd = Q_description(g);
  const ConstraintSystem kd = K_description(g);
  std::vector<QPoint> qv;
  try {
    qv = enumerate_vertices(qd);
  } catch (const ScaleError& e) {
    return make_skip("thm2.6", std::string("scale: ") + e.what());
  }

  Tally t;
  for (const QPoint& x : qv) {
    const std::vector<QPoint> fam = decompose_extreme_point(g, x);
    t.expect(static_cast<int>(fam.size()) == g.n,
             "decomposition size is " + std::to_string(fam.size()) + ", expected " +
                 std::to_string(g.n));
    QPoint total = zero_point(g.m());
    for (const QPoint& f : fam)
      for (int e = 0; e < g.m(); ++e) total[static_cast<size_t>(e)] += f[static_cast<size_t>(e)];
    bool exact = true;
    for (int e = 0; e < g.m(); ++e)
      if (total[static_cast<size_t>(e)] != x[static_cast<size_t>(e)] * Rat(g.n - 1))
        exact = false;
    t.expect(exact, "decomposition members do not average back to the vertex");
    t.expect(satisfies_IC(fam), "decomposition violates the intersection condition");
    for (const QPoint& f : fam)
      t.expect(membership(kd, f).member,
               "decomposition member is not in the spanning-forest polytope");
    // Re-averaging the decomposition family must land exactly on the vertex,
    // a polytope member by construction.
    t.expect(verify_sum_in_Q(g, fam),
             "re-averaged decomposition family left the polytope");
  }

  // Union-condition direction: averages of UC spanning-tree n-tuples always
  // satisfy the trivial and cardinality rows.  Subgraph rows carry no such
  // guarantee (most UC families overfill some locked subgraph), so full
  // membership is tallied but not required.
  std::vector<EdgeSet> trees;
  try {
    trees = spanning_trees(g);
  } catch (const ScaleError& e) {
    return make_skip("thm2.6", std::string("scale: ") + e.what());
  }
  std::mt19937_64 rng(0x5eed2026ULL);
  int made = 0;
  int inside = 0;
  long long attempts = 0;
  while (made < 100 && attempts < 100000) {
    ++attempts;
    std::vector<QPoint> fam;
    fam.reserve(static_cast<size_t>(g.n));
    for (int i = 0; i < g.n; ++i)
      fam.push_back(char_vector(g, trees[static_cast<size_t>(rng() % trees.size())]));
    if (!satisfies_UC(fam)) continue;
    ++made;
    bool guarantee = true;
    std::string why;
    try {
      if (verify_sum_in_Q(g, fam)) ++inside;
    } catch (const ContradictionError& e) {
      guarantee = false;
      why = e.what();
    }
    t.expect(guarantee, "union-condition guarantee failed: " + why);
  }
  t.expect(made == 100, "could only sample " + std::to_string(made) +
                            " union-condition tree families in " +
                            std::to_string(attempts) + " attempts");

  return t.result("thm2.6", std::to_string(qv.size()) +
                                " extreme points decomposed; 100 union-condition "
                                "tree families kept the box and cardinality rows (" +
                                std::to_string(inside) + " fully inside)");
}

// --- minimality of the subgraph description ----------------------------------
SuiteResult suite_thm210(const Graph& g) {
  if (!reduced_shape(g))
    return make_skip("thm2.10",
                     "host must be simple and 2-connected with minimum degree 3");
  if (g.m() - 1 > 8)
    return make_skip("thm2.10", "needs m <= 9 for vertex enumeration");

  Tally t;
  bool forced = true;
  try {
    // When every vertex-deleted set V \ {v} qualifies for a subgraph row,
    // those n rows sum (against the cardinality equality x(E) = n) to
    // exactly the n lower bounds x(delta(v)) >= 2, so each of them is
    // forced tight.  The cardinality-n polytope then collapses onto the
    // tour relaxation: vertex-deletion rows become implied equalities
    // while the smaller subgraph rows keep their facet role.
    for (int v = 0; v < g.n && forced; ++v) {
      VertexSet rest;
      for (int w = 0; w < g.n; ++w)
        if (w != v) rest.push_back(w);
      if (!is_locked(g, rest).locked) forced = false;
    }

    const ConstraintSystem qd = Q_description(g);
    const CertificationReport qrep = certify(g, qd);
    const int qdim = qrep.polytope_dim;
    if (forced) {
      const auto qverts = enumerate_vertices(qd);
      const auto pverts = enumerate_vertices(full_P(g));
      t.expect(qverts == pverts,
               "forced degree equalities should collapse the cardinality-n "
               "polytope onto the tour relaxation, but the vertex sets differ");
    } else {
      t.expect(qdim == g.m() - 1,
               "cardinality-n polytope has dimension " + std::to_string(qdim) +
                   ", expected m-1 = " + std::to_string(g.m() - 1));
      t.expect(qrep.minimal, "the subgraph description is not minimal");
    }
    for (size_t i = 0; i < qd.rows.size(); ++i) {
      const LinearConstraint& row = qd.rows[i];
      const RowCertification& rc = qrep.rows[i];
      if (row.sense == Sense::EQ) {
        t.expect(rc.verdict == RowVerdict::ImpliedEquality,
                 "equality row " + row.name + " certified as " +
                     row_verdict_name(rc.verdict));
        continue;
      }
      if (row.tag == ConTag::Subgraph) {
        const int nh = static_cast<int>(row.tag_set.size());
        if (forced && nh == g.n - 1) {
          t.expect(rc.verdict == RowVerdict::ImpliedEquality && rc.face_dim == qdim,
                   "vertex-deletion row " + row.name + " certified as " +
                       row_verdict_name(rc.verdict) + " with face dimension " +
                       std::to_string(rc.face_dim) + ", expected an implied equality");
        } else {
          t.expect(rc.verdict == RowVerdict::Facet && rc.face_dim == qdim - 1,
                   "subgraph row " + row.name + " certified as " +
                       row_verdict_name(rc.verdict) + " with face dimension " +
                       std::to_string(rc.face_dim) + ", expected a facet of dimension " +
                       std::to_string(qdim - 1));
        }
      } else if (!forced) {
        t.expect(rc.verdict == RowVerdict::Facet,
                 "row " + row.name + " certified as " + row_verdict_name(rc.verdict));
      }
    }

    // Dimension facts on the spanning-forest side: the polytope has
    // dimension m-1, its description is minimal with every subgraph row a
    // facet of dimension m-2, and each one-less slice x(E(H)) = n_H - 2
    // cuts through the interior, so it also has dimension m-2.
    const ConstraintSystem kd = K_description(g);
    const CertificationReport krep = certify(g, kd);
    t.expect(krep.polytope_dim == g.m() - 1,
             "spanning-forest polytope has dimension " +
                 std::to_string(krep.polytope_dim) + ", expected m-1 = " +
                 std::to_string(g.m() - 1));
    t.expect(krep.minimal, "the spanning-forest description is not minimal");
    for (size_t i = 0; i < kd.rows.size(); ++i) {
      if (kd.rows[i].tag != ConTag::Subgraph) continue;
      t.expect(krep.rows[i].verdict == RowVerdict::Facet &&
                   krep.rows[i].face_dim == g.m() - 2,
               "spanning-forest subgraph row " + kd.rows[i].name + " certified as " +
                   row_verdict_name(krep.rows[i].verdict) + " with dimension " +
                   std::to_string(krep.rows[i].face_dim));
    }
    for (const auto& item : enumerate_locked(g, 4096).items) {
      LinearConstraint slice = make_subgraph(g, item.u);
      slice.rhs -= 1;
      slice.sense = Sense::EQ;
      ConstraintSystem sliced = kd;
      sliced.rows.push_back(slice);
      const int sdim = affine_dim(enumerate_vertices(sliced));
      t.expect(sdim == g.m() - 2,
               "one-less slice on " + vertex_set_text(item.u) + " has dimension " +
                   std::to_string(sdim) + ", expected m-2 = " +
                   std::to_string(g.m() - 2));
    }
  } catch (const ScaleError& e) {
    return make_skip("thm2.10", std::string("scale: ") + e.what());
  }
  return t.result("thm2.10",
                  std::string(forced ? "collapsed" : "full-dimensional") +
                      " regime confirmed (" + std::to_string(t.checks) + " checks)");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "lemma2.1", "lemma2.2", "lemma2.3", "lemma2.4", "thm1.1", "thm2.6", "thm2.10"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

SuiteResult run_suite(const Graph& g, const std::string& suite) {
  require_describable(g, "verify");
  if (suite == "lemma2.1") return suite_lemma21(g);
  if (suite == "lemma2.2") return suite_lemma22(g);
  if (suite == "lemma2.3") return suite_lemma23(g);
  if (suite == "lemma2.4") return suite_lemma24(g);
  if (suite == "thm1.1") return suite_thm11(g);
  if (suite == "thm2.6") return suite_thm26(g);
  if (suite == "thm2.10") return suite_thm210(g);
  throw DomainError("unknown suite '" + suite + "'");
}

std::vector<SuiteResult> run_suites(const Graph& g, const std::string& selector) {
  std::vector<SuiteResult> out;
  if (selector == "all") {
    for (const std::string& name : suite_names()) out.push_back(run_suite(g, name));
    return out;
  }
  out.push_back(run_suite(g, selector));
  return out;
}

}  // namespace subtour
