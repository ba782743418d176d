#include <doctest.h>

#include <algorithm>
#include <map>

#include "subtour/describe.hpp"
#include "subtour/errors.hpp"
#include "subtour/graph.hpp"
#include "subtour/lp_format.hpp"
#include "subtour/polytope.hpp"
#include "test_util.hpp"

using namespace subtour;
using testutil::load_fixture;

namespace {

std::map<std::string, int> tag_counts(const ConstraintSystem& sys) {
  std::map<std::string, int> out;
  for (const LinearConstraint& c : sys.rows) {
    switch (c.tag) {
      case ConTag::NonNeg: ++out["nonneg"]; break;
      case ConTag::UpperOne: ++out["ub1"]; break;
      case ConTag::Degree: ++out["degree"]; break;
      case ConTag::Cut: ++out["cut"]; break;
      case ConTag::Subgraph: ++out["subgraph"]; break;
      case ConTag::Card: ++out["card"]; break;
    }
  }
  return out;
}

const RowCertification& row_named(const CertificationReport& rep, const std::string& name) {
  for (const RowCertification& r : rep.rows)
    if (r.name == name) return r;
  REQUIRE_MESSAGE(false, "no row named " << name);
  static RowCertification dummy;
  return dummy;
}

}  // namespace

TEST_SUITE("describe") {

TEST_CASE("row inventories of the standard descriptions") {
  const Graph k4 = make_complete(4);
  CHECK(full_P(k4).rows.size() == 23);
  CHECK(tag_counts(full_P(k4)) ==
        std::map<std::string, int>{{"nonneg", 6}, {"ub1", 6}, {"degree", 4}, {"cut", 7}});
  CHECK(minimal_P(k4).rows.size() == 16);  // no locked set fits 3..n-2 on K4
  CHECK(tag_counts(minimal_P(k4)) ==
        std::map<std::string, int>{{"nonneg", 6}, {"ub1", 6}, {"degree", 4}});
  CHECK(minimal_P(k4, /*keep_ub=*/false).rows.size() == 10);
  CHECK(Q_description(k4).rows.size() == 17);
  CHECK(tag_counts(Q_description(k4)) ==
        std::map<std::string, int>{{"nonneg", 6}, {"ub1", 6}, {"card", 1}, {"subgraph", 4}});
  CHECK(tag_counts(Qprime_description(k4)) ==
        std::map<std::string, int>{{"nonneg", 6}, {"ub1", 6}, {"card", 1}, {"cut", 4}, {"degree", 4}});
  CHECK(K_description(k4).rows.size() == 17);

  const Graph k5 = make_complete(5);
  CHECK(full_P(k5).rows.size() == 40);  // 20 box + 5 degree + 15 cuts
  CHECK(tag_counts(minimal_P(k5))["cut"] == 10);  // the ten triangles

  CHECK(K_description(make_complete(3)).rows.size() == 7);
  CHECK(enumerate_vertices(K_description(make_complete(3))).size() == 3);
}

TEST_CASE("row names are stable and 1-based; cut sides contain vertex 1") {
  const ConstraintSystem sys = full_P(make_complete(4));
  std::vector<std::string> cut_names;
  for (const LinearConstraint& c : sys.rows) {
    if (c.tag == ConTag::Cut) cut_names.push_back(c.name);
    if (c.tag == ConTag::Cut) CHECK(c.tag_set.front() == 0);
  }
  CHECK(cut_names == std::vector<std::string>{"cut_1", "cut_1_2", "cut_1_3", "cut_1_4",
                                              "cut_1_2_3", "cut_1_2_4", "cut_1_3_4"});
  CHECK(sys.rows[0].name == "nonneg_e1");
  const ConstraintSystem qd = Q_description(make_complete(4));
  bool saw_sub = false;
  for (const LinearConstraint& c : qd.rows)
    if (c.name == "sub_1_2_3") {
      saw_sub = true;
      CHECK(c.sense == Sense::LE);
      CHECK(c.rhs == 2);
    }
  CHECK(saw_sub);
}

TEST_CASE("hosts outside the describable shape or scale are rejected") {
  CHECK_THROWS_AS(full_P(load_fixture("bridge.graph")), DomainError);
  CHECK_THROWS_AS(Q_description(load_fixture("bridge.graph")), DomainError);
  CHECK_THROWS_AS(full_P(make_complete(13)), ScaleError);
  // A plain cycle is describable even though preprocessing would collapse it.
  CHECK(Q_description(load_fixture("c5.graph")).rows.size() == 11);  // box + card
}

TEST_CASE("the reduced description matches the full one as a polytope") {
  const Graph g = make_complete(4);
  const auto full = enumerate_vertices(full_P(g));
  for (int v0 = 0; v0 < g.n; ++v0) CHECK(enumerate_vertices(refined_P(g, v0)) == full);
}

TEST_CASE("certification of the K4 tour relaxation, row by row") {
  const Graph g = make_complete(4);
  const CertificationReport rep = certify(g, full_P(g));
  CHECK(rep.polytope_dim == 2);
  CHECK(!rep.minimal);
  for (int e = 1; e <= 6; ++e) {
    const auto& nn = row_named(rep, "nonneg_e" + std::to_string(e));
    CHECK(nn.verdict == RowVerdict::Redundant);
    const auto& ub = row_named(rep, "ub1_e" + std::to_string(e));
    CHECK(ub.verdict == RowVerdict::Facet);
    CHECK(ub.face_dim == 1);
  }
  for (int v = 1; v <= 4; ++v)
    CHECK(row_named(rep, "deg_" + std::to_string(v)).verdict ==
          RowVerdict::ImpliedEquality);
  // Single-vertex and three-vertex sides ride on the degree equalities; the
  // three pair cuts are the genuine facets.
  for (const char* name : {"cut_1", "cut_1_2_3", "cut_1_2_4", "cut_1_3_4"})
    CHECK(row_named(rep, name).verdict == RowVerdict::ImpliedEquality);
  for (const char* name : {"cut_1_2", "cut_1_3", "cut_1_4"}) {
    CHECK(row_named(rep, name).verdict == RowVerdict::Facet);
    CHECK(row_named(rep, name).face_dim == 1);
  }
}

TEST_CASE("facet witnesses are affinely independent tight vertices") {
  const Graph g = make_complete(4);
  const CertificationReport rep = certify(g, full_P(g));
  const auto& facet = row_named(rep, "cut_1_2");
  REQUIRE(facet.witness.size() == 2);  // a segment needs two points
  CHECK(affine_dim(facet.witness) == facet.face_dim);
  const ConstraintSystem sys = full_P(g);
  for (const QPoint& w : facet.witness) {
    CHECK(membership(sys, w).member);
    CHECK(sum_over(w, delta(g, {0, 1})) == 2);  // tight on the certified row
  }
}

TEST_CASE("an exact duplicate is reported once as redundant") {
  const Graph g = make_complete(4);
  ConstraintSystem sys = K_description(g);
  sys.rows.push_back(sys.rows[12]);  // duplicate one subgraph row
  const CertificationReport rep = certify(g, sys);
  int redundant = 0;
  for (const RowCertification& r : rep.rows)
    if (r.verdict == RowVerdict::Redundant) ++redundant;
  CHECK(redundant == 1);
  CHECK(rep.rows.back().verdict == RowVerdict::Redundant);
  CHECK(!rep.rows.back().certificate.empty());
  CHECK(!rep.minimal);
}

TEST_CASE("the spanning-tree description of K4 is minimal") {
  const Graph g = make_complete(4);
  const CertificationReport rep = certify(g, K_description(g));
  CHECK(rep.polytope_dim == 5);
  CHECK(rep.minimal);
  for (const RowCertification& r : rep.rows) {
    if (r.name == "card") {
      CHECK(r.verdict == RowVerdict::ImpliedEquality);
    } else {
      CHECK(r.verdict == RowVerdict::Facet);
      CHECK(r.face_dim == 4);
    }
  }
}

TEST_CASE("LP rendering: every row named, bounds restated, decimals exact") {
  const std::string doc = emit_lp(full_P(make_complete(4)));
  CHECK(doc.find("Minimize") == 0);
  CHECK(doc.find(" deg_1: x1 + x2 + x3 = 2\n") != std::string::npos);
  CHECK(doc.find(" nonneg_e1: x1 >= 0\n") != std::string::npos);
  CHECK(doc.find(" 0 <= x1 <= 1\n") != std::string::npos);
  CHECK(doc.find("End\n") != std::string::npos);
  int named = 0;
  for (size_t pos = doc.find("Subject To"); pos != std::string::npos; ) {
    pos = doc.find(": ", pos + 1);
    if (pos != std::string::npos) ++named;
  }
  CHECK(named == 23);
  // Determinism: byte-identical on repeat.
  CHECK(emit_lp(full_P(make_complete(4))) == doc);
}

TEST_CASE("LP rendering scales non-decimal rationals and keeps the original") {
  ConstraintSystem sys;
  sys.dim = 2;
  LinearConstraint c;
  c.name = "third";
  c.coeffs = {{0, Rat(1, 3)}, {1, Rat(1)}};
  c.sense = Sense::LE;
  c.rhs = Rat(2, 3);
  sys.rows = {make_nonneg(0), make_nonneg(1), c};
  const std::string doc = emit_lp(sys);
  CHECK(doc.find("\\ third scaled by 3; original: 1/3 x1 1 x2 <= 2/3") != std::string::npos);
  CHECK(doc.find(" third: x1 + 3 x2 <= 2\n") != std::string::npos);
  // Objective with exact decimals is emitted directly.
  const std::string with_obj = emit_lp(sys, QPoint{Rat(1, 2), Rat(-2)});
  CHECK(with_obj.find(" obj: 0.5 x1 - 2 x2\n") != std::string::npos);
  CHECK_THROWS_AS(emit_lp(sys, QPoint{Rat(1)}), DomainError);
}

}  // TEST_SUITE
