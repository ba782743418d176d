#include "subtour/constraint.hpp"

#include "subtour/errors.hpp"

namespace subtour {

namespace {

std::string joined_labels(const VertexSet& u) {
  std::string s;
  for (size_t i = 0; i < u.size(); ++i) {
    if (i) s += '_';
    s += std::to_string(u[i] + 1);
  }
  return s;
}

}  // namespace

Rat eval_lhs(const LinearConstraint& c, const QPoint& x) {
  Rat v = 0;
  for (const auto& [id, coef] : c.coeffs) {
    if (id < 0 || id >= static_cast<int>(x.size()))
      throw DomainError("constraint refers to an edge outside the point's dimension");
    v += coef * x[static_cast<size_t>(id)];
  }
  return v;
}

bool satisfies(const LinearConstraint& c, const QPoint& x) {
  const Rat v = eval_lhs(c, x);
  switch (c.sense) {
    case Sense::LE:
      return v <= c.rhs;
    case Sense::GE:
      return v >= c.rhs;
    case Sense::EQ:
      return v == c.rhs;
  }
  return false;
}

MembershipResult membership(const ConstraintSystem& sys, const QPoint& x) {
  if (static_cast<int>(x.size()) != sys.dim)
    throw DomainError("point dimension does not match the system's ambient dimension");
  MembershipResult r;
  for (size_t i = 0; i < sys.rows.size(); ++i) {
    if (!satisfies(sys.rows[i], x)) {
      r.first_violated = static_cast<int>(i);
      return r;
    }
  }
  r.member = true;
  return r;
}

LinearConstraint make_nonneg(int edge) {
  LinearConstraint c;
  c.name = "nonneg_e" + std::to_string(edge + 1);
  c.coeffs[edge] = 1;
  c.sense = Sense::GE;
  c.rhs = 0;
  c.tag = ConTag::NonNeg;
  c.tag_edge = edge;
  return c;
}

LinearConstraint make_ub1(int edge) {
  LinearConstraint c;
  c.name = "ub1_e" + std::to_string(edge + 1);
  c.coeffs[edge] = 1;
  c.sense = Sense::LE;
  c.rhs = 1;
  c.tag = ConTag::UpperOne;
  c.tag_edge = edge;
  return c;
}

LinearConstraint make_degree(const Graph& g, int v, Sense sense) {
  if (v < 0 || v >= g.n) throw DomainError("degree constraint vertex out of range");
  LinearConstraint c;
  c.name = (sense == Sense::EQ ? "deg_" : "deg_ge_") + std::to_string(v + 1);
  for (int id : delta(g, VertexSet{v})) c.coeffs[id] = 1;
  c.sense = sense;
  c.rhs = 2;
  c.tag = ConTag::Degree;
  c.tag_vertex = v;
  return c;
}

LinearConstraint make_cut(const Graph& g, const VertexSet& u) {
  check_vertex_set(g, u);
  LinearConstraint c;
  c.name = "cut_" + joined_labels(u);
  for (int id : delta(g, u)) c.coeffs[id] = 1;
  c.sense = Sense::GE;
  c.rhs = 2;
  c.tag = ConTag::Cut;
  c.tag_set = u;
  return c;
}

LinearConstraint make_subgraph(const Graph& g, const VertexSet& u) {
  check_vertex_set(g, u);
  LinearConstraint c;
  c.name = "sub_" + joined_labels(u);
  for (int id : induced_edges(g, u)) c.coeffs[id] = 1;
  c.sense = Sense::LE;
  c.rhs = static_cast<int>(u.size()) - 1;
  c.tag = ConTag::Subgraph;
  c.tag_set = u;
  return c;
}

LinearConstraint make_card(const Graph& g, const Rat& rhs) {
  LinearConstraint c;
  c.name = "card";
  for (int id = 0; id < g.m(); ++id) c.coeffs[id] = 1;
  c.sense = Sense::EQ;
  c.rhs = rhs;
  c.tag = ConTag::Card;
  return c;
}

}  // namespace subtour
