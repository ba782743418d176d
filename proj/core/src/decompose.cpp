#include "subtour/decompose.hpp"

#include <algorithm>

#include "subtour/describe.hpp"
#include "subtour/errors.hpp"
#include "subtour/linalg.hpp"
#include "subtour/locked.hpp"

namespace subtour {

namespace {

void require_uniform(const std::vector<QPoint>& fam) {
  if (fam.empty()) throw DomainError("family must be nonempty");
  for (const QPoint& p : fam)
    if (p.size() != fam.front().size())
      throw DomainError("family members must share one dimension");
}

}  // namespace

bool satisfies_IC(const std::vector<QPoint>& fam) {
  require_uniform(fam);
  const size_t dim = fam.front().size();
  for (size_t e = 0; e < dim; ++e) {
    bool all_one = true;
    for (const QPoint& p : fam)
      if (p[e] != 1) {
        all_one = false;
        break;
      }
    if (all_one) return false;
  }
  return true;
}

bool satisfies_UC(const std::vector<QPoint>& fam) {
  require_uniform(fam);
  const size_t dim = fam.front().size();
  for (size_t e = 0; e < dim; ++e) {
    bool some_zero = false;
    for (const QPoint& p : fam)
      if (p[e] == 0) {
        some_zero = true;
        break;
      }
    if (!some_zero) return false;
  }
  return true;
}

bool verify_sum_in_Q(const Graph& g, const std::vector<QPoint>& fam) {
  if (static_cast<int>(fam.size()) != g.n)
    throw DomainError("family must have exactly n members");
  require_uniform(fam);
  const ConstraintSystem K = K_description(g);
  for (const QPoint& p : fam)
    if (!membership(K, p).member)
      throw DomainError("family member is outside the bases polytope");
  QPoint s = zero_point(g.m());
  for (const QPoint& p : fam)
    for (int e = 0; e < g.m(); ++e) s[static_cast<size_t>(e)] += p[static_cast<size_t>(e)];
  const Rat scale = Rat(1) / Rat(g.n - 1);
  for (Rat& v : s) v *= scale;
  // A union-condition family always keeps the average inside the unit box
  // (every edge is missed by some member) and on the cardinality plane;
  // subgraph rows carry no such guarantee and may genuinely be violated.
  const ConstraintSystem qd = Q_description(g);
  if (satisfies_UC(fam)) {
    for (const LinearConstraint& row : qd.rows) {
      if (row.tag == ConTag::Subgraph) continue;
      if (!satisfies(row, s))
        throw ContradictionError(
            "a union-condition family averaged outside the box or off the "
            "cardinality plane (row " + row.name + ")");
    }
  }
  return membership(qd, s).member;
}

std::vector<WeightedTree> caratheodory_split(const Graph& g, const QPoint& y) {
  const ConstraintSystem K = K_description(g);
  if (!membership(K, y).member) throw DomainError("point is outside the bases polytope");

  // Locked vertex sets with their induced edge sets, for quota checks.
  std::vector<std::pair<VertexSet, EdgeSet>> locked;
  for (const LockedSubgraph& ls : enumerate_locked(g).items) locked.emplace_back(ls.u, ls.eh);

  std::vector<WeightedTree> out;
  QPoint z = y;
  Rat mu = 1;  // remaining mass: z/mu stays a bases-polytope member
  while (mu > 0) {
    // Face data of z/mu.
    EdgeSet supp = support(z);
    EdgeSet forced;
    for (int e = 0; e < g.m(); ++e)
      if (z[static_cast<size_t>(e)] == mu) forced.push_back(e);
    std::vector<std::pair<const EdgeSet*, int>> tight_quota;  // (edges of U, |U|-1)
    std::vector<Rat> sub_mass(locked.size());
    for (size_t i = 0; i < locked.size(); ++i) {
      sub_mass[i] = sum_over(z, locked[i].second);
      if (sub_mass[i] == mu * Rat(static_cast<int>(locked[i].first.size()) - 1))
        tight_quota.emplace_back(&locked[i].second,
                                 static_cast<int>(locked[i].first.size()) - 1);
    }

    // A spanning tree on the minimal face: support-confined, forced edges
    // in, every tight subgraph quota met. Existence is guaranteed because
    // z/mu lies on that face.
    Graph sup_g;
    sup_g.n = g.n;
    for (int e : supp) {
      Edge ed = g.edges[static_cast<size_t>(e)];
      ed.id = sup_g.m();
      sup_g.edges.push_back(ed);
    }
    EdgeSet tree;
    for (const EdgeSet& cand_local : spanning_trees(sup_g)) {
      EdgeSet cand;
      for (int le : cand_local) cand.push_back(supp[static_cast<size_t>(le)]);
      std::sort(cand.begin(), cand.end());
      if (!std::includes(cand.begin(), cand.end(), forced.begin(), forced.end())) continue;
      bool ok = true;
      for (const auto& [eh, required] : tight_quota) {
        EdgeSet inter;
        std::set_intersection(cand.begin(), cand.end(), eh->begin(), eh->end(),
                              std::back_inserter(inter));
        if (static_cast<int>(inter.size()) != required) {
          ok = false;
          break;
        }
      }
      if (ok) {
        tree = std::move(cand);
        break;
      }
    }
    if (tree.empty())
      throw ContradictionError("no spanning tree matched the minimal face of a member");

    // Largest extractable multiple of this tree.
    Rat lambda = mu;
    EdgeSet tree_sorted = tree;
    for (int e : tree) lambda = std::min(lambda, z[static_cast<size_t>(e)]);
    for (int e = 0; e < g.m(); ++e) {
      const bool in_tree = std::binary_search(tree_sorted.begin(), tree_sorted.end(), e);
      if (!in_tree) lambda = std::min(lambda, Rat(mu - z[static_cast<size_t>(e)]));
    }
    for (size_t i = 0; i < locked.size(); ++i) {
      EdgeSet inter;
      std::set_intersection(tree_sorted.begin(), tree_sorted.end(), locked[i].second.begin(),
                            locked[i].second.end(), std::back_inserter(inter));
      const Rat cu = Rat(static_cast<int>(locked[i].first.size()) - 1) -
                     Rat(static_cast<int>(inter.size()));
      if (cu > 0) {
        const Rat room =
            (mu * Rat(static_cast<int>(locked[i].first.size()) - 1) - sub_mass[i]) / cu;
        lambda = std::min(lambda, room);
      }
    }
    if (lambda <= 0)
      throw ContradictionError("face-compatible tree admitted no positive extraction");

    WeightedTree wt;
    wt.tree = tree;
    wt.lambda = lambda;
    out.push_back(wt);
    for (int e : tree) z[static_cast<size_t>(e)] -= lambda;
    mu -= lambda;
    if (static_cast<int>(out.size()) > g.m())
      throw ContradictionError("convex split exceeded the edge-count tree budget");
  }
  for (const Rat& v : z)
    if (v != 0) throw ContradictionError("convex split left residual mass");
  return out;
}

bool is_hamilton_circuit(const Graph& g, const QPoint& x) {
  if (static_cast<int>(x.size()) != g.m()) return false;
  if (!is_zero_one(x)) return false;
  const EdgeSet supp = support(x);
  if (static_cast<int>(supp.size()) != g.n) return false;
  std::vector<int> deg(static_cast<size_t>(g.n), 0);
  for (int e : supp) {
    const Edge& ed = g.edges[static_cast<size_t>(e)];
    if (ed.is_loop()) return false;
    ++deg[static_cast<size_t>(ed.u)];
    ++deg[static_cast<size_t>(ed.v)];
  }
  for (int v = 0; v < g.n; ++v)
    if (deg[static_cast<size_t>(v)] != 2) return false;
  return is_connected_subgraph(g, supp) &&
         static_cast<int>(vertex_support(g, supp).size()) == g.n;
}

std::vector<QPoint> decompose_extreme_point(const Graph& g, const QPoint& x) {
  require_describable(g, "decomposition");
  if (static_cast<int>(x.size()) != g.m())
    throw DomainError("point dimension must equal the edge count");
  const ConstraintSystem Q = Q_description(g);
  const MembershipResult mem = membership(Q, x);
  if (!mem.member)
    throw DomainError("point is outside the cardinality-n polytope (row " +
                      Q.rows[static_cast<size_t>(mem.first_violated)].name + " violated)");

  // Extremality: the tight rows must pin the point completely.
  RatMatrix tight;
  for (const LinearConstraint& c : Q.rows) {
    if (c.sense != Sense::EQ && eval_lhs(c, x) != c.rhs) continue;
    RatRow row(static_cast<size_t>(g.m()), Rat(0));
    for (const auto& [id, v] : c.coeffs) row[static_cast<size_t>(id)] = v;
    tight.push_back(std::move(row));
  }
  if (matrix_rank(tight) < g.m()) {
    // Produce a convex-split witness along a direction the tight rows miss.
    const RatMatrix dirs = null_space(tight);
    const RatRow& dvec = dirs.front();
    Rat eps;  // largest symmetric step staying inside
    bool first = true;
    for (const LinearConstraint& c : Q.rows) {
      Rat ad = 0;
      for (const auto& [id, v] : c.coeffs) ad += v * dvec[static_cast<size_t>(id)];
      if (ad == 0) continue;
      const Rat slack = c.sense == Sense::GE ? eval_lhs(c, x) - c.rhs : c.rhs - eval_lhs(c, x);
      const Rat mag = ad < 0 ? Rat(-ad) : ad;
      const Rat step = slack / mag;
      if (step > 0 && (first || step < eps)) {
        eps = step;
        first = false;
      }
    }
    if (first) eps = 1;
    std::string witness = "x = (a + b)/2 with a = x + t d, b = x - t d, t = " + rat_to_string(eps) +
                          ", d = (";
    for (size_t k = 0; k < dvec.size(); ++k) {
      if (k) witness += ", ";
      witness += rat_to_string(dvec[k]);
    }
    witness += ")";
    throw DomainError("point is not extreme: " + witness);
  }

  std::vector<QPoint> fam;
  if (is_zero_one(x)) {
    if (!is_hamilton_circuit(g, x))
      throw ContradictionError("an integer extreme point failed the circuit shape");
    for (int e : support(x)) {
      QPoint path = x;
      path[static_cast<size_t>(e)] = 0;
      fam.push_back(std::move(path));
    }
    return fam;
  }

  // Fractional case: structural sets.
  const Rat thresh = Rat(1) / Rat(g.n - 1);
  EdgeSet a_set, e1;
  for (int e = 0; e < g.m(); ++e) {
    if (x[static_cast<size_t>(e)] >= thresh) a_set.push_back(e);
    if (x[static_cast<size_t>(e)] == 1) e1.push_back(e);
  }
  if (a_set.empty()) throw ContradictionError("threshold edge set is empty");
  if (static_cast<int>(a_set.size()) < g.n)
    throw ContradictionError("threshold edge set is smaller than the vertex count");
  if (!is_connected_subgraph(g, a_set) ||
      static_cast<int>(vertex_support(g, a_set).size()) != g.n)
    throw ContradictionError("threshold subgraph is not connected and spanning");
  if (graphic_rank(g, e1) != static_cast<int>(e1.size()))
    throw ContradictionError("value-one edges contain a cycle");

  // Grow a spanning tree from the value-one edges with heaviest threshold
  // edges, ties by edge id.
  EdgeSet pool;
  std::set_difference(a_set.begin(), a_set.end(), e1.begin(), e1.end(), std::back_inserter(pool));
  std::sort(pool.begin(), pool.end(), [&](int p, int q) {
    if (x[static_cast<size_t>(p)] != x[static_cast<size_t>(q)])
      return x[static_cast<size_t>(p)] > x[static_cast<size_t>(q)];
    return p < q;
  });
  EdgeSet tree = e1;
  for (int e : pool) {
    if (static_cast<int>(tree.size()) == g.n - 1) break;
    EdgeSet trial = tree;
    trial.push_back(e);
    std::sort(trial.begin(), trial.end());
    if (graphic_rank(g, trial) == static_cast<int>(trial.size())) tree = std::move(trial);
  }
  std::sort(tree.begin(), tree.end());
  if (!is_spanning_tree(g, tree))
    throw ContradictionError("no spanning tree contains the value-one edges within threshold");

  // y = ((n-1) x - tree) / (n-1) is a bases-polytope member by the theory.
  QPoint y = x;
  const Rat nm1 = Rat(g.n - 1);
  for (int e : tree) y[static_cast<size_t>(e)] -= Rat(1) / nm1;
  const std::vector<WeightedTree> split = caratheodory_split(g, y);

  // Pack (n-1) * y = sum (n-1) lambda_j T_j into n-1 unit-mass members.
  fam.push_back(char_vector(g, tree));
  QPoint bucket = zero_point(g.m());
  Rat room = 1;
  size_t j = 0;
  Rat avail = j < split.size() ? nm1 * split[j].lambda : Rat(0);
  for (int made = 0; made < g.n - 1; ++made) {
    while (room > 0) {
      if (j >= split.size())
        throw ContradictionError("convex split mass ran out during packing");
      const Rat take = std::min(room, avail);
      for (int e : split[j].tree) bucket[static_cast<size_t>(e)] += take;
      room -= take;
      avail -= take;
      if (avail == 0) {
        ++j;
        avail = j < split.size() ? nm1 * split[j].lambda : Rat(0);
      }
    }
    fam.push_back(bucket);
    bucket = zero_point(g.m());
    room = 1;
  }

  // Exact reconstruction and the intersection condition are guaranteed.
  QPoint resum = zero_point(g.m());
  for (const QPoint& p : fam)
    for (int e = 0; e < g.m(); ++e) resum[static_cast<size_t>(e)] += p[static_cast<size_t>(e)];
  for (int e = 0; e < g.m(); ++e)
    if (resum[static_cast<size_t>(e)] != nm1 * x[static_cast<size_t>(e)])
      throw ContradictionError("reconstruction mismatch after packing");
  if (!satisfies_IC(fam)) throw ContradictionError("packed family violated the intersection condition");
  const ConstraintSystem K = K_description(g);
  for (const QPoint& p : fam)
    if (!membership(K, p).member)
      throw ContradictionError("a packed member left the bases polytope");
  return fam;
}

}  // namespace subtour
