#include "subtour/laminar.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "subtour/errors.hpp"
#include "subtour/linalg.hpp"

namespace subtour {

namespace {

enum class Relation { Disjoint, Nested, Crossing };

Relation relate(const VertexSet& a, const VertexSet& b) {
  VertexSet inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  if (inter.empty()) return Relation::Disjoint;
  if (inter.size() == a.size() || inter.size() == b.size()) return Relation::Nested;
  return Relation::Crossing;
}

Rat induced_mass(const Graph& g, const QPoint& x, const VertexSet& u) {
  return sum_over(x, induced_edges(g, u));
}

bool is_tight(const Graph& g, const QPoint& x, const VertexSet& u) {
  return induced_mass(g, x, u) == Rat(static_cast<int>(u.size()) - 1);
}

RatRow incidence_row(const Graph& g, const VertexSet& u) {
  RatRow row(static_cast<size_t>(g.m()), Rat(0));
  for (int id : induced_edges(g, u)) row[static_cast<size_t>(id)] = 1;
  return row;
}

}  // namespace

bool is_laminar(const std::vector<VertexSet>& family) {
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (relate(family[i], family[j]) == Relation::Crossing) return false;
  return true;
}

bool laminar_bound_check(const std::vector<VertexSet>& family, int ground_size) {
  return static_cast<long long>(family.size()) <= 2LL * ground_size - 1;
}

std::vector<VertexSet> uncross(const Graph& g, const std::vector<VertexSet>& family,
                               const QPoint& x) {
  if (static_cast<int>(x.size()) != g.m())
    throw DomainError("point dimension must equal the edge count");
  for (const Rat& v : x)
    if (v < 0) throw DomainError("uncross requires a nonnegative point");

  // Validate, dedupe, drop singletons.
  std::set<VertexSet> pool;
  for (const VertexSet& u : family) {
    check_vertex_set(g, u);
    if (!is_tight(g, x, u)) throw DomainError("uncross input set is not tight for the point");
    if (u.size() >= 2) pool.insert(u);
  }

  // Phase 1: close under crossing intersections/unions, keeping only sets
  // verified tight (for forest-bounded x both always are).
  constexpr size_t kCap = 50000;
  std::vector<VertexSet> closure(pool.begin(), pool.end());
  for (size_t i = 0; i < closure.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      if (relate(closure[i], closure[j]) != Relation::Crossing) continue;
      VertexSet inter, uni;
      std::set_intersection(closure[i].begin(), closure[i].end(), closure[j].begin(),
                            closure[j].end(), std::back_inserter(inter));
      std::set_union(closure[i].begin(), closure[i].end(), closure[j].begin(), closure[j].end(),
                     std::back_inserter(uni));
      std::array<VertexSet, 2> cands{std::move(inter), std::move(uni)};
      for (VertexSet& cand : cands) {
        if (cand.size() < 2) continue;
        if (!is_tight(g, x, cand)) continue;
        if (pool.insert(cand).second) closure.push_back(std::move(cand));
      }
      if (closure.size() > kCap) throw ScaleError("uncross closure exceeded its size cap");
    }
  }

  // Phase 2: greedy maximal laminar subfamily in (size, lexicographic) order.
  std::sort(closure.begin(), closure.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  std::vector<VertexSet> out;
  for (const VertexSet& cand : closure) {
    bool ok = true;
    for (const VertexSet& kept : out)
      if (relate(cand, kept) == Relation::Crossing) {
        ok = false;
        break;
      }
    if (ok) out.push_back(cand);
  }
  return out;
}

int tight_system_rank(const Graph& g, const std::vector<VertexSet>& family, const QPoint& x) {
  if (static_cast<int>(x.size()) != g.m())
    throw DomainError("point dimension must equal the edge count");
  RatMatrix rows;
  for (const VertexSet& u : family) rows.push_back(incidence_row(g, u));
  for (int id = 0; id < g.m(); ++id) {
    if (x[static_cast<size_t>(id)] != 0) continue;
    RatRow unit(static_cast<size_t>(g.m()), Rat(0));
    unit[static_cast<size_t>(id)] = 1;
    rows.push_back(std::move(unit));
  }
  return matrix_rank(rows);
}

}  // namespace subtour
