#include "subtour/mincut.hpp"

#include <algorithm>

#include "subtour/errors.hpp"

namespace subtour {

namespace {

void check_inputs(const Graph& g, const QPoint& w) {
  if (g.n < 2) throw DomainError("global_min_cut: need n >= 2");
  if (static_cast<int>(w.size()) != g.m())
    throw DomainError("global_min_cut: weight vector has wrong dimension");
  for (const Rat& x : w)
    if (x < 0) throw DomainError("global_min_cut: negative weight");
}

VertexSet mask_to_set(unsigned mask, int n) {
  VertexSet out;
  for (int v = 0; v < n; ++v)
    if (mask & (1u << v)) out.push_back(v);
  return out;
}

}  // namespace

CutResult min_cut_exhaustive(const Graph& g, const QPoint& w) {
  check_inputs(g, w);
  if (g.n > 20) throw ScaleError("min_cut_exhaustive: n > 20");
  // Canonical sides contain vertex 0: iterate masks with bit 0 set, excluding
  // the full set. For each, the cut value is the weight of edges crossing.
  const unsigned full = (g.n == 32 ? ~0u : (1u << g.n) - 1u);
  bool have = false;
  Rat best_value = 0;
  VertexSet best_u;
  for (unsigned rest = 0;; ++rest) {
    const unsigned mask = (rest << 1) | 1u;  // vertex 0 always inside
    if (mask >= full) break;
    Rat value = 0;
    for (const Edge& e : g.edges) {
      if (e.is_loop()) continue;
      const bool iu = (mask >> e.u) & 1u, iv = (mask >> e.v) & 1u;
      if (iu != iv) value += w[static_cast<size_t>(e.id)];
    }
    if (!have || value < best_value) {
      have = true;
      best_value = value;
      best_u = mask_to_set(mask, g.n);
    } else if (value == best_value) {
      VertexSet u = mask_to_set(mask, g.n);
      if (u < best_u) best_u = std::move(u);
    }
  }
  return {best_u, best_value};
}

CutResult min_cut_stoer_wagner(const Graph& g, const QPoint& w) {
  check_inputs(g, w);
  const size_t n = static_cast<size_t>(g.n);
  // Dense symmetric weight matrix; merged vertices keep member lists.
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
  for (const Edge& e : g.edges) {
    if (e.is_loop()) continue;
    a[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] += w[static_cast<size_t>(e.id)];
    a[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] += w[static_cast<size_t>(e.id)];
  }
  std::vector<std::vector<int>> members(n);
  for (size_t v = 0; v < n; ++v) members[v] = {static_cast<int>(v)};
  std::vector<int> active;
  for (size_t v = 0; v < n; ++v) active.push_back(static_cast<int>(v));

  bool have = false;
  Rat best_value = 0;
  VertexSet best_u;
  while (active.size() > 1) {
    // Maximum adjacency search from the smallest active vertex.
    std::vector<int> order{active[0]};
    std::vector<bool> added(n, false);
    added[static_cast<size_t>(active[0])] = true;
    std::vector<Rat> conn(n, Rat(0));
    for (int v : active)
      if (v != active[0]) conn[static_cast<size_t>(v)] = a[static_cast<size_t>(active[0])][static_cast<size_t>(v)];
    while (order.size() < active.size()) {
      int pick = -1;
      for (int v : active) {
        if (added[static_cast<size_t>(v)]) continue;
        if (pick == -1 || conn[static_cast<size_t>(v)] > conn[static_cast<size_t>(pick)]) pick = v;
      }
      order.push_back(pick);
      added[static_cast<size_t>(pick)] = true;
      for (int v : active)
        if (!added[static_cast<size_t>(v)])
          conn[static_cast<size_t>(v)] += a[static_cast<size_t>(pick)][static_cast<size_t>(v)];
    }
    const int t = order.back();
    const int s = order[order.size() - 2];
    const Rat phase_value = conn[static_cast<size_t>(t)];
    if (!have || phase_value < best_value) {
      have = true;
      best_value = phase_value;
      best_u.assign(members[static_cast<size_t>(t)].begin(), members[static_cast<size_t>(t)].end());
      std::sort(best_u.begin(), best_u.end());
    }
    // Merge t into s.
    for (int v : active) {
      if (v == s || v == t) continue;
      a[static_cast<size_t>(s)][static_cast<size_t>(v)] += a[static_cast<size_t>(t)][static_cast<size_t>(v)];
      a[static_cast<size_t>(v)][static_cast<size_t>(s)] = a[static_cast<size_t>(s)][static_cast<size_t>(v)];
    }
    members[static_cast<size_t>(s)].insert(members[static_cast<size_t>(s)].end(),
                                           members[static_cast<size_t>(t)].begin(),
                                           members[static_cast<size_t>(t)].end());
    active.erase(std::find(active.begin(), active.end(), t));
  }
  // Canonicalize: report the side containing vertex 0.
  if (!std::binary_search(best_u.begin(), best_u.end(), 0)) {
    VertexSet flip;
    size_t k = 0;
    for (int v = 0; v < g.n; ++v) {
      if (k < best_u.size() && best_u[k] == v) {
        ++k;
        continue;
      }
      flip.push_back(v);
    }
    best_u = std::move(flip);
  }
  return {best_u, best_value};
}

CutResult global_min_cut(const Graph& g, const QPoint& w) {
  check_inputs(g, w);
  if (g.n <= 12) return min_cut_exhaustive(g, w);
  return min_cut_stoer_wagner(g, w);
}

}  // namespace subtour
