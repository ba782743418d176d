#include "subtour/locked.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "subtour/errors.hpp"

namespace subtour {

namespace {

void require_locked_host(const Graph& g) {
  if (!is_describable(g))
    throw DomainError(
        "locked-subgraph tests require a simple, loopless, 2-connected host "
        "graph with at least 3 vertices");
}

// Rank of the edge subset `mask` in the cycle matroid, by union-find.
int mask_rank(const Graph& g, uint32_t mask) {
  std::vector<int> parent(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) parent[static_cast<size_t>(v)] = v;
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  int rank = 0;
  for (int id = 0; id < g.m(); ++id) {
    if (!(mask & (uint32_t{1} << id))) continue;
    const Edge& e = g.edges[static_cast<size_t>(id)];
    const int a = find(e.u), b = find(e.v);
    if (a == b) continue;
    parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    ++rank;
  }
  return rank;
}

uint32_t edges_to_mask(const EdgeSet& l) {
  uint32_t mask = 0;
  for (int id : l) mask |= uint32_t{1} << id;
  return mask;
}

EdgeSet mask_to_edges(uint32_t mask) {
  EdgeSet out;
  for (int id = 0; mask; ++id, mask >>= 1)
    if (mask & 1u) out.push_back(id);
  return out;
}

}  // namespace

LockedVerdict is_locked(const Graph& g, const VertexSet& u) {
  require_locked_host(g);
  check_vertex_set(g, u);
  LockedVerdict v;
  const int nh = static_cast<int>(u.size());
  if (nh < 3 || nh > g.n - 1) {
    v.fail = LockedFail::SizeBound;
    return v;
  }
  const EdgeSet eh = induced_edges(g, u);
  if (!is_two_connected(g, eh)) {
    v.fail = LockedFail::NotTwoConnected;
    return v;
  }
  EdgeSet all(static_cast<size_t>(g.m()));
  for (int id = 0; id < g.m(); ++id) all[static_cast<size_t>(id)] = id;
  EdgeSet rest;
  std::set_difference(all.begin(), all.end(), eh.begin(), eh.end(), std::back_inserter(rest));
  if (!is_connected_subgraph(g, rest)) {
    v.fail = LockedFail::ComplementDisconnected;
    return v;
  }
  v.locked = true;
  return v;
}

bool is_locked_matroid_oracle(const Graph& g, const EdgeSet& l) {
  if (g.m() > 20) throw ScaleError("matroid-definition test limited to m <= 20 edges");
  for (int id : l)
    if (id < 0 || id >= g.m()) throw DomainError("edge id out of range");
  if (!std::is_sorted(l.begin(), l.end()) || std::adjacent_find(l.begin(), l.end()) != l.end())
    throw DomainError("edge set must be sorted and duplicate-free");

  const uint32_t full = (g.m() == 32) ? ~uint32_t{0} : ((uint32_t{1} << g.m()) - 1);
  const uint32_t lm = edges_to_mask(l);
  const uint32_t cm = full & ~lm;
  const int r_full = mask_rank(g, full);
  auto rank = [&](uint32_t mask) { return mask_rank(g, mask); };
  auto corank = [&](uint32_t mask) {
    return static_cast<int>(std::popcount(mask)) - r_full + rank(full & ~mask);
  };

  if (rank(lm) < 2) return false;
  if (corank(cm) < 2) return false;
  // M|L connected: no proper nonempty S c L with r(S) + r(L\S) = r(L).
  const int rl = rank(lm);
  for (uint32_t s = (lm - 1) & lm; s; s = (s - 1) & lm) {
    if (rank(s) + rank(lm & ~s) == rl) return false;
  }
  // M*|(E\L) connected, with the dual rank restricted to E\L.
  const int rc = corank(cm);
  for (uint32_t s = (cm - 1) & cm; s; s = (s - 1) & cm) {
    if (corank(s) + corank(cm & ~s) == rc) return false;
  }
  return true;
}

std::vector<EdgeSet> locked_edge_sets_oracle_scan(const Graph& g) {
  if (g.m() > 15) throw ScaleError("oracle scan limited to m <= 15 edges");
  const int m = g.m();
  const uint32_t full = (uint32_t{1} << m) - 1;
  std::vector<uint8_t> r(size_t{1} << m);
  for (uint32_t mask = 0; mask <= full; ++mask)
    r[mask] = static_cast<uint8_t>(mask_rank(g, mask));
  const int r_full = r[full];
  auto corank = [&](uint32_t mask) {
    return static_cast<int>(std::popcount(mask)) - r_full + r[full & ~mask];
  };

  std::vector<EdgeSet> out;
  for (uint32_t lm = 1; lm < full; ++lm) {  // L nonempty, proper
    if (r[lm] < 2) continue;
    const uint32_t cm = full & ~lm;
    if (corank(cm) < 2) continue;
    bool ok = true;
    const int rl = r[lm];
    for (uint32_t s = (lm - 1) & lm; s; s = (s - 1) & lm) {
      if (r[s] + r[lm & ~s] == rl) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    const int rc = corank(cm);
    for (uint32_t s = (cm - 1) & cm; s; s = (s - 1) & cm) {
      if (corank(s) + corank(cm & ~s) == rc) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(mask_to_edges(lm));
  }
  std::sort(out.begin(), out.end(), [](const EdgeSet& a, const EdgeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

EnumLockedResult enumerate_locked(const Graph& g, std::optional<long long> limit) {
  require_locked_host(g);
  if (g.n > 24) throw ScaleError("locked enumeration limited to n <= 24 vertices");
  EnumLockedResult res;

  std::vector<uint32_t> adj(static_cast<size_t>(g.n), 0);
  for (const Edge& e : g.edges) {
    adj[static_cast<size_t>(e.u)] |= uint32_t{1} << e.v;
    adj[static_cast<size_t>(e.v)] |= uint32_t{1} << e.u;
  }

  std::vector<VertexSet> found;
  auto visit = [&](uint32_t s) {
    const int size = static_cast<int>(std::popcount(s));
    if (size < 3 || size > g.n - 1) return;
    VertexSet u;
    for (int v = 0; v < g.n; ++v)
      if (s & (uint32_t{1} << v)) u.push_back(v);
    if (is_locked(g, u).locked) found.push_back(std::move(u));
  };

  // Grow connected induced vertex sets; each set is reached exactly once,
  // rooted at its minimum vertex, by banning processed extension vertices.
  auto grow = [&](auto&& self, uint32_t s, uint32_t ext, uint32_t banned) -> void {
    visit(s);
    while (ext) {
      const int v = std::countr_zero(ext);
      const uint32_t bit = uint32_t{1} << v;
      ext &= ~bit;
      const uint32_t ns = s | bit;
      const uint32_t nbanned = banned | bit;
      const uint32_t next = (ext | (adj[static_cast<size_t>(v)] & ~nbanned)) & ~ns;
      self(self, ns, next, nbanned);
      banned = nbanned;
    }
  };
  for (int root = 0; root < g.n; ++root) {
    const uint32_t below = (uint32_t{1} << root) - 1;
    const uint32_t bit = uint32_t{1} << root;
    grow(grow, bit, adj[static_cast<size_t>(root)] & ~below & ~bit, below | bit);
  }

  std::sort(found.begin(), found.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (VertexSet& u : found) {
    if (limit && static_cast<long long>(res.items.size()) >= *limit) {
      res.truncated = true;
      break;
    }
    LockedSubgraph ls;
    ls.eh = induced_edges(g, u);
    ls.nh = static_cast<int>(u.size());
    ls.mh = static_cast<int>(ls.eh.size());
    ls.u = std::move(u);
    res.items.push_back(std::move(ls));
  }
  return res;
}

bool complement_connectivity_counting_check(const Graph& g, const VertexSet& u,
                                            const EdgeSet& l1, const EdgeSet& l2) {
  check_vertex_set(g, u);
  const EdgeSet eh = induced_edges(g, u);
  if (!is_two_connected(g, eh))
    throw DomainError("counting check requires a 2-connected induced subgraph");
  EdgeSet all(static_cast<size_t>(g.m()));
  for (int id = 0; id < g.m(); ++id) all[static_cast<size_t>(id)] = id;
  EdgeSet rest;
  std::set_difference(all.begin(), all.end(), eh.begin(), eh.end(), std::back_inserter(rest));
  if (l1.empty() || l2.empty()) throw DomainError("both partition parts must be nonempty");
  EdgeSet merged;
  std::merge(l1.begin(), l1.end(), l2.begin(), l2.end(), std::back_inserter(merged));
  if (merged != rest)
    throw DomainError("partition parts must split E \\ E(U) exactly");

  auto covered = [&](const EdgeSet& part) {
    std::vector<bool> seen(static_cast<size_t>(g.n), false);
    for (int v : u) seen[static_cast<size_t>(v)] = true;
    for (int id : part) {
      seen[static_cast<size_t>(g.edges[static_cast<size_t>(id)].u)] = true;
      seen[static_cast<size_t>(g.edges[static_cast<size_t>(id)].v)] = true;
    }
    int c = 0;
    for (bool b : seen)
      if (b) ++c;
    return c;
  };
  const int nh = static_cast<int>(u.size());
  return nh + g.n < covered(l1) + covered(l2);
}

}  // namespace subtour
