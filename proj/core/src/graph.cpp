#include "subtour/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "subtour/errors.hpp"

namespace subtour {

namespace {

bool set_contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

void check_canonical(const std::vector<int>& s, const std::string& who) {
  for (size_t i = 1; i < s.size(); ++i)
    if (s[i - 1] >= s[i]) throw DomainError(who + ": set is not sorted-unique");
}

// Union-find over vertex ids.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

}  // namespace

int Graph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

QPoint Graph::weights() const {
  QPoint w;
  w.reserve(edges.size());
  for (const Edge& e : edges) w.push_back(e.w);
  return w;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  Graph g;
  int edges_seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank / comment-only line
    ls.clear();
    ls.seekg(0);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw ParseError("line " + std::to_string(lineno) + ": expected header 'n m'");
      std::string extra;
      if (ls >> extra)
        throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra +
                         "' after header");
      g.n = n;
      continue;
    }
    if (edges_seen == m)
      throw ParseError("line " + std::to_string(lineno) + ": more than " + std::to_string(m) +
                       " edge lines");
    int u = 0, v = 0;
    if (!(ls >> u >> v))
      throw ParseError("line " + std::to_string(lineno) + ": expected edge 'u v [w]'");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError("line " + std::to_string(lineno) + ": vertex out of range 1.." +
                       std::to_string(n));
    Edge e;
    e.id = edges_seen;
    e.u = u - 1;
    e.v = v - 1;
    std::string wtok;
    if (ls >> wtok) {
      try {
        e.w = parse_rational(wtok);
      } catch (const ParseError& ex) {
        throw ParseError("line " + std::to_string(lineno) + ": " + ex.what());
      }
      std::string extra;
      if (ls >> extra)
        throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    }
    g.edges.push_back(e);
    ++edges_seen;
  }
  if (n < 0) throw ParseError("missing header line 'n m'");
  if (edges_seen != m)
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " +
                     std::to_string(edges_seen));
  return g;
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n << " " << g.m() << "\n";
  for (const Edge& e : g.edges) {
    out << (e.u + 1) << " " << (e.v + 1);
    if (e.w != 1) out << " " << rat_to_string(e.w);
    out << "\n";
  }
  return out.str();
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g;
  g.n = n;
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw DomainError("make_graph: endpoint out of range");
    Edge e;
    e.id = g.m();
    e.u = u;
    e.v = v;
    g.edges.push_back(e);
  }
  return g;
}

Graph make_complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return make_graph(n, es);
}

Graph make_cycle(int n) {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return make_graph(n, es);
}

Graph make_prism() {
  return make_graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph make_wheel(int rim) {
  if (rim < 3) throw DomainError("make_wheel: rim must have >= 3 vertices");
  std::vector<std::pair<int, int>> es;
  for (int v = 1; v <= rim; ++v) es.emplace_back(0, v);
  for (int v = 1; v <= rim; ++v) es.emplace_back(v, v == rim ? 1 : v + 1);
  return make_graph(rim + 1, es);
}

Graph make_petersen() {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < 5; ++v) es.emplace_back(v, (v + 1) % 5);   // outer cycle
  for (int v = 0; v < 5; ++v) es.emplace_back(v, v + 5);         // spokes
  for (int v = 0; v < 5; ++v) es.emplace_back(5 + v, 5 + (v + 2) % 5);  // pentagram
  return make_graph(10, es);
}

void check_vertex_set(const Graph& g, const VertexSet& u) {
  check_canonical(u, "vertex set");
  if (!u.empty() && (u.front() < 0 || u.back() >= g.n))
    throw DomainError("vertex set: vertex out of range");
}

EdgeSet delta(const Graph& g, const VertexSet& u) {
  check_vertex_set(g, u);
  if (u.empty() || static_cast<int>(u.size()) == g.n)
    throw DomainError("delta: U must be nonempty and proper");
  EdgeSet out;
  for (const Edge& e : g.edges) {
    const bool iu = set_contains(u, e.u), iv = set_contains(u, e.v);
    if (iu != iv) out.push_back(e.id);
  }
  return out;
}

EdgeSet induced_edges(const Graph& g, const VertexSet& u) {
  check_vertex_set(g, u);
  EdgeSet out;
  for (const Edge& e : g.edges)
    if (set_contains(u, e.u) && set_contains(u, e.v)) out.push_back(e.id);
  return out;
}

VertexSet vertex_support(const Graph& g, const EdgeSet& f) {
  check_canonical(f, "edge set");
  std::vector<bool> seen(static_cast<size_t>(g.n), false);
  for (int id : f) {
    if (id < 0 || id >= g.m()) throw DomainError("edge set: edge id out of range");
    seen[static_cast<size_t>(g.edges[static_cast<size_t>(id)].u)] = true;
    seen[static_cast<size_t>(g.edges[static_cast<size_t>(id)].v)] = true;
  }
  VertexSet out;
  for (int v = 0; v < g.n; ++v)
    if (seen[static_cast<size_t>(v)]) out.push_back(v);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, const EdgeSet& f) {
  UnionFind uf(g.n);
  for (int id : f) {
    if (id < 0 || id >= g.m()) throw DomainError("edge set: edge id out of range");
    uf.unite(g.edges[static_cast<size_t>(id)].u, g.edges[static_cast<size_t>(id)].v);
  }
  const VertexSet covered = vertex_support(g, f);
  std::map<int, VertexSet> comps;
  for (int v : covered) comps[uf.find(v)].push_back(v);
  std::vector<VertexSet> out;
  for (auto& [root, vs] : comps) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected_subgraph(const Graph& g, const EdgeSet& f) {
  return connected_components(g, f).size() == 1;
}

namespace {

// Articulation vertices of the edge-induced subgraph (loops ignored, parallel
// edges honored by skipping only the entering tree edge id).
std::vector<int> articulation_of(const Graph& g, const EdgeSet& f) {
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(g.n));  // (other, edge id)
  for (int id : f) {
    const Edge& e = g.edges[static_cast<size_t>(id)];
    if (e.is_loop()) continue;
    adj[static_cast<size_t>(e.u)].emplace_back(e.v, e.id);
    adj[static_cast<size_t>(e.v)].emplace_back(e.u, e.id);
  }
  std::vector<int> disc(static_cast<size_t>(g.n), -1), low(static_cast<size_t>(g.n), 0);
  std::vector<bool> cut(static_cast<size_t>(g.n), false);
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int in_edge) {
    disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
    int children = 0;
    for (const auto& [to, id] : adj[static_cast<size_t>(v)]) {
      if (id == in_edge) continue;
      if (disc[static_cast<size_t>(to)] != -1) {
        low[static_cast<size_t>(v)] =
            std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(to)]);
        continue;
      }
      dfs(to, id);
      low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(to)]);
      if (in_edge != -1 && low[static_cast<size_t>(to)] >= disc[static_cast<size_t>(v)])
        cut[static_cast<size_t>(v)] = true;
      ++children;
    }
    if (in_edge == -1 && children > 1) cut[static_cast<size_t>(v)] = true;
  };
  for (int v = 0; v < g.n; ++v)
    if (disc[static_cast<size_t>(v)] == -1 && !adj[static_cast<size_t>(v)].empty()) dfs(v, -1);
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (cut[static_cast<size_t>(v)]) out.push_back(v);
  return out;
}

}  // namespace

bool is_two_connected(const Graph& g, const EdgeSet& f) {
  EdgeSet no_loops;
  for (int id : f)
    if (!g.edges[static_cast<size_t>(id)].is_loop()) no_loops.push_back(id);
  const VertexSet covered = vertex_support(g, no_loops);
  if (covered.size() < 3) return false;
  if (!is_connected_subgraph(g, no_loops)) return false;
  return articulation_of(g, no_loops).empty();
}

bool is_two_connected(const Graph& g) {
  EdgeSet all(static_cast<size_t>(g.m()));
  std::iota(all.begin(), all.end(), 0);
  EdgeSet no_loops;
  for (int id : all)
    if (!g.edges[static_cast<size_t>(id)].is_loop()) no_loops.push_back(id);
  if (static_cast<int>(vertex_support(g, no_loops).size()) != g.n) return false;
  return is_two_connected(g, no_loops);
}

EdgeSet bridges(const Graph& g) {
  // Standard lowpoint bridge scan, parallel-aware via edge-id skip.
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(g.n));
  for (const Edge& e : g.edges) {
    if (e.is_loop()) continue;
    adj[static_cast<size_t>(e.u)].emplace_back(e.v, e.id);
    adj[static_cast<size_t>(e.v)].emplace_back(e.u, e.id);
  }
  std::vector<int> disc(static_cast<size_t>(g.n), -1), low(static_cast<size_t>(g.n), 0);
  EdgeSet out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int in_edge) {
    disc[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = timer++;
    for (const auto& [to, id] : adj[static_cast<size_t>(v)]) {
      if (id == in_edge) continue;
      if (disc[static_cast<size_t>(to)] != -1) {
        low[static_cast<size_t>(v)] =
            std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(to)]);
        continue;
      }
      dfs(to, id);
      low[static_cast<size_t>(v)] = std::min(low[static_cast<size_t>(v)], low[static_cast<size_t>(to)]);
      if (low[static_cast<size_t>(to)] > disc[static_cast<size_t>(v)]) out.push_back(id);
    }
  };
  for (int v = 0; v < g.n; ++v)
    if (disc[static_cast<size_t>(v)] == -1) dfs(v, -1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> articulation_vertices(const Graph& g) {
  EdgeSet all(static_cast<size_t>(g.m()));
  std::iota(all.begin(), all.end(), 0);
  return articulation_of(g, all);
}

bool is_simple(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges) {
    if (e.is_loop()) return false;
    const auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) return false;
  }
  return true;
}

bool has_loops(const Graph& g) {
  for (const Edge& e : g.edges)
    if (e.is_loop()) return true;
  return false;
}

bool is_describable(const Graph& g) {
  return g.n >= 3 && is_simple(g) && is_two_connected(g);
}

void require_describable(const Graph& g, const std::string& who) {
  if (!is_describable(g))
    throw DomainError(who + ": graph must be simple, loopless, 2-connected with n >= 3 "
                            "(run preprocessing first)");
}

int graphic_rank(const Graph& g, const EdgeSet& f) {
  check_canonical(f, "edge set");
  UnionFind uf(g.n);
  int covered = static_cast<int>(vertex_support(g, f).size());
  int comps = 0;
  std::vector<bool> root_seen(static_cast<size_t>(g.n), false);
  for (int id : f) uf.unite(g.edges[static_cast<size_t>(id)].u, g.edges[static_cast<size_t>(id)].v);
  for (int v : vertex_support(g, f)) {
    const int r = uf.find(v);
    if (!root_seen[static_cast<size_t>(r)]) {
      root_seen[static_cast<size_t>(r)] = true;
      ++comps;
    }
  }
  return covered - comps;
}

EdgeSet edge_complement(const Graph& g, const EdgeSet& f) {
  check_canonical(f, "edge set");
  EdgeSet out;
  size_t k = 0;
  for (int id = 0; id < g.m(); ++id) {
    if (k < f.size() && f[k] == id) {
      ++k;
      continue;
    }
    out.push_back(id);
  }
  return out;
}

int dual_rank(const Graph& g, const EdgeSet& f) {
  EdgeSet all(static_cast<size_t>(g.m()));
  std::iota(all.begin(), all.end(), 0);
  return static_cast<int>(f.size()) - graphic_rank(g, all) + graphic_rank(g, edge_complement(g, f));
}

QPoint char_vector(const Graph& g, const EdgeSet& f) {
  QPoint x = zero_point(g.m());
  for (int id : f) {
    if (id < 0 || id >= g.m()) throw DomainError("char_vector: edge id out of range");
    x[static_cast<size_t>(id)] = 1;
  }
  return x;
}

bool is_spanning_tree(const Graph& g, const EdgeSet& f) {
  if (static_cast<int>(f.size()) != g.n - 1) return false;
  UnionFind uf(g.n);
  for (int id : f) {
    const Edge& e = g.edges[static_cast<size_t>(id)];
    if (e.is_loop() || !uf.unite(e.u, e.v)) return false;
  }
  return true;
}

std::vector<EdgeSet> spanning_trees(const Graph& g, size_t max_count) {
  // Grow partial forests edge id by edge id; prune when the remaining edges
  // cannot complete a spanning tree (connectivity of the contracted rest).
  std::vector<EdgeSet> out;
  EdgeSet current;
  std::function<void(int, UnionFind&, int)> rec = [&](int next_id, UnionFind& uf, int joined) {
    if (joined == g.n - 1) {
      out.push_back(current);
      if (out.size() > max_count) throw ScaleError("spanning_trees: more than " +
                                                   std::to_string(max_count) + " trees");
      return;
    }
    if (next_id >= g.m()) return;
    // Feasibility: edges from next_id on, plus current forest, must connect V.
    {
      UnionFind probe = uf;
      int j = joined;
      for (int id = next_id; id < g.m() && j < g.n - 1; ++id) {
        const Edge& e = g.edges[static_cast<size_t>(id)];
        if (!e.is_loop() && probe.unite(e.u, e.v)) ++j;
      }
      if (j < g.n - 1) return;
    }
    const Edge& e = g.edges[static_cast<size_t>(next_id)];
    if (!e.is_loop() && uf.find(e.u) != uf.find(e.v)) {
      UnionFind with = uf;
      with.unite(e.u, e.v);
      current.push_back(next_id);
      rec(next_id + 1, with, joined + 1);
      current.pop_back();
    }
    rec(next_id + 1, uf, joined);
  };
  if (g.n <= 0) return out;
  if (g.n == 1) return {EdgeSet{}};
  UnionFind uf(g.n);
  rec(0, uf, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeSet> hamilton_circuits(const Graph& g) {
  if (g.n > 10) throw ScaleError("hamilton_circuits: n > 10");
  if (g.n < 3) return {};
  // Adjacency by minimum edge id per pair plus multi-edge awareness: a circuit
  // is an edge SET, so parallel edges give distinct circuits; enumerate vertex
  // orders, then all edge choices along the order.
  std::vector<std::vector<std::vector<int>>> ids(
      static_cast<size_t>(g.n), std::vector<std::vector<int>>(static_cast<size_t>(g.n)));
  for (const Edge& e : g.edges)
    if (!e.is_loop()) {
      ids[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)].push_back(e.id);
      ids[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)].push_back(e.id);
    }
  std::set<EdgeSet> found;
  std::vector<int> order{0};
  std::vector<bool> used(static_cast<size_t>(g.n), false);
  used[0] = true;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(order.size()) == g.n) {
      if (ids[static_cast<size_t>(order.back())][0].empty()) return;
      // Choose one edge id per consecutive pair (including the closing pair);
      // parallel edges give distinct circuits as edge sets.
      EdgeSet circuit;
      std::function<void(size_t)> pick = [&](size_t i) {
        const int a = order[i];
        const int b = (i + 1 < order.size()) ? order[i + 1] : order[0];
        for (int id : ids[static_cast<size_t>(a)][static_cast<size_t>(b)]) {
          circuit.push_back(id);
          if (i == order.size() - 1) {
            EdgeSet c = circuit;
            std::sort(c.begin(), c.end());
            found.insert(std::move(c));
          } else {
            pick(i + 1);
          }
          circuit.pop_back();
        }
      };
      pick(0);
      return;
    }
    const int at = order.back();
    for (int to = 0; to < g.n; ++to) {
      if (used[static_cast<size_t>(to)] || ids[static_cast<size_t>(at)][static_cast<size_t>(to)].empty())
        continue;
      used[static_cast<size_t>(to)] = true;
      order.push_back(to);
      rec();
      order.pop_back();
      used[static_cast<size_t>(to)] = false;
    }
  };
  rec();
  return std::vector<EdgeSet>(found.begin(), found.end());
}

}  // namespace subtour
