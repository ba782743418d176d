#include "subtour/reduce.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "subtour/errors.hpp"

namespace subtour {

namespace {

// Mutable working state over ORIGINAL ids/labels.
struct Work {
  const Graph* g;
  std::vector<bool> edge_alive;
  std::vector<bool> vertex_alive;
  std::vector<int> endpoint_u, endpoint_v;  // current endpoints per original edge
  std::vector<Rat> weight;                  // current weight per original edge
  std::vector<int> value_source;            // original edge -> edge whose value it inherits, or -1 (zero)

  explicit Work(const Graph& graph)
      : g(&graph),
        edge_alive(static_cast<size_t>(graph.m()), true),
        vertex_alive(static_cast<size_t>(graph.n), true),
        value_source(static_cast<size_t>(graph.m())) {
    for (const Edge& e : graph.edges) {
      endpoint_u.push_back(e.u);
      endpoint_v.push_back(e.v);
      weight.push_back(e.w);
    }
    std::iota(value_source.begin(), value_source.end(), 0);
  }

  int alive_vertex_count() const {
    int c = 0;
    for (bool b : vertex_alive)
      if (b) ++c;
    return c;
  }

  Graph alive_graph() const {
    // Alive subgraph with original labels compacted; used only for scans.
    Graph out;
    out.n = g->n;  // keep labels; dead vertices are isolated
    for (int id = 0; id < g->m(); ++id) {
      if (!edge_alive[static_cast<size_t>(id)]) continue;
      Edge e;
      e.id = out.m();
      e.u = endpoint_u[static_cast<size_t>(id)];
      e.v = endpoint_v[static_cast<size_t>(id)];
      e.w = weight[static_cast<size_t>(id)];
      out.edges.push_back(e);
    }
    return out;
  }
};

}  // namespace

std::pair<Graph, ReductionTrace> preprocess(const Graph& g) {
  ReductionTrace trace;
  trace.orig_n = g.n;
  trace.orig_m = g.m();
  Work w(g);

  auto finish_degenerate = [&]() {
    trace.status = ReduceStatus::DegenerateSmall;
    return std::make_pair(Graph{}, trace);
  };
  auto finish_infeasible = [&](ReductionStep step) {
    trace.status = ReduceStatus::InfeasibleBridge;
    step.kind = ReductionKind::SplitBlock;
    trace.steps.push_back(step);
    return std::make_pair(Graph{}, trace);
  };

  for (;;) {
    if (w.alive_vertex_count() < 3) return finish_degenerate();

    // Loops first.
    {
      bool any = false;
      for (int id = 0; id < g.m(); ++id) {
        if (!w.edge_alive[static_cast<size_t>(id)]) continue;
        if (w.endpoint_u[static_cast<size_t>(id)] != w.endpoint_v[static_cast<size_t>(id)]) continue;
        w.edge_alive[static_cast<size_t>(id)] = false;
        w.value_source[static_cast<size_t>(id)] = -1;
        ReductionStep s;
        s.kind = ReductionKind::DeleteLoop;
        s.removed_edge = id;
        trace.steps.push_back(s);
        any = true;
      }
      if (any) continue;
    }

    // Connectivity / cut vertex / bridge scan on the alive subgraph. Any of
    // them empties the tour polytope.
    {
      const Graph alive = w.alive_graph();
      EdgeSet all(static_cast<size_t>(alive.m()));
      std::iota(all.begin(), all.end(), 0);
      // Disconnected: alive vertices not all in one component.
      std::vector<VertexSet> comps = connected_components(alive, all);
      int covered = 0;
      for (const VertexSet& c : comps) covered += static_cast<int>(c.size());
      if (comps.size() != 1 || covered != w.alive_vertex_count()) {
        ReductionStep s;  // no single witness edge/vertex: the graph is split already
        return finish_infeasible(s);
      }
      const EdgeSet bs = bridges(alive);
      if (!bs.empty()) {
        ReductionStep s;
        // Map the alive-graph edge id back to the original id.
        int seen = -1, orig = -1;
        for (int id = 0; id < g.m() && orig < 0; ++id) {
          if (!w.edge_alive[static_cast<size_t>(id)]) continue;
          if (++seen == bs[0]) orig = id;
        }
        s.removed_edge = orig;
        return finish_infeasible(s);
      }
      const std::vector<int> cuts = articulation_vertices(alive);
      if (!cuts.empty()) {
        ReductionStep s;
        s.removed_vertex = cuts[0];
        return finish_infeasible(s);
      }
    }

    // Parallel classes: keep lowest id, weight = class minimum.
    {
      std::map<std::pair<int, int>, int> first;  // endpoints -> kept original id
      bool any = false;
      for (int id = 0; id < g.m(); ++id) {
        if (!w.edge_alive[static_cast<size_t>(id)]) continue;
        const auto key = std::minmax(w.endpoint_u[static_cast<size_t>(id)],
                                     w.endpoint_v[static_cast<size_t>(id)]);
        auto [it, inserted] = first.emplace(key, id);
        if (inserted) continue;
        const int kept = it->second;
        w.edge_alive[static_cast<size_t>(id)] = false;
        w.value_source[static_cast<size_t>(id)] = -1;
        w.weight[static_cast<size_t>(kept)] =
            std::min(w.weight[static_cast<size_t>(kept)], w.weight[static_cast<size_t>(id)]);
        ReductionStep s;
        s.kind = ReductionKind::DeleteParallel;
        s.kept_edge = kept;
        s.removed_edge = id;
        trace.steps.push_back(s);
        any = true;
      }
      if (any) continue;
    }

    // Series contraction at the lowest-labeled degree-2 vertex.
    {
      int pick = -1;
      for (int v = 0; v < g.n && pick < 0; ++v) {
        if (!w.vertex_alive[static_cast<size_t>(v)]) continue;
        int deg = 0;
        for (int id = 0; id < g.m(); ++id) {
          if (!w.edge_alive[static_cast<size_t>(id)]) continue;
          if (w.endpoint_u[static_cast<size_t>(id)] == v) ++deg;
          if (w.endpoint_v[static_cast<size_t>(id)] == v) ++deg;
        }
        if (deg == 2) pick = v;
      }
      if (pick >= 0) {
        int e1 = -1, e2 = -1;
        for (int id = 0; id < g.m(); ++id) {
          if (!w.edge_alive[static_cast<size_t>(id)]) continue;
          if (w.endpoint_u[static_cast<size_t>(id)] == pick ||
              w.endpoint_v[static_cast<size_t>(id)] == pick) {
            if (e1 < 0)
              e1 = id;
            else
              e2 = id;
          }
        }
        // e1 < e2 by scan order: keep e1, contract e2.
        const int other2 = w.endpoint_u[static_cast<size_t>(e2)] == pick
                               ? w.endpoint_v[static_cast<size_t>(e2)]
                               : w.endpoint_u[static_cast<size_t>(e2)];
        // Contracting e2 identifies pick and other2; the lower label survives.
        const int survivor = std::min(pick, other2);
        const int removed = std::max(pick, other2);
        w.edge_alive[static_cast<size_t>(e2)] = false;
        w.value_source[static_cast<size_t>(e2)] = e1;
        w.weight[static_cast<size_t>(e1)] += w.weight[static_cast<size_t>(e2)];
        w.vertex_alive[static_cast<size_t>(removed)] = false;
        // Re-point every alive edge at `removed` to `survivor`.
        for (int id = 0; id < g.m(); ++id) {
          if (!w.edge_alive[static_cast<size_t>(id)]) continue;
          if (w.endpoint_u[static_cast<size_t>(id)] == removed)
            w.endpoint_u[static_cast<size_t>(id)] = survivor;
          if (w.endpoint_v[static_cast<size_t>(id)] == removed)
            w.endpoint_v[static_cast<size_t>(id)] = survivor;
        }
        ReductionStep s;
        s.kind = ReductionKind::ContractSeries;
        s.kept_edge = e1;
        s.removed_edge = e2;
        s.removed_vertex = removed;
        trace.steps.push_back(s);
        trace.removed_vertices.push_back(removed);
        continue;
      }
    }

    break;  // fixpoint
  }

  // Build the reduced graph: alive vertices/edges compacted in label/id order.
  Graph reduced;
  std::vector<int> vertex_new(static_cast<size_t>(g.n), -1);
  for (int v = 0; v < g.n; ++v)
    if (w.vertex_alive[static_cast<size_t>(v)]) {
      vertex_new[static_cast<size_t>(v)] = reduced.n;
      ++reduced.n;
    }
  std::vector<int> edge_new(static_cast<size_t>(g.m()), -1);
  for (int id = 0; id < g.m(); ++id) {
    if (!w.edge_alive[static_cast<size_t>(id)]) continue;
    Edge e;
    e.id = reduced.m();
    e.u = vertex_new[static_cast<size_t>(w.endpoint_u[static_cast<size_t>(id)])];
    e.v = vertex_new[static_cast<size_t>(w.endpoint_v[static_cast<size_t>(id)])];
    e.w = w.weight[static_cast<size_t>(id)];
    edge_new[static_cast<size_t>(id)] = e.id;
    reduced.edges.push_back(e);
  }

  // Sanity: the fixpoint must be simple, loopless, 2-connected, min degree 3.
  if (!is_describable(reduced))
    throw ContradictionError("preprocess: fixpoint is not simple/2-connected");
  for (int v = 0; v < reduced.n; ++v)
    if (reduced.degree(v) < 3)
      throw ContradictionError("preprocess: fixpoint has a vertex of degree < 3");

  trace.status = ReduceStatus::Reduced;
  trace.reduced_n = reduced.n;
  trace.reduced_m = reduced.m();
  // Resolve value-source chains to reduced edge ids.
  trace.lift_map.assign(static_cast<size_t>(g.m()), -1);
  for (int id = 0; id < g.m(); ++id) {
    int cur = id;
    while (cur >= 0 && !w.edge_alive[static_cast<size_t>(cur)]) {
      const int nxt = w.value_source[static_cast<size_t>(cur)];
      if (nxt == cur) break;
      cur = nxt;
    }
    trace.lift_map[static_cast<size_t>(id)] =
        (cur >= 0 && w.edge_alive[static_cast<size_t>(cur)]) ? edge_new[static_cast<size_t>(cur)]
                                                             : -1;
  }
  // Vertex map: replay the contractions through a union-find keyed on
  // original labels (each contraction united the two current labels keeping
  // the minimum, which is exactly the union-find rule below).
  {
    std::vector<int> parent(static_cast<size_t>(g.n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
      return x;
    };
    for (const ReductionStep& s : trace.steps) {
      if (s.kind != ReductionKind::ContractSeries) continue;
      // The removed vertex merged into the survivor of the contracted edge.
      const Edge& orig = g.edges[static_cast<size_t>(s.removed_edge)];
      const int a = find(orig.u), b = find(orig.v);
      const int survivor = std::min(a, b);
      parent[static_cast<size_t>(std::max(a, b))] = survivor;
    }
    trace.vertex_map.assign(static_cast<size_t>(g.n), -1);
    for (int v = 0; v < g.n; ++v)
      trace.vertex_map[static_cast<size_t>(v)] = vertex_new[static_cast<size_t>(find(v))];
  }
  return {reduced, trace};
}

QPoint lift_point(const ReductionTrace& trace, const QPoint& reduced_point) {
  if (trace.status != ReduceStatus::Reduced)
    throw DomainError("lift_point: trace status is not Reduced");
  if (static_cast<int>(reduced_point.size()) != trace.reduced_m)
    throw DomainError("lift_point: point dimension != reduced edge count");
  QPoint out = zero_point(trace.orig_m);
  for (int id = 0; id < trace.orig_m; ++id) {
    const int src = trace.lift_map[static_cast<size_t>(id)];
    if (src >= 0) out[static_cast<size_t>(id)] = reduced_point[static_cast<size_t>(src)];
  }
  return out;
}

}  // namespace subtour
