#pragma once

#include <string>
#include <vector>

#include "subtour/qpoint.hpp"
#include "subtour/rational.hpp"

namespace subtour {

// Canonical sorted-unique vertex subset (0-based internally; text formats are
// 1-based).
using VertexSet = std::vector<int>;
// Canonical sorted-unique edge-id subset.
using EdgeSet = std::vector<int>;

struct Edge {
  int id = -1;
  int u = -1;
  int v = -1;
  Rat w = 1;
  bool is_loop() const { return u == v; }
};

// Immutable undirected multigraph. Edge ids are dense 0..m-1 and stable; loops
// and parallel edges are representable.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  int m() const { return static_cast<int>(edges.size()); }
  // Degree counts loops twice.
  int degree(int v) const;
  QPoint weights() const;
};

// Edge-list text: first significant line "n m", then m lines "u v [w]" with
// 1-based vertices and optional rational weight (default 1). '#' starts a
// comment line; blank lines are ignored. Errors carry 1-based line numbers.
Graph parse_graph(const std::string& text);
Graph load_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph make_complete(int n);
Graph make_cycle(int n);
// Triangular prism: triangles {0,1,2}, {3,4,5} plus the matching 03,14,25.
Graph make_prism();
// Wheel: hub = vertex 0, rim cycle on 1..rim.
Graph make_wheel(int rim);
Graph make_petersen();

void check_vertex_set(const Graph& g, const VertexSet& u);

// Edges with exactly one endpoint in u (loops never qualify).
// u must be nonempty and proper.
EdgeSet delta(const Graph& g, const VertexSet& u);

// Edges with both endpoints in u.
EdgeSet induced_edges(const Graph& g, const VertexSet& u);

// Vertices incident to at least one edge of f.
VertexSet vertex_support(const Graph& g, const EdgeSet& f);

// Components of the edge-induced subgraph (V(f), f); vertices not covered by
// f are excluded. Components are canonical (each sorted; list sorted).
std::vector<VertexSet> connected_components(const Graph& g, const EdgeSet& f);

// True iff (V(f), f) is a single component (false when f is empty).
bool is_connected_subgraph(const Graph& g, const EdgeSet& f);

// True iff the edge-induced subgraph has >= 3 covered vertices, is connected,
// and has no cut vertex. Loops are ignored; parallel edges are honored (two
// vertices joined by parallel edges still fail the >= 3 vertices rule).
bool is_two_connected(const Graph& g, const EdgeSet& f);

// Whole-graph variant: every vertex covered, connected, >= 3 vertices, no cut
// vertex.
bool is_two_connected(const Graph& g);

// All cut edges.
EdgeSet bridges(const Graph& g);

// All cut vertices (of the whole graph; isolated vertices never qualify).
std::vector<int> articulation_vertices(const Graph& g);

bool is_simple(const Graph& g);
bool has_loops(const Graph& g);

// Shape required by the polytope builders: simple, loopless, 2-connected,
// n >= 3. (Preprocessing produces this, minus its min-degree-3 guarantee.)
bool is_describable(const Graph& g);
void require_describable(const Graph& g, const std::string& who);

// Matroid rank of f in the graphic matroid: |V(f)| - (number of components).
int graphic_rank(const Graph& g, const EdgeSet& f);
// Dual rank: |f| - r(E) + r(E \ f).
int dual_rank(const Graph& g, const EdgeSet& f);

// Complement of f within 0..m-1.
EdgeSet edge_complement(const Graph& g, const EdgeSet& f);

// All spanning trees as edge sets, each sorted, list sorted; throws
// ScaleError beyond max_count.
std::vector<EdgeSet> spanning_trees(const Graph& g, size_t max_count = 2000000);

// Characteristic vector of an edge set.
QPoint char_vector(const Graph& g, const EdgeSet& f);

bool is_spanning_tree(const Graph& g, const EdgeSet& f);

// All Hamilton circuits as edge sets (brute force over vertex orders; n <= 10).
std::vector<EdgeSet> hamilton_circuits(const Graph& g);

}  // namespace subtour
