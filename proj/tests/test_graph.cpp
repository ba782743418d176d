#include <doctest.h>

#include <algorithm>

#include "subtour/errors.hpp"
#include "subtour/graph.hpp"
#include "test_util.hpp"

using namespace subtour;
using testutil::load_fixture;

TEST_SUITE("graph") {

TEST_CASE("edge-list parsing: comments, blanks, weights, 1-based labels") {
  const Graph g = parse_graph("# header\n\n3 3\n1 2\n2 3 5/2\n3 1\n");
  CHECK(g.n == 3);
  CHECK(g.m() == 3);
  CHECK(g.edges[1].u == 1);
  CHECK(g.edges[1].v == 2);
  CHECK(g.edges[1].w == Rat(5, 2));
  CHECK(g.edges[0].w == 1);
}

TEST_CASE("parsing rejects malformed documents with 1-based line numbers") {
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("2 1\n1 3\n"), ParseError);   // vertex out of range
  CHECK_THROWS_AS(parse_graph("2 2\n1 2\n"), ParseError);   // missing edge line
  CHECK_THROWS_AS(parse_graph("2 1\n1 2 0/0\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("x y\n"), ParseError);
  try {
    parse_graph("3 2\n1 2\n4 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);  // offending line
  }
}

TEST_CASE("format/parse round trip preserves the graph") {
  const Graph g = load_fixture("prism.graph");
  const Graph h = parse_graph(format_graph(g));
  REQUIRE(h.n == g.n);
  REQUIRE(h.m() == g.m());
  for (int e = 0; e < g.m(); ++e) {
    CHECK(h.edges[e].u == g.edges[e].u);
    CHECK(h.edges[e].v == g.edges[e].v);
    CHECK(h.edges[e].w == g.edges[e].w);
  }
}

TEST_CASE("fixtures match the builders edge for edge") {
  const auto same = [](const Graph& a, const Graph& b) {
    if (a.n != b.n || a.m() != b.m()) return false;
    for (int e = 0; e < a.m(); ++e)
      if (std::minmax(a.edges[e].u, a.edges[e].v) !=
          std::minmax(b.edges[e].u, b.edges[e].v))
        return false;
    return true;
  };
  CHECK(same(load_fixture("k4.graph"), make_complete(4)));
  CHECK(same(load_fixture("k5.graph"), make_complete(5)));
  CHECK(same(load_fixture("k6.graph"), make_complete(6)));
  CHECK(same(load_fixture("c4.graph"), make_cycle(4)));
  CHECK(same(load_fixture("c5.graph"), make_cycle(5)));
  CHECK(same(load_fixture("triangle.graph"), make_complete(3)));
  CHECK(same(load_fixture("prism.graph"), make_prism()));
  CHECK(same(load_fixture("wheel5.graph"), make_wheel(4)));
  CHECK(same(load_fixture("petersen.graph"), make_petersen()));
}

TEST_CASE("degree counts loops twice") {
  Graph g = make_graph(2, {{0, 1}});
  g.edges.push_back({1, 0, 0, Rat(1)});  // loop at vertex 0
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 1);
}

TEST_CASE("delta and induced_edges partition the incident structure") {
  const Graph g = make_prism();  // triangles {0,1,2},{3,4,5}, matching 03,14,25
  const VertexSet top = {0, 1, 2};
  CHECK(delta(g, top) == EdgeSet{6, 7, 8});
  CHECK(induced_edges(g, top) == EdgeSet{0, 1, 2});
  CHECK(delta(g, {0}) == EdgeSet{0, 1, 6});
  CHECK_THROWS_AS(delta(g, {}), DomainError);
  CHECK_THROWS_AS(delta(g, {0, 1, 2, 3, 4, 5}), DomainError);
  CHECK_THROWS_AS(delta(g, {0, 9}), DomainError);
}

TEST_CASE("connected components of edge-induced subgraphs are canonical") {
  const Graph g = load_fixture("bridge.graph");  // triangles {0,1,2},{3,4,5} + bridge
  const auto comps = connected_components(g, {0, 1, 2, 3, 4, 5});
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet{0, 1, 2});
  CHECK(comps[1] == VertexSet{3, 4, 5});
  CHECK(!is_connected_subgraph(g, {}));
  CHECK(is_connected_subgraph(g, {0, 1, 2, 6}));
}

TEST_CASE("two-connectivity of edge sets ignores loops and needs 3 vertices") {
  const Graph g = make_complete(4);
  CHECK(is_two_connected(g, {0, 1, 3}));       // triangle 0-1-2
  CHECK(!is_two_connected(g, {0, 1}));         // path, cut vertex
  CHECK(!is_two_connected(g, {0}));            // 2 vertices only
  CHECK(is_two_connected(g));                  // the whole K4
  CHECK(!is_two_connected(load_fixture("bridge.graph")));
}

TEST_CASE("bridges and articulation vertices on the bridge fixture") {
  const Graph g = load_fixture("bridge.graph");
  CHECK(bridges(g) == EdgeSet{6});
  CHECK(articulation_vertices(g) == std::vector<int>{2, 3});
  CHECK(bridges(make_prism()).empty());
  CHECK(articulation_vertices(make_prism()).empty());
}

TEST_CASE("simple/loopless predicates and the describable shape") {
  Graph g = make_graph(3, {{0, 1}, {0, 1}, {1, 2}, {2, 0}});
  CHECK(!is_simple(g));
  CHECK(!has_loops(g));
  CHECK(is_describable(make_complete(4)));
  CHECK(is_describable(make_cycle(4)));  // min degree 2 is still describable
  CHECK(!is_describable(load_fixture("bridge.graph")));
  CHECK_THROWS_AS(require_describable(load_fixture("bridge.graph"), "test"),
                  DomainError);
}

TEST_CASE("graphic and dual rank match |V(f)| - c and |f| - r(E) + r(E\\f)") {
  const Graph g = make_complete(4);
  CHECK(graphic_rank(g, {0, 1, 2, 3, 4, 5}) == 3);   // spanning connected
  CHECK(graphic_rank(g, {0, 1, 3}) == 2);            // a triangle
  CHECK(graphic_rank(g, {}) == 0);
  CHECK(dual_rank(g, {0, 1, 3}) == 3);               // 3 - 3 + rank(star at 3)
  CHECK(dual_rank(g, {0, 1, 2, 3, 4, 5}) == 3);      // m - n + 1 cycles
  CHECK(edge_complement(g, {0, 2, 4}) == EdgeSet{1, 3, 5});
}

TEST_CASE("spanning tree counts: complete graphs obey n^(n-2), prism has 75") {
  CHECK(spanning_trees(make_complete(4)).size() == 16);
  CHECK(spanning_trees(make_complete(5)).size() == 125);
  CHECK(spanning_trees(make_prism()).size() == 75);
  CHECK(spanning_trees(make_cycle(5)).size() == 5);
  const auto trees = spanning_trees(make_complete(4));
  for (const EdgeSet& t : trees) CHECK(is_spanning_tree(make_complete(4), t));
  CHECK(std::is_sorted(trees.begin(), trees.end()));
  CHECK_THROWS_AS(spanning_trees(make_complete(5), 100), ScaleError);
}

TEST_CASE("Hamilton circuit counts: (n-1)!/2 on complete hosts, 0 on Petersen") {
  CHECK(hamilton_circuits(make_complete(4)).size() == 3);
  CHECK(hamilton_circuits(make_complete(5)).size() == 12);
  CHECK(hamilton_circuits(make_complete(6)).size() == 60);
  CHECK(hamilton_circuits(make_prism()).size() == 3);
  CHECK(hamilton_circuits(make_wheel(4)).size() == 4);
  CHECK(hamilton_circuits(make_petersen()).empty());
  CHECK(hamilton_circuits(make_cycle(5)).size() == 1);
}

TEST_CASE("char_vector and vertex_support are mutually consistent") {
  const Graph g = make_prism();
  const EdgeSet f = {0, 6};  // edges 1-2 and 1-4
  const QPoint x = char_vector(g, f);
  CHECK(sum_over(x, f) == 2);
  CHECK(support(x) == std::vector<int>{0, 6});
  CHECK(vertex_support(g, f) == VertexSet{0, 1, 3});
}

}  // TEST_SUITE
