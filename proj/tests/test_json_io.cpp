#include <doctest.h>

#include "subtour/describe.hpp"
#include "subtour/errors.hpp"
#include "subtour/graph.hpp"
#include "subtour/json_io.hpp"
#include "subtour/locked.hpp"
#include "subtour/reduce.hpp"
#include "subtour/verify.hpp"
#include "test_util.hpp"

using namespace subtour;

TEST_SUITE("json_io") {

TEST_CASE("every document carries its schema tag") {
  const Graph g = make_complete(4);
  CHECK(graph_to_json(g).find("\"schema\": \"graph/1\"") != std::string::npos);
  CHECK(system_to_json(full_P(g)).find("\"schema\": \"system/1\"") != std::string::npos);
  CHECK(locked_to_json(enumerate_locked(g)).find("\"schema\": \"locked/1\"") !=
        std::string::npos);
  const auto [r, t] = preprocess(g);
  CHECK(reduction_to_json(r, t).find("\"schema\": \"reduce/1\"") != std::string::npos);
  CHECK(point_to_json(QPoint(3, Rat(1, 2))).find("\"schema\": \"point/1\"") !=
        std::string::npos);
  CHECK(suites_to_json(run_suites(g, "thm2.6")).find("\"schema\": \"verify/1\"") !=
        std::string::npos);
}

TEST_CASE("constraint systems round-trip exactly") {
  for (const ConstraintSystem& sys :
       {full_P(make_complete(4)), Q_description(make_prism()),
        K_description(make_complete(5))}) {
    const std::string doc = system_to_json(sys);
    const ConstraintSystem back = system_from_json(doc);
    REQUIRE(back.dim == sys.dim);
    REQUIRE(back.rows.size() == sys.rows.size());
    for (size_t i = 0; i < sys.rows.size(); ++i) {
      CHECK(back.rows[i].name == sys.rows[i].name);
      CHECK(back.rows[i].coeffs == sys.rows[i].coeffs);
      CHECK(back.rows[i].sense == sys.rows[i].sense);
      CHECK(back.rows[i].rhs == sys.rows[i].rhs);
    }
    CHECK(system_to_json(back) == doc);  // canonical form is a fixpoint
  }
}

TEST_CASE("points round-trip with rational strings and accept plain integers") {
  const QPoint x = {Rat(1, 2), Rat(-3), Rat(0), Rat(22, 7)};
  const QPoint back = point_from_json(point_to_json(x), 4);
  CHECK(back == x);
  const QPoint ints = point_from_json(
      R"({"schema":"point/1","values":[1, 0, "2/3"]})", 3);
  CHECK(ints == QPoint{Rat(1), Rat(0), Rat(2, 3)});
}

TEST_CASE("point parsing enforces schema, shape, and dimension") {
  CHECK_THROWS_AS(point_from_json("{}", 3), ParseError);
  CHECK_THROWS_AS(point_from_json("not json", 3), ParseError);
  CHECK_THROWS_AS(point_from_json(R"({"schema":"point/2","values":[1]})", 1),
                  ParseError);
  CHECK_THROWS_AS(point_from_json(R"({"schema":"point/1","values":[1,2]})", 3),
                  ParseError);
  CHECK_THROWS_AS(point_from_json(R"({"schema":"point/1","values":["x"]})", 1),
                  ParseError);
  CHECK_THROWS_AS(point_from_json(R"({"schema":"point/1","values":[1.5]})", 1),
                  ParseError);
  // Dimension check disabled with a negative expectation.
  CHECK(point_from_json(R"({"schema":"point/1","values":[1,2]})", -1).size() == 2);
}

TEST_CASE("system parsing rejects malformed documents") {
  CHECK_THROWS_AS(system_from_json("[]"), ParseError);
  CHECK_THROWS_AS(system_from_json(R"({"schema":"system/9"})"), ParseError);
}

TEST_CASE("vertex labels and edge ids are 1-based on the wire") {
  const Graph g = make_complete(4);
  const std::string locked = locked_to_json(enumerate_locked(g));
  // The first locked set is the triangle {1,2,3} in 1-based labels with
  // 1-based edge ids {1,2,4} (edges 12, 13, 23).
  CHECK(locked.find("\"u\": [\n        1,\n        2,\n        3\n      ]") !=
        std::string::npos);
  CHECK(locked.find("\"edges\": [\n        1,\n        2,\n        4\n      ]") !=
        std::string::npos);
  // Coefficients key rows by 1-based edge id: nonneg_e1 touches edge 1.
  const std::string sys = system_to_json(Q_description(g));
  CHECK(sys.find("\"name\": \"nonneg_e1\"") != std::string::npos);
  CHECK(sys.find("\"sense\": \">=\"") != std::string::npos);
}

TEST_CASE("serialization is deterministic") {
  const Graph g = make_prism();
  CHECK(system_to_json(Q_description(g)) == system_to_json(Q_description(g)));
  CHECK(locked_to_json(enumerate_locked(g)) == locked_to_json(enumerate_locked(g)));
}

}  // TEST_SUITE
