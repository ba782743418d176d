#include <doctest.h>

#include "subtour/errors.hpp"
#include "subtour/graph.hpp"
#include "subtour/verify.hpp"
#include "test_util.hpp"

using namespace subtour;
using testutil::load_fixture;

namespace {

const SuiteResult& named(const std::vector<SuiteResult>& rs, const std::string& suite) {
  for (const SuiteResult& r : rs)
    if (r.suite == suite) return r;
  REQUIRE_MESSAGE(false, "missing suite " << suite);
  static SuiteResult dummy;
  return dummy;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("canonical suite names, in canonical order") {
  CHECK(suite_names() == std::vector<std::string>{"lemma2.1", "lemma2.2", "lemma2.3",
                                                  "lemma2.4", "thm1.1", "thm2.6",
                                                  "thm2.10"});
  CHECK(is_suite_name("thm2.6"));
  CHECK(!is_suite_name("thm9.9"));
  CHECK(!is_suite_name("all"));
  CHECK_THROWS_AS(run_suite(make_complete(4), "thm9.9"), DomainError);
}

TEST_CASE("selector semantics: one suite or the whole canonical list") {
  const Graph g = make_complete(4);
  const auto all = run_suites(g, "all");
  REQUIRE(all.size() == 7);
  for (size_t i = 0; i < all.size(); ++i) CHECK(all[i].suite == suite_names()[i]);
  const auto one = run_suites(g, "thm2.6");
  REQUIRE(one.size() == 1);
  CHECK(one[0].suite == "thm2.6");
  CHECK(one[0].status == "pass");
}

TEST_CASE("frozen results on K4: everything runs and passes") {
  const auto rs = run_suites(make_complete(4), "all");
  for (const SuiteResult& r : rs) CHECK(r.status == "pass");
  CHECK(named(rs, "lemma2.1").checks == 12);
  CHECK(named(rs, "lemma2.1").detail == "12 partition checks over 4 subgraphs");
  CHECK(named(rs, "lemma2.2").detail == "both definitions agree on 4 locked sets");
  CHECK(named(rs, "lemma2.3").detail ==
        "identical vertex sets (3 vertices) for all 4 base vertices");
  CHECK(named(rs, "lemma2.4").detail ==
        "chain holds; 3 Hamilton circuits = 0-1 vertices on both descriptions");
  CHECK(named(rs, "thm1.1").detail ==
        "cut faces are facets exactly for 2 <= |U| <= n-2 (7 cuts)");
  CHECK(named(rs, "thm2.6").detail ==
        "3 extreme points decomposed; 100 union-condition tree families kept "
        "the box and cardinality rows (4 fully inside)");
  CHECK(named(rs, "thm2.10").detail == "collapsed regime confirmed (16 checks)");
}

TEST_CASE("frozen results on the prism: cut-facet suite needs a complete host") {
  const auto rs = run_suites(make_prism(), "all");
  CHECK(named(rs, "thm1.1").status == "skipped");
  CHECK(named(rs, "thm1.1").detail == "host must be a complete graph");
  CHECK(named(rs, "lemma2.1").checks == 125);
  CHECK(named(rs, "lemma2.2").detail == "both definitions agree on 11 locked sets");
  CHECK(named(rs, "thm2.6").status == "pass");
  CHECK(named(rs, "thm2.6").detail ==
        "4 extreme points decomposed; 100 union-condition tree families kept "
        "the box and cardinality rows (0 fully inside)");
  CHECK(named(rs, "thm2.10").detail == "collapsed regime confirmed (37 checks)");
}

TEST_CASE("frozen results on K5: enumeration-bound suites skip at m = 10") {
  const auto rs = run_suites(make_complete(5), "all");
  CHECK(named(rs, "lemma2.1").checks == 665);
  CHECK(named(rs, "lemma2.3").status == "pass");
  CHECK(named(rs, "lemma2.3").detail ==
        "identical vertex sets (12 vertices) for all 5 base vertices");
  CHECK(named(rs, "thm1.1").detail ==
        "cut faces are facets exactly for 2 <= |U| <= n-2 (15 cuts)");
  for (const char* s : {"lemma2.4", "thm2.6", "thm2.10"}) {
    CHECK(named(rs, s).status == "skipped");
    CHECK(named(rs, s).detail == "needs m <= 9 for vertex enumeration");
    CHECK(named(rs, s).checks == 0);
  }
}

TEST_CASE("frozen results on Petersen: only the locked-set suites run") {
  const auto rs = run_suites(make_petersen(), "all");
  CHECK(named(rs, "lemma2.1").status == "pass");
  CHECK(named(rs, "lemma2.1").checks == 10827);
  CHECK(named(rs, "lemma2.2").status == "pass");
  CHECK(named(rs, "lemma2.2").detail == "both definitions agree on 77 locked sets");
  CHECK(named(rs, "lemma2.3").status == "skipped");
  CHECK(named(rs, "lemma2.3").detail ==
        "scale: vertex enumeration limited to 12 variables");
  for (const char* s : {"lemma2.4", "thm1.1", "thm2.6", "thm2.10"})
    CHECK(named(rs, s).status == "skipped");
}

TEST_CASE("a host beyond every guard skips all seven suites") {
  const auto rs = run_suites(make_complete(11), "all");
  REQUIRE(rs.size() == 7);
  for (const SuiteResult& r : rs) {
    CAPTURE(r.suite);
    CHECK(r.status == "skipped");
    CHECK(r.checks == 0);
    CHECK(!r.detail.empty());
  }
}

TEST_CASE("suite runs are deterministic") {
  const auto a = run_suites(make_prism(), "thm2.6");
  const auto b = run_suites(make_prism(), "thm2.6");
  REQUIRE(a.size() == b.size());
  CHECK(a[0].detail == b[0].detail);
  CHECK(a[0].checks == b[0].checks);
}

}  // TEST_SUITE
