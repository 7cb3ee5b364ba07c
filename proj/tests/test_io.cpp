#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace cospec;

TEST_CASE("parsing") {
  SUBCASE("plain") {
    const SignedGraph g = parse_graph("3 2\n0 1 +\n1 2 -\n");
    CHECK(g == SignedGraph(3, {{0, 1, +1}, {1, 2, -1}}));
  }
  SUBCASE("comments, blank lines, numeric signs") {
    const SignedGraph g = parse_graph("# a comment\n\n3 2\n# another\n0 1 +1\n1 2 -1\n");
    CHECK(g == SignedGraph(3, {{0, 1, +1}, {1, 2, -1}}));
  }
  SUBCASE("edgeless") {
    CHECK(parse_graph("4 0\n") == SignedGraph(4));
  }
}

TEST_CASE("parse failures") {
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("x y\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("2 1 9\n0 1 +\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("2 2\n0 1 +\n"), ParseError);          // too few edges
  CHECK_THROWS_AS(parse_graph("2 1\n0 1 +\n0 1 -\n"), ParseError);   // trailing content
  CHECK_THROWS_AS(parse_graph("2 1\n0 1 ?\n"), ParseError);          // bad sign
  CHECK_THROWS_AS(parse_graph("2 1\n0 1 + 3\n"), ParseError);        // extra token
  CHECK_THROWS_AS(parse_graph("2 1\n0 0 +\n"), SelfLoop);
  CHECK_THROWS_AS(parse_graph("2 2\n0 1 +\n1 0 -\n"), DuplicateEdge);
  CHECK_THROWS_AS(parse_graph("2 1\n0 2 +\n"), VertexOutOfRange);
  CHECK_THROWS_AS(load_graph_file("/nonexistent/graph.sg"), ParseError);
}

TEST_CASE("write then parse is the identity") {
  ts::TestRng rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const SignedGraph g = ts::random_graph(rng, rng.below(10), 50);
    CHECK(parse_graph(write_graph(g)) == g);
  }
  const SignedGraph fixture = ts::graph_from(ts::kGgm14);
  CHECK(parse_graph(write_graph(fixture, {"comment one", "comment two"})) == fixture);
}
