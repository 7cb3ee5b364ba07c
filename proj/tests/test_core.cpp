#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace cospec;

TEST_CASE("graph construction") {
  SUBCASE("smallest graph") {
    const SignedGraph k2(2, {{0, 1, +1}});
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.sign(0, 1) == +1);
    CHECK(k2.sign(1, 0) == +1);
  }
  SUBCASE("fixture graph matches its matrix") {
    const SignedGraph g = ts::graph_from(ts::kGm8);
    CHECK(g.order() == 8);
    CHECK(g.edge_count() == 17);
    CHECK(adjacency_matrix(g) == ts::matrix_from(ts::kGm8));
  }
  SUBCASE("rejections") {
    CHECK_THROWS_AS(SignedGraph(3, {{0, 1, +1}, {0, 1, -1}}), DuplicateEdge);
    CHECK_THROWS_AS(SignedGraph(3, {{0, 1, +1}, {1, 0, +1}}), DuplicateEdge);
    CHECK_THROWS_AS(SignedGraph(3, {{2, 2, +1}}), SelfLoop);
    CHECK_THROWS_AS(SignedGraph(3, {{0, 3, +1}}), VertexOutOfRange);
    CHECK_THROWS_AS(SignedGraph(2, {{0, -1, +1}}), VertexOutOfRange);
  }
  SUBCASE("edge order does not matter") {
    const SignedGraph a(3, {{0, 1, +1}, {1, 2, -1}});
    const SignedGraph b(3, {{2, 1, -1}, {1, 0, +1}});
    CHECK(a == b);
  }
}

TEST_CASE("adjacency matrix") {
  CHECK(adjacency_matrix(SignedGraph(3)) == IntMatrix(3, 3));
  const SignedGraph k2neg(2, {{0, 1, -1}});
  IntMatrix expected(2, 2);
  expected(0, 1) = -1;
  expected(1, 0) = -1;
  CHECK(adjacency_matrix(k2neg) == expected);
}

TEST_CASE("switching") {
  const SignedGraph k2(2, {{0, 1, +1}});
  SUBCASE("empty cut is the identity") {
    CHECK(switched(k2, {}) == k2);
    CHECK(switched(k2, {0, 1}) == k2);
  }
  SUBCASE("single-edge cut") {
    CHECK(switched(k2, {0}) == SignedGraph(2, {{0, 1, -1}}));
  }
  SUBCASE("out of range") {
    CHECK_THROWS_AS(switched(k2, {5}), VertexOutOfRange);
  }
}

TEST_CASE("switching invariants on random graphs") {
  ts::TestRng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + rng.below(7);
    const SignedGraph g = ts::random_graph(rng, n, 55);
    const SwitchingSet u = ts::random_subset(rng, n);
    const SignedGraph h = switched(g, u);

    CAPTURE(trial);
    // involution
    CHECK(switched(h, u) == g);
    // underlying graph preserved
    CHECK(underlying_graph(h) == underlying_graph(g));
    // matrix identity A' = S A S
    const IntMatrix s = switching_matrix(n, u);
    CHECK(adjacency_matrix(h) == s * adjacency_matrix(g) * s);
    // cycle signs preserved
    for (const auto& t : ts::triangles(g)) CHECK(ts::triangle_sign(h, t) == ts::triangle_sign(g, t));
    for (const auto& q : ts::quadrilaterals(g)) CHECK(ts::cycle_sign(h, q) == ts::cycle_sign(g, q));
  }
}

TEST_CASE("part degree profile") {
  const SignedGraph g = ts::graph_from(ts::kGm8);
  SUBCASE("fixture row") {
    const DegreeProfile p = part_degree_profile(g, 7, {3, 4, 5, 6});
    CHECK(p.d_plus == 2);
    CHECK(p.d_minus == 0);
    CHECK(p.net() == 2);
  }
  SUBCASE("empty part") {
    CHECK(part_degree_profile(g, 0, {}) == DegreeProfile{0, 0});
  }
  SUBCASE("star center") {
    const SignedGraph star(4, {{0, 1, +1}, {0, 2, +1}, {0, 3, +1}});
    const DegreeProfile p = part_degree_profile(star, 0, {1, 2, 3});
    CHECK(p.d_plus == 3);
    CHECK(p.net() == 3);
  }
  SUBCASE("vertex may sit inside the part") {
    const DegreeProfile p = part_degree_profile(g, 0, {0, 1, 2});
    CHECK(p.d_plus == 2);  // edges 0-1 and 0-2; no self contribution
  }
}

TEST_CASE("balance") {
  SUBCASE("all-positive graphs are balanced with empty witness") {
    const SignedGraph g = ts::graph_from(ts::kGgm8);
    const BalanceResult r = is_balanced(g);
    CHECK(r.balanced);
    CHECK(r.switching_set.empty());
  }
  SUBCASE("unbalanced triangle") {
    const SignedGraph tri(3, {{0, 1, +1}, {1, 2, +1}, {0, 2, -1}});
    const BalanceResult r = is_balanced(tri);
    CHECK_FALSE(r.balanced);
    REQUIRE(r.negative_cycle.size() == 3);
    int product = 1;
    for (std::size_t i = 0; i < r.negative_cycle.size(); ++i) {
      const int u = r.negative_cycle[i];
      const int v = r.negative_cycle[(i + 1) % r.negative_cycle.size()];
      REQUIRE(tri.has_edge(u, v));
      product *= tri.sign(u, v);
    }
    CHECK(product == -1);
  }
  SUBCASE("negative single edge is balanced") {
    const BalanceResult r = is_balanced(SignedGraph(2, {{0, 1, -1}}));
    CHECK(r.balanced);
    CHECK(r.switching_set == SwitchingSet{0});
  }
  SUBCASE("witness always verifies on random graphs") {
    ts::TestRng rng(7);
    for (int trial = 0; trial < 80; ++trial) {
      const SignedGraph g = ts::random_graph(rng, 2 + rng.below(8), 40);
      const BalanceResult r = is_balanced(g);
      if (r.balanced) {
        CHECK(switched(g, r.switching_set).all_positive());
      } else {
        REQUIRE(r.negative_cycle.size() >= 3);
        int product = 1;
        for (std::size_t i = 0; i < r.negative_cycle.size(); ++i) {
          const int u = r.negative_cycle[i];
          const int v = r.negative_cycle[(i + 1) % r.negative_cycle.size()];
          REQUIRE(g.has_edge(u, v));
          product *= g.sign(u, v);
        }
        CHECK(product == -1);
      }
    }
  }
  SUBCASE("balanced iff some switching clears all signs") {
    // brute force over all switchings as the ground truth, n <= 5
    ts::TestRng rng(19);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 2 + rng.below(4);
      const SignedGraph g = ts::random_graph(rng, n, 60, 40);
      bool any = false;
      for (unsigned mask = 0; mask < (1u << n) && !any; ++mask) {
        SwitchingSet u;
        for (int v = 0; v < n; ++v)
          if (mask >> v & 1) u.push_back(v);
        any = switched(g, u).all_positive();
      }
      CHECK(is_balanced(g).balanced == any);
    }
  }
}

TEST_CASE("underlying graph") {
  const SignedGraph g = ts::graph_from(ts::kGm8);
  const SignedGraph u = underlying_graph(g);
  CHECK(u.all_positive());
  CHECK(u.edge_count() == g.edge_count());
  CHECK(underlying_graph(u) == u);
  CHECK(underlying_graph(SignedGraph(3)) == SignedGraph(3));
}

TEST_CASE("relabeling") {
  const SignedGraph g(3, {{0, 1, +1}, {1, 2, -1}});
  const SignedGraph h = relabeled(g, {2, 0, 1});
  CHECK(h == SignedGraph(3, {{2, 0, +1}, {0, 1, -1}}));
  CHECK_THROWS_AS(relabeled(g, {0, 1}), ShapeMismatch);
  CHECK_THROWS_AS(relabeled(g, {0, 1, 1}), ShapeMismatch);
  CHECK_THROWS_AS(relabeled(g, {0, 1, 3}), VertexOutOfRange);
}

TEST_CASE("shipped fixtures match the embedded matrices") {
  CHECK(adjacency_matrix(load_graph_file(ts::fixture_path("gm8.sg"))) ==
        ts::matrix_from(ts::kGm8));
  CHECK(adjacency_matrix(load_graph_file(ts::fixture_path("ggm8.sg"))) ==
        ts::matrix_from(ts::kGgm8));
  CHECK(adjacency_matrix(load_graph_file(ts::fixture_path("ggm14.sg"))) ==
        ts::matrix_from(ts::kGgm14));
}
