#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_support.hpp"

using namespace cospec;

TEST_CASE("char_poly basics") {
  SUBCASE("zero matrix") {
    CHECK(char_poly(IntMatrix(3, 3)) == CharPoly{ts::coeffs({0, 0, 0, 1})});
    CHECK(char_poly(IntMatrix(0, 0)) == CharPoly{ts::coeffs({1})});
  }
  SUBCASE("non-square rejected") {
    CHECK_THROWS_AS(char_poly(IntMatrix(2, 3)), NonSquare);
  }
  SUBCASE("fixture polynomial, factored form") {
    CHECK(char_poly(ts::matrix_from(ts::kGm8)) == ts::expected_gm8_poly());
  }
  SUBCASE("14-vertex fixture polynomial") {
    CHECK(char_poly(ts::matrix_from(ts::kGgm14)) == ts::expected_ggm14_poly());
  }
}

TEST_CASE("oracle values") {
  const IntMatrix k2_pos = adjacency_matrix(SignedGraph(2, {{0, 1, +1}}));
  const IntMatrix k2_neg = adjacency_matrix(SignedGraph(2, {{0, 1, -1}}));
  CHECK(char_poly_oracle(k2_pos) == CharPoly{ts::coeffs({-1, 0, 1})});
  CHECK(char_poly_oracle(k2_neg) == CharPoly{ts::coeffs({-1, 0, 1})});
  const IntMatrix unbalanced_tri =
      adjacency_matrix(SignedGraph(3, {{0, 1, +1}, {1, 2, +1}, {0, 2, -1}}));
  CHECK(char_poly_oracle(unbalanced_tri) == CharPoly{ts::coeffs({2, -3, 0, 1})});
  CHECK_THROWS_AS(char_poly_oracle(IntMatrix(10, 10)), TooLarge);
}

TEST_CASE("char_poly agrees with the oracle") {
  SUBCASE("exhaustive: every signed graph on 4 vertices") {
    // each of the 6 vertex pairs is absent, positive, or negative
    const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int code = 0; code < 729; ++code) {
      int rest = code;
      std::vector<SignedEdge> edges;
      for (const auto& pr : pairs) {
        const int state = rest % 3;
        rest /= 3;
        if (state == 1) edges.push_back({pr[0], pr[1], +1});
        if (state == 2) edges.push_back({pr[0], pr[1], -1});
      }
      const IntMatrix a = adjacency_matrix(SignedGraph(4, edges));
      CAPTURE(code);
      CHECK(char_poly(a) == char_poly_oracle(a));
    }
  }
  SUBCASE("randomized n in {5,6,7}") {
    ts::TestRng rng(3);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 5 + rng.below(3);
      IntMatrix a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const int v = rng.below(3) - 1;
          a(i, j) = v;
          a(j, i) = v;
        }
      CAPTURE(trial);
      CHECK(char_poly(a) == char_poly_oracle(a));
    }
  }
}

TEST_CASE("coefficient facts for signed graphs") {
  ts::TestRng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + rng.below(9);
    const SignedGraph g = ts::random_graph(rng, n, 50);
    const CharPoly p = char_poly(g);
    REQUIRE(p.degree() == n);
    CHECK(p.coeffs[n] == 1);                              // monic
    if (n >= 1) CHECK(p.coeffs[n - 1] == 0);              // zero trace
    if (n >= 2) CHECK(p.coeffs[n - 2] == -g.edge_count());  // minus edge count
  }
}

TEST_CASE("cospectrality") {
  const SignedGraph g = ts::graph_from(ts::kGm8);
  CHECK(cospectral(g, g));
  CHECK(cospectral(g, gm_switch(g, ts::gm8_partition())));
  const SignedGraph pos_tri(3, {{0, 1, +1}, {1, 2, +1}, {0, 2, +1}});
  const SignedGraph neg_tri(3, {{0, 1, +1}, {1, 2, +1}, {0, 2, -1}});
  CHECK_FALSE(cospectral(pos_tri, neg_tri));
  CHECK_FALSE(cospectral(SignedGraph(2), SignedGraph(3)));  // different orders
}

TEST_CASE("switching leaves the polynomial unchanged") {
  ts::TestRng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + rng.below(8);
    const SignedGraph g = ts::random_graph(rng, n, 50);
    const SwitchingSet u = ts::random_subset(rng, n);
    CAPTURE(trial);
    CHECK(char_poly(g) == char_poly(switched(g, u)));
  }
}

TEST_CASE("eigenvalues_approx") {
  SUBCASE("tiny cases") {
    CHECK(eigenvalues_approx(IntMatrix(2, 2)) == std::vector<double>{0.0, 0.0});
    const auto vals = eigenvalues_approx(adjacency_matrix(SignedGraph(2, {{0, 1, +1}})));
    REQUIRE(vals.size() == 2);
    CHECK(vals[0] == doctest::Approx(1.0));
    CHECK(vals[1] == doctest::Approx(-1.0));
  }
  SUBCASE("product matches the constant term on the fixture") {
    const auto vals = eigenvalues_approx(ts::matrix_from(ts::kGm8));
    double product = 1;
    for (double v : vals) product *= v;
    CHECK(std::abs(product - 16.0) < 1e-6);  // (-1)^8 p(0)
  }
  SUBCASE("eigenvalue sums are near zero") {
    ts::TestRng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 1 + rng.below(10);
      const auto vals = eigenvalues_approx(adjacency_matrix(ts::random_graph(rng, n, 60)));
      double sum = 0;
      for (double v : vals) sum += v;
      CHECK(std::abs(sum) <= 1e-9 * n);
    }
  }
  SUBCASE("asymmetric input rejected") {
    IntMatrix a(2, 2);
    a(0, 1) = 1;
    CHECK_THROWS_AS(eigenvalues_approx(a), NonSymmetric);
    CHECK_THROWS_AS(eigenvalues_approx(IntMatrix(2, 3)), NonSymmetric);
  }
}

TEST_CASE("polynomial rendering") {
  CHECK(to_string(CharPoly{ts::coeffs({2, -3, 0, 1})}) == "x^3 - 3x + 2");
  CHECK(to_string(CharPoly{ts::coeffs({0, 0, 0, 1})}) == "x^3");
  CHECK(to_string(CharPoly{ts::coeffs({1})}) == "1");
}
