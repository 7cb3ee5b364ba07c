#include "cospec/ggm.hpp"

#include <algorithm>
#include <optional>

namespace cospec {

const char* to_string(GGMVertexCase c) {
  switch (c) {
    case GGMVertexCase::FullPos1: return "full_pos_1";
    case GGMVertexCase::FullPos2: return "full_pos_2";
    case GGMVertexCase::FullNeg1: return "full_neg_1";
    case GGMVertexCase::FullNeg2: return "full_neg_2";
    case GGMVertexCase::Equal: return "equal";
    case GGMVertexCase::FullMixed12: return "full_mixed_12";
    case GGMVertexCase::FullMixed21: return "full_mixed_21";
  }
  return "?";
}

GGMPartition ggm_partition(int n, std::vector<int> v1, std::vector<int> v2) {
  std::vector<char> taken(n, 0);
  for (const auto* side : {&v1, &v2})
    for (int v : *side) {
      if (v < 0 || v >= n)
        throw NotAPartition("vertex " + std::to_string(v) + " out of range");
      if (taken[v]) throw NotAPartition("vertex " + std::to_string(v) + " appears twice");
      taken[v] = 1;
    }
  GGMPartition p;
  p.v1 = std::move(v1);
  p.v2 = std::move(v2);
  for (int v = 0; v < n; ++v)
    if (!taken[v]) p.rest.push_back(v);
  return p;
}

namespace {

void check_partition(const SignedGraph& g, const GGMPartition& p) {
  if (p.v1.size() != p.v2.size())
    throw SizeMismatch("|V_1| = " + std::to_string(p.v1.size()) +
                       " but |V_2| = " + std::to_string(p.v2.size()));
  if (p.v1.empty()) throw SizeMismatch("V_1 and V_2 must be nonempty");
  const int n = g.order();
  std::vector<int> count(n, 0);
  for (const auto* part : {&p.v1, &p.v2, &p.rest})
    for (int v : *part) {
      if (v < 0 || v >= n)
        throw NotAPartition("vertex " + std::to_string(v) + " out of range");
      if (++count[v] > 1)
        throw NotAPartition("vertex " + std::to_string(v) + " appears in two parts");
    }
  for (int v = 0; v < n; ++v)
    if (count[v] == 0)
      throw NotAPartition("vertex " + std::to_string(v) + " is missing from the partition");
}

std::optional<GGMVertexCase> classify_vertex(const DegreeProfile& p1, const DegreeProfile& p2,
                                             int m) {
  int matches = 0;
  GGMVertexCase result = GGMVertexCase::Equal;
  auto consider = [&](bool pred, GGMVertexCase c) {
    if (pred) {
      ++matches;
      result = c;
    }
  };
  consider(p1.d_plus == m && p1.d_minus == 0 && p2.total() == 0, GGMVertexCase::FullPos1);
  consider(p2.d_plus == m && p2.d_minus == 0 && p1.total() == 0, GGMVertexCase::FullPos2);
  consider(p1.d_minus == m && p1.d_plus == 0 && p2.total() == 0, GGMVertexCase::FullNeg1);
  consider(p2.d_minus == m && p2.d_plus == 0 && p1.total() == 0, GGMVertexCase::FullNeg2);
  consider(p1.d_plus == m && p2.d_minus == m, GGMVertexCase::FullMixed12);
  consider(p1.d_minus == m && p2.d_plus == m, GGMVertexCase::FullMixed21);
  consider(p1.net() == p2.net(), GGMVertexCase::Equal);
  // The cases are mutually exclusive for m >= 1; a vertex matching two of
  // them would mean the classification itself is broken.
  if (matches > 1) throw Error("ggm case overlap (internal)");
  if (matches == 0) return std::nullopt;
  return result;
}

}  // namespace

GGMAdmissibilityReport validate_ggm(const SignedGraph& g, const GGMPartition& p) {
  check_partition(g, p);
  GGMAdmissibilityReport report;

  // Condition (1): one shared ell across both sides.
  report.ell = part_degree_profile(g, p.v1[0], p.v1).net() -
               part_degree_profile(g, p.v1[0], p.v2).net();
  for (int v : p.v1) {
    const int diff = part_degree_profile(g, v, p.v1).net() -
                     part_degree_profile(g, v, p.v2).net();
    if (diff != report.ell) {
      report.violation = "condition (1): vertex " + std::to_string(v) + " of V_1 has net-degree" +
                         " difference " + std::to_string(diff) + ", expected ell = " +
                         std::to_string(report.ell);
      report.offending = {p.v1[0], v};
      return report;
    }
  }
  for (int u : p.v2) {
    const int diff = part_degree_profile(g, u, p.v2).net() -
                     part_degree_profile(g, u, p.v1).net();
    if (diff != report.ell) {
      report.violation = "condition (1): vertex " + std::to_string(u) + " of V_2 has net-degree" +
                         " difference " + std::to_string(diff) + ", expected ell = " +
                         std::to_string(report.ell);
      report.offending = {u};
      return report;
    }
  }

  // Condition (2): each rest vertex in exactly one case.
  const int m = p.m();
  report.vertex_cases.reserve(p.rest.size());
  for (int v : p.rest) {
    const DegreeProfile p1 = part_degree_profile(g, v, p.v1);
    const DegreeProfile p2 = part_degree_profile(g, v, p.v2);
    const auto kase = classify_vertex(p1, p2, m);
    if (!kase) {
      report.violation = "condition (2): vertex " + std::to_string(v) + " has (d+,d-) = (" +
                         std::to_string(p1.d_plus) + "," + std::to_string(p1.d_minus) +
                         ") toward V_1 and (" + std::to_string(p2.d_plus) + "," +
                         std::to_string(p2.d_minus) + ") toward V_2, matching no case";
      report.offending = {v};
      return report;
    }
    report.vertex_cases.push_back(*kase);
  }

  report.admissible = true;
  return report;
}

SignedGraph ggm_switch(const SignedGraph& g, const GGMPartition& p) {
  const GGMAdmissibilityReport report = validate_ggm(g, p);
  if (!report.admissible) throw NotAdmissible(report.violation);

  const int n = g.order();
  std::vector<char> in_rest(n, 0);
  for (int v : p.rest) in_rest[v] = 1;
  std::vector<char> in_sides(n, 0);
  for (int v : p.v1) in_sides[v] = 1;
  for (int v : p.v2) in_sides[v] = 1;

  std::vector<SignedEdge> edges;
  edges.reserve(g.edges().size());
  for (const SignedEdge& e : g.edges()) {
    const bool crossing = (in_rest[e.u] && in_sides[e.v]) || (in_rest[e.v] && in_sides[e.u]);
    if (!crossing) edges.push_back(e);
  }

  auto keep = [&](int v, const std::vector<int>& side) {
    for (int w : side)
      if (const int s = g.sign(v, w); s != 0) edges.push_back({v, w, s});
  };
  auto join_all = [&](int v, const std::vector<int>& side, int sign) {
    for (int w : side) edges.push_back({v, w, sign});
  };
  auto negate_all = [&](int v, const std::vector<int>& side) {
    for (int w : side)
      if (const int s = g.sign(v, w); s != 0) edges.push_back({v, w, -s});
  };

  for (std::size_t k = 0; k < p.rest.size(); ++k) {
    const int v = p.rest[k];
    switch (report.vertex_cases[k]) {
      case GGMVertexCase::FullPos1: join_all(v, p.v2, +1); break;
      case GGMVertexCase::FullPos2: join_all(v, p.v1, +1); break;
      case GGMVertexCase::FullNeg1: join_all(v, p.v2, -1); break;
      case GGMVertexCase::FullNeg2: join_all(v, p.v1, -1); break;
      case GGMVertexCase::Equal:
        keep(v, p.v1);
        keep(v, p.v2);
        break;
      case GGMVertexCase::FullMixed12:
      case GGMVertexCase::FullMixed21:
        negate_all(v, p.v1);
        negate_all(v, p.v2);
        break;
    }
  }
  return SignedGraph(n, edges);
}

RatMatrix build_u(int m) {
  if (m < 1) throw SizeMismatch("build_u needs m >= 1");
  RatMatrix u(2 * m, 2 * m);
  const Rational inv(1, m);
  for (int i = 0; i < 2 * m; ++i)
    for (int j = 0; j < 2 * m; ++j) {
      const bool same_half = (i < m) == (j < m);
      u(i, j) = (same_half ? -inv : inv) + (i == j ? 1 : 0);
    }
  return u;
}

std::vector<int> ggm_block_order(const GGMPartition& p) {
  std::vector<int> order;
  for (const auto* part : {&p.v1, &p.v2, &p.rest}) {
    std::vector<int> sorted = *part;
    std::sort(sorted.begin(), sorted.end());
    order.insert(order.end(), sorted.begin(), sorted.end());
  }
  return order;
}

bool verify_conjugation_ggm(const SignedGraph& g, const GGMPartition& p) {
  const GGMAdmissibilityReport report = validate_ggm(g, p);
  if (!report.admissible) throw NotAdmissible(report.violation);

  const int m = p.m();
  const int n = g.order();
  const std::vector<int> order = ggm_block_order(p);
  const IntMatrix a = reordered(adjacency_matrix(g), order);

  // Block sums of A_1 - B (rows) and A_2 - B^T (rows, i.e. columns of B)
  // must all equal ell.
  for (int i = 0; i < m; ++i) {
    int row = 0, col = 0;
    for (int j = 0; j < m; ++j) {
      row += a(i, j) - a(i, m + j);          // row i of A_1 - B
      col += a(m + i, m + j) - a(j, m + i);  // row i of A_2 minus column i of B
    }
    if (row != report.ell || col != report.ell) return false;
  }

  RatMatrix q = RatMatrix::identity(n);
  const RatMatrix u = build_u(m);
  for (int i = 0; i < 2 * m; ++i)
    for (int j = 0; j < 2 * m; ++j) q(i, j) = u(i, j);

  const RatMatrix conjugated = q * to_rational(a) * q;
  const RatMatrix switched_a =
      to_rational(reordered(adjacency_matrix(ggm_switch(g, p)), order));
  return conjugated == switched_a;
}

}  // namespace cospec
