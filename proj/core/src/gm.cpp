#include "cospec/gm.hpp"

#include <algorithm>
#include <optional>

namespace cospec {

const char* to_string(GMColumnCase c) {
  switch (c) {
    case GMColumnCase::NetZero: return "net_zero";
    case GMColumnCase::HalfPositive: return "half_positive";
    case GMColumnCase::HalfNegative: return "half_negative";
    case GMColumnCase::AllPositive: return "all_positive";
    case GMColumnCase::AllNegative: return "all_negative";
  }
  return "?";
}

namespace {

void check_partition(const SignedGraph& g, const GMPartition& pi) {
  const int n = g.order();
  if (pi.c_parts.empty()) throw NotAPartition("need at least one C part");
  std::vector<int> count(n, 0);
  auto absorb = [&](const std::vector<int>& part, bool must_be_nonempty) {
    if (must_be_nonempty && part.empty()) throw NotAPartition("empty C part");
    for (int v : part) {
      if (v < 0 || v >= n)
        throw NotAPartition("vertex " + std::to_string(v) + " out of range");
      if (++count[v] > 1)
        throw NotAPartition("vertex " + std::to_string(v) + " appears in two parts");
    }
  };
  for (const auto& part : pi.c_parts) absorb(part, true);
  absorb(pi.d_part, false);
  for (int v = 0; v < n; ++v)
    if (count[v] == 0)
      throw NotAPartition("vertex " + std::to_string(v) + " is missing from the partition");
}

std::optional<GMColumnCase> classify_column(const DegreeProfile& p, int part_size) {
  if (p.net() == 0) return GMColumnCase::NetZero;
  if (p.d_minus == 0 && p.d_plus == part_size) return GMColumnCase::AllPositive;
  if (p.d_plus == 0 && p.d_minus == part_size) return GMColumnCase::AllNegative;
  if (p.d_minus == 0 && 2 * p.d_plus == part_size) return GMColumnCase::HalfPositive;
  if (p.d_plus == 0 && 2 * p.d_minus == part_size) return GMColumnCase::HalfNegative;
  return std::nullopt;
}

}  // namespace

GMAdmissibilityReport validate_gm(const SignedGraph& g, const GMPartition& pi) {
  check_partition(g, pi);
  const int t = pi.part_count();
  GMAdmissibilityReport report;
  report.net_degree_table.assign(t, std::vector<int>(t, 0));

  // Condition (1): within each C_i the j-th net-degree is constant, for
  // every ordered pair (i, j) -- i == j included.
  for (int i = 0; i < t; ++i) {
    for (int j = 0; j < t; ++j) {
      const int reference = part_degree_profile(g, pi.c_parts[i][0], pi.c_parts[j]).net();
      report.net_degree_table[i][j] = reference;
      for (int v : pi.c_parts[i]) {
        const int net = part_degree_profile(g, v, pi.c_parts[j]).net();
        if (net != reference) {
          report.violation = "condition (1): vertices " + std::to_string(pi.c_parts[i][0]) +
                             " and " + std::to_string(v) + " of part C_" + std::to_string(i + 1) +
                             " have different net-degrees toward C_" + std::to_string(j + 1) +
                             " (" + std::to_string(reference) + " vs " + std::to_string(net) + ")";
          report.offending = {pi.c_parts[i][0], v};
          return report;
        }
      }
    }
  }

  // Condition (2): every (D vertex, C part) pair falls in one of the five
  // column cases.
  report.column_cases.assign(pi.d_part.size(), std::vector<GMColumnCase>(t, GMColumnCase::NetZero));
  for (std::size_t k = 0; k < pi.d_part.size(); ++k) {
    const int v = pi.d_part[k];
    for (int i = 0; i < t; ++i) {
      const int size = static_cast<int>(pi.c_parts[i].size());
      const DegreeProfile p = part_degree_profile(g, v, pi.c_parts[i]);
      const auto kase = classify_column(p, size);
      if (!kase) {
        report.violation = "condition (2): vertex " + std::to_string(v) + " vs part C_" +
                           std::to_string(i + 1) + " has d+=" + std::to_string(p.d_plus) +
                           ", d-=" + std::to_string(p.d_minus) + " which matches no column case";
        if (size % 2 == 1 && (p.d_plus == 0 || p.d_minus == 0))
          report.violation += " (part size " + std::to_string(size) +
                              " is odd, so the half cases are impossible)";
        report.offending = {v};
        return report;
      }
      report.column_cases[k][i] = *kase;
    }
  }

  report.admissible = true;
  return report;
}

SignedGraph gm_switch(const SignedGraph& g, const GMPartition& pi) {
  const GMAdmissibilityReport report = validate_gm(g, pi);
  if (!report.admissible) throw NotAdmissible(report.violation);

  std::vector<char> in_d(g.order(), 0);
  for (int v : pi.d_part) in_d[v] = 1;

  // Keep every edge not between D and a C part.
  std::vector<SignedEdge> edges;
  edges.reserve(g.edges().size());
  std::vector<char> in_c(g.order(), 0);
  for (const auto& part : pi.c_parts)
    for (int v : part) in_c[v] = 1;
  for (const SignedEdge& e : g.edges()) {
    const bool crossing = (in_d[e.u] && in_c[e.v]) || (in_d[e.v] && in_c[e.u]);
    if (!crossing) edges.push_back(e);
  }

  for (std::size_t k = 0; k < pi.d_part.size(); ++k) {
    const int v = pi.d_part[k];
    for (int i = 0; i < pi.part_count(); ++i) {
      switch (report.column_cases[k][i]) {
        case GMColumnCase::NetZero:
          for (int w : pi.c_parts[i])
            if (const int s = g.sign(v, w); s != 0) edges.push_back({v, w, -s});
          break;
        case GMColumnCase::HalfPositive:
          for (int w : pi.c_parts[i])
            if (!g.has_edge(v, w)) edges.push_back({v, w, +1});
          break;
        case GMColumnCase::HalfNegative:
          for (int w : pi.c_parts[i])
            if (!g.has_edge(v, w)) edges.push_back({v, w, -1});
          break;
        case GMColumnCase::AllPositive:
        case GMColumnCase::AllNegative:
          for (int w : pi.c_parts[i])
            edges.push_back({v, w, g.sign(v, w)});
          break;
      }
    }
  }
  return SignedGraph(g.order(), edges);
}

std::vector<int> gm_block_order(const GMPartition& pi) {
  std::vector<int> order;
  for (const auto& part : pi.c_parts) {
    std::vector<int> sorted = part;
    std::sort(sorted.begin(), sorted.end());
    order.insert(order.end(), sorted.begin(), sorted.end());
  }
  std::vector<int> d = pi.d_part;
  std::sort(d.begin(), d.end());
  order.insert(order.end(), d.begin(), d.end());
  return order;
}

RatMatrix build_q(const GMPartition& pi) {
  int n = static_cast<int>(pi.d_part.size());
  for (const auto& part : pi.c_parts) n += static_cast<int>(part.size());
  RatMatrix q(n, n);
  int offset = 0;
  for (const auto& part : pi.c_parts) {
    const int m = static_cast<int>(part.size());
    const Rational two_over_m(2, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        q(offset + i, offset + j) = two_over_m - (i == j ? 1 : 0);
    offset += m;
  }
  for (; offset < n; ++offset) q(offset, offset) = 1;
  return q;
}

bool verify_conjugation_gm(const SignedGraph& g, const GMPartition& pi) {
  const GMAdmissibilityReport report = validate_gm(g, pi);
  if (!report.admissible) throw NotAdmissible(report.violation);

  const std::vector<int> order = gm_block_order(pi);
  const RatMatrix a = to_rational(reordered(adjacency_matrix(g), order));
  const RatMatrix q = build_q(pi);
  const RatMatrix conjugated = q * a * q;
  const RatMatrix switched_a =
      to_rational(reordered(adjacency_matrix(gm_switch(g, pi)), order));
  return conjugated == switched_a;
}

std::pair<IntMatrix, IntMatrix> block_switch_matrix(const IntMatrix& b_mat,
                                                    const IntMatrix& n_mat,
                                                    const IntMatrix& c_mat) {
  if (!b_mat.is_symmetric()) throw NonSymmetric("B must be symmetric");
  if (!c_mat.is_symmetric()) throw NonSymmetric("C must be symmetric");
  const int b = b_mat.rows();
  const int c = c_mat.rows();
  if (n_mat.rows() != b || n_mat.cols() != c)
    throw ShapeMismatch("N must be " + std::to_string(b) + "x" + std::to_string(c));

  long long row_sum = 0;
  for (int j = 0; j < b; ++j) row_sum += b_mat(0, j);
  for (int i = 1; i < b; ++i) {
    long long s = 0;
    for (int j = 0; j < b; ++j) s += b_mat(i, j);
    if (s != row_sum)
      throw RowSumNotConstant("row " + std::to_string(i) + " of B sums to " + std::to_string(s) +
                              ", row 0 to " + std::to_string(row_sum));
  }

  IntMatrix replaced = n_mat;
  for (int j = 0; j < c; ++j) {
    int plus = 0, minus = 0;
    for (int i = 0; i < b; ++i) {
      const int e = n_mat(i, j);
      if (e == 1) ++plus;
      else if (e == -1) ++minus;
      else if (e != 0)
        throw ColumnCaseViolation("N entries must lie in {-1,0,1}");
    }
    const int zeros = b - plus - minus;
    if (plus == minus) {
      for (int i = 0; i < b; ++i) replaced(i, j) = -n_mat(i, j);
    } else if (minus == 0 && plus == b) {
      // unchanged
    } else if (plus == 0 && minus == b) {
      // unchanged
    } else if (minus == 0 && b % 2 == 0 && plus == b / 2 && zeros == b / 2) {
      for (int i = 0; i < b; ++i) replaced(i, j) = 1 - n_mat(i, j);
    } else if (plus == 0 && b % 2 == 0 && minus == b / 2 && zeros == b / 2) {
      for (int i = 0; i < b; ++i) replaced(i, j) = -1 - n_mat(i, j);
    } else {
      throw ColumnCaseViolation("column " + std::to_string(j) + " of N (sum " +
                                std::to_string(plus - minus) + ") matches no admissible case");
    }
  }

  auto assemble = [&](const IntMatrix& top_right) {
    IntMatrix m(b + c, b + c);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) m(i, j) = b_mat(i, j);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < c; ++j) {
        m(i, b + j) = top_right(i, j);
        m(b + j, i) = top_right(i, j);
      }
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j) m(b + i, b + j) = c_mat(i, j);
    return m;
  };
  return {assemble(n_mat), assemble(replaced)};
}

bool is_equitable(const SignedGraph& g, const std::vector<std::vector<int>>& parts) {
  std::vector<char> seen(g.order(), 0);
  for (const auto& part : parts)
    for (int v : part) {
      if (v < 0 || v >= g.order())
        throw Overlap("vertex " + std::to_string(v) + " out of range");
      if (seen[v]) throw Overlap("vertex " + std::to_string(v) + " appears in two parts");
      seen[v] = 1;
    }
  // Edges from a part vertex land inside the union or outside it; profiles
  // toward each part already live in the induced subgraph.
  for (const auto& part : parts) {
    if (part.empty()) continue;
    for (const auto& other : parts) {
      const int reference = part_degree_profile(g, part[0], other).net();
      for (int v : part)
        if (part_degree_profile(g, v, other).net() != reference) return false;
    }
  }
  return true;
}

}  // namespace cospec
