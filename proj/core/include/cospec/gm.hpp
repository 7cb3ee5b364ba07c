#ifndef COSPEC_GM_HPP
#define COSPEC_GM_HPP

#include <string>
#include <utility>
#include <vector>

#include "cospec/matrix.hpp"
#include "cospec/signed_graph.hpp"

namespace cospec {

/// Partition {C_1, ..., C_t, D} of the vertex set. The C parts must be
/// nonempty and pairwise disjoint; D may be empty.
struct GMPartition {
  std::vector<std::vector<int>> c_parts;
  std::vector<int> d_part;

  int part_count() const { return static_cast<int>(c_parts.size()); }

  bool operator==(const GMPartition&) const = default;
};

/// How a D-vertex sees one C part. The half cases need an even part size.
enum class GMColumnCase {
  NetZero,       // d+ == d-, signs of existing edges get negated
  HalfPositive,  // d+ == n_i/2, d- == 0, positive edges complemented
  HalfNegative,  // d- == n_i/2, d+ == 0, negative edges complemented
  AllPositive,   // d+ == n_i, unchanged
  AllNegative,   // d- == n_i, unchanged
};

const char* to_string(GMColumnCase c);

struct GMAdmissibilityReport {
  bool admissible = false;
  /// net_degree_table[i][j]: the common j-th net-degree over C_i. Rows past
  /// the first violation are left at the value of the part's first vertex.
  std::vector<std::vector<int>> net_degree_table;
  /// column_cases[k][i]: case of the k-th D vertex (in d_part order) vs C_i.
  std::vector<std::vector<GMColumnCase>> column_cases;
  /// Empty iff admissible; otherwise describes the first violated condition.
  std::string violation;
  /// Vertices involved in that violation.
  std::vector<int> offending;
};

/// Checks both admissibility conditions: constant pairwise net-degrees over
/// every ordered pair of C parts (including i == j), then membership of every
/// (D vertex, C part) pair in one of the five column cases.
/// Throws NotAPartition when pi does not partition the vertex set.
GMAdmissibilityReport validate_gm(const SignedGraph& g, const GMPartition& pi);

/// Local switching with respect to an admissible partition. Edges within
/// the C parts, within D, and all AllPositive/AllNegative columns stay
/// untouched. Throws NotAdmissible.
SignedGraph gm_switch(const SignedGraph& g, const GMPartition& pi);

/// diag(Q_{n_1}, ..., Q_{n_t}, I_d) with Q_m = (2/m) J_m - I_m, in the
/// block order of pi. Exact rationals; Q*Q = I.
RatMatrix build_q(const GMPartition& pi);

/// The vertex order (C_1 sorted, ..., C_t sorted, D sorted) used by the
/// conjugation path.
std::vector<int> gm_block_order(const GMPartition& pi);

/// Independent verification path: recomputes the switch as Q * A * Q in
/// exact rational arithmetic and compares entrywise with gm_switch.
/// Throws NotAdmissible.
bool verify_conjugation_gm(const SignedGraph& g, const GMPartition& pi);

/// Matrix form of the construction: M = [[B,N],[N^T,C]] and its mate with
/// every column of N replaced per its case (sum-zero -> negated, half-ones ->
/// complemented against 1_b, half-minus-ones -> complemented against -1_b,
/// full columns unchanged). The two results are always cospectral.
/// Throws NonSymmetric, RowSumNotConstant, ColumnCaseViolation, ShapeMismatch.
std::pair<IntMatrix, IntMatrix> block_switch_matrix(const IntMatrix& b_mat,
                                                    const IntMatrix& n_mat,
                                                    const IntMatrix& c_mat);

/// Net-degree equitability of disjoint parts, computed in the subgraph
/// induced on their union. Throws Overlap.
bool is_equitable(const SignedGraph& g, const std::vector<std::vector<int>>& parts);

}  // namespace cospec

#endif
