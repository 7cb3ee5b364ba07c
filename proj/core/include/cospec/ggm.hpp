#ifndef COSPEC_GGM_HPP
#define COSPEC_GGM_HPP

#include <string>
#include <vector>

#include "cospec/matrix.hpp"
#include "cospec/signed_graph.hpp"

namespace cospec {

/// Partition {V_1, V_2, V} with |V_1| = |V_2| = m >= 1. The constant ell is
/// derived during validation, not stored here.
struct GGMPartition {
  std::vector<int> v1;
  std::vector<int> v2;
  std::vector<int> rest;

  int m() const { return static_cast<int>(v1.size()); }

  bool operator==(const GGMPartition&) const = default;
};

/// Builds a partition with rest inferred as the complement of v1 and v2.
GGMPartition ggm_partition(int n, std::vector<int> v1, std::vector<int> v2);

/// How a rest-vertex sees the pair (V_1, V_2).
enum class GGMVertexCase {
  FullPos1,     // all of V_1 positively, nothing to V_2; edges move to V_2
  FullPos2,     // mirror image
  FullNeg1,     // all of V_1 negatively, nothing to V_2; edges move to V_2
  FullNeg2,     // mirror image
  Equal,        // equal net-degrees toward both sides, unchanged
  FullMixed12,  // positive to all of V_1 and negative to all of V_2; all signs flip
  FullMixed21,  // mirror image
};

const char* to_string(GGMVertexCase c);

struct GGMAdmissibilityReport {
  bool admissible = false;
  int ell = 0;
  /// vertex_cases[k]: case of the k-th rest vertex (in rest order).
  std::vector<GGMVertexCase> vertex_cases;
  std::string violation;
  std::vector<int> offending;
};

/// Checks the constant-ell condition over V_1 and V_2 (one shared ell,
/// derived from the first vertex of V_1), then classifies every rest vertex
/// into exactly one case. Throws NotAPartition, SizeMismatch.
GGMAdmissibilityReport validate_ggm(const SignedGraph& g, const GGMPartition& p);

/// Switching with respect to an admissible partition. Edges inside
/// V_1 u V_2 and inside rest never change. Throws NotAdmissible.
SignedGraph ggm_switch(const SignedGraph& g, const GGMPartition& p);

/// U_{2m} = I_{2m} + (1/m) [[-J_m, J_m], [J_m, -J_m]]; symmetric, orthogonal,
/// exact rationals.
RatMatrix build_u(int m);

/// Vertex order (V_1 sorted, V_2 sorted, rest sorted) for the conjugation path.
std::vector<int> ggm_block_order(const GGMPartition& p);

/// Independent verification path: diag(U_{2m}, I_d) * A * diag(U_{2m}, I_d)
/// must reproduce the adjacency matrix of ggm_switch, and the block sums
/// row_i(A_1 - B) and col_i'(A_2^T - B) must all equal ell.
/// Throws NotAdmissible.
bool verify_conjugation_ggm(const SignedGraph& g, const GGMPartition& p);

}  // namespace cospec

#endif
