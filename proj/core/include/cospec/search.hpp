#ifndef COSPEC_SEARCH_HPP
#define COSPEC_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cospec/ggm.hpp"
#include "cospec/gm.hpp"
#include "cospec/signed_graph.hpp"

namespace cospec {

struct SearchLimits {
  int t_max = 3;                   // max number of C parts
  int n_max = 16;                  // largest graph order accepted
  double time_budget_secs = 30.0;  // <= 0 disables the deadline
  int candidate_cap = 1000;        // max results kept
};

template <class Partition>
struct SearchResult {
  std::vector<Partition> found;
  /// True when the deadline or the candidate cap cut the enumeration short;
  /// found is then a prefix of the full, deterministic output.
  bool truncated = false;
};

/// Enumerates partitions {C_1..C_t, D} with t <= t_max by incremental
/// vertex-to-part assignment with net-degree pruning. Returns admissible
/// partitions whose switch actually changes the graph (unless
/// include_trivial), deduplicated up to C-part order, sorted
/// lexicographically. Throws TooLarge when g.order() > n_max.
SearchResult<GMPartition> find_gm_partitions(const SignedGraph& g, const SearchLimits& limits,
                                             bool include_trivial = false);

/// Enumerates disjoint equal-size pairs (V_1, V_2) for every m up to n/2,
/// canonicalized by min(V_1) < min(V_2), ordered by m then lexicographically.
SearchResult<GGMPartition> find_ggm_partitions(const SignedGraph& g, const SearchLimits& limits,
                                               bool include_trivial = false);

struct GMGenParams {
  std::vector<int> part_sizes = {4, 4};
  int d_size = 2;
  double edge_density = 0.5;
  double sign_bias = 0.5;  // P(+1 | edge present)
  /// Forces every (D vertex, C part) column into this case.
  std::optional<GMColumnCase> forced_case;
};

/// Builds a random instance that is admissible by construction: C-blocks are
/// circulant-style patterns with constant net row sums, D-columns are sampled
/// straight from the admissible column cases. Deterministic in the seed.
/// Throws InfeasibleParameters.
std::pair<SignedGraph, GMPartition> generate_gm_instance(std::uint64_t seed,
                                                         const GMGenParams& params);

struct GGMGenParams {
  int m = 3;
  int d_size = 2;
  double edge_density = 0.5;
  double sign_bias = 0.5;
  std::optional<GGMVertexCase> forced_case;
};

/// Same idea for the {V_1, V_2, V} construction: A_1, A_2 and B are built
/// with matching constant net sums so the shared ell exists, rest vertices
/// sample the admissible cases. Deterministic in the seed.
std::pair<SignedGraph, GGMPartition> generate_ggm_instance(std::uint64_t seed,
                                                           const GGMGenParams& params);

}  // namespace cospec

#endif
