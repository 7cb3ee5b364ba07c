#ifndef COSPEC_SIGNED_GRAPH_HPP
#define COSPEC_SIGNED_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "cospec/matrix.hpp"

namespace cospec {

struct SignedEdge {
  int u = 0;
  int v = 0;
  int sign = +1;  // +1 or -1

  auto operator<=>(const SignedEdge&) const = default;
};

/// A simple graph with +-1 edge signs. Values are immutable after
/// construction and safe to share across threads; every operation on them is
/// a pure function.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// Edgeless graph on n vertices.
  explicit SignedGraph(int n);

  /// Throws SelfLoop, DuplicateEdge or VertexOutOfRange. A pair listed twice
  /// is rejected even if both listings carry the same sign.
  SignedGraph(int n, const std::vector<SignedEdge>& signed_edges);

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Canonical edge list: u < v, sorted lexicographically.
  const std::vector<SignedEdge>& edges() const { return edges_; }

  /// +1 / -1 for an edge, 0 when u and v are not adjacent.
  int sign(int u, int v) const;
  bool has_edge(int u, int v) const { return sign(u, v) != 0; }

  int degree(int v) const;
  bool all_positive() const;

  bool operator==(const SignedGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<std::int8_t> adj_;  // dense n*n sign table

  void check_vertex(int v) const;
};

/// Subset of vertices defining a signature switching.
using SwitchingSet = std::vector<int>;

struct DegreeProfile {
  int d_plus = 0;
  int d_minus = 0;

  int net() const { return d_plus - d_minus; }
  int total() const { return d_plus + d_minus; }

  bool operator==(const DegreeProfile&) const = default;
};

struct BalanceResult {
  bool balanced = false;
  /// When balanced: switching by this set makes every edge positive.
  SwitchingSet switching_set;
  /// When unbalanced: vertices of a cycle whose sign product is -1, in order.
  std::vector<int> negative_cycle;
};

/// Factory matching the text-format loader; identical to the constructor.
SignedGraph build_graph(int n, const std::vector<SignedEdge>& signed_edges);

/// Symmetric {-1,0,1} matrix with zero diagonal.
IntMatrix adjacency_matrix(const SignedGraph& g);

/// The +-1 diagonal matrix S_U with +1 exactly on u_set.
IntMatrix switching_matrix(int n, const SwitchingSet& u_set);

/// Negates the sign of every edge with exactly one endpoint in u_set.
SignedGraph switched(const SignedGraph& g, const SwitchingSet& u_set);

/// Positive/negative edge counts from v into part (v itself never counts).
DegreeProfile part_degree_profile(const SignedGraph& g, int v, const std::vector<int>& part);

/// Decides whether some switching makes the graph all-positive, with a
/// verifiable witness either way.
BalanceResult is_balanced(const SignedGraph& g);

/// Same edge set, all-positive signature.
SignedGraph underlying_graph(const SignedGraph& g);

/// Relabels vertex v as perm[v]; perm must be a bijection on 0..n-1.
SignedGraph relabeled(const SignedGraph& g, const std::vector<int>& perm);

}  // namespace cospec

#endif
