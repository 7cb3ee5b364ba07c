#ifndef COSPEC_ISO_HPP
#define COSPEC_ISO_HPP

#include <optional>
#include <vector>

#include "cospec/signed_graph.hpp"

namespace cospec {

/// Hard cap for the brute-force searches below.
inline constexpr int kIsoMaxOrder = 12;

/// Witness of switching isomorphism: relabeling switched(a, u_set) by perm
/// yields b exactly.
struct SwitchIsoCertificate {
  std::vector<int> perm;  // vertex v of a -> perm[v] of b
  SwitchingSet u_set;     // sorted

  bool operator==(const SwitchIsoCertificate&) const = default;
};

/// Searches permutations consistent with the underlying graphs (degree and
/// adjacency pruning; sign data cannot prune since it is not
/// switching-invariant), resolving the switching set per permutation by sign
/// propagation over a spanning forest. Returns the lexicographically least
/// certificate, or nullopt. Throws TooLarge for n > 12.
std::optional<SwitchIsoCertificate> are_switching_isomorphic(const SignedGraph& a,
                                                             const SignedGraph& b);

/// Replays the certificate; never throws except ShapeMismatch on malformed
/// input.
bool verify_certificate(const SignedGraph& a, const SignedGraph& b,
                        const SwitchIsoCertificate& cert);

/// Plain isomorphism of the underlying graphs. When this is false, switching
/// isomorphism is impossible. Throws TooLarge for n > 12.
bool underlying_isomorphic(const SignedGraph& a, const SignedGraph& b);

}  // namespace cospec

#endif
