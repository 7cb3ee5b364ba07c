#include "cospec/iso.hpp"

#include <algorithm>

namespace cospec {

namespace {

struct IsoSearch {
  const SignedGraph& a;
  const SignedGraph& b;
  bool signed_mode;  // false: stop at any underlying isomorphism
  int n;
  std::vector<int> deg_a, deg_b;
  std::vector<int> perm;       // image of each a-vertex, -1 when unassigned
  std::vector<char> used;      // b-vertices already taken
  std::optional<SwitchIsoCertificate> found;

  IsoSearch(const SignedGraph& a_, const SignedGraph& b_, bool signed_mode_)
      : a(a_), b(b_), signed_mode(signed_mode_), n(a_.order()) {
    deg_a.resize(n);
    deg_b.resize(n);
    for (int v = 0; v < n; ++v) {
      deg_a[v] = a.degree(v);
      deg_b[v] = b.degree(v);
    }
    perm.assign(n, -1);
    used.assign(n, 0);
  }

  // Solves for vertex signs z with z_u z_v = sign_a(uv) * sign_b(perm u, perm v)
  // over a spanning forest, root z = +1 per component, then checks the
  // remaining edges. On success emits U = {v : z_v = -1}.
  std::optional<SwitchingSet> solve_switching() const {
    std::vector<int> z(n, 0);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
      if (z[root] != 0) continue;
      z[root] = +1;
      stack.assign(1, root);
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w) {
          const int sa = a.sign(u, w);
          if (sa == 0) continue;
          const int required = sa * b.sign(perm[u], perm[w]);
          if (z[w] == 0) {
            z[w] = z[u] * required;
            stack.push_back(w);
          } else if (z[w] != z[u] * required) {
            return std::nullopt;
          }
        }
      }
    }
    SwitchingSet u_set;
    for (int v = 0; v < n; ++v)
      if (z[v] == -1) u_set.push_back(v);
    return u_set;
  }

  bool extend(int v) {
    if (v == n) {
      if (!signed_mode) {
        found = SwitchIsoCertificate{perm, {}};
        return true;
      }
      if (auto u_set = solve_switching()) {
        found = SwitchIsoCertificate{perm, std::move(*u_set)};
        return true;
      }
      return false;
    }
    for (int w = 0; w < n; ++w) {
      if (used[w] || deg_b[w] != deg_a[v]) continue;
      bool consistent = true;
      for (int u = 0; u < v && consistent; ++u)
        consistent = a.has_edge(u, v) == b.has_edge(perm[u], w);
      if (!consistent) continue;
      perm[v] = w;
      used[w] = 1;
      if (extend(v + 1)) return true;
      perm[v] = -1;
      used[w] = 0;
    }
    return false;
  }
};

bool quick_reject(const SignedGraph& a, const SignedGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return true;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  return da != db;
}

}  // namespace

std::optional<SwitchIsoCertificate> are_switching_isomorphic(const SignedGraph& a,
                                                             const SignedGraph& b) {
  if (a.order() > kIsoMaxOrder || b.order() > kIsoMaxOrder)
    throw TooLarge("switching isomorphism search is capped at n <= " +
                   std::to_string(kIsoMaxOrder));
  if (quick_reject(a, b)) return std::nullopt;
  IsoSearch search(a, b, /*signed_mode=*/true);
  search.extend(0);
  return search.found;
}

bool verify_certificate(const SignedGraph& a, const SignedGraph& b,
                        const SwitchIsoCertificate& cert) {
  if (a.order() != b.order()) throw ShapeMismatch("graphs have different orders");
  if (static_cast<int>(cert.perm.size()) != a.order())
    throw ShapeMismatch("certificate permutation has wrong length");
  return relabeled(switched(a, cert.u_set), cert.perm) == b;
}

bool underlying_isomorphic(const SignedGraph& a, const SignedGraph& b) {
  if (a.order() > kIsoMaxOrder || b.order() > kIsoMaxOrder)
    throw TooLarge("isomorphism search is capped at n <= " + std::to_string(kIsoMaxOrder));
  if (quick_reject(a, b)) return false;
  IsoSearch search(underlying_graph(a), underlying_graph(b), /*signed_mode=*/false);
  search.extend(0);
  return search.found.has_value();
}

}  // namespace cospec
