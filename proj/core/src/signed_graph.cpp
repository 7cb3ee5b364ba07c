#include "cospec/signed_graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace cospec {

namespace {

std::string vertex_msg(const char* what, int v, int n) {
  return std::string(what) + ": vertex " + std::to_string(v) + " not in [0, " +
         std::to_string(n) + ")";
}

}  // namespace

SignedGraph::SignedGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n) * n, 0) {
  if (n < 0) throw VertexOutOfRange("negative vertex count");
}

SignedGraph::SignedGraph(int n, const std::vector<SignedEdge>& signed_edges) : SignedGraph(n) {
  edges_.reserve(signed_edges.size());
  for (const SignedEdge& e : signed_edges) {
    if (e.u < 0 || e.u >= n_) throw VertexOutOfRange(vertex_msg("edge endpoint", e.u, n_));
    if (e.v < 0 || e.v >= n_) throw VertexOutOfRange(vertex_msg("edge endpoint", e.v, n_));
    if (e.u == e.v) throw SelfLoop("self-loop at vertex " + std::to_string(e.u));
    if (e.sign != +1 && e.sign != -1)
      throw ParseError("edge sign must be +1 or -1, got " + std::to_string(e.sign));
    const int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    if (adj_[static_cast<std::size_t>(a) * n_ + b] != 0)
      throw DuplicateEdge("pair {" + std::to_string(a) + "," + std::to_string(b) +
                          "} listed more than once");
    adj_[static_cast<std::size_t>(a) * n_ + b] = static_cast<std::int8_t>(e.sign);
    adj_[static_cast<std::size_t>(b) * n_ + a] = static_cast<std::int8_t>(e.sign);
    edges_.push_back({a, b, e.sign});
  }
  std::sort(edges_.begin(), edges_.end());
}

void SignedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw VertexOutOfRange(vertex_msg("vertex", v, n_));
}

int SignedGraph::sign(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[static_cast<std::size_t>(u) * n_ + v];
}

int SignedGraph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (int w = 0; w < n_; ++w)
    if (adj_[static_cast<std::size_t>(v) * n_ + w] != 0) ++d;
  return d;
}

bool SignedGraph::all_positive() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const SignedEdge& e) { return e.sign == +1; });
}

SignedGraph build_graph(int n, const std::vector<SignedEdge>& signed_edges) {
  return SignedGraph(n, signed_edges);
}

IntMatrix adjacency_matrix(const SignedGraph& g) {
  const int n = g.order();
  IntMatrix a(n, n);
  for (const SignedEdge& e : g.edges()) {
    a(e.u, e.v) = e.sign;
    a(e.v, e.u) = e.sign;
  }
  return a;
}

IntMatrix switching_matrix(int n, const SwitchingSet& u_set) {
  IntMatrix s(n, n);
  std::vector<char> in(n, 0);
  for (int v : u_set) {
    if (v < 0 || v >= n) throw VertexOutOfRange(vertex_msg("switching set", v, n));
    in[v] = 1;
  }
  for (int i = 0; i < n; ++i) s(i, i) = in[i] ? +1 : -1;
  return s;
}

SignedGraph switched(const SignedGraph& g, const SwitchingSet& u_set) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  for (int v : u_set) {
    if (v < 0 || v >= n) throw VertexOutOfRange(vertex_msg("switching set", v, n));
    in[v] = 1;
  }
  std::vector<SignedEdge> edges = g.edges();
  for (SignedEdge& e : edges)
    if (in[e.u] != in[e.v]) e.sign = -e.sign;
  return SignedGraph(n, edges);
}

DegreeProfile part_degree_profile(const SignedGraph& g, int v, const std::vector<int>& part) {
  if (v < 0 || v >= g.order()) throw VertexOutOfRange(vertex_msg("vertex", v, g.order()));
  DegreeProfile p;
  for (int w : part) {
    if (w < 0 || w >= g.order()) throw VertexOutOfRange(vertex_msg("part", w, g.order()));
    const int s = g.sign(v, w);
    if (s > 0) ++p.d_plus;
    if (s < 0) ++p.d_minus;
  }
  return p;
}

namespace {

// Climbs BFS parents to the root, returning [v, parent(v), ..., root].
std::vector<int> path_to_root(int v, const std::vector<int>& parent) {
  std::vector<int> path{v};
  while (parent[path.back()] != -1) path.push_back(parent[path.back()]);
  return path;
}

}  // namespace

BalanceResult is_balanced(const SignedGraph& g) {
  const int n = g.order();
  std::vector<int> label(n, 0);  // +-1 once visited
  std::vector<int> parent(n, -1);
  BalanceResult result;
  result.balanced = true;

  for (int root = 0; root < n; ++root) {
    if (label[root] != 0) continue;
    label[root] = +1;
    std::vector<int> component{root};
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w = 0; w < n; ++w) {
        const int s = g.sign(u, w);
        if (s == 0) continue;
        if (label[w] == 0) {
          label[w] = label[u] * s;
          parent[w] = u;
          component.push_back(w);
          queue.push_back(w);
        } else if (label[w] != label[u] * s) {
          // The edge u-w closes a negative cycle through the BFS forest.
          std::vector<int> pu = path_to_root(u, parent);
          std::vector<int> pw = path_to_root(w, parent);
          std::vector<char> on_pu(n, 0);
          for (int x : pu) on_pu[x] = 1;
          int lca = -1;
          for (int x : pw)
            if (on_pu[x]) { lca = x; break; }
          std::vector<int> cycle;
          for (int x : pu) {
            cycle.push_back(x);
            if (x == lca) break;
          }
          std::vector<int> down;
          for (int x : pw) {
            if (x == lca) break;
            down.push_back(x);
          }
          cycle.insert(cycle.end(), down.rbegin(), down.rend());
          return {false, {}, cycle};
        }
      }
    }
    // Two equivalent witnesses per component (a side and its complement);
    // keep the lexicographically smaller one.
    std::sort(component.begin(), component.end());
    std::vector<int> side, other;
    for (int v : component) (label[v] == -1 ? side : other).push_back(v);
    const std::vector<int>& pick = (side <= other) ? side : other;
    result.switching_set.insert(result.switching_set.end(), pick.begin(), pick.end());
  }
  std::sort(result.switching_set.begin(), result.switching_set.end());
  return result;
}

SignedGraph underlying_graph(const SignedGraph& g) {
  std::vector<SignedEdge> edges = g.edges();
  for (SignedEdge& e : edges) e.sign = +1;
  return SignedGraph(g.order(), edges);
}

SignedGraph relabeled(const SignedGraph& g, const std::vector<int>& perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw ShapeMismatch("permutation length differs from graph order");
  std::vector<char> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n) throw VertexOutOfRange(vertex_msg("permutation image", p, n));
    if (seen[p]) throw ShapeMismatch("permutation is not a bijection");
    seen[p] = 1;
  }
  std::vector<SignedEdge> edges;
  edges.reserve(g.edges().size());
  for (const SignedEdge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.sign});
  return SignedGraph(n, edges);
}

}  // namespace cospec
