#include "cospec/search.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

namespace cospec {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  bool enabled = false;
  Clock::time_point at{};

  static Deadline from(const SearchLimits& limits) {
    Deadline d;
    if (limits.time_budget_secs > 0) {
      d.enabled = true;
      d.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(limits.time_budget_secs));
    }
    return d;
  }

  bool passed() const { return enabled && Clock::now() > at; }
};

// --------------------------------------------------------------------------
// GM finder: restricted-growth enumeration of {C_1..C_t, D} with a sound
// net-degree bound prune.

constexpr int kAssignD = -2;
constexpr int kUnassigned = -1;

struct GMFinder {
  const SignedGraph& g;
  const SearchLimits& limits;
  bool include_trivial;
  Deadline deadline;

  int n;
  std::vector<int> assign;
  int parts_used = 0;
  std::vector<int> part_first;           // first (smallest) vertex of each part
  std::vector<std::vector<int>> net;     // net[x][p]: net-degree of x toward the assigned
                                         // portion of part p
  std::vector<int> future_deg;           // future_deg[x] at depth v: neighbors of x in [v, n)
  std::vector<GMPartition> results;
  bool truncated = false;
  long long steps = 0;

  GMFinder(const SignedGraph& graph, const SearchLimits& lims, bool trivial_ok)
      : g(graph), limits(lims), include_trivial(trivial_ok), deadline(Deadline::from(lims)),
        n(graph.order()) {
    assign.assign(n, kUnassigned);
    part_first.assign(limits.t_max, -1);
    net.assign(n, std::vector<int>(limits.t_max, 0));
    future_deg.assign(n, 0);
  }

  bool out_of_budget() {
    if (truncated) return true;
    if (static_cast<int>(results.size()) >= limits.candidate_cap ||
        ((++steps & 0x3ff) == 0 && deadline.passed())) {
      truncated = true;
      return true;
    }
    return false;
  }

  void enter(int v, int part) {
    assign[v] = part;
    if (part >= 0)
      for (int x = 0; x < n; ++x) net[x][part] += g.sign(x, v);
  }

  void leave(int v, int part) {
    assign[v] = kUnassigned;
    if (part >= 0)
      for (int x = 0; x < n; ++x) net[x][part] -= g.sign(x, v);
  }

  // Called with v already entered into `part`: both partial nets then cover
  // every assigned vertex, and the final net-degree of x toward any part can
  // drift from net[x][p] by at most the number of x's still-unassigned
  // neighbors. Two same-part vertices whose partial nets differ by more than
  // their combined slack can never satisfy condition (1).
  bool can_join(int v, int part) const {
    const int r = part_first[part];
    if (r < 0 || r == v) return true;
    const int slack = future_deg[v] + future_deg[r];
    for (int p = 0; p < parts_used; ++p) {
      const int diff = net[v][p] - net[r][p];
      if (diff > slack || -diff > slack) return false;
    }
    return true;
  }

  void leaf() {
    if (parts_used == 0) return;  // t >= 1 required
    GMPartition pi;
    pi.c_parts.assign(parts_used, {});
    for (int v = 0; v < n; ++v) {
      if (assign[v] == kAssignD) pi.d_part.push_back(v);
      else pi.c_parts[assign[v]].push_back(v);
    }
    const GMAdmissibilityReport report = validate_gm(g, pi);
    if (!report.admissible) return;
    if (!include_trivial && gm_switch(g, pi) == g) return;
    results.push_back(std::move(pi));
  }

  void recurse(int v) {
    if (out_of_budget()) return;
    if (v == n) {
      leaf();
      return;
    }
    // Maintain future degrees for the bound prune: v leaves the unassigned
    // pool for the whole subtree below.
    for (int x = 0; x < n; ++x)
      if (g.has_edge(x, v)) --future_deg[x];

    enter(v, kAssignD);
    recurse(v + 1);
    leave(v, kAssignD);

    for (int p = 0; p < parts_used && !truncated; ++p) {
      enter(v, p);
      if (can_join(v, p)) recurse(v + 1);
      leave(v, p);
    }
    if (parts_used < limits.t_max && !truncated) {
      part_first[parts_used] = v;
      enter(v, parts_used);
      ++parts_used;
      recurse(v + 1);
      --parts_used;
      leave(v, parts_used);
      part_first[parts_used] = -1;
    }

    for (int x = 0; x < n; ++x)
      if (g.has_edge(x, v)) ++future_deg[x];
  }

  SearchResult<GMPartition> run() {
    for (int x = 0; x < n; ++x) future_deg[x] = g.degree(x);
    recurse(0);
    std::sort(results.begin(), results.end(), [](const GMPartition& a, const GMPartition& b) {
      if (a.c_parts != b.c_parts) return a.c_parts < b.c_parts;
      return a.d_part < b.d_part;
    });
    return {std::move(results), truncated};
  }
};

// --------------------------------------------------------------------------
// Seeded sampling helpers. The engine output is consumed directly so that
// instances are bit-identical across standard libraries.

struct Sampler {
  std::mt19937_64 engine;

  explicit Sampler(std::uint64_t seed) : engine(seed) {}

  int below(int k) { return k <= 1 ? 0 : static_cast<int>(engine() % static_cast<unsigned>(k)); }

  bool chance(double p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    return (engine() % 1000000) < static_cast<std::uint64_t>(p * 1000000);
  }

  // 0 with probability 1-density, else +-1 by bias.
  int entry(double density, double bias) {
    if (!chance(density)) return 0;
    return chance(bias) ? +1 : -1;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
      std::swap(v[i], v[below(i + 1)]);
  }

  std::vector<int> pick(const std::vector<int>& pool, int k) {
    std::vector<int> copy = pool;
    shuffle(copy);
    copy.resize(k);
    return copy;
  }
};

void check_density(double density, double bias) {
  if (density < 0 || density > 1) throw InfeasibleParameters("edge_density must be in [0,1]");
  if (bias < 0 || bias > 1) throw InfeasibleParameters("sign_bias must be in [0,1]");
}

// Symmetric circulant block with zero diagonal: the sign of {a, b} depends
// only on the circular distance, so every row has the same net sum.
void add_circulant_edges(std::vector<SignedEdge>& edges, int offset, int size,
                         const std::vector<int>& by_distance) {
  for (int dist = 1; dist <= size / 2; ++dist) {
    const int value = by_distance[dist - 1];
    if (value == 0) continue;
    const int limit = (2 * dist == size) ? size / 2 : size;
    for (int a = 0; a < limit; ++a) {
      const int b = (a + dist) % size;
      edges.push_back({offset + a, offset + b, value});
    }
  }
}

std::vector<int> sample_distance_pattern(Sampler& rng, int size, double density, double bias) {
  std::vector<int> pattern(std::max(size / 2, 0));
  for (int& v : pattern) v = rng.entry(density, bias);
  return pattern;
}

}  // namespace

SearchResult<GMPartition> find_gm_partitions(const SignedGraph& g, const SearchLimits& limits,
                                             bool include_trivial) {
  if (g.order() > limits.n_max)
    throw TooLarge("graph order " + std::to_string(g.order()) + " exceeds n_max = " +
                   std::to_string(limits.n_max));
  if (limits.t_max < 1) throw InfeasibleParameters("t_max must be >= 1");
  GMFinder finder(g, limits, include_trivial);
  return finder.run();
}

SearchResult<GGMPartition> find_ggm_partitions(const SignedGraph& g, const SearchLimits& limits,
                                               bool include_trivial) {
  const int n = g.order();
  if (n > limits.n_max)
    throw TooLarge("graph order " + std::to_string(n) + " exceeds n_max = " +
                   std::to_string(limits.n_max));
  const Deadline deadline = Deadline::from(limits);
  SearchResult<GGMPartition> result;
  long long steps = 0;

  std::vector<int> v1, v2;
  // Enumerates k-subsets of pool[start..] in lexicographic order.
  auto for_subsets = [&](auto&& self, const std::vector<int>& pool, int start, int k,
                         std::vector<int>& out, const auto& visit) -> bool {
    if (result.truncated) return false;
    if (k == 0) return visit();
    for (int i = start; i + k <= static_cast<int>(pool.size()); ++i) {
      out.push_back(pool[i]);
      const bool keep_going = self(self, pool, i + 1, k - 1, out, visit);
      out.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };

  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  for (int m = 1; 2 * m <= n && !result.truncated; ++m) {
    for_subsets(for_subsets, all, 0, m, v1, [&] {
      // Canonical pair order: the global minimum sits in V_1.
      std::vector<int> complement;
      for (int v : all)
        if (!std::binary_search(v1.begin(), v1.end(), v) && v > v1[0]) complement.push_back(v);
      for_subsets(for_subsets, complement, 0, m, v2, [&] {
        if (static_cast<int>(result.found.size()) >= limits.candidate_cap ||
            ((++steps & 0xff) == 0 && deadline.passed())) {
          result.truncated = true;
          return false;
        }
        const GGMPartition p = ggm_partition(n, v1, v2);
        if (validate_ggm(g, p).admissible &&
            (include_trivial || ggm_switch(g, p) != g))
          result.found.push_back(p);
        return true;
      });
      return !result.truncated;
    });
  }
  return result;
}

std::pair<SignedGraph, GMPartition> generate_gm_instance(std::uint64_t seed,
                                                         const GMGenParams& params) {
  check_density(params.edge_density, params.sign_bias);
  if (params.part_sizes.empty()) throw InfeasibleParameters("need at least one part");
  for (int s : params.part_sizes)
    if (s < 1) throw InfeasibleParameters("part sizes must be positive");
  if (params.d_size < 0) throw InfeasibleParameters("d_size must be >= 0");
  if (params.forced_case == GMColumnCase::HalfPositive ||
      params.forced_case == GMColumnCase::HalfNegative) {
    for (int s : params.part_sizes)
      if (s % 2 == 1)
        throw InfeasibleParameters("half column case needs even part sizes, got " +
                                   std::to_string(s));
  }

  Sampler rng(seed);
  const int t = static_cast<int>(params.part_sizes.size());
  const int n = std::accumulate(params.part_sizes.begin(), params.part_sizes.end(), 0) +
                params.d_size;
  std::vector<int> offsets(t);
  for (int i = 1; i < t; ++i) offsets[i] = offsets[i - 1] + params.part_sizes[i - 1];
  const int d_offset = offsets[t - 1] + params.part_sizes[t - 1];

  std::vector<SignedEdge> edges;

  // C_i internal blocks: symmetric circulants.
  for (int i = 0; i < t; ++i)
    add_circulant_edges(edges, offsets[i], params.part_sizes[i],
                        sample_distance_pattern(rng, params.part_sizes[i], params.edge_density,
                                                params.sign_bias));

  // C_i x C_j blocks: the sign of (a, b) depends on (a + b) mod gcd, which
  // keeps both row and column net sums constant.
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      const int g = std::gcd(params.part_sizes[i], params.part_sizes[j]);
      std::vector<int> residue(g);
      for (int& v : residue) v = rng.entry(params.edge_density, params.sign_bias);
      for (int a = 0; a < params.part_sizes[i]; ++a)
        for (int b = 0; b < params.part_sizes[j]; ++b) {
          const int value = residue[(a + b) % g];
          if (value != 0) edges.push_back({offsets[i] + a, offsets[j] + b, value});
        }
    }

  // D columns straight from the admissible cases.
  const bool allow_pos = params.sign_bias > 0;
  const bool allow_neg = params.sign_bias < 1;
  for (int k = 0; k < params.d_size; ++k) {
    const int v = d_offset + k;
    for (int i = 0; i < t; ++i) {
      const int size = params.part_sizes[i];
      std::vector<int> part(size);
      std::iota(part.begin(), part.end(), offsets[i]);

      GMColumnCase kase;
      if (params.forced_case) {
        kase = *params.forced_case;
      } else {
        std::vector<GMColumnCase> feasible{GMColumnCase::NetZero};
        if (allow_pos) feasible.push_back(GMColumnCase::AllPositive);
        if (allow_neg) feasible.push_back(GMColumnCase::AllNegative);
        if (size % 2 == 0) {
          if (allow_pos) feasible.push_back(GMColumnCase::HalfPositive);
          if (allow_neg) feasible.push_back(GMColumnCase::HalfNegative);
        }
        kase = feasible[rng.below(static_cast<int>(feasible.size()))];
      }

      switch (kase) {
        case GMColumnCase::NetZero: {
          const int pairs = (allow_pos && allow_neg) ? rng.below(size / 2 + 1) : 0;
          const std::vector<int> chosen = rng.pick(part, 2 * pairs);
          for (int idx = 0; idx < pairs; ++idx) edges.push_back({v, chosen[idx], +1});
          for (int idx = pairs; idx < 2 * pairs; ++idx) edges.push_back({v, chosen[idx], -1});
          break;
        }
        case GMColumnCase::HalfPositive:
          for (int w : rng.pick(part, size / 2)) edges.push_back({v, w, +1});
          break;
        case GMColumnCase::HalfNegative:
          for (int w : rng.pick(part, size / 2)) edges.push_back({v, w, -1});
          break;
        case GMColumnCase::AllPositive:
          for (int w : part) edges.push_back({v, w, +1});
          break;
        case GMColumnCase::AllNegative:
          for (int w : part) edges.push_back({v, w, -1});
          break;
      }
    }
  }

  // D internal: unconstrained.
  for (int x = 0; x < params.d_size; ++x)
    for (int y = x + 1; y < params.d_size; ++y)
      if (const int s = rng.entry(params.edge_density, params.sign_bias); s != 0)
        edges.push_back({d_offset + x, d_offset + y, s});

  // Random relabeling so block structure is not baked into vertex ids.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);

  GMPartition pi;
  for (int i = 0; i < t; ++i) {
    std::vector<int> part(params.part_sizes[i]);
    for (int a = 0; a < params.part_sizes[i]; ++a) part[a] = perm[offsets[i] + a];
    std::sort(part.begin(), part.end());
    pi.c_parts.push_back(std::move(part));
  }
  for (int k = 0; k < params.d_size; ++k) pi.d_part.push_back(perm[d_offset + k]);
  std::sort(pi.d_part.begin(), pi.d_part.end());

  SignedGraph graph = relabeled(SignedGraph(n, edges), perm);
  if (!validate_gm(graph, pi).admissible)
    throw Error("generate_gm_instance produced an inadmissible instance (internal)");
  return {std::move(graph), std::move(pi)};
}

std::pair<SignedGraph, GGMPartition> generate_ggm_instance(std::uint64_t seed,
                                                           const GGMGenParams& params) {
  check_density(params.edge_density, params.sign_bias);
  if (params.m < 1) throw InfeasibleParameters("m must be >= 1");
  if (params.d_size < 0) throw InfeasibleParameters("d_size must be >= 0");
  const bool allow_pos = params.sign_bias > 0;
  const bool allow_neg = params.sign_bias < 1;
  if (params.forced_case) {
    const GGMVertexCase c = *params.forced_case;
    if ((c == GGMVertexCase::FullMixed12 || c == GGMVertexCase::FullMixed21) &&
        !(allow_pos && allow_neg))
      throw InfeasibleParameters("mixed case needs both signs available");
  }

  Sampler rng(seed);
  const int m = params.m;
  const int n = 2 * m + params.d_size;
  std::vector<SignedEdge> edges;

  // A_1 and A_2: circulants whose distance patterns are permutations of each
  // other within equal-weight distance classes, so net row sums agree.
  std::vector<int> pattern1 = sample_distance_pattern(rng, m, params.edge_density,
                                                      params.sign_bias);
  std::vector<int> pattern2 = pattern1;
  if (m % 2 == 0 && !pattern2.empty()) {
    // distance m/2 has a single neighbor per vertex; permute only the rest
    const int last = pattern2.back();
    pattern2.pop_back();
    rng.shuffle(pattern2);
    pattern2.push_back(last);
  } else {
    rng.shuffle(pattern2);
  }
  add_circulant_edges(edges, 0, m, pattern1);
  add_circulant_edges(edges, m, m, pattern2);

  // B: full circulant, row sums = column sums.
  std::vector<int> b_pattern(m);
  for (int& v : b_pattern) v = rng.entry(params.edge_density, params.sign_bias);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (const int s = b_pattern[(b - a + m) % m]; s != 0)
        edges.push_back({a, m + b, s});

  // Rest vertices: one admissible case each.
  auto place = [&](int v, int side_offset, int count, int sign, std::vector<int>& free_slots) {
    const std::vector<int> chosen = rng.pick(free_slots, count);
    for (int w : chosen) {
      edges.push_back({v, side_offset + w, sign});
      free_slots.erase(std::find(free_slots.begin(), free_slots.end(), w));
    }
  };
  for (int k = 0; k < params.d_size; ++k) {
    const int v = 2 * m + k;
    GGMVertexCase kase;
    if (params.forced_case) {
      kase = *params.forced_case;
    } else {
      std::vector<GGMVertexCase> feasible{GGMVertexCase::Equal};
      if (allow_pos) {
        feasible.push_back(GGMVertexCase::FullPos1);
        feasible.push_back(GGMVertexCase::FullPos2);
      }
      if (allow_neg) {
        feasible.push_back(GGMVertexCase::FullNeg1);
        feasible.push_back(GGMVertexCase::FullNeg2);
      }
      if (allow_pos && allow_neg) {
        feasible.push_back(GGMVertexCase::FullMixed12);
        feasible.push_back(GGMVertexCase::FullMixed21);
      }
      kase = feasible[rng.below(static_cast<int>(feasible.size()))];
    }

    auto join_side = [&](int offset, int sign) {
      for (int w = 0; w < m; ++w) edges.push_back({v, offset + w, sign});
    };
    switch (kase) {
      case GGMVertexCase::FullPos1: join_side(0, +1); break;
      case GGMVertexCase::FullPos2: join_side(m, +1); break;
      case GGMVertexCase::FullNeg1: join_side(0, -1); break;
      case GGMVertexCase::FullNeg2: join_side(m, -1); break;
      case GGMVertexCase::FullMixed12:
        join_side(0, +1);
        join_side(m, -1);
        break;
      case GGMVertexCase::FullMixed21:
        join_side(0, -1);
        join_side(m, +1);
        break;
      case GGMVertexCase::Equal: {
        int p1 = allow_pos ? rng.below(m + 1) : 0;
        int n1 = allow_neg ? rng.below(m - p1 + 1) : 0;
        const int diff = p1 - n1;
        // Side 2 needs the same net; slack j adds a cancelling +/- pair.
        const int max_j = (allow_pos && allow_neg) ? (m - std::abs(diff)) / 2 : 0;
        const int j = max_j > 0 ? rng.below(max_j + 1) : 0;
        const int p2 = (diff >= 0 ? diff : 0) + j;
        const int n2 = (diff < 0 ? -diff : 0) + j;
        std::vector<int> slots1(m), slots2(m);
        std::iota(slots1.begin(), slots1.end(), 0);
        std::iota(slots2.begin(), slots2.end(), 0);
        place(v, 0, p1, +1, slots1);
        place(v, 0, n1, -1, slots1);
        place(v, m, p2, +1, slots2);
        place(v, m, n2, -1, slots2);
        break;
      }
    }
  }

  // Rest internal: unconstrained.
  for (int x = 0; x < params.d_size; ++x)
    for (int y = x + 1; y < params.d_size; ++y)
      if (const int s = rng.entry(params.edge_density, params.sign_bias); s != 0)
        edges.push_back({2 * m + x, 2 * m + y, s});

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);

  GGMPartition p;
  for (int a = 0; a < m; ++a) p.v1.push_back(perm[a]);
  for (int a = 0; a < m; ++a) p.v2.push_back(perm[m + a]);
  for (int k = 0; k < params.d_size; ++k) p.rest.push_back(perm[2 * m + k]);
  std::sort(p.v1.begin(), p.v1.end());
  std::sort(p.v2.begin(), p.v2.end());
  std::sort(p.rest.begin(), p.rest.end());

  SignedGraph graph = relabeled(SignedGraph(n, edges), perm);
  if (!validate_ggm(graph, p).admissible)
    throw Error("generate_ggm_instance produced an inadmissible instance (internal)");
  return {std::move(graph), std::move(p)};
}

}  // namespace cospec
