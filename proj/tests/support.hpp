#pragma once

// Shared fixtures and brute-force oracles for the test binaries. Nothing here
// calls into the algorithms it is used to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "rstep/generators.hpp"
#include "rstep/graph.hpp"

namespace rstep::testing {

inline Graph make_graph(std::size_t n, std::vector<WeightedEdge> edges) {
  return Graph::from_edges(n, edges);
}

// 0 -2- 1 -3- 2
inline Graph small_path() { return make_graph(3, {{0, 1, 2}, {1, 2, 3}}); }

// 0-1 (5), 0-2 (1), 2-1 (1)
inline Graph small_triangle() { return make_graph(3, {{0, 1, 5}, {0, 2, 1}, {2, 1, 1}}); }

inline Graph complete_graph(std::size_t n, Weight w = 1) {
  std::vector<WeightedEdge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, w});
  }
  return make_graph(n, edges);
}

struct CorpusGraph {
  Graph graph;
  Vertex source;
  std::uint64_t seed;
};

// Seeded random connected graphs with n in [n_lo, n_hi], m <= m_cap and
// uniform weights in [1, w_hi].
inline std::vector<CorpusGraph> random_corpus(std::size_t count, std::size_t n_lo, std::size_t n_hi,
                                              std::size_t m_cap, Weight w_hi, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<CorpusGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = n_lo + rng() % (n_hi - n_lo + 1);
    const std::size_t max_m = std::min(m_cap, n * (n - 1) / 2);
    const std::size_t min_m = n - 1;
    const std::size_t m = min_m + rng() % (max_m - min_m + 1);
    const std::uint64_t gseed = rng();
    GeneratorSpec spec{RandomConnected{n, m, gseed}, UniformWeights{1, w_hi, gseed ^ 0x9e3779b97f4a7c15ULL}};
    const Vertex s = static_cast<Vertex>(rng() % n);
    out.push_back({generate(spec).graph, s, gseed});
  }
  return out;
}

// best[h][v]: lightest walk from s to v using at most h edges (Bellman-Ford
// by hop layers). Exhaustive over hop budgets, so it also yields the fewest
// hops among minimum-weight paths.
inline std::vector<std::vector<Weight>> hop_layered_distances(const Graph& g, Vertex s) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Weight>> best(1, std::vector<Weight>(n, kInfinity));
  best[0][s] = 0;
  for (std::size_t h = 1; h < std::max<std::size_t>(n, 1); ++h) {
    std::vector<Weight> next = best.back();
    for (Vertex u = 0; u < n; ++u) {
      if (best.back()[u] == kInfinity) continue;
      for (const auto& e : g.neighbors(u)) next[e.to] = std::min(next[e.to], best.back()[u] + e.weight);
    }
    best.push_back(std::move(next));
  }
  return best;
}

// (distance, fewest hops) from s to every vertex, from the layered table.
struct HopDist {
  std::vector<Weight> dist;
  std::vector<std::size_t> hops;
};

inline HopDist oracle_hop_distances(const Graph& g, Vertex s) {
  const auto best = hop_layered_distances(g, s);
  const std::size_t n = g.vertex_count();
  HopDist out{best.back(), std::vector<std::size_t>(n, SIZE_MAX)};
  for (Vertex v = 0; v < n; ++v) {
    if (out.dist[v] == kInfinity) continue;
    for (std::size_t h = 0; h < best.size(); ++h) {
      if (best[h][v] == out.dist[v]) {
        out.hops[v] = h;
        break;
      }
    }
  }
  return out;
}

// Preorder depth sequences of every rooted ordered tree with `nodes` nodes:
// d[0] = 0 and 1 <= d[i] <= d[i-1] + 1.
inline void for_each_tree(std::size_t nodes, const auto& visit) {
  std::vector<std::size_t> depth{0};
  auto rec = [&](auto&& self) -> void {
    if (depth.size() == nodes) {
      visit(depth);
      return;
    }
    for (std::size_t d = 1; d <= depth.back() + 1; ++d) {
      depth.push_back(d);
      self(self);
      depth.pop_back();
    }
  };
  rec(rec);
}

// Parent positions for a preorder depth sequence.
inline std::vector<std::size_t> parents_from_depths(const std::vector<std::size_t>& depth) {
  std::vector<std::size_t> parent(depth.size(), kNoIndex);
  std::vector<std::size_t> last_at_depth(depth.size() + 1, kNoIndex);
  for (std::size_t i = 0; i < depth.size(); ++i) {
    if (i > 0) parent[i] = last_at_depth[depth[i] - 1];
    last_at_depth[depth[i]] = i;
  }
  return parent;
}

// Fewest root shortcuts bringing every node within k hops, by trying every
// subset. A node is reached by a shortest path only through its ancestors,
// so its hop count is min over shortcut ancestors a of 1 + depth(v) - depth(a).
inline std::size_t brute_force_min_shortcuts(const std::vector<std::size_t>& depth,
                                             const std::vector<std::size_t>& parent, std::size_t k) {
  const std::size_t n = depth.size();
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    const auto edges = static_cast<std::size_t>(std::popcount(mask));
    if (edges >= best) continue;
    bool ok = true;
    for (std::size_t v = 1; v < n && ok; ++v) {
      std::size_t hops = depth[v];
      for (std::size_t a = v; a != 0; a = parent[a]) {
        if (mask & (1u << (a - 1))) hops = std::min(hops, 1 + depth[v] - depth[a]);
      }
      ok = hops <= k;
    }
    if (ok) best = edges;
  }
  return best;
}

}  // namespace rstep::testing
