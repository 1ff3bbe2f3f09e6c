#pragma once

#include <cstdint>
#include <vector>

#include "rstep/graph.hpp"

// Sequential reference algorithms. They double as correctness oracles for the
// stepping engines and as comparators in the experiments.

namespace rstep {

struct DistanceVector {
  Vertex source = 0;
  std::vector<Weight> dist;  // kInfinity marks unreached

  friend bool operator==(const DistanceVector&, const DistanceVector&) = default;
};

DistanceVector dijkstra(const Graph& g, Vertex s);

DistanceVector bellman_ford(const Graph& g, Vertex s);

struct BfsResult {
  DistanceVector hops;
  /// Eccentricity of s inside its component.
  std::size_t rounds = 0;
  /// Vertices in dequeue order.
  std::vector<Vertex> settle_order;
  /// scanned_before[i]: edges scanned before settle_order[i] was dequeued.
  std::vector<std::size_t> scanned_before;
};

BfsResult bfs(const Graph& g, Vertex s);

struct DeltaSteppingResult {
  DistanceVector dist;
  /// Buckets that settled at least one vertex other than the source.
  std::size_t steps = 0;
  /// Relaxation passes summed over all buckets; the final pass of a bucket
  /// that changes nothing inside it is included.
  std::size_t substeps = 0;
};

DeltaSteppingResult delta_stepping(const Graph& g, Vertex s, Weight delta);

inline constexpr std::uint32_t kNoHops = std::numeric_limits<std::uint32_t>::max();

/// All-pairs distances and hop distances, where the hop distance is the
/// fewest edges over all minimum-weight paths.
class HopMatrix {
 public:
  explicit HopMatrix(std::size_t n) : n_(n), dist_(n * n, kInfinity), hops_(n * n, kNoHops) {}

  std::size_t size() const noexcept { return n_; }
  Weight distance(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }
  std::uint32_t hops(Vertex u, Vertex v) const { return hops_[u * n_ + v]; }

  void set(Vertex u, Vertex v, Weight d, std::uint32_t h) {
    dist_[u * n_ + v] = d;
    hops_[u * n_ + v] = h;
  }

 private:
  std::size_t n_;
  std::vector<Weight> dist_;
  std::vector<std::uint32_t> hops_;
};

/// Throws SizeError above limits.max_vertices.
HopMatrix hop_matrix(const Graph& g, const OracleLimits& limits = {});

/// k-radius per vertex: min d(u,v) over v more than k hops away, kInfinity
/// when no such v exists. Exhaustive; throws SizeError above the cap.
std::vector<Weight> k_radius_bruteforce(const Graph& g, std::size_t k,
                                        const OracleLimits& limits = {});
std::vector<Weight> k_radius_from_matrix(const HopMatrix& hm, std::size_t k);

}  // namespace rstep
