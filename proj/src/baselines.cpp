#include "rstep/baselines.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>
#include <set>
#include <string>
#include <tuple>

namespace rstep {

DistanceVector dijkstra(const Graph& g, Vertex s) {
  DistanceVector out{s, std::vector<Weight>(g.vertex_count(), kInfinity)};
  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  out.dist[s] = 0;
  heap.push({0, s});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != out.dist[u]) continue;
    for (const auto& nb : g.neighbors(u)) {
      Weight cand = d + nb.weight;
      if (cand < out.dist[nb.to]) {
        out.dist[nb.to] = cand;
        heap.push({cand, nb.to});
      }
    }
  }
  return out;
}

DistanceVector bellman_ford(const Graph& g, Vertex s) {
  DistanceVector out{s, std::vector<Weight>(g.vertex_count(), kInfinity)};
  out.dist[s] = 0;
  const std::size_t n = g.vertex_count();
  for (std::size_t pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (Vertex u = 0; u < n; ++u) {
      if (out.dist[u] == kInfinity) continue;
      for (const auto& nb : g.neighbors(u)) {
        Weight cand = out.dist[u] + nb.weight;
        if (cand < out.dist[nb.to]) {
          out.dist[nb.to] = cand;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return out;
}

BfsResult bfs(const Graph& g, Vertex s) {
  BfsResult r;
  r.hops = {s, std::vector<Weight>(g.vertex_count(), kInfinity)};
  r.hops.dist[s] = 0;
  std::deque<Vertex> queue{s};
  std::size_t scanned = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    r.settle_order.push_back(u);
    r.scanned_before.push_back(scanned);
    r.rounds = std::max<std::size_t>(r.rounds, r.hops.dist[u]);
    for (const auto& nb : g.neighbors(u)) {
      ++scanned;
      if (r.hops.dist[nb.to] == kInfinity) {
        r.hops.dist[nb.to] = r.hops.dist[u] + 1;
        queue.push_back(nb.to);
      }
    }
  }
  return r;
}

DeltaSteppingResult delta_stepping(const Graph& g, Vertex s, Weight delta) {
  if (delta < 1) throw DomainError("delta must be >= 1");
  const std::size_t n = g.vertex_count();
  DeltaSteppingResult r;
  r.dist = {s, std::vector<Weight>(n, kInfinity)};
  auto& dist = r.dist.dist;
  std::vector<char> settled(n, 0);
  std::set<std::pair<Weight, Vertex>> pending;  // touched, unsettled
  dist[s] = 0;
  pending.insert({0, s});

  while (!pending.empty()) {
    const Weight bucket = pending.begin()->first / delta;
    const Weight upper = (bucket + 1 > kInfinity / delta) ? kInfinity : (bucket + 1) * delta - 1;
    std::vector<Vertex> members;
    while (!pending.empty() && pending.begin()->first <= upper) {
      members.push_back(pending.begin()->second);
      pending.erase(pending.begin());
    }
    // Jacobi passes over the bucket until nothing inside it improves
    for (;;) {
      ++r.substeps;
      std::vector<std::pair<Vertex, Weight>> cands;
      for (Vertex u : members) {
        for (const auto& nb : g.neighbors(u)) {
          if (!settled[nb.to]) cands.push_back({nb.to, dist[u] + nb.weight});
        }
      }
      bool inner_change = false;
      for (auto [v, c] : cands) {
        if (c >= dist[v]) continue;
        const Weight old = dist[v];
        if (old != kInfinity) pending.erase({old, v});
        dist[v] = c;
        if (c <= upper) {
          inner_change = true;
          if (old > upper) members.push_back(v);
        } else {
          pending.insert({c, v});
        }
      }
      if (!inner_change) break;
    }
    bool beyond_source = false;
    for (Vertex u : members) {
      settled[u] = 1;
      beyond_source |= (u != s);
    }
    if (beyond_source) ++r.steps;
  }
  return r;
}

HopMatrix hop_matrix(const Graph& g, const OracleLimits& limits) {
  const std::size_t n = g.vertex_count();
  if (n > limits.max_vertices) {
    throw SizeError("hop matrix needs n <= " + std::to_string(limits.max_vertices) + ", got " +
                    std::to_string(n));
  }
  HopMatrix hm(n);
  // Dijkstra on lexicographic (distance, hops) keys.
  using Item = std::tuple<Weight, std::uint32_t, Vertex>;
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Weight> d(n, kInfinity);
    std::vector<std::uint32_t> h(n, kNoHops);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    d[s] = 0;
    h[s] = 0;
    heap.push({0, 0, s});
    while (!heap.empty()) {
      auto [du, hu, u] = heap.top();
      heap.pop();
      if (du != d[u] || hu != h[u]) continue;
      for (const auto& nb : g.neighbors(u)) {
        Weight cd = du + nb.weight;
        std::uint32_t ch = hu + 1;
        if (std::tie(cd, ch) < std::tie(d[nb.to], h[nb.to])) {
          d[nb.to] = cd;
          h[nb.to] = ch;
          heap.push({cd, ch, nb.to});
        }
      }
    }
    for (Vertex v = 0; v < n; ++v) hm.set(s, v, d[v], h[v]);
  }
  return hm;
}

std::vector<Weight> k_radius_from_matrix(const HopMatrix& hm, std::size_t k) {
  const std::size_t n = hm.size();
  std::vector<Weight> out(n, kInfinity);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const auto h = hm.hops(u, v);
      if (h != kNoHops && h > k) out[u] = std::min(out[u], hm.distance(u, v));
    }
  }
  return out;
}

std::vector<Weight> k_radius_bruteforce(const Graph& g, std::size_t k, const OracleLimits& limits) {
  return k_radius_from_matrix(hop_matrix(g, limits), k);
}

}  // namespace rstep
