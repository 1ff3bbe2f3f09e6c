#include <algorithm>
#include <functional>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "rstep/preprocess.hpp"

namespace rstep {
namespace {

// Number of leading adjacency entries of u the truncated search may use:
// every edge no heavier than the rho-th lightest one.
std::size_t usable_prefix(const Graph& g, Vertex u, std::size_t rho) {
  auto adj = g.neighbors(u);
  if (adj.size() <= rho) return adj.size();
  const Weight cutoff = adj[rho - 1].weight;
  std::size_t i = rho;
  while (i < adj.size() && adj[i].weight == cutoff) ++i;
  return i;
}

}  // namespace

Ball compute_ball(const Graph& g, Vertex v, std::size_t rho, TieMode mode) {
  if (rho < 1) throw DomainError("rho must be >= 1");
  Ball ball;
  ball.center = v;

  using Item = std::pair<Weight, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::unordered_map<Vertex, Weight> best;
  std::unordered_map<Vertex, char> done;
  best[v] = 0;
  heap.push({0, v});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    if (done.count(u) || best[u] != d) {
      heap.pop();
      continue;
    }
    if (ball.members.size() >= rho) {
      if (mode == TieMode::strict || d > ball.r_rho) break;
    }
    heap.pop();
    done[u] = 1;
    ball.members.push_back({u, d});
    ball.r_rho = d;
    const auto adj = g.neighbors(u);
    const std::size_t limit = usable_prefix(g, u, rho);
    for (std::size_t i = 0; i < limit; ++i) {
      const auto& nb = adj[i];
      if (done.count(nb.to)) continue;
      const Weight cand = d + nb.weight;
      auto it = best.find(nb.to);
      if (it == best.end() || cand < it->second) {
        best[nb.to] = cand;
        heap.push({cand, nb.to});
      }
    }
  }
  return ball;
}

RadiusAssignment rho_radii(const Graph& g, std::size_t rho, TieMode mode) {
  RadiusAssignment r;
  r.rho = rho;
  r.k = 1;
  r.tie_mode = mode;
  r.r.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) r.r[v] = compute_ball(g, v, rho, mode).r_rho;
  return r;
}

BallTree min_hop_ball_tree(const Ball& ball, const Graph& g) {
  BallTree t;
  t.root = ball.center;
  const std::size_t n = ball.members.size();
  t.vertex.reserve(n);
  t.distance.reserve(n);
  std::unordered_map<Vertex, std::size_t> pos;
  pos.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    t.vertex.push_back(ball.members[i].vertex);
    t.distance.push_back(ball.members[i].distance);
    pos.emplace(ball.members[i].vertex, i);
  }
  t.parent.assign(n, kNoIndex);
  t.hop_depth.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t chosen = kNoIndex;
    for (const auto& nb : g.neighbors(t.vertex[i])) {
      auto it = pos.find(nb.to);
      if (it == pos.end()) continue;
      const std::size_t j = it->second;
      if (t.distance[j] + nb.weight != t.distance[i]) continue;
      if (chosen == kNoIndex ||
          std::tie(t.hop_depth[j], t.vertex[j]) < std::tie(t.hop_depth[chosen], t.vertex[chosen])) {
        chosen = j;
      }
    }
    if (chosen == kNoIndex) throw DomainError("ball is not closed under shortest-path parents");
    t.parent[i] = chosen;
    t.hop_depth[i] = t.hop_depth[chosen] + 1;
  }
  return t;
}

BallTree BallTree::from_parents(std::span<const std::size_t> parent) {
  BallTree t;
  t.root = 0;
  const std::size_t n = parent.size();
  t.parent.assign(parent.begin(), parent.end());
  t.vertex.resize(n);
  t.distance.assign(n, 0);
  t.hop_depth.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    t.vertex[i] = static_cast<Vertex>(i);
    if (i == 0) {
      if (n > 0 && parent[0] != kNoIndex) throw DomainError("position 0 must be the root");
      continue;
    }
    if (parent[i] >= i) throw DomainError("parent must precede child");
    t.hop_depth[i] = t.hop_depth[parent[i]] + 1;
    t.distance[i] = t.hop_depth[i];
  }
  return t;
}

}  // namespace rstep
