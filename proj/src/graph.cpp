#include "rstep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace rstep {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const WeightedEdge> edges,
                        std::vector<std::uint64_t> labels) {
  if (vertex_count > std::numeric_limits<Vertex>::max()) {
    throw DomainError("vertex count exceeds 32-bit id space");
  }
  if (labels.empty()) {
    labels.resize(vertex_count);
    std::iota(labels.begin(), labels.end(), std::uint64_t{0});
  } else if (labels.size() != vertex_count) {
    throw DomainError("label count does not match vertex count");
  }

  // Canonical (min, max, weight) triples; sorting then keeps the lightest copy first.
  std::vector<WeightedEdge> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw DomainError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                        std::to_string(e.v));
    }
    if (e.weight == 0) {
      throw DomainError("edge weight must be a positive integer");
    }
    if (e.u == e.v) continue;
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::sort(canon.begin(), canon.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::tie(a.u, a.v, a.weight) < std::tie(b.u, b.v, b.weight);
  });
  canon.erase(std::unique(canon.begin(), canon.end(),
                          [](const WeightedEdge& a, const WeightedEdge& b) {
                            return a.u == b.u && a.v == b.v;
                          }),
              canon.end());

  Graph g;
  g.labels_ = std::move(labels);
  g.offsets_.assign(vertex_count + 1, 0);
  for (const auto& e : canon) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
    g.max_weight_ = std::max(g.max_weight_, e.weight);
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.targets_.resize(2 * canon.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : canon) {
    g.targets_[cursor[e.u]++] = {e.v, e.weight};
    g.targets_[cursor[e.v]++] = {e.u, e.weight};
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]),
              [](const Neighbor& a, const Neighbor& b) {
                return std::tie(a.weight, a.to) < std::tie(b.weight, b.to);
              });
  }
  g.label_index_.reserve(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (!g.label_index_.emplace(g.labels_[v], static_cast<Vertex>(v)).second) {
      throw DomainError("duplicate vertex label " + std::to_string(g.labels_[v]));
    }
  }
  return g;
}

std::optional<Weight> Graph::edge_weight(Vertex u, Vertex v) const {
  for (const auto& nb : neighbors(u)) {
    if (nb.to == v) return nb.weight;
  }
  return std::nullopt;
}

std::optional<Vertex> Graph::find_label(std::uint64_t label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<WeightedEdge> Graph::edges() const {
  std::vector<WeightedEdge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (const auto& nb : neighbors(u)) {
      if (u < nb.to) out.push_back({u, nb.to, nb.weight});
    }
  }
  std::sort(out.begin(), out.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return out;
}

std::vector<LabelledEdge> Graph::labelled_edges() const {
  std::vector<LabelledEdge> out;
  out.reserve(edge_count());
  for (const auto& e : edges()) {
    auto a = labels_[e.u];
    auto b = labels_[e.v];
    out.push_back({std::min(a, b), std::max(a, b), e.weight});
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Graph::validate() const {
  const std::size_t n = vertex_count();
  if (labels_.size() != n) throw DomainError("label table size mismatch");
  Weight seen_max = 0;
  for (Vertex u = 0; u < n; ++u) {
    auto adj = neighbors(u);
    for (std::size_t i = 0; i < adj.size(); ++i) {
      const auto& nb = adj[i];
      if (nb.to >= n) throw DomainError("neighbour id out of range");
      if (nb.to == u) throw DomainError("self-loop at " + std::to_string(u));
      if (nb.weight == 0) throw DomainError("zero weight edge");
      seen_max = std::max(seen_max, nb.weight);
      if (i > 0 && std::tie(adj[i - 1].weight, adj[i - 1].to) >= std::tie(nb.weight, nb.to)) {
        throw DomainError("adjacency of " + std::to_string(u) + " not sorted or has duplicates");
      }
      auto back = edge_weight(nb.to, u);
      if (!back || *back != nb.weight) throw DomainError("asymmetric edge");
    }
    // a second copy of the same neighbour with a different weight
    std::vector<Vertex> ids;
    for (const auto& nb : adj) ids.push_back(nb.to);
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      throw DomainError("parallel edge at " + std::to_string(u));
    }
  }
  if (seen_max != max_weight_) throw DomainError("max weight out of date");
}

std::vector<Vertex> reachable_set(const Graph& g, Vertex s) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<Vertex> stack{s};
  std::vector<Vertex> out;
  seen[s] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (const auto& nb : g.neighbors(u)) {
      if (!seen[nb.to]) {
        seen[nb.to] = 1;
        stack.push_back(nb.to);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Components connected_components(const Graph& g) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  Components c;
  c.id.assign(g.vertex_count(), kUnset);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (c.id[root] != kUnset) continue;
    const auto cid = static_cast<std::uint32_t>(c.size.size());
    std::size_t count = 0;
    c.id[root] = cid;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++count;
      for (const auto& nb : g.neighbors(u)) {
        if (c.id[nb.to] == kUnset) {
          c.id[nb.to] = cid;
          stack.push_back(nb.to);
        }
      }
    }
    c.size.push_back(count);
  }
  return c;
}

}  // namespace rstep
