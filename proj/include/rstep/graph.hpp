#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rstep/types.hpp"

namespace rstep {

struct Neighbor {
  Vertex to;
  Weight weight;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct WeightedEdge {
  Vertex u;
  Vertex v;
  Weight weight;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Labelled edge in the caller's id space (see Graph::label).
struct LabelledEdge {
  std::uint64_t u;
  std::uint64_t v;
  Weight weight;

  friend auto operator<=>(const LabelledEdge&, const LabelledEdge&) = default;
};

/// Undirected, simple, positively weighted graph in CSR form.
///
/// Every vertex stores its neighbours sorted by (weight, neighbour id). Each
/// undirected edge is stored twice, once per endpoint. Vertices also carry an
/// external label so ids compacted during parsing can be translated back.
/// Instances are immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an undirected edge list. Self-loops are dropped and
  /// parallel edges collapse to their minimum weight. Throws DomainError on a
  /// zero weight or an endpoint >= vertex_count. `labels` defaults to the
  /// identity.
  static Graph from_edges(std::size_t vertex_count,
                          std::span<const WeightedEdge> edges,
                          std::vector<std::uint64_t> labels = {});

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  Weight max_weight() const noexcept { return max_weight_; }
  bool is_unweighted() const noexcept { return max_weight_ <= 1; }

  std::span<const Neighbor> neighbors(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  /// Weight of edge (u,v), if present.
  std::optional<Weight> edge_weight(Vertex u, Vertex v) const;

  std::uint64_t label(Vertex v) const noexcept { return labels_[v]; }
  std::span<const std::uint64_t> labels() const noexcept { return labels_; }
  std::optional<Vertex> find_label(std::uint64_t label) const;

  /// Each undirected edge once, with u < v, sorted by (u, v).
  std::vector<WeightedEdge> edges() const;

  /// Each undirected edge once in label space, smaller label first, sorted.
  /// Two graphs that differ only by an id permutation compare equal here.
  std::vector<LabelledEdge> labelled_edges() const;

  /// Re-checks every structural invariant; throws DomainError on the first
  /// violation.
  void validate() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> targets_;
  std::vector<std::uint64_t> labels_;
  std::unordered_map<std::uint64_t, Vertex> label_index_;
  Weight max_weight_ = 0;
};

/// Reads "u v [w]" lines; '#' lines are comments. Vertex ids are compacted
/// to 0..n-1 in first-appearance order and retained as labels.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

/// Writes "u v w\n" once per undirected edge using vertex labels. Isolated
/// vertices have no representation in this format and are not written.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

/// Vertices reachable from s, sorted ascending, s included.
std::vector<Vertex> reachable_set(const Graph& g, Vertex s);

/// Component id per vertex and the size of each component.
struct Components {
  std::vector<std::uint32_t> id;
  std::vector<std::size_t> size;
};
Components connected_components(const Graph& g);

}  // namespace rstep
