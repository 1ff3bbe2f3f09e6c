#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rstep/graph.hpp"

namespace rstep {

/// How a ball treats vertices tied at the rho-th distance.
enum class TieMode {
  inclusive,  ///< keep every vertex at distance r_rho (the default)
  strict,     ///< exactly rho members, ties broken by vertex id
};

enum class Heuristic { greedy, dp, full };

const char* to_string(Heuristic h) noexcept;
Heuristic heuristic_from_string(const std::string& name);

struct BallMember {
  Vertex vertex;
  Weight distance;

  friend bool operator==(const BallMember&, const BallMember&) = default;
};

/// The rho nearest vertices of `center` (center included, at distance 0),
/// sorted by (distance, id). r_rho is the largest member distance.
struct Ball {
  Vertex center = 0;
  std::vector<BallMember> members;
  Weight r_rho = 0;
};

/// Truncated Dijkstra from v. Each vertex only offers its lightest edges (all
/// edges no heavier than its rho-th lightest), which is enough to reach the
/// rho nearest vertices exactly. In inclusive mode the search keeps going
/// until every vertex at distance r_rho is a member; a component with fewer
/// than rho vertices is returned whole.
Ball compute_ball(const Graph& g, Vertex v, std::size_t rho, TieMode mode = TieMode::inclusive);

struct RadiusAssignment {
  std::vector<Weight> r;
  std::size_t rho = 1;
  std::size_t k = 1;
  TieMode tie_mode = TieMode::inclusive;
};

/// Shortest-path tree over a ball in which every member hangs at the smallest
/// possible hop depth. Arrays are indexed by member position; members are in
/// nondecreasing distance order, so a parent always precedes its children.
struct BallTree {
  Vertex root = 0;
  std::vector<Vertex> vertex;
  std::vector<Weight> distance;
  std::vector<std::size_t> parent;  // kNoIndex for the root (position 0)
  std::vector<std::uint32_t> hop_depth;

  std::size_t size() const noexcept { return vertex.size(); }

  /// Tree from explicit parent positions (parent[i] < i, parent[0] ==
  /// kNoIndex). Distances are set to hop depths. Used for synthetic trees.
  static BallTree from_parents(std::span<const std::size_t> parent);
};

/// Among equal-distance parents, picks the one with the smallest hop depth,
/// then the smallest vertex id.
BallTree min_hop_ball_tree(const Ball& ball, const Graph& g);

struct ShortcutEdge {
  Vertex target;
  Weight weight;

  friend bool operator==(const ShortcutEdge&, const ShortcutEdge&) = default;
};

struct ShortcutPlan {
  Vertex source = 0;
  std::vector<ShortcutEdge> added;  // sorted by target
  Heuristic heuristic = Heuristic::greedy;
};

/// Shortcuts from the root to every member at hop depth k+1, 2k+1, 3k+1, ...
ShortcutPlan shortcut_greedy(const BallTree& tree, std::size_t k);

/// Per-tree optimum: the fewest root shortcuts that bring every member
/// within k hops, via the F(u, t) recurrence over the min-hop tree.
ShortcutPlan shortcut_dp(const BallTree& tree, std::size_t k);

/// Cost table of the recurrence, exposed for tests: cost[i * (k+1) + t] is
/// F(member i, t), the edges needed inside member i's subtree when its parent
/// sits t hops from the root.
std::vector<std::size_t> shortcut_dp_table(const BallTree& tree, std::size_t k);

struct PreprocessResult {
  Graph graph;
  RadiusAssignment radii;
  /// Distinct vertex pairs that received a shortcut (new edges plus
  /// existing edges whose weight dropped).
  std::size_t added_edges = 0;
  /// Sum of per-vertex plan sizes before merging.
  std::size_t planned_edges = 0;
};

struct PreprocessOptions {
  std::size_t k = 1;
  std::size_t rho = 1;
  Heuristic heuristic = Heuristic::dp;
  TieMode tie_mode = TieMode::inclusive;
};

/// Shortcut from every vertex to each ball member it does not already reach
/// with a direct edge of the same weight. Radii are r_rho.
PreprocessResult build_1_rho(const Graph& g, std::size_t rho, TieMode mode = TieMode::inclusive);

/// Ball, min-hop tree and heuristic plan per vertex; the union of all plans
/// is merged into g with min-collapse. Radii are r_rho.
PreprocessResult build_k_rho(const Graph& g, const PreprocessOptions& opts);

/// r_rho for every vertex without augmenting the graph.
RadiusAssignment rho_radii(const Graph& g, std::size_t rho, TieMode mode = TieMode::inclusive);

enum class ViolationKind { radius_exceeds_k_radius, ball_too_small };

struct Violation {
  Vertex vertex;
  ViolationKind kind;
  Weight radius;
  /// k-radius for radius_exceeds_k_radius, ball size for ball_too_small.
  Weight bound;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks r(v) <= k-radius(v) and |B(v, r(v))| >= min(rho, component size)
/// for every v, using r.k and r.rho. Exhaustive; throws SizeError above cap.
ValidationReport validate_k_rho(const Graph& g, const RadiusAssignment& r,
                                const OracleLimits& limits = {});

std::string format_report(const Graph& g, const ValidationReport& report);

/// "v r\n" per vertex using labels; an unbounded radius is written "inf".
void write_radii(const Graph& g, const RadiusAssignment& r, std::ostream& out);
void write_radii_file(const Graph& g, const RadiusAssignment& r, const std::string& path);
/// Every vertex of g must be listed exactly once. rho/k are left at 1.
RadiusAssignment parse_radii(const Graph& g, std::istream& in);
RadiusAssignment read_radii_file(const Graph& g, const std::string& path);

}  // namespace rstep
