#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rstep/graph.hpp"
#include "rstep/preprocess.hpp"

namespace rstep {

struct StepRecord {
  std::size_t index = 0;           // 1-based
  Weight round_distance = 0;       // d_i
  std::size_t active_count = 0;    // |A_i|
  std::size_t substeps = 0;
  std::size_t settled_prefix = 0;  // |S_i|, the source counts as settled

  friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct SsspResult {
  Vertex source = 0;
  std::vector<Weight> dist;
  std::vector<StepRecord> steps;
  /// Step that settled each vertex; 0 for the source, kNoStep if unreached.
  std::vector<std::uint32_t> settled_in;
  std::size_t total_relaxations = 0;

  static constexpr std::uint32_t kNoStep = std::numeric_limits<std::uint32_t>::max();

  /// A_i as a sorted vertex list (i is 1-based).
  std::vector<Vertex> active_set(std::size_t i) const;
};

/// Executable form of the stepping loop: every step scans all unsettled
/// vertices for the round distance and the active set.
SsspResult radius_step_reference(const Graph& g, const RadiusAssignment& r, Vertex s);

/// Ordered-set engine: round distances come from R, active sets are split
/// off Q, and neighbour updates follow the three-case protocol.
SsspResult radius_step_fast(const Graph& g, const RadiusAssignment& r, Vertex s);

/// Frontier-array engine for unit weights. Throws DomainError on weighted input.
SsspResult radius_step_unweighted(const Graph& g, const RadiusAssignment& r, Vertex s);

enum class Engine { reference, fast, unweighted };
const char* to_string(Engine e) noexcept;
Engine engine_from_string(const std::string& name);
SsspResult run_engine(Engine e, const Graph& g, const RadiusAssignment& r, Vertex s);

/// Two ordered sets over the same unsettled, touched vertices: Q keyed by
/// (delta(u), u) and R keyed by (delta(u) + r(u), u).
class FrontierIndex {
 public:
  explicit FrontierIndex(std::size_t n) : q_key_(n, kInfinity), r_key_(n, kInfinity), present_(n, 0) {}

  bool empty() const noexcept { return q_.empty(); }
  std::size_t size() const noexcept { return q_.size(); }
  bool contains(Vertex v) const noexcept { return present_[v] != 0; }

  /// Smallest (delta + r, id) entry of R; the index must not be empty.
  std::pair<Weight, Vertex> min_round() const { return *r_.begin(); }

  /// Inserts v or lowers its keys.
  void upsert(Vertex v, Weight q_key, Weight r_key);
  /// No-op when v is absent.
  void remove(Vertex v);
  /// Removes and returns every vertex whose Q key is <= bound, in key order.
  std::vector<Vertex> split(Weight bound);

  /// Q and R hold the same vertex set with the stored keys.
  bool synchronized() const;

 private:
  std::set<std::pair<Weight, Vertex>> q_;
  std::set<std::pair<Weight, Vertex>> r_;
  std::vector<Weight> q_key_;
  std::vector<Weight> r_key_;
  std::vector<char> present_;
};

/// One relaxation pass from `active`, reading `dist` as it stood at the start
/// of the pass. Returns the min-combined candidate per target, sorted by
/// target. Targets marked in `skip` are ignored. Relaxations commute, so the
/// result does not depend on `reverse` (which walks active vertices and their
/// edges backwards).
std::vector<std::pair<Vertex, Weight>> relax_pass(const Graph& g, std::span<const Weight> dist,
                                                  std::span<const Vertex> active,
                                                  std::span<const char> skip,
                                                  std::size_t& relaxations, bool reverse = false);

enum class PremiseStatus { holds, fails, unverified };

/// Whether the radii meet the two conditions the step and substep bounds
/// assume: |B(v, r(v))| >= min(rho, component size) and r(v) <= k-radius(v).
struct BoundsPremise {
  PremiseStatus ball = PremiseStatus::unverified;
  PremiseStatus k_radius = PremiseStatus::unverified;
};

/// The ball condition is always evaluated. The k-radius condition is checked
/// exhaustively when g fits the oracle cap, and is otherwise unverified.
BoundsPremise evaluate_premise(const Graph& g, const RadiusAssignment& r,
                               const OracleLimits& limits = {});

struct BoundsReport {
  bool step_bound_checked = false;
  bool substep_bound_checked = false;
  std::size_t step_limit = 0;
  std::size_t window = 0;
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool ok() const noexcept { return violations.empty(); }
};

/// Step count, window and substep bounds for one run. A bound whose premise
/// fails is reported as not checkable instead of violated; an unverified
/// premise is taken as given.
BoundsReport check_bounds(const SsspResult& res, const Graph& g, std::size_t rho, std::size_t k,
                          const BoundsPremise& premise);

/// ceil(log2(x)) for x >= 1.
std::size_t ceil_log2(Weight x);

/// "i,d_i,active_count,substeps,settled_prefix" rows with a header line.
std::string format_steps_csv(const SsspResult& res);

}  // namespace rstep
