#include <algorithm>

#include "rstep/baselines.hpp"
#include "rstep/radius_step.hpp"

namespace rstep {

std::size_t ceil_log2(Weight x) {
  std::size_t bits = 0;
  Weight p = 1;
  while (p < x) {
    p <<= 1;
    ++bits;
  }
  return bits;
}

BoundsPremise evaluate_premise(const Graph& g, const RadiusAssignment& r,
                               const OracleLimits& limits) {
  if (r.r.size() != g.vertex_count()) throw DomainError("radius table does not match graph");
  BoundsPremise p;
  p.ball = PremiseStatus::holds;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    // |B(v, x)| >= min(rho, component) exactly when x >= r_rho(v)
    if (compute_ball(g, v, r.rho, TieMode::inclusive).r_rho > r.r[v]) {
      p.ball = PremiseStatus::fails;
      break;
    }
  }
  if (g.vertex_count() <= limits.max_vertices) {
    const auto kr = k_radius_bruteforce(g, r.k, limits);
    p.k_radius = PremiseStatus::holds;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (r.r[v] > kr[v]) {
        p.k_radius = PremiseStatus::fails;
        break;
      }
    }
  }
  return p;
}

BoundsReport check_bounds(const SsspResult& res, const Graph& g, std::size_t rho, std::size_t k,
                          const BoundsPremise& premise) {
  BoundsReport rep;
  const std::size_t n_reach = res.steps.empty() ? 1 : res.steps.back().settled_prefix;
  const std::size_t rho_eff = std::max<std::size_t>(1, std::min(rho, n_reach));
  const Weight heaviest = std::max<Weight>(1, g.max_weight());
  rep.window = 1 + ceil_log2(static_cast<Weight>(rho_eff) * heaviest);
  rep.step_limit = ((n_reach + rho_eff - 1) / rho_eff) * rep.window;

  if (premise.ball == PremiseStatus::fails) {
    rep.notes.push_back("step bound not checkable: some ball B(v, r(v)) holds fewer than rho vertices");
  } else {
    rep.step_bound_checked = true;
    const std::size_t total = res.steps.size();
    if (total > rep.step_limit) {
      rep.violations.push_back("steps " + std::to_string(total) + " exceed bound " +
                               std::to_string(rep.step_limit));
    }
    std::vector<std::size_t> prefix{1};
    for (const auto& s : res.steps) prefix.push_back(s.settled_prefix);
    // windows ending before the final step
    for (std::size_t i = 0; i + rep.window + 1 <= total; ++i) {
      const std::size_t gained = prefix[i + rep.window] - prefix[i];
      if (gained < rho_eff) {
        rep.violations.push_back("steps " + std::to_string(i + 1) + ".." +
                                 std::to_string(i + rep.window) + " settle " +
                                 std::to_string(gained) + " < " + std::to_string(rho_eff));
      }
    }
  }

  if (premise.k_radius == PremiseStatus::fails) {
    rep.notes.push_back("substep bound not checkable: some r(v) exceeds its k-radius");
  } else {
    rep.substep_bound_checked = true;
    for (const auto& s : res.steps) {
      if (s.substeps > k + 2) {
        rep.violations.push_back("step " + std::to_string(s.index) + " ran " +
                                 std::to_string(s.substeps) + " substeps > k+2 = " +
                                 std::to_string(k + 2));
      }
    }
  }
  if (premise.ball == PremiseStatus::unverified || premise.k_radius == PremiseStatus::unverified) {
    rep.notes.push_back("premise taken from construction, not verified");
  }
  return rep;
}

}  // namespace rstep
