#include "rstep/radius_step.hpp"

#include <algorithm>
#include <cassert>

namespace rstep {
namespace {

void check_inputs(const Graph& g, const RadiusAssignment& r, Vertex s) {
  if (s >= g.vertex_count()) throw DomainError("source " + std::to_string(s) + " out of range");
  if (r.r.size() != g.vertex_count()) throw DomainError("radius table does not match graph");
}

SsspResult start_result(const Graph& g, Vertex s) {
  SsspResult res;
  res.source = s;
  res.dist.assign(g.vertex_count(), kInfinity);
  res.settled_in.assign(g.vertex_count(), SsspResult::kNoStep);
  res.dist[s] = 0;
  res.settled_in[s] = 0;
  return res;
}

// An unreached vertex never falls under a round distance, even an infinite one.
bool within(Weight d, Weight round) { return d != kInfinity && d <= round; }

}  // namespace

std::vector<Vertex> SsspResult::active_set(std::size_t i) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < settled_in.size(); ++v) {
    if (settled_in[v] == i) out.push_back(v);
  }
  return out;
}

std::vector<std::pair<Vertex, Weight>> relax_pass(const Graph& g, std::span<const Weight> dist,
                                                  std::span<const Vertex> active,
                                                  std::span<const char> skip,
                                                  std::size_t& relaxations, bool reverse) {
  std::vector<std::pair<Vertex, Weight>> cands;
  auto visit = [&](Vertex u) {
    const auto adj = g.neighbors(u);
    auto relax = [&](const Neighbor& nb) {
      ++relaxations;
      if (!skip[nb.to]) cands.push_back({nb.to, dist[u] + nb.weight});
    };
    if (reverse) {
      std::for_each(adj.rbegin(), adj.rend(), relax);
    } else {
      std::for_each(adj.begin(), adj.end(), relax);
    }
  };
  if (reverse) {
    std::for_each(active.rbegin(), active.rend(), visit);
  } else {
    std::for_each(active.begin(), active.end(), visit);
  }
  // combine by min: keep the smallest candidate per target
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              cands.end());
  return cands;
}

SsspResult radius_step_reference(const Graph& g, const RadiusAssignment& r, Vertex s) {
  check_inputs(g, r, s);
  const std::size_t n = g.vertex_count();
  SsspResult res = start_result(g, s);
  auto& dist = res.dist;
  std::vector<char> settled(n, 0);
  settled[s] = 1;
  for (const auto& nb : g.neighbors(s)) dist[nb.to] = std::min(dist[nb.to], nb.weight);

  const std::size_t reachable = reachable_set(g, s).size();
  std::size_t settled_count = 1;
  while (settled_count < reachable) {
    Weight round = kInfinity;
    for (Vertex v = 0; v < n; ++v) {
      if (!settled[v] && dist[v] != kInfinity) round = std::min(round, saturating_add(dist[v], r.r[v]));
    }
    StepRecord rec;
    rec.index = res.steps.size() + 1;
    rec.round_distance = round;
    for (;;) {
      std::vector<Vertex> active;
      for (Vertex v = 0; v < n; ++v) {
        if (!settled[v] && within(dist[v], round)) active.push_back(v);
      }
      auto updates = relax_pass(g, dist, active, settled, res.total_relaxations);
      ++rec.substeps;
      bool inner_update = false;
      for (auto [v, cand] : updates) {
        if (cand >= dist[v]) continue;
        dist[v] = cand;
        inner_update |= (cand <= round);
      }
      if (!inner_update) break;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (!settled[v] && within(dist[v], round)) {
        settled[v] = 1;
        res.settled_in[v] = static_cast<std::uint32_t>(rec.index);
        ++rec.active_count;
      }
    }
    settled_count += rec.active_count;
    rec.settled_prefix = settled_count;
    res.steps.push_back(rec);
  }
  return res;
}

void FrontierIndex::upsert(Vertex v, Weight q_key, Weight r_key) {
  if (present_[v]) {
    q_.erase({q_key_[v], v});
    r_.erase({r_key_[v], v});
  }
  present_[v] = 1;
  q_key_[v] = q_key;
  r_key_[v] = r_key;
  q_.insert({q_key, v});
  r_.insert({r_key, v});
}

void FrontierIndex::remove(Vertex v) {
  if (!present_[v]) return;
  q_.erase({q_key_[v], v});
  r_.erase({r_key_[v], v});
  present_[v] = 0;
}

std::vector<Vertex> FrontierIndex::split(Weight bound) {
  std::vector<Vertex> out;
  auto end = q_.upper_bound({bound, std::numeric_limits<Vertex>::max()});
  for (auto it = q_.begin(); it != end; ++it) out.push_back(it->second);
  q_.erase(q_.begin(), end);
  for (Vertex v : out) {
    r_.erase({r_key_[v], v});
    present_[v] = 0;
  }
  return out;
}

bool FrontierIndex::synchronized() const {
  if (q_.size() != r_.size()) return false;
  for (const auto& [key, v] : q_) {
    if (!present_[v] || q_key_[v] != key || !r_.count({r_key_[v], v})) return false;
  }
  return true;
}

SsspResult radius_step_fast(const Graph& g, const RadiusAssignment& r, Vertex s) {
  check_inputs(g, r, s);
  const std::size_t n = g.vertex_count();
  SsspResult res = start_result(g, s);
  auto& dist = res.dist;
  std::vector<char> settled(n, 0);
  settled[s] = 1;
  FrontierIndex index(n);
  for (const auto& nb : g.neighbors(s)) {
    if (nb.weight < dist[nb.to]) {
      dist[nb.to] = nb.weight;
      index.upsert(nb.to, nb.weight, saturating_add(nb.weight, r.r[nb.to]));
    }
  }

  std::size_t settled_count = 1;
  while (!index.empty()) {
    StepRecord rec;
    rec.index = res.steps.size() + 1;
    const Weight round = index.min_round().first;
    rec.round_distance = round;
    // split also drops the active vertices from R
    std::vector<Vertex> active = index.split(round);
    for (;;) {
      auto updates = relax_pass(g, dist, active, settled, res.total_relaxations);
      ++rec.substeps;
      bool active_update = false;
      // barrier: apply the batch to delta, Q and R
      for (auto [v, cand] : updates) {
        if (cand >= dist[v]) continue;
        const Weight old = dist[v];
        dist[v] = cand;
        if (within(old, round)) {
          active_update = true;  // case 1: already active, only delta moves
        } else if (cand <= round) {
          index.remove(v);  // case 2
          active.push_back(v);
          active_update = true;
        } else {
          index.upsert(v, cand, saturating_add(cand, r.r[v]));  // case 3
        }
      }
      assert(index.synchronized());
      if (!active_update) break;
    }
    for (Vertex v : active) {
      assert(!settled[v]);
      settled[v] = 1;
      res.settled_in[v] = static_cast<std::uint32_t>(rec.index);
    }
    rec.active_count = active.size();
    settled_count += active.size();
    rec.settled_prefix = settled_count;
    res.steps.push_back(rec);
  }
  return res;
}

SsspResult radius_step_unweighted(const Graph& g, const RadiusAssignment& r, Vertex s) {
  check_inputs(g, r, s);
  if (!g.is_unweighted()) throw DomainError("unweighted engine needs unit edge weights");
  SsspResult res = start_result(g, s);
  auto& dist = res.dist;

  // every frontier vertex sits at the same tentative distance
  std::vector<Vertex> frontier;
  for (const auto& nb : g.neighbors(s)) {
    dist[nb.to] = 1;
    frontier.push_back(nb.to);
  }
  std::size_t settled_count = 1;
  while (!frontier.empty()) {
    StepRecord rec;
    rec.index = res.steps.size() + 1;
    const Weight level = dist[frontier.front()];
    Weight min_r = kInfinity;
    for (Vertex v : frontier) min_r = std::min(min_r, r.r[v]);
    const Weight round = saturating_add(level, min_r);
    rec.round_distance = round;

    std::vector<Vertex> layer = std::move(frontier);
    frontier.clear();
    for (;;) {
      for (Vertex v : layer) res.settled_in[v] = static_cast<std::uint32_t>(rec.index);
      rec.active_count += layer.size();
      std::vector<Vertex> next;
      for (Vertex u : layer) {
        for (const auto& nb : g.neighbors(u)) {
          ++res.total_relaxations;
          if (dist[nb.to] == kInfinity) {
            dist[nb.to] = dist[u] + 1;
            next.push_back(nb.to);
          }
        }
      }
      ++rec.substeps;
      if (next.empty()) break;
      if (dist[next.front()] > round) {
        frontier = std::move(next);
        break;
      }
      layer = std::move(next);
    }
    settled_count += rec.active_count;
    rec.settled_prefix = settled_count;
    res.steps.push_back(rec);
  }
  return res;
}

const char* to_string(Engine e) noexcept {
  switch (e) {
    case Engine::reference:
      return "ref";
    case Engine::fast:
      return "fast";
    case Engine::unweighted:
      return "unweighted";
  }
  return "?";
}

Engine engine_from_string(const std::string& name) {
  if (name == "ref" || name == "reference") return Engine::reference;
  if (name == "fast") return Engine::fast;
  if (name == "unweighted") return Engine::unweighted;
  throw DomainError("unknown engine '" + name + "'");
}

SsspResult run_engine(Engine e, const Graph& g, const RadiusAssignment& r, Vertex s) {
  switch (e) {
    case Engine::reference:
      return radius_step_reference(g, r, s);
    case Engine::fast:
      return radius_step_fast(g, r, s);
    case Engine::unweighted:
      return radius_step_unweighted(g, r, s);
  }
  throw DomainError("unknown engine");
}

std::string format_steps_csv(const SsspResult& res) {
  std::string out = "i,d_i,active_count,substeps,settled_prefix\n";
  for (const auto& s : res.steps) {
    out += std::to_string(s.index) + ',' +
           (s.round_distance == kInfinity ? std::string("inf") : std::to_string(s.round_distance)) +
           ',' + std::to_string(s.active_count) + ',' + std::to_string(s.substeps) + ',' +
           std::to_string(s.settled_prefix) + '\n';
  }
  return out;
}

}  // namespace rstep
