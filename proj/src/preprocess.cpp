#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "rstep/baselines.hpp"
#include "rstep/preprocess.hpp"

namespace rstep {
namespace {

// Merges proposed shortcuts into g. Proposals that match an existing edge of
// the same or lower weight are ignored; the rest are counted once per pair.
PreprocessResult merge_shortcuts(const Graph& g, std::vector<WeightedEdge> proposals,
                                 RadiusAssignment radii) {
  const std::size_t planned = proposals.size();
  for (auto& e : proposals) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(proposals.begin(), proposals.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::tie(a.u, a.v, a.weight) < std::tie(b.u, b.v, b.weight);
  });
  proposals.erase(std::unique(proposals.begin(), proposals.end(),
                              [](const WeightedEdge& a, const WeightedEdge& b) {
                                return a.u == b.u && a.v == b.v;
                              }),
                  proposals.end());

  auto edges = g.edges();
  std::size_t added = 0;
  for (const auto& p : proposals) {
    auto existing = g.edge_weight(p.u, p.v);
    if (existing && *existing <= p.weight) continue;
    ++added;
    edges.push_back(p);
  }
  std::vector<std::uint64_t> labels(g.labels().begin(), g.labels().end());
  PreprocessResult out{Graph::from_edges(g.vertex_count(), edges, std::move(labels)),
                       std::move(radii), added, planned};
  return out;
}

}  // namespace

const char* to_string(Heuristic h) noexcept {
  switch (h) {
    case Heuristic::greedy:
      return "greedy";
    case Heuristic::dp:
      return "dp";
    case Heuristic::full:
      return "full";
  }
  return "?";
}

Heuristic heuristic_from_string(const std::string& name) {
  if (name == "greedy") return Heuristic::greedy;
  if (name == "dp") return Heuristic::dp;
  if (name == "full") return Heuristic::full;
  throw DomainError("unknown heuristic '" + name + "'");
}

PreprocessResult build_1_rho(const Graph& g, std::size_t rho, TieMode mode) {
  if (rho < 1) throw DomainError("rho must be >= 1");
  RadiusAssignment radii{std::vector<Weight>(g.vertex_count(), 0), rho, 1, mode};
  std::vector<WeightedEdge> proposals;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Ball ball = compute_ball(g, v, rho, mode);
    radii.r[v] = ball.r_rho;
    for (std::size_t i = 1; i < ball.members.size(); ++i) {
      const auto& m = ball.members[i];
      auto direct = g.edge_weight(v, m.vertex);
      if (direct && *direct == m.distance) continue;
      proposals.push_back({v, m.vertex, m.distance});
    }
  }
  return merge_shortcuts(g, std::move(proposals), std::move(radii));
}

PreprocessResult build_k_rho(const Graph& g, const PreprocessOptions& opts) {
  if (opts.k < 1) throw DomainError("k must be >= 1");
  if (opts.rho < 1) throw DomainError("rho must be >= 1");
  RadiusAssignment radii{std::vector<Weight>(g.vertex_count(), 0), opts.rho, opts.k,
                         opts.tie_mode};
  std::vector<WeightedEdge> proposals;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const Ball ball = compute_ball(g, v, opts.rho, opts.tie_mode);
    radii.r[v] = ball.r_rho;
    const BallTree tree = min_hop_ball_tree(ball, g);
    ShortcutPlan plan;
    switch (opts.heuristic) {
      case Heuristic::greedy:
        plan = shortcut_greedy(tree, opts.k);
        break;
      case Heuristic::dp:
        plan = shortcut_dp(tree, opts.k);
        break;
      case Heuristic::full:
        plan = shortcut_greedy(tree, 1);
        plan.heuristic = Heuristic::full;
        break;
    }
    for (const auto& e : plan.added) proposals.push_back({v, e.target, e.weight});
  }
  return merge_shortcuts(g, std::move(proposals), std::move(radii));
}

ValidationReport validate_k_rho(const Graph& g, const RadiusAssignment& r,
                                const OracleLimits& limits) {
  if (r.r.size() != g.vertex_count()) throw DomainError("radius table does not match graph");
  const HopMatrix hm = hop_matrix(g, limits);
  const auto kr = k_radius_from_matrix(hm, r.k);
  const auto comps = connected_components(g);
  ValidationReport report;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (r.r[v] > kr[v]) {
      report.violations.push_back({v, ViolationKind::radius_exceeds_k_radius, r.r[v], kr[v]});
    }
    std::size_t inside = 0;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      if (hm.distance(v, u) <= r.r[v]) ++inside;
    }
    const std::size_t need = std::min(r.rho, comps.size[comps.id[v]]);
    if (inside < need) {
      report.violations.push_back({v, ViolationKind::ball_too_small, r.r[v], inside});
    }
  }
  return report;
}

namespace {
std::string weight_text(Weight w) { return w == kInfinity ? "inf" : std::to_string(w); }
}  // namespace

std::string format_report(const Graph& g, const ValidationReport& report) {
  std::ostringstream out;
  for (const auto& v : report.violations) {
    out << "vertex " << g.label(v.vertex) << ": ";
    if (v.kind == ViolationKind::radius_exceeds_k_radius) {
      out << "radius " << weight_text(v.radius) << " exceeds k-radius " << weight_text(v.bound);
    } else {
      out << "ball of radius " << weight_text(v.radius) << " holds only " << v.bound
          << " vertices";
    }
    out << '\n';
  }
  out << (report.ok() ? "valid" : "invalid") << ": " << report.violations.size()
      << " violation(s)\n";
  return out.str();
}

void write_radii(const Graph& g, const RadiusAssignment& r, std::ostream& out) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << g.label(v) << ' ' << weight_text(r.r[v]) << '\n';
  }
}

void write_radii_file(const Graph& g, const RadiusAssignment& r, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  write_radii(g, r, out);
}

RadiusAssignment parse_radii(const Graph& g, std::istream& in) {
  RadiusAssignment r;
  r.r.assign(g.vertex_count(), 0);
  std::vector<char> seen(g.vertex_count(), 0);
  std::string line;
  std::size_t lineno = 0;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string a;
    std::string b;
    std::string extra;
    if (!(ls >> a) || a.front() == '#') continue;
    if (!(ls >> b) || (ls >> extra)) throw ParseError(lineno, "expected \"v r\"");
    std::uint64_t label = 0;
    Weight value = 0;
    try {
      std::size_t used = 0;
      label = std::stoull(a, &used);
      if (used != a.size() || a.front() == '-') throw std::invalid_argument(a);
      if (b == "inf") {
        value = kInfinity;
      } else {
        value = std::stoull(b, &used);
        if (used != b.size() || b.front() == '-') throw std::invalid_argument(b);
      }
    } catch (const std::logic_error&) {
      throw ParseError(lineno, "bad radius entry '" + line + "'");
    }
    auto v = g.find_label(label);
    if (!v) throw DomainError("line " + std::to_string(lineno) + ": unknown vertex " + a);
    if (seen[*v]) throw DomainError("line " + std::to_string(lineno) + ": duplicate vertex " + a);
    seen[*v] = 1;
    r.r[*v] = value;
    ++count;
  }
  if (count != g.vertex_count()) {
    throw DomainError("radii cover " + std::to_string(count) + " of " +
                      std::to_string(g.vertex_count()) + " vertices");
  }
  return r;
}

RadiusAssignment read_radii_file(const Graph& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return parse_radii(g, in);
}

}  // namespace rstep
