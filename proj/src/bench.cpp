#include "rstep/bench.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>

namespace rstep {
namespace {

using nlohmann::json;

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

struct CellStats {
  double mean_steps = 0;
  double mean_substeps = 0;
  std::size_t added = 0;
};

CellStats run_cell(const Graph& base, const ExperimentConfig& cfg, Heuristic heuristic,
                   std::size_t k, std::size_t rho, const std::vector<Vertex>& sources) {
  PreprocessOptions opts{k, rho, heuristic, cfg.tie_mode};
  PreprocessResult pre = build_k_rho(base, opts);
  // the frontier engine runs on the original unit graph with the same radii
  const Graph& run_graph = (cfg.engine == Engine::unweighted) ? base : pre.graph;

  const BoundsPremise premise = evaluate_premise(run_graph, pre.radii);
  const std::string cell = cfg.label + " k=" + std::to_string(k) + " rho=" + std::to_string(rho) +
                           " " + to_string(heuristic);
  if (premise.ball == PremiseStatus::fails) {
    throw DomainError(cell + ": preprocessing left a ball smaller than rho");
  }
  if (cfg.engine != Engine::unweighted && premise.k_radius == PremiseStatus::fails) {
    throw DomainError(cell + ": preprocessing validation failed (radius above k-radius)");
  }

  CellStats stats;
  stats.added = pre.added_edges;
  std::size_t step_sum = 0;
  std::size_t substep_sum = 0;
  for (Vertex s : sources) {
    const SsspResult res = run_engine(cfg.engine, run_graph, pre.radii, s);
    const BoundsReport rep = check_bounds(res, run_graph, rho, k, premise);
    if (!rep.ok()) throw DomainError(cell + ": bound violated: " + rep.violations.front());
    step_sum += res.steps.size();
    for (const auto& st : res.steps) substep_sum += st.substeps;
  }
  stats.mean_steps = static_cast<double>(step_sum) / static_cast<double>(sources.size());
  stats.mean_substeps = static_cast<double>(substep_sum) / static_cast<double>(sources.size());
  return stats;
}

GeneratorKind kind_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "grid2d") return Grid2d{j.at("width").get<std::size_t>(), j.at("height").get<std::size_t>()};
  if (kind == "grid3d") {
    return Grid3d{j.at("x").get<std::size_t>(), j.at("y").get<std::size_t>(), j.at("z").get<std::size_t>()};
  }
  if (kind == "adversarial") return Adversarial{j.at("d").get<std::size_t>()};
  if (kind == "random") {
    return RandomConnected{j.at("n").get<std::size_t>(), j.at("m").get<std::size_t>(),
                           j.value("seed", std::uint64_t{0})};
  }
  throw DomainError("unknown generator kind '" + kind + "'");
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
  if (cfg.source_count < 1) throw DomainError("source_count must be >= 1");
  if (cfg.rho_list.empty() || cfg.k_list.empty()) throw DomainError("rho and k lists must be nonempty");
  if (cfg.heuristics.empty()) throw DomainError("at least one heuristic is required");
  for (auto rho : cfg.rho_list) {
    if (rho < 1) throw DomainError("rho values must be positive");
  }
  for (auto k : cfg.k_list) {
    if (k < 1) throw DomainError("k values must be positive");
  }
  if (const auto* kind = std::get_if<GeneratorKind>(&cfg.input)) validate_spec({*kind, Unweighted{}});
  if (const auto* w = std::get_if<UniformWeights>(&cfg.weights)) {
    if (w->lo < 1 || w->hi < w->lo) throw DomainError("weights need 1 <= lo <= hi");
  }
}

ExperimentConfig config_from_json(const std::string& text) {
  ExperimentConfig cfg;
  try {
    const json j = json::parse(text);
    cfg.label = j.value("label", cfg.label);
    const json& graph = j.at("graph");
    if (graph.contains("file")) {
      cfg.input = FileInput{graph.at("file").get<std::string>()};
    } else {
      cfg.input = kind_from_json(graph);
    }
    if (j.contains("weights")) {
      const json& w = j.at("weights");
      if (w.is_string()) {
        const auto mode = w.get<std::string>();
        if (mode == "keep") {
          cfg.weights = KeepWeights{};
        } else if (mode == "unit") {
          cfg.weights = UnitWeights{};
        } else {
          throw DomainError("unknown weight mode '" + mode + "'");
        }
      } else {
        cfg.weights = UniformWeights{w.at("lo").get<Weight>(), w.at("hi").get<Weight>(),
                                     w.value("seed", std::uint64_t{0})};
      }
    }
    if (j.contains("rho")) cfg.rho_list = j.at("rho").get<std::vector<std::size_t>>();
    if (j.contains("k")) cfg.k_list = j.at("k").get<std::vector<std::size_t>>();
    if (j.contains("heuristics")) {
      cfg.heuristics.clear();
      for (const auto& h : j.at("heuristics")) cfg.heuristics.push_back(heuristic_from_string(h.get<std::string>()));
    }
    cfg.source_count = j.value("sources", cfg.source_count);
    cfg.seed = j.value("seed", cfg.seed);
    if (j.contains("engine")) cfg.engine = engine_from_string(j.at("engine").get<std::string>());
    if (j.contains("tie_mode")) {
      const auto t = j.at("tie_mode").get<std::string>();
      if (t != "inclusive" && t != "strict") throw DomainError("tie_mode must be inclusive or strict");
      cfg.tie_mode = (t == "strict") ? TieMode::strict : TieMode::inclusive;
    }
    cfg.output = j.value("output", std::string{});
  } catch (const json::exception& e) {
    throw DomainError(std::string("bad bench config: ") + e.what());
  }
  validate_config(cfg);
  return cfg;
}

Graph load_experiment_graph(const ExperimentConfig& cfg) {
  Graph g;
  if (const auto* file = std::get_if<FileInput>(&cfg.input)) {
    g = read_edge_list_file(file->path);
  } else {
    g = generate({std::get<GeneratorKind>(cfg.input), Unweighted{}}).graph;
  }
  if (std::holds_alternative<UnitWeights>(cfg.weights)) g = with_unit_weights(g);
  if (const auto* w = std::get_if<UniformWeights>(&cfg.weights)) g = with_uniform_weights(g, *w);
  return g;
}

std::vector<Vertex> sample_sources(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (count > n) throw DomainError("cannot sample " + std::to_string(count) + " sources from " +
                                   std::to_string(n) + " vertices");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  // partial Fisher-Yates
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + uniform_below(rng, n - i)]);
  }
  pool.resize(count);
  return pool;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const Graph g = load_experiment_graph(cfg);
  const auto sources = sample_sources(g.vertex_count(), cfg.source_count, cfg.seed);

  std::vector<ExperimentRow> rows;
  for (Heuristic h : cfg.heuristics) {
    for (std::size_t k : cfg.k_list) {
      std::map<std::size_t, CellStats> cells;
      auto cell = [&](std::size_t rho) -> const CellStats& {
        auto it = cells.find(rho);
        if (it == cells.end()) it = cells.emplace(rho, run_cell(g, cfg, h, k, rho, sources)).first;
        return it->second;
      };
      const double baseline = cell(1).mean_steps;
      for (std::size_t rho : cfg.rho_list) {
        const CellStats& st = cell(rho);
        ExperimentRow row;
        row.graph = cfg.label;
        row.n = g.vertex_count();
        row.m = g.edge_count();
        row.k = k;
        row.rho = rho;
        row.heuristic = h;
        row.added_edge_factor =
            g.edge_count() == 0 ? 0.0 : static_cast<double>(st.added) / static_cast<double>(g.edge_count());
        row.mean_steps = st.mean_steps;
        row.mean_substeps = st.mean_substeps;
        row.reduction_factor = (rho == 1 || st.mean_steps == 0) ? 1.0 : baseline / st.mean_steps;
        rows.push_back(row);
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ExperimentRow& a, const ExperimentRow& b) {
    return std::tie(a.graph, a.k, a.rho) < std::tie(b.graph, b.k, b.rho);
  });
  return rows;
}

std::string emit_csv(const std::vector<ExperimentRow>& rows) {
  if (rows.empty()) throw DomainError("no rows to emit");
  std::string out = std::string(kCsvHeader) + '\n';
  for (const auto& r : rows) {
    out += r.graph + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
           std::to_string(r.k) + ',' + std::to_string(r.rho) + ',' + to_string(r.heuristic) + ',' +
           fixed(r.added_edge_factor, 6) + ',' + fixed(r.mean_steps, 3) + ',' +
           fixed(r.mean_substeps, 3) + ',' + fixed(r.reduction_factor, 4) + '\n';
  }
  return out;
}

std::string emit_summary(const std::vector<ExperimentRow>& rows) {
  if (rows.empty()) throw DomainError("no rows to emit");
  std::vector<std::vector<std::string>> table{
      {"graph", "n", "m", "k", "rho", "heuristic", "added/m", "steps", "substeps", "reduction"}};
  for (const auto& r : rows) {
    table.push_back({r.graph, std::to_string(r.n), std::to_string(r.m), std::to_string(r.k),
                     std::to_string(r.rho), to_string(r.heuristic), fixed(r.added_edge_factor, 3),
                     fixed(r.mean_steps, 1), fixed(r.mean_substeps, 1),
                     fixed(r.reduction_factor, 2)});
  }
  std::vector<std::size_t> width(table.front().size(), 0);
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      // text columns left-aligned, numbers right-aligned
      const bool left = (c == 0 || c == 5);
      const std::string pad(width[c] - row[c].size(), ' ');
      out << (left ? row[c] + pad : pad + row[c]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace rstep
