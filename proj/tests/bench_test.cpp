#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <tuple>

#include "rstep/bench.hpp"
#include "support.hpp"

using namespace rstep;

namespace {

ExperimentConfig small_grid_config() {
  ExperimentConfig cfg;
  cfg.label = "grid12";
  cfg.input = Grid2d{12, 12};
  cfg.weights = UniformWeights{1, 100, 5};
  cfg.rho_list = {1, 4, 8};
  cfg.k_list = {1, 2};
  cfg.heuristics = {Heuristic::dp, Heuristic::greedy};
  cfg.source_count = 6;
  cfg.seed = 3;
  return cfg;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Bench, OneRowCsv) {
  ExperimentRow row;
  row.graph = "g";
  row.n = 9;
  row.m = 12;
  row.k = 2;
  row.rho = 4;
  row.heuristic = Heuristic::greedy;
  row.added_edge_factor = 0.5;
  row.mean_steps = 3.25;
  row.mean_substeps = 7;
  row.reduction_factor = 2;
  EXPECT_EQ(emit_csv({row}), std::string(kCsvHeader) + "\ng,9,12,2,4,greedy,0.500000,3.250,7.000,2.0000\n");
  EXPECT_THROW(emit_csv({}), DomainError);
  const std::string summary = emit_summary({row});
  EXPECT_EQ(count_lines(summary), 2u);
  EXPECT_NE(summary.find("greedy"), std::string::npos);
}

TEST(Bench, RowsSortedAndBaselineIsOne) {
  const auto rows = run_experiment(small_grid_config());
  ASSERT_EQ(rows.size(), 3u * 2u * 2u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(std::tie(rows[i - 1].graph, rows[i - 1].k, rows[i - 1].rho),
              std::tie(rows[i].graph, rows[i].k, rows[i].rho));
  }
  for (const auto& r : rows) {
    EXPECT_EQ(r.n, 144u);
    EXPECT_EQ(r.m, 264u);
    EXPECT_GE(r.added_edge_factor, 0.0);
    if (r.rho == 1) {
      EXPECT_EQ(r.reduction_factor, 1.0);
      EXPECT_EQ(r.added_edge_factor, 0.0);
    }
  }
  // dp precedes greedy within each (graph, k, rho)
  EXPECT_EQ(rows[0].heuristic, Heuristic::dp);
  EXPECT_EQ(rows[1].heuristic, Heuristic::greedy);
}

TEST(Bench, StepsDoNotDependOnK) {
  const auto rows = run_experiment(small_grid_config());
  for (const auto& a : rows) {
    for (const auto& b : rows) {
      if (a.rho == b.rho && a.heuristic == b.heuristic) EXPECT_EQ(a.mean_steps, b.mean_steps);
    }
  }
}

TEST(Bench, DeterministicCsv) {
  const auto cfg = small_grid_config();
  EXPECT_EQ(emit_csv(run_experiment(cfg)), emit_csv(run_experiment(cfg)));
  auto other = cfg;
  other.seed = 4;
  EXPECT_NE(emit_csv(run_experiment(cfg)), emit_csv(run_experiment(other)));
}

TEST(Bench, UnweightedGridReduction) {
  ExperimentConfig cfg;
  cfg.input = Grid2d{31, 31};
  cfg.rho_list = {1, 10};
  cfg.engine = Engine::unweighted;
  cfg.source_count = 20;
  const auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_GE(rows[1].reduction_factor, 2.0);
}

TEST(Bench, SampleSources) {
  const auto a = sample_sources(50, 20, 7);
  EXPECT_EQ(a, sample_sources(50, 20, 7));
  std::set<Vertex> distinct(a.begin(), a.end());
  EXPECT_EQ(distinct.size(), 20u);
  for (Vertex v : a) EXPECT_LT(v, 50u);
  EXPECT_EQ(sample_sources(5, 5, 1).size(), 5u);
  EXPECT_THROW(sample_sources(5, 6, 1), DomainError);
}

TEST(Bench, ConfigFromJson) {
  const auto cfg = config_from_json(R"({
    "label": "g3", "graph": {"kind": "grid3d", "x": 4, "y": 3, "z": 2},
    "weights": {"lo": 1, "hi": 9, "seed": 2}, "rho": [1, 2], "k": [3],
    "heuristics": ["greedy"], "sources": 4, "seed": 8, "engine": "ref", "tie_mode": "strict"})");
  EXPECT_EQ(cfg.label, "g3");
  ASSERT_TRUE(std::holds_alternative<GeneratorKind>(cfg.input));
  const auto& kind = std::get<GeneratorKind>(cfg.input);
  ASSERT_TRUE(std::holds_alternative<Grid3d>(kind));
  EXPECT_EQ(std::get<Grid3d>(kind).z, 2u);
  EXPECT_EQ(cfg.rho_list, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(cfg.k_list, (std::vector<std::size_t>{3}));
  EXPECT_EQ(cfg.heuristics, (std::vector<Heuristic>{Heuristic::greedy}));
  EXPECT_EQ(cfg.source_count, 4u);
  EXPECT_EQ(cfg.engine, Engine::reference);
  EXPECT_EQ(cfg.tie_mode, TieMode::strict);
  const auto rows = run_experiment(cfg);
  EXPECT_EQ(rows.size(), 2u);
}

TEST(Bench, BadConfigs) {
  EXPECT_THROW(config_from_json("{"), DomainError);
  EXPECT_THROW(config_from_json(R"({"graph": {"kind": "torus"}})"), DomainError);
  EXPECT_THROW(config_from_json(R"({"graph": {"kind": "grid2d", "width": 3, "height": 3}, "rho": []})"),
               DomainError);
  EXPECT_THROW(config_from_json(R"({"graph": {"kind": "grid2d", "width": 3, "height": 3}, "k": [0]})"),
               DomainError);
  EXPECT_THROW(config_from_json(R"({"graph": {"kind": "grid2d", "width": 3, "height": 3}, "sources": 0})"),
               DomainError);
  EXPECT_THROW(config_from_json(R"({"graph": {"kind": "grid2d", "width": 3, "height": 3}, "weights": "heavy"})"),
               DomainError);
  ExperimentConfig too_many;
  too_many.input = Grid2d{2, 2};
  too_many.source_count = 5;
  EXPECT_THROW(run_experiment(too_many), DomainError);
}

TEST(Bench, FileInputKeepsWeights) {
  const auto path = std::filesystem::temp_directory_path() / "rstep_bench_input.txt";
  {
    std::ofstream f(path);
    f << "0 1 4\n1 2 1\n2 3 7\n3 0 2\n0 2 9\n";
  }
  ExperimentConfig cfg;
  cfg.input = FileInput{path.string()};
  cfg.source_count = 4;
  cfg.rho_list = {1, 2};
  const Graph g = load_experiment_graph(cfg);
  EXPECT_EQ(g.max_weight(), 9u);
  cfg.weights = UnitWeights{};
  EXPECT_EQ(load_experiment_graph(cfg).max_weight(), 1u);
  EXPECT_EQ(run_experiment(cfg).size(), 2u);
  std::filesystem::remove(path);
}
