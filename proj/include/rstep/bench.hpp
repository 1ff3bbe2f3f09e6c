#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rstep/generators.hpp"
#include "rstep/preprocess.hpp"
#include "rstep/radius_step.hpp"

namespace rstep {

struct KeepWeights {};
struct UnitWeights {};
using BenchWeights = std::variant<KeepWeights, UnitWeights, UniformWeights>;

struct FileInput {
  std::string path;
};

struct ExperimentConfig {
  std::string label = "graph";
  std::variant<FileInput, GeneratorKind> input = Grid2d{};
  BenchWeights weights = KeepWeights{};
  std::vector<std::size_t> rho_list{1};
  std::vector<std::size_t> k_list{1};
  std::vector<Heuristic> heuristics{Heuristic::dp};
  std::size_t source_count = 20;
  std::uint64_t seed = 1;
  Engine engine = Engine::fast;
  TieMode tie_mode = TieMode::inclusive;
  /// Optional output path; run_experiment itself never writes.
  std::string output;
};

struct ExperimentRow {
  std::string graph;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t rho = 0;
  Heuristic heuristic = Heuristic::dp;
  double added_edge_factor = 0;
  double mean_steps = 0;
  double mean_substeps = 0;  // per run, summed over its steps
  double reduction_factor = 0;
};

/// Throws DomainError on an invalid configuration.
void validate_config(const ExperimentConfig& cfg);

/// JSON keys: label, graph {file | kind + dimensions}, weights ("keep" |
/// "unit" | {lo, hi, seed}), rho, k, heuristics, sources, seed, engine,
/// tie_mode, output.
ExperimentConfig config_from_json(const std::string& text);

/// Loads the graph and applies the weight mode.
Graph load_experiment_graph(const ExperimentConfig& cfg);

/// Seeded uniform sample without replacement, in draw order.
std::vector<Vertex> sample_sources(std::size_t n, std::size_t count, std::uint64_t seed);

/// Preprocesses once per (heuristic, k, rho), runs the engine from a shared
/// source sample, and averages. Every run is checked against the step and
/// substep bounds; a failed premise or bound aborts with DomainError. Rows
/// are sorted by (graph, k, rho), stable in heuristic order.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

inline constexpr const char* kCsvHeader =
    "graph,n,m,k,rho,heuristic,added_edge_factor,mean_steps,mean_substeps,reduction_factor";

std::string emit_csv(const std::vector<ExperimentRow>& rows);
std::string emit_summary(const std::vector<ExperimentRow>& rows);

}  // namespace rstep
