// rstep: command-line front end over the C API.
//
//   rstep gen --kind grid2d --w 3 --h 3 [--weights 1:100 --seed 7] -o g.txt
//   rstep preprocess -i g.txt --k 3 --rho 10 --heuristic dp -o aug.txt --radii r.txt
//   rstep sssp -i aug.txt --radii r.txt -s 0 [--engine ref|fast|unweighted] [--stats steps.csv]
//   rstep bench --config bench.json -o rows.csv
//   rstep validate -i aug.txt --radii r.txt --k 3 --rho 10
//
// Exit status: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rstep/rstep.h"

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct Failure {
  int code;
  std::string message;
};

void check(rs_status st) {
  if (st != RS_OK) throw Failure{kDomainError, rs_last_error()};
}

struct GraphDeleter {
  void operator()(rs_graph* g) const { rs_graph_free(g); }
};
struct RadiiDeleter {
  void operator()(rs_radii* r) const { rs_radii_free(r); }
};
struct SsspDeleter {
  void operator()(rs_sssp* s) const { rs_sssp_free(s); }
};
struct StringDeleter {
  void operator()(char* s) const { rs_string_free(s); }
};
using GraphPtr = std::unique_ptr<rs_graph, GraphDeleter>;
using RadiiPtr = std::unique_ptr<rs_radii, RadiiDeleter>;
using SsspPtr = std::unique_ptr<rs_sssp, SsspDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

GraphPtr load_graph(const std::string& path) {
  rs_graph* g = nullptr;
  check(rs_graph_read_file(path.c_str(), &g));
  return GraphPtr(g);
}

RadiiPtr load_radii(const rs_graph* g, const std::string& path) {
  rs_radii* r = nullptr;
  check(rs_radii_read_file(g, path.c_str(), &r));
  return RadiiPtr(r);
}

// "lo:hi"
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    return {std::stoull(text.substr(0, colon)), std::stoull(text.substr(colon + 1))};
  } catch (const std::logic_error&) {
    throw Failure{kUsageError, "--weights expects lo:hi, got '" + text + "'"};
  }
}

std::string dist_text(std::uint64_t d) { return d == RS_INFINITY ? "inf" : std::to_string(d); }

struct GenArgs {
  std::string kind = "grid2d";
  std::uint64_t w = 1, h = 1, z = 1, d = 2, n = 1, m = 0, graph_seed = 0;
  std::string weights;
  std::uint64_t seed = 0;
};

rs_generator_spec make_spec(const GenArgs& a) {
  rs_generator_spec spec{};
  if (a.kind == "grid2d") {
    spec.kind = RS_GEN_GRID2D;
    spec.dims[0] = a.w;
    spec.dims[1] = a.h;
  } else if (a.kind == "grid3d") {
    spec.kind = RS_GEN_GRID3D;
    spec.dims[0] = a.w;
    spec.dims[1] = a.h;
    spec.dims[2] = a.z;
  } else if (a.kind == "adversarial") {
    spec.kind = RS_GEN_ADVERSARIAL;
    spec.dims[0] = a.d;
  } else if (a.kind == "random") {
    spec.kind = RS_GEN_RANDOM;
    spec.dims[0] = a.n;
    spec.dims[1] = a.m;
    spec.graph_seed = a.graph_seed;
  } else {
    throw Failure{kUsageError, "unknown --kind '" + a.kind + "'"};
  }
  if (!a.weights.empty()) {
    auto [lo, hi] = parse_range(a.weights);
    spec.weighted = 1;
    spec.weight_lo = lo;
    spec.weight_hi = hi;
    spec.weight_seed = a.seed;
  }
  return spec;
}

void add_gen_options(CLI::App* cmd, GenArgs& a) {
  // --h is the grid height here, so help is long-form only
  cmd->set_help_flag("--help", "print this help and exit");
  cmd->add_option("--kind", a.kind, "grid2d | grid3d | adversarial | random");
  cmd->add_option("--w", a.w, "grid width");
  cmd->add_option("--h", a.h, "grid height");
  cmd->add_option("--depth", a.z, "grid depth (grid3d)");
  cmd->add_option("--d", a.d, "adversarial column size");
  cmd->add_option("--n", a.n, "random graph vertices");
  cmd->add_option("--m", a.m, "random graph edges");
  cmd->add_option("--graph-seed", a.graph_seed, "random graph seed");
  cmd->add_option("--weights", a.weights, "uniform integer weights lo:hi");
}

int run_gen(const GenArgs& a, const std::string& out) {
  const auto spec = make_spec(a);
  rs_graph* raw = nullptr;
  std::uint32_t start = 0;
  check(rs_graph_generate(&spec, &raw, &start));
  GraphPtr g(raw);
  check(rs_graph_write_file(g.get(), out.c_str()));
  std::cerr << "wrote " << rs_graph_vertex_count(g.get()) << " vertices, " << rs_graph_edge_count(g.get())
            << " edges to " << out;
  if (a.kind == "adversarial") std::cerr << " (start vertex " << rs_graph_label(g.get(), start) << ")";
  std::cerr << '\n';
  return 0;
}

int run_preprocess(const std::string& in, std::size_t k, std::size_t rho, const std::string& heuristic,
                   bool strict, const std::string& out, const std::string& radii_out) {
  rs_heuristic h = RS_HEURISTIC_DP;
  if (heuristic == "greedy") {
    h = RS_HEURISTIC_GREEDY;
  } else if (heuristic == "full") {
    h = RS_HEURISTIC_FULL;
  } else if (heuristic != "dp") {
    throw Failure{kUsageError, "--heuristic must be dp, greedy or full"};
  }
  auto g = load_graph(in);
  rs_graph* aug_raw = nullptr;
  rs_radii* radii_raw = nullptr;
  std::size_t added = 0;
  check(rs_preprocess(g.get(), k, rho, h, strict ? RS_TIES_STRICT : RS_TIES_INCLUSIVE, &aug_raw,
                      &radii_raw, &added));
  GraphPtr aug(aug_raw);
  RadiiPtr radii(radii_raw);
  check(rs_graph_write_file(aug.get(), out.c_str()));
  check(rs_radii_write_file(aug.get(), radii.get(), radii_out.c_str()));
  std::cerr << "added " << added << " shortcut edges (" << rs_graph_edge_count(g.get()) << " -> "
            << rs_graph_edge_count(aug.get()) << ")\n";
  return 0;
}

int run_sssp(const std::string& in, const std::string& radii_path, std::size_t rho, std::uint64_t source,
             const std::string& engine, const std::string& stats) {
  rs_engine e = RS_ENGINE_FAST;
  if (engine == "ref" || engine == "reference") {
    e = RS_ENGINE_REFERENCE;
  } else if (engine == "unweighted") {
    e = RS_ENGINE_UNWEIGHTED;
  } else if (engine != "fast") {
    throw Failure{kUsageError, "--engine must be ref, fast or unweighted"};
  }
  auto g = load_graph(in);
  RadiiPtr radii;
  if (!radii_path.empty()) {
    radii = load_radii(g.get(), radii_path);
  } else {
    rs_radii* raw = nullptr;
    check(rs_radii_from_rho(g.get(), rho, RS_TIES_INCLUSIVE, &raw));
    radii.reset(raw);
  }
  std::uint32_t s = 0;
  check(rs_graph_find_label(g.get(), source, &s));
  rs_sssp* raw = nullptr;
  check(rs_sssp_run(g.get(), radii.get(), s, e, &raw));
  SsspPtr res(raw);

  // one line per vertex, ordered by label
  const std::size_t n = rs_graph_vertex_count(g.get());
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    rows[v].first = rs_graph_label(g.get(), v);
    check(rs_sssp_distance(res.get(), v, &rows[v].second));
  }
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [label, d] : rows) out += std::to_string(label) + ' ' + dist_text(d) + '\n';
  std::cout << out;

  std::size_t substeps = 0;
  const std::size_t steps = rs_sssp_step_count(res.get());
  for (std::size_t i = 0; i < steps; ++i) {
    rs_step_record rec{};
    check(rs_sssp_step(res.get(), i, &rec));
    substeps += rec.substeps;
  }
  std::cerr << "steps " << steps << ", substeps " << substeps << '\n';
  if (!stats.empty()) {
    char* csv = nullptr;
    check(rs_sssp_steps_csv(res.get(), &csv));
    StringPtr holder(csv);
    std::ofstream f(stats);
    if (!f) throw Failure{kDomainError, "cannot write " + stats};
    f << csv;
  }
  return 0;
}

struct BenchArgs {
  std::string config;
  GenArgs gen;
  std::string input;
  std::string label = "graph";
  std::uint64_t weight_seed = 0;
  bool unit = false;
  std::vector<std::size_t> rho{1};
  std::vector<std::size_t> k{1};
  std::vector<std::string> heuristics{"dp"};
  std::size_t sources = 20;
  std::uint64_t seed = 1;
  std::string engine = "fast";
};

std::string bench_json(const BenchArgs& a) {
  if (!a.config.empty()) {
    std::ifstream f(a.config);
    if (!f) throw Failure{kDomainError, "cannot open " + a.config};
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  nlohmann::json j;
  j["label"] = a.label;
  if (!a.input.empty()) {
    j["graph"] = {{"file", a.input}};
  } else {
    const auto& g = a.gen;
    if (g.kind == "grid2d") {
      j["graph"] = {{"kind", "grid2d"}, {"width", g.w}, {"height", g.h}};
    } else if (g.kind == "grid3d") {
      j["graph"] = {{"kind", "grid3d"}, {"x", g.w}, {"y", g.h}, {"z", g.z}};
    } else if (g.kind == "adversarial") {
      j["graph"] = {{"kind", "adversarial"}, {"d", g.d}};
    } else if (g.kind == "random") {
      j["graph"] = {{"kind", "random"}, {"n", g.n}, {"m", g.m}, {"seed", g.graph_seed}};
    } else {
      throw Failure{kUsageError, "unknown --kind '" + g.kind + "'"};
    }
  }
  if (!a.gen.weights.empty()) {
    auto [lo, hi] = parse_range(a.gen.weights);
    j["weights"] = {{"lo", lo}, {"hi", hi}, {"seed", a.weight_seed}};
  } else {
    j["weights"] = a.unit ? "unit" : "keep";
  }
  j["rho"] = a.rho;
  j["k"] = a.k;
  j["heuristics"] = a.heuristics;
  j["sources"] = a.sources;
  j["seed"] = a.seed;
  j["engine"] = a.engine;
  return j.dump();
}

int run_bench(const BenchArgs& a, const std::string& out) {
  const std::string config = bench_json(a);
  std::string target = out;
  if (target.empty() && !a.config.empty()) {
    auto j = nlohmann::json::parse(config, nullptr, false);
    if (!j.is_discarded() && j.is_object()) target = j.value("output", std::string{});
  }
  char* csv = nullptr;
  char* summary = nullptr;
  check(rs_bench_run(config.c_str(), &csv, &summary));
  StringPtr csv_holder(csv);
  StringPtr summary_holder(summary);
  if (target.empty()) {
    std::cout << csv;
    std::cerr << summary;
  } else {
    std::ofstream f(target, std::ios::binary);
    if (!f) throw Failure{kDomainError, "cannot write " + target};
    f << csv;
    std::cout << summary;
  }
  return 0;
}

int run_validate(const std::string& in, const std::string& radii_path, std::size_t k, std::size_t rho,
                 std::size_t cap) {
  auto g = load_graph(in);
  auto radii = load_radii(g.get(), radii_path);
  char* report = nullptr;
  std::size_t violations = 0;
  check(rs_validate(g.get(), radii.get(), k, rho, cap, &report, &violations));
  StringPtr holder(report);
  std::cout << report;
  return violations == 0 ? 0 : kDomainError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radius-stepping shortest paths: generation, preprocessing, queries, experiments"};
  app.require_subcommand(1);

  GenArgs gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph and write it as an edge list");
  add_gen_options(gen_cmd, gen);
  gen_cmd->add_option("--seed", gen.seed, "weight seed");
  gen_cmd->add_option("-o,--output", gen_out, "output edge list")->required();

  std::string pre_in, pre_out, pre_radii, pre_heuristic = "dp";
  std::size_t pre_k = 1, pre_rho = 1;
  bool pre_strict = false;
  auto* pre_cmd = app.add_subcommand("preprocess", "add shortcuts and compute radii");
  pre_cmd->add_option("-i,--input", pre_in, "input edge list")->required();
  pre_cmd->add_option("--k", pre_k, "hop budget k")->required()->check(CLI::PositiveNumber);
  pre_cmd->add_option("--rho", pre_rho, "ball size rho")->required()->check(CLI::PositiveNumber);
  pre_cmd->add_option("--heuristic", pre_heuristic, "dp | greedy | full");
  pre_cmd->add_flag("--strict", pre_strict, "exactly rho ball members, ties by id");
  pre_cmd->add_option("-o,--output", pre_out, "augmented edge list")->required();
  pre_cmd->add_option("--radii", pre_radii, "radii output (\"v r\" lines)")->required();

  std::string sssp_in, sssp_radii, sssp_engine = "fast", sssp_stats;
  std::size_t sssp_rho = 1;
  std::uint64_t sssp_source = 0;
  auto* sssp_cmd = app.add_subcommand("sssp", "single-source shortest paths");
  sssp_cmd->add_option("-i,--input", sssp_in, "edge list")->required();
  auto* radii_opt = sssp_cmd->add_option("--radii", sssp_radii, "radii file");
  auto* rho_opt = sssp_cmd->add_option("--rho", sssp_rho, "compute rho-nearest radii instead of --radii")
                      ->check(CLI::PositiveNumber);
  radii_opt->excludes(rho_opt);
  sssp_cmd->add_option("-s,--source", sssp_source, "source vertex (edge-list id)")->required();
  sssp_cmd->add_option("--engine", sssp_engine, "ref | fast | unweighted");
  sssp_cmd->add_option("--stats", sssp_stats, "write per-step CSV here");

  BenchArgs bench;
  std::string bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "run a step-count experiment");
  auto* config_opt = bench_cmd->add_option("--config", bench.config, "JSON experiment config");
  auto* input_opt = bench_cmd->add_option("-i,--input", bench.input, "edge list instead of a generator");
  add_gen_options(bench_cmd, bench.gen);
  bench_cmd->add_option("--weight-seed", bench.weight_seed, "weight seed");
  bench_cmd->add_flag("--unit", bench.unit, "force unit weights");
  bench_cmd->add_option("--label", bench.label, "graph label in the CSV");
  bench_cmd->add_option("--rho", bench.rho, "rho values")->delimiter(',');
  bench_cmd->add_option("--k", bench.k, "k values")->delimiter(',');
  bench_cmd->add_option("--heuristic", bench.heuristics, "heuristics (dp, greedy, full)")->delimiter(',');
  bench_cmd->add_option("--sources", bench.sources, "number of sampled sources");
  bench_cmd->add_option("--seed", bench.seed, "source sampling seed");
  bench_cmd->add_option("--engine", bench.engine, "fast | ref | unweighted");
  bench_cmd->add_option("-o,--output", bench_out, "CSV output path");
  config_opt->excludes(input_opt);

  std::string val_in, val_radii;
  std::size_t val_k = 1, val_rho = 1, val_cap = 400;
  auto* val_cmd = app.add_subcommand("validate", "check the (k, rho) conditions exhaustively");
  val_cmd->add_option("-i,--input", val_in, "edge list")->required();
  val_cmd->add_option("--radii", val_radii, "radii file")->required();
  val_cmd->add_option("--k", val_k, "hop budget k")->required()->check(CLI::PositiveNumber);
  val_cmd->add_option("--rho", val_rho, "ball size rho")->required()->check(CLI::PositiveNumber);
  val_cmd->add_option("--cap", val_cap, "largest graph the oracle accepts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*gen_cmd) return run_gen(gen, gen_out);
    if (*pre_cmd) return run_preprocess(pre_in, pre_k, pre_rho, pre_heuristic, pre_strict, pre_out, pre_radii);
    if (*sssp_cmd) {
      if (sssp_radii.empty() && rho_opt->count() == 0) {
        throw Failure{kUsageError, "sssp needs --radii or --rho"};
      }
      return run_sssp(sssp_in, sssp_radii, sssp_rho, sssp_source, sssp_engine, sssp_stats);
    }
    if (*bench_cmd) return run_bench(bench, bench_out);
    if (*val_cmd) return run_validate(val_in, val_radii, val_k, val_rho, val_cap);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  }
  return kUsageError;
}
