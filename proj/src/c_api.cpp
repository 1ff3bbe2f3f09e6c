#include "rstep/rstep.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "rstep/bench.hpp"
#include "rstep/generators.hpp"
#include "rstep/graph.hpp"
#include "rstep/preprocess.hpp"
#include "rstep/radius_step.hpp"

struct rs_graph {
  rstep::Graph rep;
};

struct rs_radii {
  rstep::RadiusAssignment rep;
};

struct rs_sssp {
  rstep::SsspResult rep;
};

namespace {

thread_local std::string last_error;

rs_status fail(rs_status code, const std::string& msg) {
  last_error = msg;
  return code;
}

template <typename Fn>
rs_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return RS_OK;
  } catch (const rstep::ParseError& e) {
    return fail(RS_ERROR_PARSE, e.what());
  } catch (const rstep::SizeError& e) {
    return fail(RS_ERROR_SIZE, e.what());
  } catch (const rstep::DomainError& e) {
    return fail(RS_ERROR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RS_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RS_ERROR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

rstep::TieMode tie_mode(rs_tie_mode t) {
  return t == RS_TIES_STRICT ? rstep::TieMode::strict : rstep::TieMode::inclusive;
}

}  // namespace

#define RS_REQUIRE(cond, what) \
  if (!(cond)) return fail(RS_ERROR_INVALID_ARGUMENT, what)

extern "C" {

const char* rs_last_error(void) { return last_error.c_str(); }

void rs_string_free(char* s) { std::free(s); }

rs_status rs_graph_parse(const char* text, size_t length, rs_graph** out) {
  RS_REQUIRE(text && out, "null argument");
  return guarded([&] { *out = new rs_graph{rstep::parse_edge_list(std::string_view(text, length))}; });
}

rs_status rs_graph_read_file(const char* path, rs_graph** out) {
  RS_REQUIRE(path && out, "null argument");
  return guarded([&] { *out = new rs_graph{rstep::read_edge_list_file(path)}; });
}

rs_status rs_graph_write_file(const rs_graph* g, const char* path) {
  RS_REQUIRE(g && path, "null argument");
  return guarded([&] { rstep::write_edge_list_file(g->rep, path); });
}

rs_status rs_graph_to_string(const rs_graph* g, char** out) {
  RS_REQUIRE(g && out, "null argument");
  return guarded([&] {
    std::ostringstream os;
    rstep::write_edge_list(g->rep, os);
    *out = dup_string(os.str());
  });
}

rs_status rs_graph_generate(const rs_generator_spec* spec, rs_graph** out, uint32_t* start) {
  RS_REQUIRE(spec && out, "null argument");
  return guarded([&] {
    rstep::GeneratorSpec s;
    switch (spec->kind) {
      case RS_GEN_GRID2D:
        s.kind = rstep::Grid2d{spec->dims[0], spec->dims[1]};
        break;
      case RS_GEN_GRID3D:
        s.kind = rstep::Grid3d{spec->dims[0], spec->dims[1], spec->dims[2]};
        break;
      case RS_GEN_ADVERSARIAL:
        s.kind = rstep::Adversarial{spec->dims[0]};
        break;
      case RS_GEN_RANDOM:
        s.kind = rstep::RandomConnected{spec->dims[0], spec->dims[1], spec->graph_seed};
        break;
      default:
        throw rstep::DomainError("unknown generator kind");
    }
    if (spec->weighted) s.weights = rstep::UniformWeights{spec->weight_lo, spec->weight_hi, spec->weight_seed};
    auto gen = rstep::generate(s);
    if (start) *start = gen.start;
    *out = new rs_graph{std::move(gen.graph)};
  });
}

void rs_graph_free(rs_graph* g) { delete g; }

size_t rs_graph_vertex_count(const rs_graph* g) { return g ? g->rep.vertex_count() : 0; }
size_t rs_graph_edge_count(const rs_graph* g) { return g ? g->rep.edge_count() : 0; }
uint64_t rs_graph_max_weight(const rs_graph* g) { return g ? g->rep.max_weight() : 0; }

uint64_t rs_graph_label(const rs_graph* g, uint32_t v) {
  return (g && v < g->rep.vertex_count()) ? g->rep.label(v) : RS_INFINITY;
}

rs_status rs_graph_find_label(const rs_graph* g, uint64_t label, uint32_t* v) {
  RS_REQUIRE(g && v, "null argument");
  auto found = g->rep.find_label(label);
  if (!found) return fail(RS_ERROR_DOMAIN, "no vertex labelled " + std::to_string(label));
  *v = *found;
  return RS_OK;
}

rs_status rs_radii_read_file(const rs_graph* g, const char* path, rs_radii** out) {
  RS_REQUIRE(g && path && out, "null argument");
  return guarded([&] { *out = new rs_radii{rstep::read_radii_file(g->rep, path)}; });
}

rs_status rs_radii_write_file(const rs_graph* g, const rs_radii* r, const char* path) {
  RS_REQUIRE(g && r && path, "null argument");
  return guarded([&] { rstep::write_radii_file(g->rep, r->rep, path); });
}

rs_status rs_radii_from_rho(const rs_graph* g, size_t rho, rs_tie_mode ties, rs_radii** out) {
  RS_REQUIRE(g && out, "null argument");
  return guarded([&] { *out = new rs_radii{rstep::rho_radii(g->rep, rho, tie_mode(ties))}; });
}

rs_status rs_radii_value(const rs_radii* r, uint32_t v, uint64_t* value) {
  RS_REQUIRE(r && value, "null argument");
  RS_REQUIRE(v < r->rep.r.size(), "vertex out of range");
  *value = r->rep.r[v];
  return RS_OK;
}

void rs_radii_free(rs_radii* r) { delete r; }

rs_status rs_preprocess(const rs_graph* g, size_t k, size_t rho, rs_heuristic heuristic,
                        rs_tie_mode ties, rs_graph** out_graph, rs_radii** out_radii,
                        size_t* added_edges) {
  RS_REQUIRE(g && out_graph && out_radii, "null argument");
  return guarded([&] {
    rstep::PreprocessOptions opts;
    opts.k = k;
    opts.rho = rho;
    opts.tie_mode = tie_mode(ties);
    switch (heuristic) {
      case RS_HEURISTIC_GREEDY:
        opts.heuristic = rstep::Heuristic::greedy;
        break;
      case RS_HEURISTIC_DP:
        opts.heuristic = rstep::Heuristic::dp;
        break;
      case RS_HEURISTIC_FULL:
        opts.heuristic = rstep::Heuristic::full;
        break;
      default:
        throw rstep::DomainError("unknown heuristic");
    }
    auto result = rstep::build_k_rho(g->rep, opts);
    if (added_edges) *added_edges = result.added_edges;
    auto graph = std::make_unique<rs_graph>(rs_graph{std::move(result.graph)});
    *out_radii = new rs_radii{std::move(result.radii)};
    *out_graph = graph.release();
  });
}

rs_status rs_validate(const rs_graph* g, const rs_radii* r, size_t k, size_t rho,
                      size_t max_vertices, char** report, size_t* violations) {
  RS_REQUIRE(g && r, "null argument");
  RS_REQUIRE(k >= 1 && rho >= 1, "k and rho must be >= 1");
  return guarded([&] {
    rstep::RadiusAssignment radii = r->rep;
    radii.k = k;
    radii.rho = rho;
    auto rep = rstep::validate_k_rho(g->rep, radii, rstep::OracleLimits{max_vertices});
    if (violations) *violations = rep.violations.size();
    if (report) *report = dup_string(rstep::format_report(g->rep, rep));
  });
}

rs_status rs_sssp_run(const rs_graph* g, const rs_radii* r, uint32_t source, rs_engine engine,
                      rs_sssp** out) {
  RS_REQUIRE(g && r && out, "null argument");
  return guarded([&] {
    rstep::Engine e = rstep::Engine::fast;
    switch (engine) {
      case RS_ENGINE_REFERENCE:
        e = rstep::Engine::reference;
        break;
      case RS_ENGINE_FAST:
        e = rstep::Engine::fast;
        break;
      case RS_ENGINE_UNWEIGHTED:
        e = rstep::Engine::unweighted;
        break;
      default:
        throw rstep::DomainError("unknown engine");
    }
    *out = new rs_sssp{rstep::run_engine(e, g->rep, r->rep, source)};
  });
}

void rs_sssp_free(rs_sssp* res) { delete res; }

rs_status rs_sssp_distance(const rs_sssp* res, uint32_t v, uint64_t* dist) {
  RS_REQUIRE(res && dist, "null argument");
  RS_REQUIRE(v < res->rep.dist.size(), "vertex out of range");
  *dist = res->rep.dist[v];
  return RS_OK;
}

size_t rs_sssp_step_count(const rs_sssp* res) { return res ? res->rep.steps.size() : 0; }

rs_status rs_sssp_step(const rs_sssp* res, size_t i, rs_step_record* out) {
  RS_REQUIRE(res && out, "null argument");
  RS_REQUIRE(i < res->rep.steps.size(), "step index out of range");
  const auto& s = res->rep.steps[i];
  *out = {s.index, s.round_distance, s.active_count, s.substeps, s.settled_prefix};
  return RS_OK;
}

rs_status rs_sssp_steps_csv(const rs_sssp* res, char** out) {
  RS_REQUIRE(res && out, "null argument");
  return guarded([&] { *out = dup_string(rstep::format_steps_csv(res->rep)); });
}

rs_status rs_sssp_check_bounds(const rs_sssp* res, const rs_graph* g, const rs_radii* r, size_t k,
                               size_t rho, char** report, size_t* violations) {
  RS_REQUIRE(res && g && r, "null argument");
  return guarded([&] {
    rstep::RadiusAssignment radii = r->rep;
    radii.k = k;
    radii.rho = rho;
    const auto premise = rstep::evaluate_premise(g->rep, radii);
    const auto rep = rstep::check_bounds(res->rep, g->rep, rho, k, premise);
    if (violations) *violations = rep.violations.size();
    if (report) {
      std::string text;
      for (const auto& v : rep.violations) text += "violation: " + v + '\n';
      for (const auto& n : rep.notes) text += "note: " + n + '\n';
      text += "steps " + std::to_string(res->rep.steps.size()) + " <= " + std::to_string(rep.step_limit) +
              " (window " + std::to_string(rep.window) + ")\n";
      *report = dup_string(text);
    }
  });
}

rs_status rs_bench_run(const char* config_json, char** csv, char** summary) {
  RS_REQUIRE(config_json, "null argument");
  return guarded([&] {
    const auto cfg = rstep::config_from_json(config_json);
    const auto rows = rstep::run_experiment(cfg);
    if (csv) *csv = dup_string(rstep::emit_csv(rows));
    if (summary) *summary = dup_string(rstep::emit_summary(rows));
  });
}

}  // extern "C"
