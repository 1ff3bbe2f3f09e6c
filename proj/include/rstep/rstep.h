/*
 * C interface to the radius-stepping library.
 *
 * Objects are opaque handles released with their matching *_free function.
 * Every call that can fail returns an rs_status; on failure the message is
 * available from rs_last_error() on the same thread until the next call.
 * Vertex arguments are internal ids (0..n-1); use rs_graph_find_label to
 * translate ids read from an edge-list file.
 */
#ifndef RSTEP_RSTEP_H
#define RSTEP_RSTEP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RS_API __declspec(dllexport)
#elif defined(__GNUC__)
#define RS_API __attribute__((visibility("default")))
#else
#define RS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rs_status {
  RS_OK = 0,
  RS_ERROR_PARSE = 1,
  RS_ERROR_DOMAIN = 2,
  RS_ERROR_SIZE = 3,
  RS_ERROR_INVALID_ARGUMENT = 4,
  RS_ERROR_INTERNAL = 5
} rs_status;

#define RS_INFINITY UINT64_MAX

typedef struct rs_graph rs_graph;
typedef struct rs_radii rs_radii;
typedef struct rs_sssp rs_sssp;

typedef enum rs_generator_kind {
  RS_GEN_GRID2D = 0,
  RS_GEN_GRID3D = 1,
  RS_GEN_ADVERSARIAL = 2,
  RS_GEN_RANDOM = 3
} rs_generator_kind;

typedef struct rs_generator_spec {
  rs_generator_kind kind;
  /* grid2d: dims[0] x dims[1]; grid3d: dims[0..2]; adversarial: dims[0] = d;
     random: dims[0] = n, dims[1] = m */
  uint64_t dims[3];
  uint64_t graph_seed;
  /* 0 for unit weights, otherwise uniform integers in [weight_lo, weight_hi] */
  int weighted;
  uint64_t weight_lo;
  uint64_t weight_hi;
  uint64_t weight_seed;
} rs_generator_spec;

typedef enum rs_heuristic { RS_HEURISTIC_GREEDY = 0, RS_HEURISTIC_DP = 1, RS_HEURISTIC_FULL = 2 } rs_heuristic;

typedef enum rs_tie_mode { RS_TIES_INCLUSIVE = 0, RS_TIES_STRICT = 1 } rs_tie_mode;

typedef enum rs_engine { RS_ENGINE_REFERENCE = 0, RS_ENGINE_FAST = 1, RS_ENGINE_UNWEIGHTED = 2 } rs_engine;

typedef struct rs_step_record {
  uint64_t index;
  uint64_t round_distance; /* RS_INFINITY when unbounded */
  uint64_t active_count;
  uint64_t substeps;
  uint64_t settled_prefix;
} rs_step_record;

RS_API const char* rs_last_error(void);
RS_API void rs_string_free(char* s);

/* graphs */
RS_API rs_status rs_graph_parse(const char* text, size_t length, rs_graph** out);
RS_API rs_status rs_graph_read_file(const char* path, rs_graph** out);
RS_API rs_status rs_graph_write_file(const rs_graph* g, const char* path);
RS_API rs_status rs_graph_to_string(const rs_graph* g, char** out);
RS_API rs_status rs_graph_generate(const rs_generator_spec* spec, rs_graph** out, uint32_t* start);
RS_API void rs_graph_free(rs_graph* g);
RS_API size_t rs_graph_vertex_count(const rs_graph* g);
RS_API size_t rs_graph_edge_count(const rs_graph* g);
RS_API uint64_t rs_graph_max_weight(const rs_graph* g);
RS_API uint64_t rs_graph_label(const rs_graph* g, uint32_t v);
RS_API rs_status rs_graph_find_label(const rs_graph* g, uint64_t label, uint32_t* v);

/* radii */
RS_API rs_status rs_radii_read_file(const rs_graph* g, const char* path, rs_radii** out);
RS_API rs_status rs_radii_write_file(const rs_graph* g, const rs_radii* r, const char* path);
RS_API rs_status rs_radii_from_rho(const rs_graph* g, size_t rho, rs_tie_mode ties, rs_radii** out);
RS_API rs_status rs_radii_value(const rs_radii* r, uint32_t v, uint64_t* value);
RS_API void rs_radii_free(rs_radii* r);

/* preprocessing: out_graph/out_radii receive new handles */
RS_API rs_status rs_preprocess(const rs_graph* g, size_t k, size_t rho, rs_heuristic heuristic,
                               rs_tie_mode ties, rs_graph** out_graph, rs_radii** out_radii,
                               size_t* added_edges);

/* Writes a human-readable report to *report (free with rs_string_free) and
   the number of violations to *violations. Exhaustive; RS_ERROR_SIZE when the
   graph exceeds max_vertices. */
RS_API rs_status rs_validate(const rs_graph* g, const rs_radii* r, size_t k, size_t rho,
                             size_t max_vertices, char** report, size_t* violations);

/* single-source shortest paths */
RS_API rs_status rs_sssp_run(const rs_graph* g, const rs_radii* r, uint32_t source, rs_engine engine,
                             rs_sssp** out);
RS_API void rs_sssp_free(rs_sssp* res);
RS_API rs_status rs_sssp_distance(const rs_sssp* res, uint32_t v, uint64_t* dist);
RS_API size_t rs_sssp_step_count(const rs_sssp* res);
RS_API rs_status rs_sssp_step(const rs_sssp* res, size_t i, rs_step_record* out);
RS_API rs_status rs_sssp_steps_csv(const rs_sssp* res, char** out);
/* Checks the step and substep bounds for a run on g with radii r built for
   (k, rho). *violations receives the count, *report the details. */
RS_API rs_status rs_sssp_check_bounds(const rs_sssp* res, const rs_graph* g, const rs_radii* r,
                                      size_t k, size_t rho, char** report, size_t* violations);

/* experiments: config is a JSON document; csv and summary are optional */
RS_API rs_status rs_bench_run(const char* config_json, char** csv, char** summary);

#ifdef __cplusplus
}
#endif

#endif /* RSTEP_RSTEP_H */
