#ifndef TRISQ_H
#define TRISQ_H

/* C interface to the trisq library.
 *
 * Every fallible call returns a trisq_status. On failure the message is
 * available from trisq_last_error() until the next call on the same thread.
 * Strings returned through char** are heap allocated; release them with
 * trisq_string_free. Exact fractions are passed in as text ("3/4", "0.75",
 * "2") and come back inside JSON as {"num": "...", "den": "..."}. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define TRISQ_API __declspec(dllexport)
#else
#define TRISQ_API __attribute__((visibility("default")))
#endif

typedef enum trisq_status {
  TRISQ_OK = 0,
  TRISQ_INVALID_ARGUMENT = 1,
  TRISQ_PARSE_ERROR = 2,
  TRISQ_OUT_OF_RANGE = 3,
  TRISQ_NOT_REGULAR = 4,
  TRISQ_DEGREE_MISMATCH = 5,
  TRISQ_OUTSIDE_REGION = 6,
  TRISQ_CONSTRUCTION_FAILED = 7,
  TRISQ_IO_ERROR = 8,
  /* an identity or bound that must hold was found violated */
  TRISQ_PROPERTY_VIOLATION = 9,
  TRISQ_INTERNAL_ERROR = 10
} trisq_status;

typedef struct trisq_graph trisq_graph;
typedef struct trisq_hypergraph trisq_hypergraph;
typedef struct trisq_extreme trisq_extreme;
typedef struct trisq_blueprint trisq_blueprint;
typedef struct trisq_report trisq_report;
typedef struct trisq_batch trisq_batch;

TRISQ_API const char* trisq_version(void);
TRISQ_API const char* trisq_status_name(trisq_status status);
TRISQ_API const char* trisq_last_error(void);
TRISQ_API void trisq_string_free(char* s);

/* Graphs. Text may be graph JSON {"n": N, "edges": [[u, v], ...]} or an
 * edge list with one "u v" pair per line. */
TRISQ_API trisq_status trisq_graph_parse(const char* text, trisq_graph** out);
TRISQ_API trisq_status trisq_graph_load(const char* path, trisq_graph** out);
/* edges holds m pairs (2m entries). */
TRISQ_API trisq_status trisq_graph_from_edges(size_t n, const uint32_t* edges, size_t m, trisq_graph** out);
TRISQ_API void trisq_graph_free(trisq_graph* g);
TRISQ_API size_t trisq_graph_order(const trisq_graph* g);
TRISQ_API size_t trisq_graph_size(const trisq_graph* g);
/* Degree if regular, otherwise -1. */
TRISQ_API long trisq_graph_regular_degree(const trisq_graph* g);
TRISQ_API trisq_status trisq_graph_to_json(const trisq_graph* g, char** out);
/* {"n", "c3", "c4", "point"} for a regular graph. */
TRISQ_API trisq_status trisq_graph_cycle_point(const trisq_graph* g, char** json);
/* Per-vertex c3, c4, ct and the four 4-cycle types, plus totals. */
TRISQ_API trisq_status trisq_graph_profile(const trisq_graph* g, char** json);
/* Moments m_0..m_K of the walk spectrum with decimal approximations. For a
 * regular graph the (m3, m4) predicted from (d3, d4) is included. */
TRISQ_API trisq_status trisq_graph_moments(const trisq_graph* g, unsigned max_k, char** json);

/* Q^r, or its image under (x, y) -> (6x/r^2, 8y/r^3) when scaled != 0. */
TRISQ_API trisq_status trisq_polygon_json(unsigned r, int scaled, char** json);
TRISQ_API trisq_status trisq_polygon_svg(unsigned r, int scaled, char** svg);
/* "interior", "boundary" or "outside", as a static string. */
TRISQ_API trisq_status trisq_polygon_locate(unsigned r, const char* x, const char* y, const char** location);
/* Lower and upper boundary of Q^r above d3 = x. */
TRISQ_API trisq_status trisq_polygon_bounds(unsigned r, const char* x, char** json);

TRISQ_API trisq_status trisq_limit_region_json(unsigned cutoff, char** json);
/* Limit region with the scaled Q^r for each of the nrs degrees drawn over it. */
TRISQ_API trisq_status trisq_limit_region_svg(unsigned cutoff, const unsigned* rs, size_t nrs, char** svg);
/* "interior", "boundary", "outside" or "indeterminate-at-cutoff". */
TRISQ_API trisq_status trisq_limit_region_classify(unsigned cutoff, const char* x, const char* y, const char** location);

/* Hypergraphs. */
TRISQ_API trisq_status trisq_hypergraph_parse(const char* text, trisq_hypergraph** out);
/* Berge girth >= 5, every vertex in one hyperedge of each listed size. */
TRISQ_API trisq_status trisq_hypergraph_construct(const unsigned* sizes, size_t nsizes, uint64_t seed, size_t size_hint,
                                                  trisq_hypergraph** out);
TRISQ_API void trisq_hypergraph_free(trisq_hypergraph* h);
TRISQ_API trisq_status trisq_hypergraph_to_json(const trisq_hypergraph* h, char** json);
/* *girth is 0 when there is no Berge cycle. */
TRISQ_API trisq_status trisq_hypergraph_berge_girth(const trisq_hypergraph* h, size_t* girth);
TRISQ_API trisq_status trisq_hypergraph_expand(const trisq_hypergraph* h, trisq_graph** out);

/* Extreme graphs. With nsizes == 0 the partition is the balanced one into
 * l parts (l = 0 gives K_{r,r}); otherwise sizes is the partition of r. */
TRISQ_API trisq_status trisq_extreme_build(unsigned r, unsigned l, const unsigned* sizes, size_t nsizes, uint64_t seed,
                                           trisq_extreme** out);
TRISQ_API void trisq_extreme_free(trisq_extreme* e);
/* Borrowed; valid while e lives. */
TRISQ_API const trisq_graph* trisq_extreme_graph(const trisq_extreme* e);
/* NULL for K_{r,r}. Borrowed. */
TRISQ_API const trisq_hypergraph* trisq_extreme_hypergraph(const trisq_extreme* e);
TRISQ_API const char* trisq_extreme_backend(const trisq_extreme* e);
/* Structural checks; *passed is 1 when all of them hold. */
TRISQ_API trisq_status trisq_extreme_report(const trisq_extreme* e, int* passed, char** json);
/* Checks an arbitrary graph against the partition (sizes, or balanced l). */
TRISQ_API trisq_status trisq_extreme_check_graph(const trisq_graph* g, unsigned r, unsigned l, const unsigned* sizes,
                                                 size_t nsizes, int* passed, char** json);

/* Realization of a rational point of Q^r as a disjoint union. */
TRISQ_API trisq_status trisq_realize(unsigned r, const char* x, const char* y, uint64_t seed, trisq_blueprint** out);
TRISQ_API void trisq_blueprint_free(trisq_blueprint* bp);
TRISQ_API trisq_status trisq_blueprint_json(const trisq_blueprint* bp, char** json);
/* Cycle point recounted from the components, as JSON. */
TRISQ_API trisq_status trisq_blueprint_recount(const trisq_blueprint* bp, char** json);
TRISQ_API trisq_status trisq_blueprint_build(const trisq_blueprint* bp, size_t max_order, trisq_graph** out);

/* Verification suites. time_cap_seconds <= 0 means no cap. */
TRISQ_API trisq_status trisq_verify_region(unsigned r, unsigned n_max, unsigned jobs, double time_cap_seconds,
                                           int experimental, trisq_report** out);
TRISQ_API trisq_status trisq_verify_sampled(unsigned r, size_t n, size_t count, uint64_t seed,
                                            double time_cap_seconds, int experimental, trisq_report** out);
TRISQ_API trisq_status trisq_verify_bollobas(unsigned v_max, double time_cap_seconds, trisq_report** out);
TRISQ_API void trisq_report_free(trisq_report* report);
TRISQ_API int trisq_report_passed(const trisq_report* report);
TRISQ_API int trisq_report_complete(const trisq_report* report);
TRISQ_API trisq_status trisq_report_json(const trisq_report* report, int include_time, char** json);
TRISQ_API trisq_status trisq_report_text(const trisq_report* report, char** text);

/* Configuration-model sampling. A point outside Q^r makes the batch call
 * fail with TRISQ_PROPERTY_VIOLATION. */
TRISQ_API trisq_status trisq_sample_graph(unsigned r, size_t n, uint64_t seed, uint64_t stream, trisq_graph** out);
TRISQ_API trisq_status trisq_sample_batch(unsigned r, size_t n, size_t count, uint64_t seed, unsigned jobs,
                                          trisq_batch** out);
TRISQ_API void trisq_batch_free(trisq_batch* batch);
TRISQ_API trisq_status trisq_batch_json(const trisq_batch* batch, char** json);
TRISQ_API trisq_status trisq_batch_csv(const trisq_batch* batch, char** csv);
TRISQ_API trisq_status trisq_batch_svg(const trisq_batch* batch, char** svg);

#ifdef __cplusplus
}
#endif

#endif
