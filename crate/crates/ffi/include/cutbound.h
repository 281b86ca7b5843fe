#ifndef CUTBOUND_H
#define CUTBOUND_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CbStatus {
  CB_STATUS_OK = 0,
  CB_STATUS_NULL_POINTER = 1,
  /**
   * Malformed graph, bad parameter or unknown name.
   */
  CB_STATUS_INVALID_INPUT = 2,
  /**
   * The graph does not satisfy the bound's hypotheses.
   */
  CB_STATUS_PRECONDITION = 3,
  CB_STATUS_SIZE_GUARD = 4,
  /**
   * A structural assertion failed inside the library.
   */
  CB_STATUS_INTERNAL = 5,
  CB_STATUS_PANIC = 6,
} CbStatus;

typedef struct CbGraph CbGraph;

typedef struct CbReport CbReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next failing call on the same thread.
 */
const char *cb_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *cb_version(void);

/**
 * Builds a graph from parallel arrays of `edge_count` endpoints and weights.
 *
 * # Safety
 * `us`, `vs` and `weights` must point to `edge_count` readable elements
 * (they may be NULL when `edge_count` is 0); `out` must be writable.
 */
enum CbStatus cb_graph_new(size_t vertex_count,
                           const uint32_t *us,
                           const uint32_t *vs,
                           const double *weights,
                           size_t edge_count,
                           struct CbGraph **out);

/**
 * Parses the line-oriented graph format (`p n m` header, `e u v w` lines).
 *
 * # Safety
 * `source` must be a NUL-terminated string; `out` must be writable.
 */
enum CbStatus cb_graph_parse(const char *source, struct CbGraph **out);

/**
 * Runs a named generator, e.g. `"petersen_c3"` with params `{"10", "1"}`.
 *
 * # Safety
 * `kind` and each of the `param_count` entries of `params` must be
 * NUL-terminated strings; `out` must be writable.
 */
enum CbStatus cb_graph_generate(const char *kind,
                                const char *const *params,
                                size_t param_count,
                                uint64_t seed,
                                struct CbGraph **out);

/**
 * # Safety
 * `graph` must come from a `cb_graph_*` constructor and not be freed yet.
 */
void cb_graph_free(struct CbGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or NULL (which yields 0).
 */
size_t cb_graph_vertex_count(const struct CbGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or NULL (which yields 0).
 */
size_t cb_graph_edge_count(const struct CbGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or NULL (which yields 0).
 */
double cb_graph_total_weight(const struct CbGraph *graph);

/**
 * Runs one bound by name (`"poljak_turzik"`, `"dfs"`, `"mainprob"`, ...).
 * `seed` and `trials` only matter for Monte Carlo bounds; `trials = 0`
 * picks the default.
 *
 * # Safety
 * `graph` must be a live handle, `name` a NUL-terminated string and `out`
 * writable.
 */
enum CbStatus cb_bound(const struct CbGraph *graph,
                       const char *name,
                       uint64_t seed,
                       size_t trials,
                       struct CbReport **out);

/**
 * # Safety
 * `report` must be a live handle or NULL (which yields NaN).
 */
double cb_report_bound_value(const struct CbReport *report);

/**
 * # Safety
 * `report` must be a live handle or NULL (which yields NaN).
 */
double cb_report_cut_weight(const struct CbReport *report);

/**
 * 1 for a deterministic guarantee, 0 for a Monte Carlo expectation or NULL.
 *
 * # Safety
 * `report` must be a live handle or NULL.
 */
int32_t cb_report_is_deterministic(const struct CbReport *report);

/**
 * Copies the cut sides (0 or 1) into `sides`, which holds `len` bytes.
 *
 * # Safety
 * `report` must be a live handle and `sides` writable for `len` bytes.
 */
enum CbStatus cb_report_cut_sides(const struct CbReport *report, uint8_t *sides, size_t len);

/**
 * The report as one JSON object. The string lives as long as the report.
 *
 * # Safety
 * `report` must be a live handle or NULL (which yields NULL).
 */
const char *cb_report_json(const struct CbReport *report);

/**
 * # Safety
 * `report` must come from `cb_bound` and not be freed yet.
 */
void cb_report_free(struct CbReport *report);

/**
 * Exact maximum cut. `max_vertices = 0` keeps the default size guard.
 * `sides` may be NULL; otherwise it receives one byte per vertex.
 *
 * # Safety
 * `graph` must be a live handle, `value` writable, and `sides` NULL or
 * writable for as many bytes as the graph has vertices.
 */
enum CbStatus cb_exact_max_cut(const struct CbGraph *graph,
                               size_t max_vertices,
                               double *value,
                               uint8_t *sides);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CUTBOUND_H */
