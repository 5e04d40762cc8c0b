#ifndef TROPEX_H
#define TROPEX_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define TROPEX_OBJECTIVE_MAX_VERTICES 0

#define TROPEX_OBJECTIVE_MAX_COLORS 1

#define TROPEX_OBJECTIVE_MAX_COLORS_AMONG_MAX_VERTICES 2

#define TROPEX_OBJECTIVE_MAX_VERTICES_AMONG_MAX_COLORS 3

#define TROPEX_VARIANT_PLAIN 0

#define TROPEX_VARIANT_BALANCED 1

#define TROPEX_VARIANT_TWO_PER_COLOR 2

/**
 * Result code of every fallible call.
 */
typedef enum TropexStatus {
  TROPEX_STATUS_OK = 0,
  TROPEX_STATUS_NULL_POINTER = 1,
  TROPEX_STATUS_INVALID_UTF8 = 2,
  TROPEX_STATUS_PARSE_ERROR = 3,
  TROPEX_STATUS_INVALID_GRAPH = 4,
  TROPEX_STATUS_INVALID_SOLUTION = 5,
  TROPEX_STATUS_BUDGET_EXCEEDED = 6,
  TROPEX_STATUS_TOO_LARGE = 7,
  TROPEX_STATUS_INVALID_ARGUMENT = 8,
  TROPEX_STATUS_PANIC = 9,
} TropexStatus;

/**
 * Opaque cycle set handle. Edge ids refer to the graph it was solved on or
 * parsed against.
 */
typedef struct TropexCycleSet TropexCycleSet;

/**
 * Opaque graph handle.
 */
typedef struct TropexGraph TropexGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *tropex_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 *
 * `s` must come from this library and not have been freed already.
 */
void tropex_string_free(char *s);

/**
 * Parses the `V name color` / `E from to` text format.
 *
 * # Safety
 *
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
enum TropexStatus tropex_graph_parse(const char *text, struct TropexGraph **out);

/**
 * Builds a graph from a color index per vertex and parallel `from`/`to`
 * edge arrays. Colors must be numbered densely from 0.
 *
 * # Safety
 *
 * `colors` must hold `vertex_count` entries, `from` and `to` must hold
 * `edge_count` entries each (any of them may be null when its count is 0).
 */
enum TropexStatus tropex_graph_from_arrays(const size_t *colors,
                                           size_t vertex_count,
                                           const size_t *from,
                                           const size_t *to,
                                           size_t edge_count,
                                           struct TropexGraph **out);

/**
 * # Safety
 *
 * `g` must come from this library and not have been freed already. Null
 * is ignored.
 */
void tropex_graph_free(struct TropexGraph *g);

/**
 * # Safety
 *
 * `g` must be a live graph handle or null (which yields 0).
 */
size_t tropex_graph_vertex_count(const struct TropexGraph *g);

/**
 * # Safety
 *
 * `g` must be a live graph handle or null (which yields 0).
 */
size_t tropex_graph_edge_count(const struct TropexGraph *g);

/**
 * # Safety
 *
 * `g` must be a live graph handle or null (which yields 0).
 */
size_t tropex_graph_color_count(const struct TropexGraph *g);

/**
 * Serializes a graph; release the result with [`tropex_string_free`].
 *
 * # Safety
 *
 * `g` must be a live graph handle and `out` a writable pointer.
 */
enum TropexStatus tropex_graph_to_text(const struct TropexGraph *g, char **out);

/**
 * Solves `objective` (one of the `TROPEX_OBJECTIVE_*` constants).
 * `TROPEX_OBJECTIVE_MAX_VERTICES` is polynomial and ignores the budget.
 * A `node_limit` or `time_limit_ms` of 0 means no limit on that axis.
 *
 * # Safety
 *
 * `g` must be a live graph handle and `out` a writable pointer.
 */
enum TropexStatus tropex_solve(const struct TropexGraph *g,
                               uint32_t objective_code,
                               uint64_t node_limit,
                               uint64_t time_limit_ms,
                               struct TropexCycleSet **out);

/**
 * Color-blind approximation; `out_bound` receives the largest color class
 * size `j`, so the result has at least `1/j` of the optimal color count.
 *
 * # Safety
 *
 * `g` must be a live graph handle; `out` and `out_bound` must be writable.
 */
enum TropexStatus tropex_approx(const struct TropexGraph *g,
                                struct TropexCycleSet **out,
                                size_t *out_bound);

/**
 * # Safety
 *
 * `s` must come from this library and not have been freed already. Null
 * is ignored.
 */
void tropex_cycle_set_free(struct TropexCycleSet *s);

/**
 * Number of cycles in the set (0 for null).
 *
 * # Safety
 *
 * `s` must be a live cycle set handle or null.
 */
size_t tropex_cycle_set_len(const struct TropexCycleSet *s);

/**
 * Copies the vertex indices of cycle `index` into `buf`. `out_len` always
 * receives the cycle length; when it exceeds `capacity` nothing is copied
 * and `TROPEX_STATUS_INVALID_ARGUMENT` is returned.
 *
 * # Safety
 *
 * `g` and `s` must be live handles with `s` belonging to `g`; `buf` must be
 * writable for `capacity` entries (or null with capacity 0).
 */
enum TropexStatus tropex_cycle_vertices(const struct TropexGraph *g,
                                        const struct TropexCycleSet *s,
                                        size_t index,
                                        size_t *buf,
                                        size_t capacity,
                                        size_t *out_len);

/**
 * Checks that `s` is a vertex-disjoint cycle set of `g` and reports how
 * many vertices and colors it covers.
 *
 * # Safety
 *
 * `g` and `s` must be live handles; the two out pointers must be writable.
 */
enum TropexStatus tropex_validate(const struct TropexGraph *g,
                                  const struct TropexCycleSet *s,
                                  size_t *out_vertices,
                                  size_t *out_colors);

/**
 * Serializes a cycle set as `C v1 v2 ...` lines in canonical order.
 *
 * # Safety
 *
 * `g` and `s` must be live handles with `s` valid for `g`; `out` writable.
 */
enum TropexStatus tropex_solution_to_text(const struct TropexGraph *g,
                                          const struct TropexCycleSet *s,
                                          char **out);

/**
 * Parses `C v1 v2 ...` lines against `g`. The result is not validated; use
 * [`tropex_validate`].
 *
 * # Safety
 *
 * `g` must be a live handle, `text` NUL-terminated, `out` writable.
 */
enum TropexStatus tropex_solution_parse(const struct TropexGraph *g,
                                        const char *text,
                                        struct TropexCycleSet **out);

/**
 * Compiles a DIMACS CNF into a gadget graph (`TROPEX_VARIANT_*`). When
 * `out_map` is non-null it receives the sidecar map text.
 *
 * # Safety
 *
 * `dimacs` must be NUL-terminated; `out_graph` must be writable; `out_map`
 * must be writable or null.
 */
enum TropexStatus tropex_reduce_dimacs(const char *dimacs,
                                       uint32_t variant,
                                       struct TropexGraph **out_graph,
                                       char **out_map);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TROPEX_H */
