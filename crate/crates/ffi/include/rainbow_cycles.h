#ifndef RAINBOW_CYCLES_H
#define RAINBOW_CYCLES_H

/* Generated by cbindgen from rainbow-cycles-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every entry point.
 */
typedef enum RcStatus {
  RcStatus_Ok = 0,
  RcStatus_NullArgument = 1,
  RcStatus_InvalidUtf8 = 2,
  RcStatus_ParseError = 3,
  RcStatus_BadParameter = 4,
  RcStatus_HypothesesNotMet = 5,
  RcStatus_NotFound = 6,
  RcStatus_BudgetExceeded = 7,
  RcStatus_InternalError = 8,
} RcStatus;

/**
 * Opaque colored-graph handle.
 */
typedef struct RcGraph RcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. Valid until the next
 * call on the same thread; do not free.
 */
const char *rc_last_error(void);

/**
 * Frees a string returned by this library. Null is a no-op.
 *
 * # Safety
 * `s` must have been returned by a function of this library and not freed
 * before.
 */
void rc_string_free(char *s);

/**
 * Frees a graph handle. Null is a no-op.
 *
 * # Safety
 * `g` must have been returned by a graph-producing function of this
 * library and not freed before.
 */
void rc_graph_free(struct RcGraph *g);

/**
 * Parses the colored-graph text format (`n m` header, `u v c` lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string, `out` a valid pointer.
 */
enum RcStatus rc_graph_parse(const char *text, struct RcGraph **out);

/**
 * Builds the tight complete instance for `k` (cap on the vertex count).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum RcStatus rc_graph_generate_equitable(uint32_t k, uintptr_t cap, struct RcGraph **out);

/**
 * Random instance whose `n` color classes each have `class_size` edges.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum RcStatus rc_graph_generate_relaxed(uintptr_t n,
                                        uintptr_t class_size,
                                        uint64_t seed,
                                        struct RcGraph **out);

/**
 * Vertex count, or -1 on a null handle.
 *
 * # Safety
 * `g` must be a live graph handle or null.
 */
int64_t rc_graph_vertex_count(const struct RcGraph *g);

/**
 * Edge count, or -1 on a null handle.
 *
 * # Safety
 * `g` must be a live graph handle or null.
 */
int64_t rc_graph_edge_count(const struct RcGraph *g);

/**
 * Serializes the graph back to the text format.
 *
 * # Safety
 * `g` must be a live graph handle, `out` a valid pointer; free the result
 * with [`rc_string_free`].
 */
enum RcStatus rc_graph_write(const struct RcGraph *g, char **out);

/**
 * Validation report as JSON.
 *
 * # Safety
 * `g` must be a live graph handle, `out` a valid pointer; free the result
 * with [`rc_string_free`].
 */
enum RcStatus rc_validate_json(const struct RcGraph *g, uint32_t k, bool relaxed, char **out);

/**
 * Runs the search pipeline; on success `out` holds the verified witness as
 * JSON. `budget = 0` means unbounded.
 *
 * # Safety
 * `g` must be a live graph handle, `out` a valid pointer; free the result
 * with [`rc_string_free`].
 */
enum RcStatus rc_find_json(const struct RcGraph *g,
                           uint32_t k,
                           bool relaxed,
                           uint64_t budget,
                           char **out);

/**
 * Exact minimum rainbow-cycle length: writes it to `out_len` (-1 when none
 * exists) and, when a cycle exists and `out_witness` is non-null, the
 * witness JSON. `max_len <= 0` means unbounded; `budget = 0` unbounded.
 *
 * # Safety
 * `g` must be a live graph handle and `out_len` valid; `out_witness` may
 * be null. Free the witness with [`rc_string_free`].
 */
enum RcStatus rc_oracle_shortest_rainbow(const struct RcGraph *g,
                                         int64_t max_len,
                                         uint64_t budget,
                                         int64_t *out_len,
                                         char **out_witness);

/**
 * All standard inequality checks over a geometric grid, as a JSON array.
 *
 * # Safety
 * `out` must be a valid pointer; free the result with [`rc_string_free`].
 */
enum RcStatus rc_bounds_check_json(double k_min, double k_max, uintptr_t samples, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* RAINBOW_CYCLES_H */
