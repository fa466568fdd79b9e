#ifndef KCORE_H
#define KCORE_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum KcDegreeMode {
  KC_DEGREE_MODE_UNDIRECTED = 0,
  KC_DEGREE_MODE_IN = 1,
  KC_DEGREE_MODE_OUT = 2,
  KC_DEGREE_MODE_IN_OUT = 3,
} KcDegreeMode;

// Result code of every fallible call.
typedef enum KcStatus {
  KC_STATUS_OK = 0,
  // A required pointer argument was NULL.
  KC_STATUS_NULL_ARGUMENT = 1,
  // A vertex id, line endpoint or buffer size was out of range.
  KC_STATUS_INVALID_ARGUMENT = 2,
  // The degree mode does not fit the graph's directedness.
  KC_STATUS_MODE_MISMATCH = 3,
  // Input text could not be parsed.
  KC_STATUS_PARSE_ERROR = 4,
  // Text was not valid UTF-8.
  KC_STATUS_UTF8_ERROR = 5,
  // The library panicked; this is a bug.
  KC_STATUS_PANIC = 6,
} KcStatus;

// Opaque handle to the core numbers of one graph.
typedef struct KcCores KcCores;

// Opaque graph handle.
typedef struct KcGraph KcGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread, or NULL. The
// pointer stays valid until the next `kc_*` call on the same thread.
const char *kc_last_error_message(void);

// Builds a simple graph on `n` vertices from `line_count` pairs stored
// flat in `lines` (`u0, v0, u1, v1, ...`). Duplicate lines are collapsed;
// self-loops are dropped, or rejected when `reject_loops` is set.
//
// # Safety
// `lines` must point to `2 * line_count` readable values (it may be NULL
// when `line_count` is 0) and `out` must be writable.
enum KcStatus kc_graph_from_lines(size_t n,
                                  const uint32_t *lines,
                                  size_t line_count,
                                  bool directed,
                                  bool reject_loops,
                                  struct KcGraph **out);

// Parses a Pajek `.net` network from NUL-terminated UTF-8 text.
//
// # Safety
// `text` must be a valid C string and `out` writable.
enum KcStatus kc_graph_from_pajek(const char *text, struct KcGraph **out);

// Parses a zero-based `u v` edge list from NUL-terminated UTF-8 text.
//
// # Safety
// `text` must be a valid C string and `out` writable.
enum KcStatus kc_graph_from_edgelist(const char *text, bool directed, struct KcGraph **out);

// # Safety
// `graph` must be NULL or a handle not yet freed.
void kc_graph_free(struct KcGraph *graph);

// Number of vertices; 0 for NULL.
//
// # Safety
// `graph` must be NULL or a live handle.
size_t kc_graph_vertex_count(const struct KcGraph *graph);

// Number of edges (undirected) or arcs (directed); 0 for NULL.
//
// # Safety
// `graph` must be NULL or a live handle.
size_t kc_graph_line_count(const struct KcGraph *graph);

// # Safety
// `graph` must be NULL or a live handle.
bool kc_graph_is_directed(const struct KcGraph *graph);

// # Safety
// `graph` must be a live handle and `out` writable.
enum KcStatus kc_graph_degree(const struct KcGraph *graph,
                              uint32_t vertex,
                              enum KcDegreeMode mode,
                              size_t *out);

// Writes the graph as Pajek text. Free the result with [`kc_string_free`].
// Returns NULL for a NULL handle.
//
// # Safety
// `graph` must be NULL or a live handle.
char *kc_graph_to_pajek(const struct KcGraph *graph);

// Computes the core number of every vertex under `mode`.
//
// # Safety
// `graph` must be a live handle and `out` writable.
enum KcStatus kc_cores_decompose(const struct KcGraph *graph,
                                 enum KcDegreeMode mode,
                                 struct KcCores **out);

// # Safety
// `cores` must be NULL or a handle not yet freed.
void kc_cores_free(struct KcCores *cores);

// Number of vertices covered; 0 for NULL.
//
// # Safety
// `cores` must be NULL or a live handle.
size_t kc_cores_len(const struct KcCores *cores);

// Order of the main core; 0 for NULL or an empty graph.
//
// # Safety
// `cores` must be NULL or a live handle.
size_t kc_cores_max(const struct KcCores *cores);

// # Safety
// `cores` must be a live handle and `out` writable.
enum KcStatus kc_cores_get(const struct KcCores *cores, uint32_t vertex, size_t *out);

// Copies all core numbers into `buffer`, which must hold at least
// [`kc_cores_len`] entries.
//
// # Safety
// `cores` must be a live handle and `buffer` writable for `capacity`
// entries.
enum KcStatus kc_cores_copy(const struct KcCores *cores, size_t *buffer, size_t capacity);

// Writes the ids of the `k`-core's vertices, ascending, into `buffer` and
// their count into `count`. When `capacity` is too small nothing is copied,
// `count` still receives the required size and the call reports
// `KC_STATUS_INVALID_ARGUMENT`; pass a NULL buffer with capacity 0 to query
// the size.
//
// # Safety
// `cores` must be a live handle, `count` writable, and `buffer` writable
// for `capacity` entries.
enum KcStatus kc_cores_k_core_vertices(const struct KcCores *cores,
                                       size_t k,
                                       uint32_t *buffer,
                                       size_t capacity,
                                       size_t *count);

// Core numbers as a Pajek `.clu` partition. Free the result with
// [`kc_string_free`]. Returns NULL for a NULL handle.
//
// # Safety
// `cores` must be NULL or a live handle.
char *kc_cores_to_clu(const struct KcCores *cores);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void kc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KCORE_H */
