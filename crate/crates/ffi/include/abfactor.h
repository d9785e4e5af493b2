#ifndef ABFACTOR_H
#define ABFACTOR_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum AbfStatus {
  ABF_STATUS_OK = 0,
  /**
   * The decision is negative: no factor exists.
   */
  ABF_STATUS_ABSENT = 1,
  ABF_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Instance size or search budget exceeded.
   */
  ABF_STATUS_SCALE = 3,
  ABF_STATUS_NULL_POINTER = 4,
  ABF_STATUS_INTERNAL = 5,
} AbfStatus;

/**
 * Opaque factor handle.
 */
typedef struct AbfFactor AbfFactor;

/**
 * Opaque graph handle.
 */
typedef struct AbfGraph AbfGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *abf_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *abf_version(void);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `edges` (`u0, v0, u1, v1, ...`).
 *
 * # Safety
 * `edges` must point to `2 * edge_count` readable values (or may be null
 * when `edge_count` is 0); `out` must be writable.
 */
enum AbfStatus abf_graph_new(size_t n,
                             const size_t *edges,
                             size_t edge_count,
                             struct AbfGraph **out);

/**
 * Parses an edge-list (`n m` header, then `u v` lines) or DOT document.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum AbfStatus abf_graph_parse(const char *text, struct AbfGraph **out);

/**
 * # Safety
 * `graph` must come from this library and not be freed twice. Null is a no-op.
 */
void abf_graph_free(struct AbfGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or null (which yields 0).
 */
size_t abf_graph_vertex_count(const struct AbfGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle or null (which yields 0).
 */
size_t abf_graph_edge_count(const struct AbfGraph *graph);

/**
 * Writes the `index`-th edge in sorted order, `u < v`.
 *
 * # Safety
 * `graph` must be a live handle; `u` and `v` must be writable.
 */
enum AbfStatus abf_graph_edge(const struct AbfGraph *graph, size_t index, size_t *u, size_t *v);

/**
 * # Safety
 * `out` must be writable.
 */
enum AbfStatus abf_example1(size_t a, size_t b, size_t t, struct AbfGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum AbfStatus abf_example2(size_t a, size_t b, size_t t, struct AbfGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum AbfStatus abf_h_na(size_t n, size_t a, struct AbfGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum AbfStatus abf_complete_bipartite(size_t x, size_t y, struct AbfGraph **out);

/**
 * κ′(G).
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum AbfStatus abf_edge_connectivity(const struct AbfGraph *graph, size_t *out);

/**
 * κ(G); n − 1 for complete graphs.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum AbfStatus abf_vertex_connectivity(const struct AbfGraph *graph, size_t *out);

/**
 * δ(G).
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum AbfStatus abf_min_degree(const struct AbfGraph *graph, size_t *out);

/**
 * σ₂(G). `*infinite` is set when every pair is adjacent; `*out` is then 0.
 *
 * # Safety
 * `graph` must be a live handle; `out` and `infinite` must be writable.
 */
enum AbfStatus abf_sigma2(const struct AbfGraph *graph, size_t *out, bool *infinite);

/**
 * Exact even [a,b]-factor search. Returns `Ok` with a new factor in `*out`,
 * or `Absent` with `*out` null.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum AbfStatus abf_find_even_factor(const struct AbfGraph *graph,
                                    size_t a,
                                    size_t b,
                                    struct AbfFactor **out);

/**
 * Parity-free [a,b]-factor search with a node budget (0 selects the
 * default). Budget exhaustion returns `Scale`.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum AbfStatus abf_find_ab_factor(const struct AbfGraph *graph,
                                  size_t a,
                                  size_t b,
                                  uint64_t budget,
                                  struct AbfFactor **out);

/**
 * # Safety
 * `factor` must come from this library and not be freed twice. Null is a no-op.
 */
void abf_factor_free(struct AbfFactor *factor);

/**
 * # Safety
 * `factor` must be a live handle or null (which yields 0).
 */
size_t abf_factor_edge_count(const struct AbfFactor *factor);

/**
 * # Safety
 * `factor` must be a live handle; `u` and `v` must be writable.
 */
enum AbfStatus abf_factor_edge(const struct AbfFactor *factor, size_t index, size_t *u, size_t *v);

/**
 * Checks that every factor degree lies in [a, b] (and is even when `even`).
 *
 * # Safety
 * Handles must be live; `valid` must be writable.
 */
enum AbfStatus abf_verify_factor(const struct AbfGraph *graph,
                                 const struct AbfFactor *factor,
                                 size_t a,
                                 size_t b,
                                 bool even,
                                 bool *valid);

/**
 * Exhaustive deficiency criterion for graphs with at most `max_n` ≤ 18
 * vertices. `*holds` is false when some pair (S, T) has positive
 * deficiency; `*max_value` receives the maximum deficiency.
 *
 * # Safety
 * `graph` must be a live handle; `holds` and `max_value` must be writable.
 */
enum AbfStatus abf_criterion_decide(const struct AbfGraph *graph,
                                    size_t a,
                                    size_t b,
                                    size_t max_n,
                                    bool *holds,
                                    int64_t *max_value);

/**
 * Largest adjacency eigenvalue with residual at most `tolerance`.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum AbfStatus abf_lambda1(const struct AbfGraph *graph, double tolerance, double *out);

/**
 * Largest root ρ(n,a) of the H_{n,a} characteristic cubic.
 *
 * # Safety
 * `out` must be writable.
 */
enum AbfStatus abf_rho(size_t n, size_t a, double tolerance, double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ABFACTOR_H */
