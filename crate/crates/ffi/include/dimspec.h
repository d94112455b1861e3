#ifndef DIMSPEC_H
#define DIMSPEC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible call.
typedef enum DimStatus {
  DIM_STATUS_OK = 0,
  DIM_STATUS_NULL_POINTER = 1,
  DIM_STATUS_INVALID_INPUT = 2,
  DIM_STATUS_NUMERICAL_FAILURE = 3,
  DIM_STATUS_SIZE_GUARD = 4,
  DIM_STATUS_DISCONNECTED = 5,
  DIM_STATUS_NOT_APPLICABLE = 6,
  DIM_STATUS_BUFFER_TOO_SMALL = 7,
  DIM_STATUS_PANIC = 8,
} DimStatus;

// Matrix selector.
typedef enum DimMatrixKind {
  DIM_MATRIX_KIND_ADJACENCY = 0,
  DIM_MATRIX_KIND_LAPLACIAN = 1,
  DIM_MATRIX_KIND_SIGNLESS_LAPLACIAN = 2,
} DimMatrixKind;

// Opaque graph handle.
typedef struct DimGraph DimGraph;

// Flat bounds report. `has_*` flags mark which optional values are valid.
typedef struct DimBounds {
  size_t n;
  size_t edges;
  size_t min_degree;
  double rho_a;
  double mu_1;
  double q_1;
  double trace_l;
  double trace_q;
  bool has_window;
  int64_t window_lo;
  int64_t window_hi;
  double window_m1;
  double window_m2;
  bool has_lb_adjacency;
  int64_t lb_adjacency;
  double lb_adjacency_raw;
  bool has_lb_laplacian;
  int64_t lb_laplacian;
  double lb_laplacian_raw;
  bool has_lb_signless;
  int64_t lb_signless;
  double lb_signless_raw;
  size_t lambda_minus;
  size_t lambda_plus;
  size_t ub_lambda_count;
  bool index_bound_holds;
  bool index_bound_equality;
} DimBounds;

// Summary of a brute-force DIM enumeration. Sizes are -1 when no DIM exists.
typedef struct DimOracleSummary {
  size_t dim_count;
  int64_t min_dim_size;
  int64_t max_dim_size;
  size_t max_induced_matching;
} DimOracleSummary;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failure on this thread, or null. The pointer
// stays valid until the next failing call on the same thread.
const char *dim_last_error_message(void);

// Library version as a static NUL-terminated string.
const char *dim_version(void);

// Builds a graph on `n` vertices from `pair_count` pairs stored flat in
// `pairs` (`u0, v0, u1, v1, ...`).
//
// # Safety
// `pairs` must point to `2 * pair_count` readable values (may be null when
// `pair_count` is 0); `out` must be a valid pointer.
enum DimStatus dim_graph_from_edges(size_t n,
                                    const size_t *pairs,
                                    size_t pair_count,
                                    struct DimGraph **out);

// Parses the edge-list text format.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be a valid pointer.
enum DimStatus dim_graph_parse(const char *text, struct DimGraph **out);

// Builds `K_{M,S}` with `|M| = m`, `|S| = s`.
//
// # Safety
// `out` must be a valid pointer.
enum DimStatus dim_graph_generate_cdim(size_t m, size_t s, struct DimGraph **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `g` must come from a `dim_graph_*` constructor and not be freed twice.
void dim_graph_free(struct DimGraph *g);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t dim_graph_order(const struct DimGraph *g);

// Edge count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t dim_graph_size(const struct DimGraph *g);

// Canonical edge-list text. Free the result with [`dim_string_free`].
//
// # Safety
// `g` must be a live handle and `out` a valid pointer.
enum DimStatus dim_graph_serialize(const struct DimGraph *g, char **out);

// # Safety
// `s` must come from this library and not be freed twice.
void dim_string_free(char *s);

// All `n` eigenvalues of the chosen matrix, non-increasing.
//
// # Safety
// `values` must hold `capacity` doubles; `len_out` may be null.
enum DimStatus dim_eigenvalues(const struct DimGraph *g,
                               enum DimMatrixKind kind,
                               double *values,
                               size_t capacity,
                               size_t *len_out);

// Principal eigenpair; the vector is scaled so that its first entry is 1.
//
// # Safety
// `radius` must be valid; `vector` must hold `capacity` doubles.
enum DimStatus dim_principal(const struct DimGraph *g,
                             enum DimMatrixKind kind,
                             double *radius,
                             double *vector,
                             size_t capacity,
                             size_t *len_out);

// Closed-form eigenvalues of `K_{M,S}` on `n` vertices with `|M| = m`,
// expanded with multiplicity and non-increasing.
//
// # Safety
// `values` must hold `capacity` doubles; `len_out` may be null.
enum DimStatus dim_cdim_eigenvalues(enum DimMatrixKind kind,
                                    size_t n,
                                    size_t m,
                                    double *values,
                                    size_t capacity,
                                    size_t *len_out);

// Closed-form principal eigenpair of `K_{M,S}`.
//
// # Safety
// As for [`dim_principal`].
enum DimStatus dim_cdim_principal(enum DimMatrixKind kind,
                                  size_t n,
                                  size_t m,
                                  double *radius,
                                  double *vector,
                                  size_t capacity,
                                  size_t *len_out);

// Recognizes `K_{M,S}`. On success `*found` is 1 and the matching is
// written flat into `matching` (`u0, v0, u1, v1, ...`, `2 * |M|` entries,
// `*len_out = |M|`); otherwise `*found` is 0. A nonzero `spectral`
// selects the eigenvector recognizer, which rejects disconnected graphs.
//
// # Safety
// `found` must be valid; `matching` must hold `2 * capacity` values.
enum DimStatus dim_recognize(const struct DimGraph *g,
                             int spectral,
                             int *found,
                             size_t *matching,
                             size_t capacity,
                             size_t *len_out);

// Fills every eigenvalue bound on DIM size.
//
// # Safety
// `out` must be valid.
enum DimStatus dim_bounds(const struct DimGraph *g, struct DimBounds *out);

// Brute-force DIM enumeration summary, refusing graphs with more than
// `max_edges` edges.
//
// # Safety
// `out` must be valid.
enum DimStatus dim_oracle(const struct DimGraph *g, size_t max_edges, struct DimOracleSummary *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DIMSPEC_H */
