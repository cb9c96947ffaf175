#ifndef TRACENORM_H
#define TRACENORM_H

/* Generated by cbindgen from crates/ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TnDeletionKind {
  TN_DELETION_KIND_ARC = 0,
  TN_DELETION_KIND_LEAF_VERTEX = 1,
  TN_DELETION_KIND_NONLEAF_VERTEX = 2,
} TnDeletionKind;

/**
 * Status codes. Values 2 and 3 match the CLI exit codes.
 */
typedef enum TnStatus {
  TN_STATUS_OK = 0,
  TN_STATUS_NULL_POINTER = 1,
  TN_STATUS_INVALID_INPUT = 2,
  TN_STATUS_NUMERICAL = 3,
  TN_STATUS_DOMAIN = 4,
  TN_STATUS_PARSE = 5,
  TN_STATUS_BUFFER_TOO_SMALL = 6,
  TN_STATUS_PANIC = 7,
} TnStatus;

/**
 * Opaque digraph handle.
 */
typedef struct TnDigraph TnDigraph;

/**
 * Trace norms before and after one deletion, with the bound and equality flags.
 */
typedef struct TnDeletionReport {
  enum TnDeletionKind kind;
  double alpha;
  double norm_before;
  double norm_after;
  double bound;
  double slack;
  bool equality_predicted;
  bool equality_observed;
} TnDeletionReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *tn_last_error_message(void);

/**
 * Builds a digraph on `n` vertices from `m` arcs `tails[i] → heads[i]`.
 * `tails` and `heads` may be null when `m` is 0.
 */
enum TnStatus tn_digraph_from_arcs(size_t n,
                                   const size_t *tails,
                                   const size_t *heads,
                                   size_t m,
                                   struct TnDigraph **out);

/**
 * Parses the digraph text format from a NUL-terminated string.
 */
enum TnStatus tn_digraph_parse(const char *text, struct TnDigraph **out);

/**
 * Releases a handle. Null is ignored.
 */
void tn_digraph_free(struct TnDigraph *handle);

/**
 * Number of vertices, or 0 for a null handle.
 */
size_t tn_digraph_order(const struct TnDigraph *handle);

/**
 * Number of arcs, or 0 for a null handle.
 */
size_t tn_digraph_arc_count(const struct TnDigraph *handle);

/**
 * `sqrt(2a^2 - 2a + 1)`, the largest drop from deleting one arc.
 */
enum TnStatus tn_arc_bound(double alpha, double *out);

/**
 * Alpha trace norm of the digraph.
 */
enum TnStatus tn_trace_norm(const struct TnDigraph *handle, double alpha, double *out);

/**
 * Writes the `n` alpha singular values, descending, into `values`.
 * `len` must be at least the order of the digraph.
 */
enum TnStatus tn_singular_values(const struct TnDigraph *handle,
                                 double alpha,
                                 double *values,
                                 size_t len);

/**
 * Report for deleting arc `u → v`.
 */
enum TnStatus tn_arc_deletion_report(const struct TnDigraph *handle,
                                     size_t u,
                                     size_t v,
                                     double alpha,
                                     double tol,
                                     struct TnDeletionReport *out);

/**
 * Report for deleting vertex `u`, as a leaf or nonleaf deletion by degree.
 */
enum TnStatus tn_vertex_deletion_report(const struct TnDigraph *handle,
                                        size_t u,
                                        double alpha,
                                        double tol,
                                        struct TnDeletionReport *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRACENORM_H */
