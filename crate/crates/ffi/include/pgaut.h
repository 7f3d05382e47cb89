#ifndef PGAUT_H
#define PGAUT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PgautStatus {
  PGAUT_STATUS_OK = 0,
  PGAUT_STATUS_NULL_POINTER = 1,
  PGAUT_STATUS_INVALID_ARGUMENT = 2,
  // A size cap or the search node budget was exceeded.
  PGAUT_STATUS_RESOURCE_CAP = 3,
  PGAUT_STATUS_PANIC = 4,
} PgautStatus;

typedef enum PgautMethod {
  // Individualization-refinement search.
  PGAUT_METHOD_IR = 0,
  // Exhaustive enumeration; at most 10 vertices.
  PGAUT_METHOD_BRUTE = 1,
} PgautMethod;

// An undirected simple graph, optionally carrying element orders.
typedef struct PgautGraph PgautGraph;

// A permutation group with its stabilizer chain.
typedef struct PgautGroup PgautGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds the power graph of Z_n (vertices 0..n-1).
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum PgautStatus pgaut_power_graph_new(uint64_t n, struct PgautGraph **out);

// Builds a graph from `edge_count` pairs stored flat in `edges`
// (`edges[2i]`, `edges[2i+1]`).
//
// # Safety
// `edges` must point to `2 * edge_count` readable values (may be null when
// `edge_count` is 0); `out` must be valid for one handle.
enum PgautStatus pgaut_graph_from_edges(size_t vertex_count,
                                        const uint32_t *edges,
                                        size_t edge_count,
                                        struct PgautGraph **out);

// # Safety
// `g` must be null or a handle from this library not yet freed.
void pgaut_graph_free(struct PgautGraph *g);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t pgaut_graph_vertex_count(const struct PgautGraph *g);

// Edge count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t pgaut_graph_edge_count(const struct PgautGraph *g);

// # Safety
// `g` must be a live handle and `out` valid for one `bool`.
enum PgautStatus pgaut_graph_has_edge(const struct PgautGraph *g, size_t u, size_t v, bool *out);

// Serializes as `edgelist`, `dot`, `dimacs` or `json`.
//
// # Safety
// `g` must be a live handle, `format` a NUL-terminated string and `out`
// valid for one pointer. Release the result with `pgaut_string_free`.
enum PgautStatus pgaut_graph_export(const struct PgautGraph *g, const char *format, char **out);

// Computes the automorphism group. `node_budget` of 0 selects the default.
//
// # Safety
// `g` must be a live handle and `out` valid for one handle.
enum PgautStatus pgaut_automorphism_group(const struct PgautGraph *g,
                                          enum PgautMethod method,
                                          uint64_t node_budget,
                                          struct PgautGroup **out);

// # Safety
// `grp` must be null or a handle from this library not yet freed.
void pgaut_group_free(struct PgautGroup *grp);

// Exact group order as a decimal string.
//
// # Safety
// `grp` must be a live handle and `out` valid for one pointer.
enum PgautStatus pgaut_group_order(const struct PgautGroup *grp, char **out);

// # Safety
// `grp` must be null or a live handle.
size_t pgaut_group_degree(const struct PgautGroup *grp);

// # Safety
// `grp` must be null or a live handle.
size_t pgaut_group_generator_count(const struct PgautGroup *grp);

// Writes generator `index` as its image array; `len` must equal the degree.
//
// # Safety
// `grp` must be a live handle and `images` valid for `len` writes.
enum PgautStatus pgaut_group_generator(const struct PgautGroup *grp,
                                       size_t index,
                                       uint32_t *images,
                                       size_t len);

// Membership test for the permutation given by its image array.
//
// # Safety
// `grp` must be a live handle, `images` valid for `len` reads and `out`
// valid for one `bool`.
enum PgautStatus pgaut_group_contains(const struct PgautGroup *grp,
                                      const uint32_t *images,
                                      size_t len,
                                      bool *out);

// Product of factorials of closed-twin class sizes, as a decimal string.
//
// # Safety
// `g` must be a live handle and `out` valid for one pointer.
enum PgautStatus pgaut_twin_lower_bound(const struct PgautGraph *g, char **out);

// Closed-form automorphism group order of the power graph of Z_n.
//
// # Safety
// `out` must be valid for one pointer.
enum PgautStatus pgaut_formula_order(uint64_t n, char **out);

// # Safety
// `s` must be null or a string returned by this library not yet freed.
void pgaut_string_free(char *s);

// Message for the last failed call on this thread, or null. The pointer is
// valid until the next call into the library on the same thread.
const char *pgaut_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PGAUT_H */
