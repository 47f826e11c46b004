#ifndef MACIAS_H
#define MACIAS_H

/* C interface to the Macias-topology workbench. All objects are opaque;
 * functions return a status code and write results through out-parameters.
 * Strings returned through char** are heap-allocated; release them with
 * macias_string_free. On any non-OK status, macias_last_error() describes
 * the failure for the calling thread. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct macias_ring macias_ring;
typedef struct macias_element macias_element;
typedef struct macias_homeo macias_homeo;

typedef enum {
  MACIAS_OK = 0,
  MACIAS_ERR_ZERO_ELEMENT = 1,
  MACIAS_ERR_UNSUPPORTED_FOR_RING = 2,
  MACIAS_ERR_SIZE_LIMIT = 3,
  MACIAS_ERR_INDEX_BEYOND_FINITE_PRIMES = 4,
  MACIAS_ERR_NO_PRIME_OUTSIDE = 5,
  MACIAS_ERR_NOT_HOMEOMORPHIC = 6,
  MACIAS_ERR_HOMEOMORPHIC = 7,
  MACIAS_ERR_PARSE = 8,
  MACIAS_ERR_RING_MISMATCH = 9,
  MACIAS_ERR_INFINITE_SET = 10,
  MACIAS_ERR_INVALID_ARGUMENT = 11,
  MACIAS_ERR_INTERNAL = 12
} macias_status;

/* Most recent failure message on this thread; never NULL. */
const char* macias_last_error(void);
void macias_string_free(char* s);

/* ---- rings ---- */

/* Accepts the canonical ring spellings: "Z", "GF(3)[x]", "Z[i]", "Z_(5)",
 * "Z[1/2]", "Z[1/{2,3}]", "Z[x]". */
macias_status macias_ring_parse(const char* spec, macias_ring** out);
void macias_ring_free(macias_ring* ring);
macias_status macias_ring_str(const macias_ring* ring, char** out);
macias_status macias_ring_info_json(const macias_ring* ring, char** out);

/* ---- elements ---- */

macias_status macias_element_parse(const macias_ring* ring, const char* text,
                                   macias_element** out);
void macias_element_free(macias_element* x);
macias_status macias_element_str(const macias_element* x, char** out);
/* Writes 1 or 0. */
macias_status macias_element_equal(const macias_element* a,
                                   const macias_element* b, int* out);

/* ---- arithmetic and membership ---- */

macias_status macias_is_unit(const macias_element* x, int* out);
macias_status macias_is_generic_point(const macias_element* x, int* out);
macias_status macias_coprime(const macias_element* a, const macias_element* b,
                             int* out);
/* s in sigma_k^0. */
macias_status macias_in_basic_open(const macias_element* s,
                                   const macias_element* k, int* out);

/* ---- reports (JSON text, schema macias-report/1) ---- */

macias_status macias_factor_json(const macias_element* x, char** out);
macias_status macias_support_json(const macias_element* x, char** out);
macias_status macias_member_json(const macias_element* s,
                                 const macias_element* k, char** out);
macias_status macias_closure_json(const macias_element* x, long window,
                                  char** out);
macias_status macias_witness_json(const macias_element* x,
                                  const macias_element* y, char** out);
macias_status macias_graph_json(const macias_ring* ring, long window,
                                char** out);
macias_status macias_graph_dot(const macias_ring* ring, long window,
                               char** out);
macias_status macias_density_json(const macias_ring* ring, long window,
                                  char** out);
macias_status macias_units_open_json(const macias_ring* ring, long window,
                                     char** out);
macias_status macias_semiprimitive_json(const macias_ring* ring, long window,
                                        char** out);
macias_status macias_partition_json(const macias_ring* ring, long window,
                                    char** out);
macias_status macias_zx_json(char** out);
/* Full per-ring report; jobs >= 1 selects the sweep worker count without
 * affecting the output bytes; with_oracle adds slow-path cross-checks. */
macias_status macias_report_json(const macias_ring* ring, long window,
                                 long jobs, int with_oracle, char** out);

/* ---- classification and homeomorphisms ---- */

macias_status macias_classify_json(const macias_ring* source,
                                   const macias_ring* target, char** out);
macias_status macias_homeo_build(const macias_ring* source,
                                 const macias_ring* target,
                                 macias_homeo** out);
void macias_homeo_free(macias_homeo* map);
macias_status macias_homeo_apply(const macias_homeo* map,
                                 const macias_element* x,
                                 macias_element** out);
macias_status macias_homeo_apply_inverse(const macias_homeo* map,
                                         const macias_element* y,
                                         macias_element** out);
macias_status macias_homeo_verify_json(const macias_homeo* map, long window,
                                       char** out);
macias_status macias_certificate_json(const macias_ring* source,
                                      const macias_ring* target, long window,
                                      char** out);

#ifdef __cplusplus
}
#endif

#endif /* MACIAS_H */
