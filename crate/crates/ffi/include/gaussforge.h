#ifndef GAUSSFORGE_H
#define GAUSSFORGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Which projection of a based diagram to evaluate.
 */
typedef enum GfMap {
  GF_MAP_PR = 0,
  GF_MAP_PRA = 1,
  GF_MAP_IP = 2,
  GF_MAP_IAP = 3,
} GfMap;

/**
 * Result code of every fallible call.
 */
typedef enum GfStatus {
  GF_STATUS_OK = 0,
  GF_STATUS_NULL_POINTER = 1,
  GF_STATUS_INVALID_UTF8 = 2,
  GF_STATUS_PARSE_ERROR = 3,
  GF_STATUS_INVALID_ARGUMENT = 4,
  GF_STATUS_TOO_MANY_CHORDS = 5,
  GF_STATUS_REQUIRES_BASE_POINT = 6,
  GF_STATUS_OUT_OF_RANGE = 7,
  GF_STATUS_INTERNAL = 8,
} GfStatus;

/**
 * Display variable for polynomials.
 */
typedef enum GfVar {
  GF_VAR_A = 0,
  GF_VAR_T = 1,
  GF_VAR_Q = 2,
} GfVar;

/**
 * A parsed Gauss diagram.
 */
typedef struct GfDiagram GfDiagram;

/**
 * A table of `(i, j, dim)` rows sorted by `(i, j)`.
 */
typedef struct GfKhTable GfKhTable;

/**
 * A Laurent polynomial in the bracket variable `A`.
 */
typedef struct GfPoly GfPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread. Valid until the next call
 * on the same thread; never null.
 */
const char *gf_last_error_message(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void gf_string_free(char *s);

/**
 * Parses a Gauss code such as `"O1+ U2+ O3+ U1+ O2+ U3+"`.
 *
 * # Safety
 * `code` must be a NUL-terminated string; `out` must be writable.
 */
enum GfStatus gf_diagram_parse(const char *code, struct GfDiagram **out);

/**
 * # Safety
 * `d` must be null or a handle from `gf_diagram_parse`, not yet freed.
 */
void gf_diagram_free(struct GfDiagram *d);

/**
 * Number of chords, or 0 for a null handle.
 *
 * # Safety
 * `d` must be null or a live handle.
 */
size_t gf_diagram_chord_count(const struct GfDiagram *d);

/**
 * Canonical Gauss code of the diagram.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum GfStatus gf_diagram_serialize(const struct GfDiagram *d, char **out);

/**
 * Jones polynomial of one projection of `d`.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum GfStatus gf_jones(const struct GfDiagram *d, enum GfMap map, struct GfPoly **out);

/**
 * # Safety
 * `p` must be null or a handle from `gf_jones`, not yet freed.
 */
void gf_poly_free(struct GfPoly *p);

/**
 * Number of nonzero terms.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
size_t gf_poly_len(const struct GfPoly *p);

/**
 * Term `index` in increasing order of the exponent of `A`.
 *
 * # Safety
 * `p` must be a live handle; `exponent` and `coefficient` must be writable.
 */
enum GfStatus gf_poly_term(const struct GfPoly *p,
                           size_t index,
                           int32_t *exponent,
                           int64_t *coefficient);

/**
 * Renders the polynomial in `A`, `t` or `q`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum GfStatus gf_poly_to_string(const struct GfPoly *p, enum GfVar var, char **out);

/**
 * Z/2 Khovanov homology of one projection of `d`.
 *
 * # Safety
 * `d` must be a live handle; `out` must be writable.
 */
enum GfStatus gf_khovanov(const struct GfDiagram *d, enum GfMap map, struct GfKhTable **out);

/**
 * # Safety
 * `t` must be null or a handle from `gf_khovanov`, not yet freed.
 */
void gf_kh_table_free(struct GfKhTable *t);

/**
 * Number of nonzero `(i, j)` entries.
 *
 * # Safety
 * `t` must be null or a live handle.
 */
size_t gf_kh_table_len(const struct GfKhTable *t);

/**
 * Row `index` of the table.
 *
 * # Safety
 * `t` must be a live handle; `i`, `j`, `dim` must be writable.
 */
enum GfStatus gf_kh_table_entry(const struct GfKhTable *t,
                                size_t index,
                                int32_t *i,
                                int32_t *j,
                                size_t *dim);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GAUSSFORGE_H */
