#ifndef ORDLEN_H
#define ORDLEN_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every fallible function.
 */
typedef enum OrdlenStatus {
  ORDLEN_STATUS_OK = 0,
  ORDLEN_STATUS_NULL_POINTER = 1,
  ORDLEN_STATUS_INVALID_UTF8 = 2,
  ORDLEN_STATUS_PARSE = 3,
  ORDLEN_STATUS_DOMAIN = 4,
  ORDLEN_STATUS_OVERFLOW = 5,
  ORDLEN_STATUS_INTERNAL = 6,
} OrdlenStatus;

/**
 * A monomial subquotient `I/J` together with its ring.
 */
typedef struct OrdlenModule OrdlenModule;

/**
 * An ordinal below `w^w`.
 */
typedef struct OrdlenOrdinal OrdlenOrdinal;

/**
 * A polynomial ring given by its variable names.
 */
typedef struct OrdlenRing OrdlenRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *ordlen_last_error(void);

/**
 * Library version as a static string.
 */
const char *ordlen_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void ordlen_string_free(char *s);

/**
 * Parses text such as `"3*w^2 + 9*w + 7"`.
 *
 * # Safety
 * `text` must be a nul-terminated string; `out` must be writable.
 */
enum OrdlenStatus ordlen_ordinal_parse(const char *text, struct OrdlenOrdinal **out);

/**
 * # Safety
 * `a` must be null or a handle from this library, not yet freed.
 */
void ordlen_ordinal_free(struct OrdlenOrdinal *a);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable. Free the result with
 * [`ordlen_string_free`].
 */
enum OrdlenStatus ordlen_ordinal_to_string(const struct OrdlenOrdinal *a, char **out);

/**
 * Ordinal (non-commutative) sum `a + b`.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum OrdlenStatus ordlen_ordinal_sum(const struct OrdlenOrdinal *a,
                                     const struct OrdlenOrdinal *b,
                                     struct OrdlenOrdinal **out);

/**
 * Shuffle (natural) sum `a # b`.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum OrdlenStatus ordlen_ordinal_shuffle_sum(const struct OrdlenOrdinal *a,
                                             const struct OrdlenOrdinal *b,
                                             struct OrdlenOrdinal **out);

/**
 * Writes -1, 0 or 1 as `a` is less than, equal to or greater than `b`.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
enum OrdlenStatus ordlen_ordinal_compare(const struct OrdlenOrdinal *a,
                                         const struct OrdlenOrdinal *b,
                                         int32_t *out);

/**
 * Largest exponent, or -1 for zero.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum OrdlenStatus ordlen_ordinal_degree(const struct OrdlenOrdinal *a, int64_t *out);

/**
 * Sum of the Cantor coefficients.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum OrdlenStatus ordlen_ordinal_valence(const struct OrdlenOrdinal *a, uint64_t *out);

/**
 * Cantor coefficient of `w^exp`.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
enum OrdlenStatus ordlen_ordinal_coefficient(const struct OrdlenOrdinal *a,
                                             uint64_t exp,
                                             uint64_t *out);

/**
 * A ring from comma-separated variable names, e.g. `"x,y,z"`.
 *
 * # Safety
 * `vars` must be a nul-terminated string; `out` must be writable.
 */
enum OrdlenStatus ordlen_ring_new(const char *vars, struct OrdlenRing **out);

/**
 * # Safety
 * `r` must be null or a handle from this library, not yet freed.
 */
void ordlen_ring_free(struct OrdlenRing *r);

/**
 * The module `upper / lower`; a null `upper` means the whole ring.
 *
 * # Safety
 * `ring` must be a live handle, `lower` a nul-terminated string, `upper`
 * null or nul-terminated, and `out` writable.
 */
enum OrdlenStatus ordlen_module_new(const struct OrdlenRing *ring,
                                    const char *lower,
                                    const char *upper,
                                    struct OrdlenModule **out);

/**
 * # Safety
 * `m` must be null or a handle from this library, not yet freed.
 */
void ordlen_module_free(struct OrdlenModule *m);

/**
 * Ordinal length of the module.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable.
 */
enum OrdlenStatus ordlen_module_length(const struct OrdlenModule *m, struct OrdlenOrdinal **out);

/**
 * Fundamental cycle and length as JSON:
 * `{"cycle":[{"prime":["x","y"],"mult":5}],"length":{"terms":[...]},"pretty":"..."}`.
 *
 * # Safety
 * `m` must be a live handle; `out` must be writable. Free the result with
 * [`ordlen_string_free`].
 */
enum OrdlenStatus ordlen_module_cycle_json(const struct OrdlenModule *m, char **out);

/**
 * Whether the submodule generated by the monomials in `sub` is open.
 *
 * # Safety
 * `m` must be a live handle, `sub` nul-terminated, `out` writable.
 */
enum OrdlenStatus ordlen_module_is_open(const struct OrdlenModule *m, const char *sub, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORDLEN_H */
