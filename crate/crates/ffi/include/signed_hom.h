#ifndef SIGNED_HOM_H
#define SIGNED_HOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SignedHomStatus {
  SIGNED_HOM_STATUS_OK = 0,
  SIGNED_HOM_STATUS_NULL_ARGUMENT = 1,
  SIGNED_HOM_STATUS_PARSE = 2,
  SIGNED_HOM_STATUS_INVALID = 3,
  SIGNED_HOM_STATUS_NOT_IN_R = 4,
  SIGNED_HOM_STATUS_TOO_LARGE = 5,
  SIGNED_HOM_STATUS_PANIC = 6,
} SignedHomStatus;

/**
 * Opaque handle: shape, type, initial tableau and the distinguished transversal.
 */
typedef struct SignedHomContext SignedHomContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a context from `shape` ("3,2,1"), `kind` ("2|2,1") and an optional
 * initial tableau `t0` ("1,7/2/3/4/5/6", or null for the row reading).
 *
 * # Safety
 * String arguments are null or valid nul-terminated strings; `out` is writable.
 */
enum SignedHomStatus signed_hom_context_new(const char *shape,
                                            const char *kind,
                                            const char *t0,
                                            struct SignedHomContext **out);

/**
 * # Safety
 * `ctx` is null or a handle from [`signed_hom_context_new`] not yet freed.
 */
void signed_hom_context_free(struct SignedHomContext *ctx);

/**
 * Size of the transversal, i.e. the rank of the signed permutation module.
 *
 * # Safety
 * `ctx` is a live handle; `out` is writable.
 */
enum SignedHomStatus signed_hom_gamma_len(const struct SignedHomContext *ctx, size_t *out);

/**
 * Number of standard tableaux of the shape.
 *
 * # Safety
 * `ctx` is a live handle; `out` is writable.
 */
enum SignedHomStatus signed_hom_standard_count(const struct SignedHomContext *ctx, size_t *out);

/**
 * Number of semistandard tableaux of the type.
 *
 * # Safety
 * `ctx` is a live handle; `out` is writable.
 */
enum SignedHomStatus signed_hom_sstd_count(const struct SignedHomContext *ctx, size_t *out);

/**
 * Matrix of the homomorphism for `rep` (index into the transversal, image
 * list or cycles) as JSON. Free the result with [`signed_hom_string_free`].
 *
 * # Safety
 * `ctx` is a live handle; `rep` is a valid string; `out` is writable.
 */
enum SignedHomStatus signed_hom_theta_json(const struct SignedHomContext *ctx,
                                           const char *rep,
                                           char **out);

/**
 * Rank of the stacked semistandard matrices over `F_p`, or over `Q` when `p = 0`.
 *
 * # Safety
 * `ctx` is a live handle; `out` is writable.
 */
enum SignedHomStatus signed_hom_sstd_rank(const struct SignedHomContext *ctx,
                                          uint64_t p,
                                          size_t *out);

/**
 * Dimension of the Hom space over `F_p`, or over `Q` when `p = 0`.
 *
 * # Safety
 * `ctx` is a live handle; `out` is writable.
 */
enum SignedHomStatus signed_hom_hom_dim(const struct SignedHomContext *ctx,
                                        uint64_t p,
                                        size_t *out);

/**
 * # Safety
 * `s` is null or a string returned by this library, not yet freed.
 */
void signed_hom_string_free(char *s);

/**
 * Message for the last failed call on this thread; empty after a success.
 * Valid until the next call into the library on the same thread.
 */
const char *signed_hom_last_error(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SIGNED_HOM_H */
