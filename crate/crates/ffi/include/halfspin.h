#ifndef HALFSPIN_H
#define HALFSPIN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HsStatus {
  HS_STATUS_OK = 0,
  HS_STATUS_INVALID_RANK = 1,
  HS_STATUS_OUT_OF_RANGE = 2,
  HS_STATUS_PARSE = 3,
  HS_STATUS_UNKNOWN_OPERATOR = 4,
  HS_STATUS_NULL_POINTER = 5,
  HS_STATUS_UTF8 = 6,
  HS_STATUS_INVARIANT_VIOLATION = 7,
  HS_STATUS_VERIFICATION_FAILED = 8,
  HS_STATUS_PANIC = 9,
} HsStatus;

typedef struct HsClifford HsClifford;

typedef struct HsContext HsContext;

typedef struct HsFockVector HsFockVector;

typedef struct HsSpinVector HsSpinVector;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static nul-terminated string.
 */
const char *hs_version(void);

/**
 * Message of the last failed call on this thread; empty after a success.
 * Valid until the next call on the same thread.
 */
const char *hs_last_error_message(void);

/**
 * # Safety
 * `s` must come from this library or be null.
 */
void hs_string_free(char *s);

/**
 * # Safety
 * `out` must be a valid pointer.
 */
enum HsStatus hs_context_new(size_t n, struct HsContext **out);

/**
 * # Safety
 * `ctx` must come from [`hs_context_new`] or be null.
 */
void hs_context_free(struct HsContext *ctx);

/**
 * Rank of the context, or 0 for a null handle.
 *
 * # Safety
 * `ctx` must be a live handle or null.
 */
size_t hs_context_rank(const struct HsContext *ctx);

/**
 * Parses a spin vector such as `"2 * (plus,3,1) - (minus,-)"`.
 *
 * # Safety
 * Pointers must be valid; `text` nul-terminated.
 */
enum HsStatus hs_spin_vector_parse(const struct HsContext *ctx,
                                   const char *text_,
                                   struct HsSpinVector **out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum HsStatus hs_spin_vector_to_string(const struct HsSpinVector *v, char **out);

/**
 * # Safety
 * `v` must come from this library or be null.
 */
void hs_spin_vector_free(struct HsSpinVector *v);

/**
 * Applies an operator word such as `"F_2 F_4"`, rightmost first.
 *
 * # Safety
 * Pointers must be valid; `word` nul-terminated.
 */
enum HsStatus hs_spin_apply_word(const struct HsContext *ctx,
                                 const char *word,
                                 const struct HsSpinVector *v,
                                 struct HsSpinVector **out);

/**
 * Maps a spin vector to the Fock space.
 *
 * # Safety
 * Pointers must be valid.
 */
enum HsStatus hs_phi(const struct HsContext *ctx,
                     const struct HsSpinVector *v,
                     struct HsFockVector **out);

/**
 * Parses a Fock vector such as `"{1,3} - 1/2 * {}"`.
 *
 * # Safety
 * Pointers must be valid; `text` nul-terminated.
 */
enum HsStatus hs_fock_vector_parse(const struct HsContext *ctx,
                                   const char *text_,
                                   struct HsFockVector **out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum HsStatus hs_fock_vector_to_string(const struct HsFockVector *v, char **out);

/**
 * # Safety
 * `v` must come from this library or be null.
 */
void hs_fock_vector_free(struct HsFockVector *v);

/**
 * Parses and normal-orders a Clifford expression such as `"a1*b1 + b1*a1"`.
 *
 * # Safety
 * Pointers must be valid; `text` nul-terminated.
 */
enum HsStatus hs_clifford_parse(const struct HsContext *ctx,
                                const char *text_,
                                struct HsClifford **out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum HsStatus hs_clifford_to_string(const struct HsClifford *x, char **out);

/**
 * `x · y`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum HsStatus hs_clifford_mul(const struct HsClifford *x,
                              const struct HsClifford *y,
                              struct HsClifford **out);

/**
 * Applies a Clifford element to a Fock vector.
 *
 * # Safety
 * Pointers must be valid.
 */
enum HsStatus hs_clifford_apply(const struct HsContext *ctx,
                                const struct HsClifford *x,
                                const struct HsFockVector *v,
                                struct HsFockVector **out);

/**
 * # Safety
 * `x` must come from this library or be null.
 */
void hs_clifford_free(struct HsClifford *x);

/**
 * Runs a verification suite (`"chevalley"`, `"weights"`, ...) at rank `n`
 * and writes its JSON report. Returns `VERIFICATION_FAILED` (with the
 * report still written) when an identity fails.
 *
 * # Safety
 * Pointers must be valid; `suite` nul-terminated.
 */
enum HsStatus hs_verify(const char *suite, size_t n, char **out_json);

/**
 * Like [`hs_verify`] on diagrams with at most `max_boxes` boxes, realised in
 * rank `n` (unbounded mode).
 *
 * # Safety
 * Pointers must be valid; `suite` nul-terminated.
 */
enum HsStatus hs_verify_unbounded(const char *suite, uint32_t max_boxes, size_t n, char **out_json);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* HALFSPIN_H */
