#ifndef TFMZV_H
#define TFMZV_H

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum TfmzvStatus {
  TFMZV_STATUS_OK = 0,
  TFMZV_STATUS_NULL_POINTER = 1,
  TFMZV_STATUS_INVALID_ARGUMENT = 2,
  TFMZV_STATUS_NOT_PRIME = 3,
  TFMZV_STATUS_OUT_OF_RANGE = 4,
  TFMZV_STATUS_UNKNOWN_THEOREM = 5,
  TFMZV_STATUS_BUFFER_TOO_SMALL = 6,
  TFMZV_STATUS_VERIFICATION_FAILED = 7,
  TFMZV_STATUS_PANIC = 8,
} TfmzvStatus;

/**
 * Evaluation context for one prime, with its own memo table.
 */
typedef struct TfmzvContext TfmzvContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread. Valid until the next call.
 */
const char *tfmzv_last_error(void);

/**
 * Creates a context for the odd prime `p`.
 *
 * # Safety
 * `out` must be valid for writes.
 */
enum TfmzvStatus tfmzv_context_new(uint64_t p, struct TfmzvContext **out);

/**
 * # Safety
 * `ctx` must come from [`tfmzv_context_new`] and not be used afterwards.
 */
void tfmzv_context_free(struct TfmzvContext *ctx);

/**
 * The prime of `ctx`, or 0 for a null handle.
 *
 * # Safety
 * `ctx` must be null or a live handle.
 */
uint64_t tfmzv_context_prime(const struct TfmzvContext *ctx);

/**
 * Strict (`star == false`) or star value of the index `parts[0..len]`.
 *
 * # Safety
 * `ctx` live, `parts` readable for `len` values, `out` writable.
 */
enum TfmzvStatus tfmzv_eval(const struct TfmzvContext *ctx,
                            const uint32_t *parts,
                            size_t len,
                            bool star,
                            uint64_t *out);

/**
 * Coefficients of `zeta_p^t(k)` in increasing degree, trailing zeros
 * trimmed. There are at most `max(len, 1)`; `*n_coeffs` receives the count
 * even when `capacity` is too small.
 *
 * # Safety
 * `ctx` live, `parts` readable for `len` values, `coeffs` writable for
 * `capacity` values, `n_coeffs` writable.
 */
enum TfmzvStatus tfmzv_eval_t(const struct TfmzvContext *ctx,
                              const uint32_t *parts,
                              size_t len,
                              uint64_t *coeffs,
                              size_t capacity,
                              size_t *n_coeffs);

/**
 * `B_n mod p` for `n <= p - 2`.
 *
 * # Safety
 * `ctx` live, `out` writable.
 */
enum TfmzvStatus tfmzv_bernoulli(const struct TfmzvContext *ctx, uint64_t n, uint64_t *out);

/**
 * `B_{p-k} / k mod p` for `k >= 2`, `p >= k + 2`.
 *
 * # Safety
 * `ctx` live, `out` writable.
 */
enum TfmzvStatus tfmzv_z_a(const struct TfmzvContext *ctx, uint32_t k, uint64_t *out);

/**
 * Runs the theorem ids in the comma-separated `ids` (or `all`) with weights
 * capped at `max_weight` and primes in `[prime_min, prime_max]`. The JSON
 * report is written to `*report` even when checks fail, in which case
 * `VerificationFailed` is returned. Free it with [`tfmzv_string_free`].
 *
 * # Safety
 * `ids` must be a NUL-terminated string, `report` writable.
 */
enum TfmzvStatus tfmzv_verify_json(const char *ids,
                                   uint32_t max_weight,
                                   uint64_t prime_min,
                                   uint64_t prime_max,
                                   size_t jobs,
                                   char **report);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void tfmzv_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TFMZV_H */
