#ifndef INTERVAL_XAG_H
#define INTERVAL_XAG_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Output encoding for [`ix_formula_render`].
 */
typedef enum IxFormat {
  IX_FORMAT_EXPR = 0,
  IX_FORMAT_BRISTOL = 1,
  IX_FORMAT_JSON = 2,
} IxFormat;

/**
 * Result code of every fallible call.
 */
typedef enum IxStatus {
  IX_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  IX_STATUS_NULL_POINTER = 1,
  /**
   * `n` is outside 1..=62 or the bounds violate `a < b <= 2^n`.
   */
  IX_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The width exceeds the verification limit.
   */
  IX_STATUS_WIDTH_LIMIT = 3,
  /**
   * Internal failure, including a caught panic.
   */
  IX_STATUS_INTERNAL = 4,
} IxStatus;

/**
 * Opaque synthesized circuit.
 */
typedef struct IxFormula IxFormula;

/**
 * Outcome of [`ix_verify`].
 */
typedef struct IxReport {
  bool equivalent;
  bool has_counterexample;
  /**
   * Valid only when `has_counterexample` is set.
   */
  uint64_t counterexample;
  uint32_t actual;
  uint32_t predicted;
  uint32_t naive;
  uint32_t degree;
} IxReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Synthesizes `[a <= x < b]` over `n` inputs. Pass `b = 2^n` for `[a <= x]`.
 *
 * # Safety
 * `out` must be null or valid for a pointer write.
 */
enum IxStatus ix_synth(uint32_t n, uint64_t a, uint64_t b, struct IxFormula **out);

/**
 * Releases a handle from [`ix_synth`]. Null is ignored.
 *
 * # Safety
 * `f` must be null or a handle not yet freed.
 */
void ix_formula_free(struct IxFormula *f);

/**
 * Number of AND gates; 0 for a null handle.
 *
 * # Safety
 * `f` must be null or a live handle.
 */
uint32_t ix_formula_mult_cost(const struct IxFormula *f);

/**
 * Evaluates the circuit on `x`, where bit `n - 1` of `x` feeds `x1`.
 *
 * # Safety
 * `f` must be null or a live handle; `out` must be null or writable.
 */
enum IxStatus ix_formula_eval(const struct IxFormula *f, uint64_t x, bool *out);

/**
 * Renders the circuit as text. Free the result with [`ix_string_free`].
 *
 * # Safety
 * `f` must be null or a live handle; `out` must be null or writable.
 */
enum IxStatus ix_formula_render(const struct IxFormula *f, enum IxFormat format, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string from this library not yet freed.
 */
void ix_string_free(char *s);

/**
 * AND-gate count the construction achieves for the interval.
 *
 * # Safety
 * `out` must be null or writable.
 */
enum IxStatus ix_predicted_mc(uint32_t n, uint64_t a, uint64_t b, uint32_t *out);

/**
 * Checks the synthesized circuit against brute force. `max_n = 0` selects the
 * default limit of 16.
 *
 * # Safety
 * `out` must be null or writable.
 */
enum IxStatus ix_verify(uint32_t n, uint64_t a, uint64_t b, uint32_t max_n, struct IxReport *out);

/**
 * Message for the last failed call on this thread; empty after success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *ix_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INTERVAL_XAG_H */
