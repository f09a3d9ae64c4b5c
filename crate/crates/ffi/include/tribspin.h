#ifndef TRIBSPIN_H
#define TRIBSPIN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every exported function.
 */
typedef enum TsStatus {
  TS_STATUS_OK = 0,
  /**
   * A required pointer argument was NULL.
   */
  TS_STATUS_NULL_POINTER = 1,
  /**
   * Malformed text input (not UTF-8, bad scalar, wrong arity).
   */
  TS_STATUS_INVALID_ARGUMENT = 2,
  TS_STATUS_UNKNOWN_PRESET = 3,
  /**
   * `r + s + t - 1 = 0`; the closed-form sum is undefined.
   */
  TS_STATUS_DEGENERATE_DELTA = 4,
  /**
   * Repeated characteristic roots; Binet is undefined.
   */
  TS_STATUS_DEGENERATE_ROOTS = 5,
  TS_STATUS_UNSUPPORTED_PARAMS = 6,
  /**
   * At least one identity report has status Fail.
   */
  TS_STATUS_VERIFICATION_FAILED = 7,
  /**
   * A Rust panic was caught at the boundary.
   */
  TS_STATUS_INTERNAL = 99,
} TsStatus;

/**
 * Opaque parameter set `(r, s, t; V0, V1, V2)`.
 */
typedef struct TsParams TsParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Creates a handle for a named preset (`tribonacci`, `third_order_jacobsthal`).
 *
 * # Safety
 * `name` must be a valid NUL-terminated string; `out` must be writable.
 */
enum TsStatus ts_params_from_preset(const char *name, struct TsParams **out);

/**
 * Creates a handle from `"r,s,t,V0,V1,V2"`; entries may be fractions like `3/2`.
 *
 * # Safety
 * `csv` must be a valid NUL-terminated string; `out` must be writable.
 */
enum TsStatus ts_params_from_csv(const char *csv, struct TsParams **out);

/**
 * Creates a handle from integer coefficients and seeds.
 *
 * # Safety
 * `out` must be writable.
 */
enum TsStatus ts_params_from_ints(int64_t r,
                                  int64_t s,
                                  int64_t t,
                                  int64_t v0,
                                  int64_t v1,
                                  int64_t v2,
                                  struct TsParams **out);

/**
 * Releases a handle. NULL is ignored.
 *
 * # Safety
 * `p` must come from one of the `ts_params_from_*` constructors and not be
 * freed twice.
 */
void ts_params_free(struct TsParams *p);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void ts_string_free(char *s);

/**
 * Message for the last non-OK status on this thread, or NULL. The pointer is
 * owned by the library and valid until the next failing call on this thread.
 */
const char *ts_last_error(void);

/**
 * Writes `V_n` as an exact decimal rational string (`"7"`, `"-3/2"`).
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum TsStatus ts_term(const struct TsParams *p, uint64_t n, char **out);

/**
 * Writes `Q_{v,n}` as JSON `{"q0":"..","q1":"..","q2":"..","q3":".."}`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum TsStatus ts_quaternion_json(const struct TsParams *p, uint64_t n, char **out);

/**
 * Writes `A_{v,n}` as JSON `{"c1":{"re":"..","im":".."},"c2":{..}}`.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum TsStatus ts_spinor_json(const struct TsParams *p, uint64_t n, char **out);

/**
 * Floating-point `V_n` from the Binet formula.
 *
 * # Safety
 * `p` must be a live handle; `re` and `im` must be writable.
 */
enum TsStatus ts_binet_number(const struct TsParams *p, uint64_t n, double *re, double *im);

/**
 * Runs the full identity suite and writes the JSON report array. Returns
 * [`TsStatus::VerificationFailed`] (with the report still written) when any
 * identity fails.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum TsStatus ts_suite_json(const struct TsParams *p, uint64_t nmax, uint64_t seed, char **out);

/**
 * Runs one identity by index into the suite order (0..=10) and writes its
 * JSON report.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum TsStatus ts_verify_json(const struct TsParams *p,
                             uint32_t identity,
                             uint64_t nmax,
                             uint64_t seed,
                             char **out);

/**
 * Number of identities accepted by [`ts_verify_json`].
 */
uint32_t ts_identity_count(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIBSPIN_H */
