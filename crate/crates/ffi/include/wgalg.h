#ifndef WGALG_H
#define WGALG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes shared by every function.
 */
typedef enum {
  WG_STATUS_OK = 0,
  WG_STATUS_NULL_POINTER = 1,
  WG_STATUS_INVALID_ARGUMENT = 2,
  /**
   * The quotient did not stabilize within the length bound.
   */
  WG_STATUS_NOT_STABILIZED = 3,
  /**
   * No construction exists for the requested type.
   */
  WG_STATUS_UNSUPPORTED = 4,
  /**
   * A check ran to completion and failed.
   */
  WG_STATUS_VERIFICATION_FAILED = 5,
  WG_STATUS_INTERNAL = 6,
} WgStatus;

/**
 * Opaque handle to a computed quotient kΩ.
 */
typedef struct WgAlgebra WgAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *wg_last_error(void);

/**
 * Computes kΩ for `type_tag` ("A3", "B3", "A4", "I2", "A1xN", ...).
 * `param` is m for I2 and n for A1xN, 0 otherwise; `max_length` 0 selects
 * the default bound.
 *
 * # Safety
 * `type_tag` must be a NUL-terminated string and `out` a valid pointer.
 */
WgStatus wg_algebra_new(const char *type_tag, uint32_t param, uint32_t max_length, WgAlgebra **out);

/**
 * Releases an algebra. NULL is ignored.
 *
 * # Safety
 * `alg` must come from [`wg_algebra_new`] and not be used afterwards.
 */
void wg_algebra_free(WgAlgebra *alg);

/**
 * dim kΩ.
 *
 * # Safety
 * `alg` must be a live handle and `out` a valid pointer.
 */
WgStatus wg_algebra_dim(const WgAlgebra *alg, uintptr_t *out);

/**
 * dim rad(kΩ) and dim kΩ/rad(kΩ).
 *
 * # Safety
 * `alg` must be a live handle; the out pointers must be valid.
 */
WgStatus wg_algebra_radical(const WgAlgebra *alg,
                            uintptr_t *dim_radical,
                            uintptr_t *dim_semisimple);

/**
 * Builds the idempotent family and checks Z1–Z4. `pass` receives the
 * verdict; `report_json`, if not NULL, receives the JSON report. Returns
 * `Ok` whenever the checks ran, even when they failed.
 *
 * # Safety
 * `alg` must be a live handle and `pass` valid; `report_json` may be NULL.
 */
WgStatus wg_verify_conjecture(const WgAlgebra *alg, bool *pass, char **report_json);

/**
 * Validates a W-graph given as JSON and checks that its Ω-module satisfies
 * every relator. Invalid graphs return `VerificationFailed`.
 *
 * # Safety
 * `type_tag` and `graph_json` must be NUL-terminated strings.
 */
WgStatus wg_wgraph_verify(const char *type_tag, uint32_t param, const char *graph_json);

/**
 * DOT text of the compatibility graph.
 *
 * # Safety
 * `type_tag` must be a NUL-terminated string and `out` a valid pointer.
 */
WgStatus wg_compat_graph_dot(const char *type_tag, uint32_t param, char **out);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void wg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WGALG_H */
