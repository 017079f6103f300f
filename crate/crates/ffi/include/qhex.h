#ifndef QHEX_H
#define QHEX_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum QhexRoute {
  QHEX_ROUTE_FAMILY = 0,
  QHEX_ROUTE_LGV = 1,
  QHEX_ROUTE_CLOSED = 2,
} QhexRoute;

// Result codes; the nonzero values 1 to 4 match the command-line exit codes.
typedef enum QhexStatus {
  QHEX_STATUS_OK = 0,
  QHEX_STATUS_VERIFY_FAILED = 1,
  QHEX_STATUS_INVALID_ARGUMENT = 2,
  QHEX_STATUS_DISAGREEMENT = 3,
  QHEX_STATUS_CAP_EXCEEDED = 4,
  QHEX_STATUS_NULL_POINTER = 5,
  QHEX_STATUS_PANIC = 6,
} QhexStatus;

// Opaque Laurent polynomial in `q` with rational coefficients.
typedef struct QhexPoly QhexPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// The pointer stays valid until the next qhex call on the same thread.
const char *qhex_last_error_message(void);

// Weighted sum over right/down paths from `(a, b)` to `(c, d)`.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum QhexStatus qhex_path_gf(int64_t a, int64_t b, int64_t c, int64_t d, struct QhexPoly **out);

// Tiling generating function of the region `(m, k, dents[0..len])` by the
// given route. `cap` bounds the family enumeration; 0 selects the default.
//
// # Safety
// `dents` must point to `len` readable values; `out` must be writable.
enum QhexStatus qhex_region_gf(uint32_t m,
                               uint32_t k,
                               const int64_t *dents,
                               uintptr_t len,
                               enum QhexRoute route,
                               uint64_t cap,
                               struct QhexPoly **out);

// Canonical JSON of `p`, to be released with `qhex_string_free`.
//
// # Safety
// `p` must be a live handle or null; `out` must be writable.
enum QhexStatus qhex_poly_to_json(const struct QhexPoly *p, char **out);

// Parse canonical JSON into a new handle.
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
enum QhexStatus qhex_poly_from_json(const char *json, struct QhexPoly **out);

// Writes whether `p` and `r` are equal to `out`.
//
// # Safety
// Both handles must be live; `out` must be writable.
enum QhexStatus qhex_poly_equal(const struct QhexPoly *p, const struct QhexPoly *r, bool *out);

// Number of nonzero terms of `p`, or 0 for a null handle.
//
// # Safety
// `p` must be a live handle or null.
uintptr_t qhex_poly_num_terms(const struct QhexPoly *p);

// # Safety
// `p` must come from this library and not be used afterwards; null is ignored.
void qhex_poly_free(struct QhexPoly *p);

// # Safety
// `s` must come from `qhex_poly_to_json`; null is ignored.
void qhex_string_free(char *s);

// Run one verification suite by name. Returns `VerifyFailed` if any case
// failed and `CapExceeded` if cases hit the enumeration cap.
//
// # Safety
// `suite` must be a nul-terminated string; the count pointers may be null.
enum QhexStatus qhex_verify(const char *suite,
                            uint32_t max_m,
                            uint32_t max_k,
                            uint64_t seed,
                            uint64_t *out_passed,
                            uint64_t *out_total);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QHEX_H */
