#ifndef WHA_H
#define WHA_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. The first four match the `wha` CLI exit codes.
typedef enum WhaStatus {
  WHA_STATUS_OK = 0,
  // A check failed or the algebra lacks a required property (e.g. not connected).
  WHA_STATUS_VERIFICATION_FAILED = 1,
  // Malformed input, I/O failure or invalid parameters.
  WHA_STATUS_INPUT_ERROR = 2,
  // Two independent computations of the same invariant disagreed.
  WHA_STATUS_EQUIVALENCE_VIOLATED = 3,
  WHA_STATUS_NULL_POINTER = 4,
  WHA_STATUS_INVALID_UTF8 = 5,
  WHA_STATUS_PANIC = 6,
} WhaStatus;

// Opaque handle to a validated weak Hopf algebra.
typedef struct WhaAlgebra WhaAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses and validates an algebra from its JSON file format.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be writable.
enum WhaStatus wha_algebra_from_json(const char *json, struct WhaAlgebra **out);

// Loads and validates an algebra file.
//
// # Safety
// `path` must be a NUL-terminated string; `out` must be writable.
enum WhaStatus wha_algebra_load(const char *path, struct WhaAlgebra **out);

// Builds a named example such as `"pair(2)"`, `"grp(S3)"`, `"gpd(2,Z2)"`,
// `"fun(S3)"`, `"dual(pair(2))"` or `"ds(grp(Z2),pair(2))"`.
//
// # Safety
// `spec` must be a NUL-terminated string; `out` must be writable.
enum WhaStatus wha_algebra_build(const char *spec, struct WhaAlgebra **out);

// New handle holding the dual algebra.
//
// # Safety
// `a` must be a live handle; `out` must be writable.
enum WhaStatus wha_algebra_dual(const struct WhaAlgebra *a, struct WhaAlgebra **out);

// New handle holding the direct sum `a ⊕ b`.
//
// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum WhaStatus wha_algebra_direct_sum(const struct WhaAlgebra *a,
                                      const struct WhaAlgebra *b,
                                      struct WhaAlgebra **out);

// Releases a handle. NULL is ignored.
//
// # Safety
// `a` must be NULL or a handle not yet freed.
void wha_algebra_free(struct WhaAlgebra *a);

// Dimension of the algebra, or 0 for a NULL handle.
//
// # Safety
// `a` must be NULL or a live handle.
size_t wha_algebra_dim(const struct WhaAlgebra *a);

// Serializes the algebra in the file format read by `wha_algebra_from_json`.
//
// # Safety
// `a` must be a live handle; `out` must be writable.
enum WhaStatus wha_algebra_to_json(const struct WhaAlgebra *a, char **out);

// Runs every verifier and writes the JSON report to `out`.
// Returns `WHA_STATUS_VERIFICATION_FAILED` (with the report written) if any check fails.
//
// # Safety
// `a` must be a live handle; `out` must be writable.
enum WhaStatus wha_check_all(const struct WhaAlgebra *a, uint64_t seed, char **out);

// Dimension invariants (d, dimA, FPdimA, mu, Lambda, ...) as JSON.
// Requires a connected algebra.
//
// # Safety
// `a` must be a live handle; `out` must be writable.
enum WhaStatus wha_report_dims(const struct WhaAlgebra *a, uint64_t seed, char **out);

// Fusion ring of the representation category as JSON. Requires a connected algebra.
//
// # Safety
// `a` must be a live handle; `out` must be writable.
enum WhaStatus wha_report_fusion(const struct WhaAlgebra *a, uint64_t seed, char **out);

// Message for the last failed call on this thread; empty after a success.
// Valid until the next library call on the same thread. Do not free.
const char *wha_last_error(void);

// Releases a string returned by the library. NULL is ignored.
//
// # Safety
// `s` must be NULL or a string from this library not yet freed.
void wha_string_free(char *s);

// Library version, static storage.
const char *wha_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* WHA_H */
