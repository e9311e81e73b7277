#ifndef TROPJAC_H
#define TROPJAC_H

/* Generated by cbindgen from the trop-jac-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible call.
typedef enum TropJacStatus {
  // Success; out-pointers have been written.
  TROP_JAC_STATUS_OK = 0,
  // A required pointer argument was NULL.
  TROP_JAC_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  TROP_JAC_STATUS_INVALID_UTF8 = 2,
  // The input failed to parse or validate (malformed JSON, bad rational,
  // disconnected graph, ...).
  TROP_JAC_STATUS_PARSE_ERROR = 3,
  // Arguments were structurally valid but out of range for the handle
  // (wrong dimension, unsupported genus, ...).
  TROP_JAC_STATUS_INVALID_ARGUMENT = 4,
  // The computation ran, the report was written, but a verification
  // inside it failed.
  TROP_JAC_STATUS_VERIFICATION_FAILED = 5,
} TropJacStatus;

// Opaque handle: a validated, leaf-pruned metric graph together with the
// circuit basis and period matrix chosen at construction time.
typedef struct TropJacGraph TropJacGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a graph document, validates it (pruning leaves), and builds the
// circuit basis and period matrix for the given spanning-tree seed
// (0 selects the deterministic minimal tree).
//
// # Safety
// `json` must be a NUL-terminated string and `out` a valid pointer; the
// returned handle must be released with [`tropjac_graph_free`].
enum TropJacStatus tropjac_graph_from_json(const char *json,
                                           uint64_t seed,
                                           struct TropJacGraph **out);

// Releases a graph handle. NULL is a no-op.
//
// # Safety
// `graph` must be NULL or a handle obtained from
// [`tropjac_graph_from_json`] that has not been freed yet.
void tropjac_graph_free(struct TropJacGraph *graph);

// Writes the genus (first Betti number) of the graph.
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer.
enum TropJacStatus tropjac_graph_genus(const struct TropJacGraph *graph, size_t *out);

// Serializes the validated (leaf-pruned) graph back to its JSON document
// form.
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer; the string is
// released with [`tropjac_string_free`].
enum TropJacStatus tropjac_graph_json(const struct TropJacGraph *graph, char **out);

// Writes the period-matrix report (the same versioned JSON envelope the
// CLI `period` command prints).
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer; the string is
// released with [`tropjac_string_free`].
enum TropJacStatus tropjac_period_json(const struct TropJacGraph *graph, char **out);

// Runs the full cycle-class verification at the graph's genus and writes
// the report. Returns [`TropJacStatus::VerificationFailed`] — with the
// report still written — if any check inside it fails.
//
// # Safety
// `graph` must be a live handle and `out` a valid pointer; the string is
// released with [`tropjac_string_free`].
enum TropJacStatus tropjac_verify_poincare_json(const struct TropJacGraph *graph, char **out);

// Evaluates the tropical Riemann theta function of the principal
// polarization at the lift `x`, given as comma-separated rationals
// (for example `"1,0"` or `"1/2,-2/5"`), and writes the report.
//
// # Safety
// `graph` must be a live handle, `x` a NUL-terminated string, and `out` a
// valid pointer; the string is released with [`tropjac_string_free`].
enum TropJacStatus tropjac_theta_eval_json(const struct TropJacGraph *graph,
                                           const char *x,
                                           char **out);

// Releases a string returned by this library. NULL is a no-op.
//
// # Safety
// `s` must be NULL or a string obtained from this library that has not
// been freed yet.
void tropjac_string_free(char *s);

// Message describing the most recent failure on the calling thread, or an
// empty string if none occurred. The pointer stays valid until the next
// failing call on the same thread; do not free it.
const char *tropjac_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TROPJAC_H */
