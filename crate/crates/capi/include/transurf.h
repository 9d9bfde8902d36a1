#ifndef TRANSURF_H
#define TRANSURF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes mirrored into the generated header.
 */
#define TS_OK 0

#define TS_VERIFY_MISMATCH 1

#define TS_INVALID_INPUT 2

#define TS_PANIC 3

/**
 * Opaque handle to a validated translation-surface patch.
 */
typedef struct TsSurface TsSurface;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * # Safety
 * `p` must be null or a pointer previously returned by a `ts_*` function and
 * not yet freed.
 */
void ts_string_free(char *p);

/**
 * Build a surface from two curve JSON documents (the schema of the
 * `fixtures` command). Returns null and sets `status_out` on failure.
 *
 * # Safety
 * `alpha_json` and `beta_json` must be valid NUL-terminated UTF-8 strings;
 * `status_out` may be null.
 */
struct TsSurface *ts_surface_new(const char *alpha_json, const char *beta_json, int *status_out);

/**
 * # Safety
 * `s` must be null or a handle from [`ts_surface_new`] not yet freed.
 */
void ts_surface_free(struct TsSurface *s);

/**
 * Analyze the surface over an `nu` × `nv` grid; returns the JSON report
 * (K statistics, cylindricity, conservation spreads).
 *
 * # Safety
 * `s` must be a live handle from [`ts_surface_new`]; `status_out` may be null.
 */
char *ts_surface_analyze(const struct TsSurface *s,
                         unsigned int nu,
                         unsigned int nv,
                         int *status_out);

/**
 * Replay an elimination case (`"general"` or `"planar"`); returns the JSON
 * summary. Status is `TS_VERIFY_MISMATCH` when a stated value fails.
 *
 * # Safety
 * `case_name` must be a valid NUL-terminated string; `status_out` may be null.
 */
char *ts_verify_proof(const char *case_name, int *status_out);

/**
 * Full coefficient ledger of a case as CSV (name, symbolic, paper_value,
 * scale, status).
 *
 * # Safety
 * `case_name` must be a valid NUL-terminated string; `status_out` may be null.
 */
char *ts_proof_ledger_csv(const char *case_name, int *status_out);

/**
 * Realizability residuals for a candidate (phi, A, B, K) over a 16×16 grid
 * on the unit square; returns the JSON residual report.
 *
 * # Safety
 * Expression pointers must be valid NUL-terminated strings; `status_out` may
 * be null.
 */
char *ts_realize(const char *phi,
                 const char *a,
                 const char *b,
                 double k,
                 int eps1,
                 int eps2,
                 int *status_out);

/**
 * Emit a named fixture (`line`, `circle`, `helix`, `fourier`,
 * `scherk-slice`) with parameters given as a JSON object, e.g. `{"r": 1.0}`.
 *
 * # Safety
 * `name` must be a valid NUL-terminated string; `params_json` may be null.
 */
char *ts_fixture(const char *name, const char *params_json, int *status_out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRANSURF_H */
