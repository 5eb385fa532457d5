/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef SEQSPACE_H
#define SEQSPACE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SeqspaceBackend {
  SEQSPACE_BACKEND_EXACT = 0,
  SEQSPACE_BACKEND_FLOAT = 1,
} SeqspaceBackend;

typedef enum SeqspaceStatus {
  SEQSPACE_STATUS_OK = 0,
  SEQSPACE_STATUS_NULL_POINTER = 1,
  /**
   * Unparseable literal, unknown name, bad config, backend mismatch.
   */
  SEQSPACE_STATUS_INVALID_ARGUMENT = 2,
  /**
   * Parameters outside the operator's domain: `r + s = 0`, `r = 0` for
   * inverses, non-increasing lambda, singular diagonal, gamma pole.
   */
  SEQSPACE_STATUS_DOMAIN = 3,
  /**
   * Truncation order or index beyond what is available.
   */
  SEQSPACE_STATUS_OUT_OF_RANGE = 4,
  /**
   * A verification ran and found a disagreement.
   */
  SEQSPACE_STATUS_FAILED = 5,
  SEQSPACE_STATUS_PANIC = 6,
} SeqspaceStatus;

typedef enum SeqspaceVerdict {
  SEQSPACE_VERDICT_CONSISTENT = 0,
  SEQSPACE_VERDICT_INCONSISTENT = 1,
  SEQSPACE_VERDICT_INCONCLUSIVE = 2,
} SeqspaceVerdict;

/**
 * Opaque operator handle.
 */
typedef struct SeqspaceOperator SeqspaceOperator;

/**
 * Opaque sequence window handle.
 */
typedef struct SeqspaceWindow SeqspaceWindow;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *seqspace_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *seqspace_version(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void seqspace_string_free(char *s);

/**
 * Builds an operator from scalar literals (`"1/2"`, `"-1"`; decimals are
 * accepted by the float backend only) and a lambda preset name
 * (`cesaro`, `squares`, `powers2`).
 *
 * # Safety
 * String arguments must be NUL-terminated; `out` must be writable.
 */
enum SeqspaceStatus seqspace_operator_new(const char *alpha,
                                          const char *r,
                                          const char *s,
                                          const char *lambda_preset,
                                          enum SeqspaceBackend backend,
                                          struct SeqspaceOperator **out);

/**
 * Builds an operator from a JSON config record with the same fields as
 * the CLI's `--config` file. Missing fields take the CLI defaults.
 *
 * # Safety
 * `json` must be NUL-terminated; `out` must be writable.
 */
enum SeqspaceStatus seqspace_operator_from_json(const char *json, struct SeqspaceOperator **out);

/**
 * # Safety
 * `op` must be a live operator handle.
 */
enum SeqspaceBackend seqspace_operator_backend(const struct SeqspaceOperator *op);

/**
 * # Safety
 * `op` must be NULL or a handle from this library, not yet freed.
 */
void seqspace_operator_free(struct SeqspaceOperator *op);

/**
 * Entry `(row, col)` of a named matrix (`delta`, `delta-inv`, `binomial`,
 * `binomial-inv`, `lambda`, `lambda-inv`, `composed`, `composed-inv`)
 * formatted as text: `p/q` for exact operators, 17 significant digits for
 * float ones.
 *
 * # Safety
 * `op` must be live, `matrix` NUL-terminated, `out` writable.
 */
enum SeqspaceStatus seqspace_entry_string(const struct SeqspaceOperator *op,
                                          const char *matrix,
                                          size_t row,
                                          size_t col,
                                          char **out);

/**
 * Same as [`seqspace_entry_string`] but converted to `double`.
 *
 * # Safety
 * `op` must be live, `matrix` NUL-terminated, `out` writable.
 */
enum SeqspaceStatus seqspace_entry_f64(const struct SeqspaceOperator *op,
                                       const char *matrix,
                                       size_t row,
                                       size_t col,
                                       double *out);

/**
 * Parses a window from text: one scalar per line, blank lines and `#`
 * comments skipped.
 *
 * # Safety
 * `text` must be NUL-terminated; `out` writable.
 */
enum SeqspaceStatus seqspace_window_parse(const char *text,
                                          enum SeqspaceBackend backend,
                                          struct SeqspaceWindow **out);

/**
 * Builds a window from `len` doubles. Under the exact backend each value
 * is converted to the rational it represents exactly.
 *
 * # Safety
 * `values` must point to `len` readable doubles (or be NULL with
 * `len == 0`); `out` writable.
 */
enum SeqspaceStatus seqspace_window_from_f64(const double *values,
                                             size_t len,
                                             enum SeqspaceBackend backend,
                                             struct SeqspaceWindow **out);

/**
 * # Safety
 * `w` must be live; `out` writable.
 */
enum SeqspaceStatus seqspace_window_len(const struct SeqspaceWindow *w, size_t *out);

/**
 * # Safety
 * `w` must be live; `out` writable.
 */
enum SeqspaceStatus seqspace_window_get_f64(const struct SeqspaceWindow *w,
                                            size_t index,
                                            double *out);

/**
 * The window as text, one value per line.
 *
 * # Safety
 * `w` must be live; `out` writable.
 */
enum SeqspaceStatus seqspace_window_to_text(const struct SeqspaceWindow *w, char **out);

/**
 * # Safety
 * `w` must be NULL or a handle from this library, not yet freed.
 */
void seqspace_window_free(struct SeqspaceWindow *w);

/**
 * `y = A x` on the window.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum SeqspaceStatus seqspace_apply(const struct SeqspaceOperator *op,
                                   const struct SeqspaceWindow *x,
                                   struct SeqspaceWindow **out);

/**
 * `x = A^{-1} y` on the window.
 *
 * # Safety
 * Handles must be live; `out` writable.
 */
enum SeqspaceStatus seqspace_inverse_apply(const struct SeqspaceOperator *op,
                                           const struct SeqspaceWindow *y,
                                           struct SeqspaceWindow **out);

/**
 * Basis sequence `theta^(k)` over `len` terms.
 *
 * # Safety
 * `op` must be live; `out` writable.
 */
enum SeqspaceStatus seqspace_theta(const struct SeqspaceOperator *op,
                                   size_t k,
                                   size_t len,
                                   struct SeqspaceWindow **out);

/**
 * The sequence `eta` with `A eta = (1, 1, ...)`, over `len` terms.
 *
 * # Safety
 * `op` must be live; `out` writable.
 */
enum SeqspaceStatus seqspace_eta(const struct SeqspaceOperator *op,
                                 size_t len,
                                 struct SeqspaceWindow **out);

/**
 * Membership diagnostics for `x` in the space named `space` (`c0`, `c`,
 * `linf`, `lp`). `p` is read only for `lp`. `bound` may be NULL. Either
 * output pointer may be NULL when not wanted.
 *
 * # Safety
 * Handles must be live; strings NUL-terminated or NULL where allowed.
 */
enum SeqspaceStatus seqspace_membership_json(const struct SeqspaceOperator *op,
                                             const struct SeqspaceWindow *x,
                                             const char *space,
                                             double p,
                                             const char *bound,
                                             char **out_json,
                                             enum SeqspaceVerdict *out_verdict);

/**
 * Dual-condition report for the multiplier window `d`. `kind` is
 * `alpha`, `beta` or `gamma`; `source` is `c0`, `c` or `linf`; `order`
 * must not exceed the window length (15 when condition 4.1 applies).
 *
 * # Safety
 * Handles must be live; strings NUL-terminated; `out_json` writable.
 */
enum SeqspaceStatus seqspace_dual_json(const struct SeqspaceOperator *op,
                                       const struct SeqspaceWindow *d,
                                       const char *kind,
                                       const char *source,
                                       size_t order,
                                       char **out_json);

/**
 * Runs the inverse-identity and oracle suites at `order`, plus the
 * discrepancy report for `variant` (`lemma3`, `theorem4`, `eq21`, `theta`)
 * when it is not NULL. Returns `SEQSPACE_STATUS_FAILED` when anything
 * disagrees; the JSON report is written in both cases.
 *
 * # Safety
 * `op` must be live; `variant` NULL or NUL-terminated; `out_json` NULL or
 * writable.
 */
enum SeqspaceStatus seqspace_verify(const struct SeqspaceOperator *op,
                                    size_t order,
                                    const char *variant,
                                    char **out_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEQSPACE_H */
