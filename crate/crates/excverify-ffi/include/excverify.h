#ifndef EXCVERIFY_H
#define EXCVERIFY_H

/* Generated by cbindgen from crates/excverify-ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum ExcStatus {
  EXC_STATUS_OK = 0,
  EXC_STATUS_NULL_POINTER = 1,
  EXC_STATUS_INVALID_UTF8 = 2,
  EXC_STATUS_INVALID_ARGUMENT = 3,
  EXC_STATUS_COMPUTATION_FAILED = 4,
  EXC_STATUS_PANIC = 5,
} ExcStatus;

/**
 * Run configuration and lazily built bases.
 */
typedef struct ExcContext ExcContext;

/**
 * Results of one suite run.
 */
typedef struct ExcReport ExcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. Valid until the
 * next failing call on the same thread.
 */
const char *exc_last_error(void);

/**
 * Create a context. `cache_dir` may be NULL; `jobs` of 0 means one thread.
 *
 * # Safety
 * `cache_dir` must be NULL or a valid NUL-terminated string; `out` must be writable.
 */
enum ExcStatus exc_context_new(uint64_t seed,
                               uintptr_t sample,
                               uintptr_t jobs,
                               const char *cache_dir,
                               struct ExcContext **out);

/**
 * # Safety
 * `ctx` must be NULL or a handle from [`exc_context_new`] not yet freed.
 */
void exc_context_free(struct ExcContext *ctx);

/**
 * Dimension of the compact basis of `algebra` ("g2", "f4", "e6", "e7", "e8").
 *
 * # Safety
 * `ctx` must be a live context, `algebra` a NUL-terminated string, `out` writable.
 */
enum ExcStatus exc_basis_dim(const struct ExcContext *ctx,
                             const char *algebra_name,
                             uintptr_t *out);

/**
 * Dimension of the subalgebra fixed by the map word `word` (for example
 * "lambda gamma" on e7).
 *
 * # Safety
 * As for [`exc_basis_dim`]; `word` must be a NUL-terminated string.
 */
enum ExcStatus exc_fixed_dim(const struct ExcContext *ctx,
                             const char *algebra_name,
                             const char *word,
                             uintptr_t *out);

/**
 * Run a suite ("bases", "table1", "table2", "lemmas", "identities", "all").
 *
 * # Safety
 * `ctx` must be a live context, `suite_name` a NUL-terminated string, `out` writable.
 */
enum ExcStatus exc_run_suite(const struct ExcContext *ctx,
                             const char *suite_name,
                             struct ExcReport **out);

/**
 * # Safety
 * `report` must be NULL or a handle from [`exc_run_suite`] not yet freed.
 */
void exc_report_free(struct ExcReport *report);

/**
 * Number of checks in the report.
 *
 * # Safety
 * `report` must be a live report handle.
 */
uintptr_t exc_report_len(const struct ExcReport *report);

/**
 * Number of checks that did not pass (failed or errored).
 *
 * # Safety
 * `report` must be a live report handle.
 */
uintptr_t exc_report_failures(const struct ExcReport *report);

/**
 * Serialize the report as JSON (`markdown` nonzero selects Markdown). The
 * string is owned by the caller and released with [`exc_string_free`].
 *
 * # Safety
 * `report` must be a live report handle and `out` writable.
 */
enum ExcStatus exc_report_render(const struct ExcReport *report, int32_t markdown, char **out);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void exc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EXCVERIFY_H */
