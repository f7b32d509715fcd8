#ifndef LATSCARF_H
#define LATSCARF_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LsComplexKind {
  LS_COMPLEX_KIND_GENERALIZED = 0,
  LS_COMPLEX_KIND_SCARF = 1,
  LS_COMPLEX_KIND_STRONG = 2,
} LsComplexKind;

typedef enum LsStatus {
  LS_STATUS_OK = 0,
  LS_STATUS_NULL_POINTER = 1,
  LS_STATUS_INVALID_UTF8 = 2,
  LS_STATUS_PARSE = 3,
  LS_STATUS_INVALID_INPUT = 4,
  LS_STATUS_NOT_IN_LATTICE = 5,
  LS_STATUS_NO_PREIMAGE = 6,
  /**
   * The scan bound does not reach every face the computation needs.
   */
  LS_STATUS_BOUND_TOO_SMALL = 7,
  LS_STATUS_OUT_OF_RANGE = 8,
  LS_STATUS_OVERFLOW = 9,
  LS_STATUS_INTERNAL = 10,
} LsStatus;

typedef enum LsStrongMode {
  LS_STRONG_MODE_STRICT = 0,
  LS_STRONG_MODE_PAPER = 1,
} LsStrongMode;

typedef struct LsBettiTable LsBettiTable;

typedef struct LsComplex LsComplex;

/**
 * The monomials of one fiber, in canonical order.
 */
typedef struct LsFiber LsFiber;

/**
 * A parsed problem and its lattice.
 */
typedef struct LsProblem LsProblem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the last failing call on this thread, or null.
 * Valid until the next failing call on the same thread.
 */
const char *ls_last_error_message(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void ls_string_free(char *s);

/**
 * Parses a problem document (the same JSON the command-line tool reads).
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum LsStatus ls_problem_from_json(const char *json, struct LsProblem **out);

/**
 * # Safety
 * `problem` must be null or a live handle.
 */
void ls_problem_free(struct LsProblem *problem);

/**
 * Number of variables, or 0 for a null handle.
 *
 * # Safety
 * `problem` must be null or a live handle.
 */
size_t ls_problem_num_vars(const struct LsProblem *problem);

/**
 * Rank of the lattice, or 0 for a null handle.
 *
 * # Safety
 * `problem` must be null or a live handle.
 */
size_t ls_problem_rank(const struct LsProblem *problem);

/**
 * Enumerates the fiber of `degree`: a semigroup degree when the problem
 * has a semigroup, otherwise an exponent vector.
 *
 * # Safety
 * `degree` must point to `len` values; `out` must be valid.
 */
enum LsStatus ls_fiber_new(const struct LsProblem *problem,
                           const int64_t *degree,
                           size_t len,
                           struct LsFiber **out);

/**
 * # Safety
 * `fiber` must be null or a live handle.
 */
void ls_fiber_free(struct LsFiber *fiber);

/**
 * # Safety
 * `fiber` must be null or a live handle.
 */
size_t ls_fiber_len(const struct LsFiber *fiber);

/**
 * Copies the exponent vector of monomial `index` into `out`, which holds
 * `len` entries; `len` must equal the number of variables.
 *
 * # Safety
 * `out` must point to `len` writable values.
 */
enum LsStatus ls_fiber_monomial(const struct LsFiber *fiber,
                                size_t index,
                                int64_t *out,
                                size_t len);

/**
 * Betti numbers of every degree of weight at most `bound`. `prime` selects
 * GF(prime); 0 means the rationals.
 *
 * # Safety
 * `problem` must be a live handle and `out` valid.
 */
enum LsStatus ls_betti_new(const struct LsProblem *problem,
                           int64_t bound,
                           uint64_t prime,
                           struct LsBettiTable **out);

/**
 * # Safety
 * `table` must be null or a live handle.
 */
void ls_betti_free(struct LsBettiTable *table);

/**
 * Largest homological index with a nonzero entry.
 *
 * # Safety
 * `table` must be null or a live handle.
 */
size_t ls_betti_max_index(const struct LsBettiTable *table);

/**
 * Sum of β_{i,b} over all scanned degrees, for `i ≥ 1`; 0 out of range.
 *
 * # Safety
 * `table` must be null or a live handle.
 */
size_t ls_betti_total(const struct LsBettiTable *table, size_t i);

/**
 * β_{i,b} for the degree given as in [`ls_fiber_new`].
 *
 * # Safety
 * Handles must be live, `degree` must point to `len` values, `out` valid.
 */
enum LsStatus ls_betti_value(const struct LsProblem *problem,
                             const struct LsBettiTable *table,
                             size_t i,
                             const int64_t *degree,
                             size_t len,
                             size_t *out);

/**
 * The table as JSON. Free with [`ls_string_free`].
 *
 * # Safety
 * Handles must be null or live.
 */
char *ls_betti_to_json(const struct LsProblem *problem, const struct LsBettiTable *table);

/**
 * Builds the complex of basic components up to `bound`. `mode` only
 * matters for [`LsComplexKind::Strong`].
 *
 * # Safety
 * `problem` must be a live handle and `out` valid.
 */
enum LsStatus ls_complex_new(const struct LsProblem *problem,
                             enum LsComplexKind kind,
                             enum LsStrongMode mode,
                             int64_t bound,
                             struct LsComplex **out);

/**
 * # Safety
 * `complex` must be null or a live handle.
 */
void ls_complex_free(struct LsComplex *complex);

/**
 * Top homological degree.
 *
 * # Safety
 * `complex` must be null or a live handle.
 */
size_t ls_complex_length(const struct LsComplex *complex);

/**
 * Number of basis elements in degree `i`; 0 out of range.
 *
 * # Safety
 * `complex` must be null or a live handle.
 */
size_t ls_complex_rank(const struct LsComplex *complex, size_t i);

/**
 * Whether consecutive differentials compose to zero.
 *
 * # Safety
 * `complex` must be null or a live handle.
 */
bool ls_complex_squares_to_zero(const struct LsComplex *complex);

/**
 * The complex as JSON. Free with [`ls_string_free`].
 *
 * # Safety
 * Handles must be null or live.
 */
char *ls_complex_to_json(const struct LsProblem *problem, const struct LsComplex *complex);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LATSCARF_H */
