#ifndef BEATTY_H
#define BEATTY_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum BeattyStatus {
  BEATTY_STATUS_OK = 0,
  BEATTY_STATUS_NULL_POINTER = 1,
  BEATTY_STATUS_INVALID_UTF8 = 2,
  BEATTY_STATUS_PARSE = 3,
  BEATTY_STATUS_PRECISION_EXHAUSTED = 4,
  BEATTY_STATUS_INCOMPATIBLE_SURDS = 5,
  BEATTY_STATUS_DENSITY_OUT_OF_RANGE = 6,
  BEATTY_STATUS_NOT_RATIONAL_DENSITY = 7,
  BEATTY_STATUS_REQUIRES_IRRATIONAL = 8,
  BEATTY_STATUS_INTERVAL_NOT_SUPPORTED = 9,
  BEATTY_STATUS_INSUFFICIENT_QUOTIENTS = 10,
  BEATTY_STATUS_DIVISION_BY_ZERO = 11,
  BEATTY_STATUS_OVERFLOW = 12,
  BEATTY_STATUS_INVALID_VALUE = 13,
  BEATTY_STATUS_INVALID_ARGUMENT = 14,
  BEATTY_STATUS_BUFFER_TOO_SMALL = 15,
  BEATTY_STATUS_PANIC = 16,
} BeattyStatus;

/**
 * A pair of Beatty sequences tested for tiling.
 */
typedef struct BeattyPair BeattyPair;

/**
 * An exact real: rational, quadratic irrational or certified decimal interval.
 */
typedef struct BeattyReal BeattyReal;

/**
 * A Beatty sequence `B(α, α′)`.
 */
typedef struct BeattySequence BeattySequence;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failed call on this thread, or NULL after a
 * successful one. Valid until the next call into this library on the same thread.
 */
const char *beatty_last_error_message(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void beatty_string_free(char *s);

/**
 * Parses a real literal such as `3/7`, `(-1+1*sqrt 5)/2` or `~0.718:e-2`.
 * `precision` sets the fractional digits of interval literals; 0 selects the default.
 *
 * # Safety
 * `literal` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BeattyStatus beatty_real_parse(const char *literal,
                                    uint32_t precision,
                                    struct BeattyReal **out);

/**
 * Releases a real. NULL is ignored.
 *
 * # Safety
 * `x` must be NULL or a handle from [`beatty_real_parse`] not yet freed.
 */
void beatty_real_free(struct BeattyReal *x);

/**
 * Canonical text of a real.
 *
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum BeattyStatus beatty_real_to_string(const struct BeattyReal *x, char **out);

/**
 * `⌊x⌋`.
 *
 * # Safety
 * `x` must be a live handle and `out` a valid pointer.
 */
enum BeattyStatus beatty_real_floor(const struct BeattyReal *x, int64_t *out);

/**
 * Writes -1, 0 or 1 as `a` is below, equal to or above `b`.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum BeattyStatus beatty_real_compare(const struct BeattyReal *a,
                                      const struct BeattyReal *b,
                                      int32_t *out);

/**
 * The sequence `⌊(n − offset)/alpha⌋`, `n ≥ 1`. The inputs are copied.
 *
 * # Safety
 * `alpha` and `offset` must be live handles and `out` a valid pointer.
 */
enum BeattyStatus beatty_sequence_new(const struct BeattyReal *alpha,
                                      const struct BeattyReal *offset,
                                      struct BeattySequence **out);

/**
 * Releases a sequence. NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a handle from [`beatty_sequence_new`] not yet freed.
 */
void beatty_sequence_free(struct BeattySequence *s);

/**
 * The `n`-th term, `n ≥ 1`.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
enum BeattyStatus beatty_sequence_term(const struct BeattySequence *s, int64_t n, int64_t *out);

/**
 * Whether `k` is a term.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
enum BeattyStatus beatty_sequence_contains(const struct BeattySequence *s, int64_t k, bool *out);

/**
 * Number of terms below `k`.
 *
 * # Safety
 * `s` must be a live handle and `out` a valid pointer.
 */
enum BeattyStatus beatty_sequence_count_below(const struct BeattySequence *s,
                                              int64_t k,
                                              uint64_t *out);

/**
 * Terms below `bound` in increasing order.
 *
 * Always writes the total count to `len`. Copies the terms into `buf` when
 * `capacity` suffices and returns `BEATTY_STATUS_BUFFER_TOO_SMALL` otherwise;
 * `buf` may be NULL when `capacity` is 0.
 *
 * # Safety
 * `s` must be a live handle, `buf` valid for `capacity` writes and `len` a valid pointer.
 */
enum BeattyStatus beatty_sequence_enumerate(const struct BeattySequence *s,
                                            int64_t bound,
                                            int64_t *buf,
                                            size_t capacity,
                                            size_t *len);

/**
 * The pair `(a, b)`. The inputs are copied.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum BeattyStatus beatty_pair_new(const struct BeattySequence *a,
                                  const struct BeattySequence *b,
                                  struct BeattyPair **out);

/**
 * Releases a pair. NULL is ignored.
 *
 * # Safety
 * `p` must be NULL or a handle from [`beatty_pair_new`] not yet freed.
 */
void beatty_pair_free(struct BeattyPair *p);

/**
 * Exact tiling verdict for ℕ as JSON: `{"tiles": ..., "failed": [...], ...}`.
 * With `integers` set, the verdict is for ℤ instead.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum BeattyStatus beatty_pair_check_json(const struct BeattyPair *p, bool integers, char **out);

/**
 * Brute-force coverage of `[start, end]` as JSON. Without `integers` the
 * window is `[1, end]` and `start` is ignored.
 *
 * # Safety
 * `p` must be a live handle and `out` a valid pointer.
 */
enum BeattyStatus beatty_pair_verify_json(const struct BeattyPair *p,
                                          bool integers,
                                          int64_t start,
                                          int64_t end,
                                          char **out);

/**
 * The first `m` letters of the characteristic word of `alpha`, as `'0'`/`'1'`.
 *
 * # Safety
 * `alpha` must be a live handle and `out` a valid pointer.
 */
enum BeattyStatus beatty_char_word(const struct BeattyReal *alpha, size_t m, char **out);

/**
 * Factorization of the length-`m` prefix into continuant-length prefixes, as JSON.
 *
 * # Safety
 * `alpha` must be a live handle and `out` a valid pointer.
 */
enum BeattyStatus beatty_decompose_json(const struct BeattyReal *alpha, uint64_t m, char **out);

/**
 * Ostrowski digits of `m` with respect to `alpha`, as JSON.
 *
 * # Safety
 * `alpha` must be a live handle and `out` a valid pointer.
 */
enum BeattyStatus beatty_ostrowski_json(const struct BeattyReal *alpha, uint64_t m, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BEATTY_H */
