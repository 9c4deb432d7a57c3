#ifndef INTDIFF_H
#define INTDIFF_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum {
  INTDIFF_STATUS_OK = 0,
  INTDIFF_STATUS_NULL_POINTER = 1,
  INTDIFF_STATUS_INVALID_UTF8 = 2,
  INTDIFF_STATUS_PARSE_ERROR = 3,
  INTDIFF_STATUS_DOMAIN_ERROR = 4,
  INTDIFF_STATUS_PANIC = 5,
} IntdiffStatus;

/**
 * Opaque element of `𝕀ₙ` or of one of its prime quotients.
 */
typedef struct IntdiffElement IntdiffElement;

/**
 * Opaque ideal of `𝕀ₙ` in antichain form.
 */
typedef struct IntdiffIdeal IntdiffIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *intdiff_last_error(void);

/**
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void intdiff_string_free(char *s);

/**
 * Parses an operator over `n` tensor factors.
 *
 * # Safety
 * `src` must be a NUL-terminated string; `out` must be writable.
 */
IntdiffStatus intdiff_element_parse(const char *src, size_t n, IntdiffElement **out);

/**
 * Canonical text of an element.
 *
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
IntdiffStatus intdiff_element_format(const IntdiffElement *a, char **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
IntdiffStatus intdiff_element_add(const IntdiffElement *a,
                                  const IntdiffElement *b,
                                  IntdiffElement **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
IntdiffStatus intdiff_element_mul(const IntdiffElement *a,
                                  const IntdiffElement *b,
                                  IntdiffElement **out);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
IntdiffStatus intdiff_element_involution(const IntdiffElement *a, IntdiffElement **out);

/**
 * Image modulo the prime indexed by the 1-based factor list `primes`.
 *
 * # Safety
 * `a` must be a live handle; `primes` must point to `len` entries (or be
 * null when `len` is 0); `out` must be writable.
 */
IntdiffStatus intdiff_element_project(const IntdiffElement *a,
                                      const size_t *primes,
                                      size_t len,
                                      IntdiffElement **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
IntdiffStatus intdiff_element_equal(const IntdiffElement *a, const IntdiffElement *b, bool *out);

/**
 * Whether `a` lies in the ideal `c`.
 *
 * # Safety
 * `a`, `c` must be live handles; `out` must be writable.
 */
IntdiffStatus intdiff_element_is_member(const IntdiffElement *a, const IntdiffIdeal *c, bool *out);

/**
 * # Safety
 * `a` must come from this library and not have been freed, or be null.
 */
void intdiff_element_free(IntdiffElement *a);

/**
 * Parses an antichain such as `{01,10}` over `n` factors.
 *
 * # Safety
 * `src` must be a NUL-terminated string; `out` must be writable.
 */
IntdiffStatus intdiff_ideal_parse(const char *src, size_t n, IntdiffIdeal **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
IntdiffStatus intdiff_ideal_sum(const IntdiffIdeal *a, const IntdiffIdeal *b, IntdiffIdeal **out);

/**
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
IntdiffStatus intdiff_ideal_product(const IntdiffIdeal *a,
                                    const IntdiffIdeal *b,
                                    IntdiffIdeal **out);

/**
 * Whether `a ⊆ b`.
 *
 * # Safety
 * `a`, `b` must be live handles; `out` must be writable.
 */
IntdiffStatus intdiff_ideal_includes(const IntdiffIdeal *a, const IntdiffIdeal *b, bool *out);

/**
 * # Safety
 * `a` must be a live handle; `out` must be writable.
 */
IntdiffStatus intdiff_ideal_format(const IntdiffIdeal *a, char **out);

/**
 * # Safety
 * `a` must come from this library and not have been freed, or be null.
 */
void intdiff_ideal_free(IntdiffIdeal *a);

/**
 * Number of ideals of `𝕀ₙ` (the Dedekind number), for `1 ≤ n ≤ 6`.
 *
 * # Safety
 * `out` must be writable.
 */
IntdiffStatus intdiff_dedekind(size_t n, uint64_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INTDIFF_H */
