#ifndef INCIDENCE_H
#define INCIDENCE_H

/* Generated by cbindgen from incidence-capi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum IncStatus {
  INC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  INC_STATUS_NULL_POINTER = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  INC_STATUS_UTF8 = 2,
  /**
   * Operands live in character rings of different ranks.
   */
  INC_STATUS_RANK_MISMATCH = 3,
  /**
   * The characteristic must be prime.
   */
  INC_STATUS_NOT_PRIME = 4,
  /**
   * Frobenius twists must be prime powers (or 1).
   */
  INC_STATUS_NOT_PRIME_POWER = 5,
  /**
   * An argument was outside the documented domain.
   */
  INC_STATUS_DOMAIN = 6,
  /**
   * The zero character has no highest weight.
   */
  INC_STATUS_ZERO_CHARACTER = 7,
  /**
   * Malformed serialized input.
   */
  INC_STATUS_PARSE = 8,
  /**
   * Output could not be written.
   */
  INC_STATUS_IO = 9,
  /**
   * Internal invariant violation; report as a bug.
   */
  INC_STATUS_INTERNAL = 10,
  /**
   * A panic was caught at the boundary.
   */
  INC_STATUS_PANIC = 11,
} IncStatus;

/**
 * Opaque handle to a character (sparse Laurent polynomial value).
 */
typedef struct IncCharacter IncCharacter;

/**
 * Opaque handle to a kernel/cokernel rank oracle.
 */
typedef struct IncOracle IncOracle;

/**
 * Opaque handle to the memoized character recursion for n = 3.
 */
typedef struct IncTable IncTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Returns the library version as a static NUL-terminated string.
 */
const char *inc_version(void);

/**
 * Message for the most recent error on this thread, or null if none.
 *
 * The pointer stays valid until the next failing call on the same
 * thread; do not free it.
 */
const char *inc_last_error_message(void);

/**
 * Releases a string allocated by this library.
 *
 * # Safety
 * `s` must come from this library and not have been freed before; null
 * is allowed.
 */
void inc_string_free(char *s);

/**
 * Creates a rank oracle for `n >= 2` and prime `p`.
 *
 * # Safety
 * `out` must be a valid pointer to writable memory.
 */
enum IncStatus inc_oracle_new(size_t n, uint64_t p, struct IncOracle **out);

/**
 * Releases an oracle handle; null is a no-op.
 *
 * # Safety
 * `oracle` must come from [`inc_oracle_new`] and not be used afterwards.
 */
void inc_oracle_free(struct IncOracle *oracle);

/**
 * Cohomology dimensions of `D^d R(e)`: writes `h0` and `h1`.
 *
 * # Safety
 * `oracle`, `h0`, and `h1` must be valid pointers.
 */
enum IncStatus inc_oracle_h_dims(const struct IncOracle *oracle,
                                 int64_t d,
                                 int64_t e,
                                 uint64_t *h0,
                                 uint64_t *h1);

/**
 * Cohomology characters of `D^d R(e)`: writes two new character handles.
 *
 * # Safety
 * All pointers must be valid; the returned handles must be freed with
 * [`inc_character_free`].
 */
enum IncStatus inc_oracle_h_characters(const struct IncOracle *oracle,
                                       int64_t d,
                                       int64_t e,
                                       struct IncCharacter **h0,
                                       struct IncCharacter **h1);

/**
 * Largest twist `m <= m_max` with nonzero `H^1(P, D^d R(m - 2))`,
 * written to `out`; this is the regularity when `m_max` clears the bound.
 *
 * # Safety
 * `oracle` and `out` must be valid pointers.
 */
enum IncStatus inc_oracle_regularity_scan(const struct IncOracle *oracle,
                                          int64_t d,
                                          int64_t m_max,
                                          int64_t *out);

/**
 * Creates the memoized `n = 3` recursion table for prime `p`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum IncStatus inc_table_new(uint64_t p, struct IncTable **out);

/**
 * Releases a table handle; null is a no-op.
 *
 * # Safety
 * `table` must come from [`inc_table_new`] and not be used afterwards.
 */
void inc_table_free(struct IncTable *table);

/**
 * `h0(d, e) = [H^0(P, D^d R(e-1))]` as a new character handle.
 *
 * # Safety
 * `table` and `out` must be valid pointers; free the result.
 */
enum IncStatus inc_table_h0(const struct IncTable *table,
                            int64_t d,
                            int64_t e,
                            struct IncCharacter **out);

/**
 * `h1(d, e) = [H^1(P, D^d R(e-1))]` as a new character handle.
 *
 * # Safety
 * `table` and `out` must be valid pointers; free the result.
 */
enum IncStatus inc_table_h1(const struct IncTable *table,
                            int64_t d,
                            int64_t e,
                            struct IncCharacter **out);

/**
 * Releases a character handle; null is a no-op.
 *
 * # Safety
 * `ch` must come from this library and not be used afterwards.
 */
void inc_character_free(struct IncCharacter *ch);

/**
 * Number of variables of the ambient character ring.
 *
 * # Safety
 * `ch` and `out` must be valid pointers.
 */
enum IncStatus inc_character_rank(const struct IncCharacter *ch, size_t *out);

/**
 * Writes 1 if the character is zero, 0 otherwise.
 *
 * # Safety
 * `ch` and `out` must be valid pointers.
 */
enum IncStatus inc_character_is_zero(const struct IncCharacter *ch, uint8_t *out);

/**
 * Sum of coefficients as u64; `INC_STATUS_DOMAIN` if it does not fit.
 *
 * # Safety
 * `ch` and `out` must be valid pointers.
 */
enum IncStatus inc_character_dim(const struct IncCharacter *ch, uint64_t *out);

/**
 * Sum of coefficients as an exact decimal string.
 *
 * # Safety
 * `ch` and `out` must be valid; free the string with [`inc_string_free`].
 */
enum IncStatus inc_character_dim_str(const struct IncCharacter *ch, char **out);

/**
 * Writes the normalized highest weight into `out[0..len]`; `len` must
 * equal the rank. Fails with `INC_STATUS_ZERO_CHARACTER` on zero input.
 *
 * # Safety
 * `ch` must be valid and `out` must point to `len` writable i64 slots.
 */
enum IncStatus inc_character_highest_weight(const struct IncCharacter *ch,
                                            int64_t *out,
                                            size_t len);

/**
 * Serializes the character to its canonical JSON form.
 *
 * # Safety
 * `ch` and `out` must be valid; free the string with [`inc_string_free`].
 */
enum IncStatus inc_character_to_json(const struct IncCharacter *ch, char **out);

/**
 * Parses the canonical JSON form in rank `n`.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer;
 * free the result with [`inc_character_free`].
 */
enum IncStatus inc_character_from_json(size_t n, const char *json, struct IncCharacter **out);

/**
 * Writes 1 if the characters are equal, 0 otherwise.
 *
 * # Safety
 * All pointers must be valid.
 */
enum IncStatus inc_character_eq(const struct IncCharacter *a,
                                const struct IncCharacter *b,
                                uint8_t *out);

/**
 * Dual character (inverts variables and renormalizes).
 *
 * # Safety
 * `ch` and `out` must be valid; free the result.
 */
enum IncStatus inc_character_dual(const struct IncCharacter *ch, struct IncCharacter **out);

/**
 * Frobenius twist: scales all exponents by the prime power `q`.
 *
 * # Safety
 * `ch` and `out` must be valid; free the result.
 */
enum IncStatus inc_character_frobenius(const struct IncCharacter *ch,
                                       uint64_t q,
                                       struct IncCharacter **out);

/**
 * Castelnuovo-Mumford regularity of `D^d R`: `(t+n-2) p^k - n + 2`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum IncStatus inc_regularity_formula(size_t n, uint64_t p, int64_t d, int64_t *out);

/**
 * Middle-degree flags for `O(a, b)` with `b <= -n`, `a >= -b-n+1`:
 * writes 1/0 for `H^(n-2)` and `H^(n-1)` being nonzero.
 *
 * # Safety
 * `hn2_nonzero` and `hn1_nonzero` must be valid pointers.
 */
enum IncStatus inc_region_vi_vanishing(size_t n,
                                       uint64_t p,
                                       int64_t a,
                                       int64_t b,
                                       uint8_t *hn2_nonzero,
                                       uint8_t *hn1_nonzero);

/**
 * Degrees with nonzero cohomology for `O(a, b)`, written to
 * `out[0..cap]`; `count` receives the true number (at most 2).
 *
 * # Safety
 * `out` must point to `cap` writable usize slots; `count` must be valid.
 */
enum IncStatus inc_nonzero_degrees(size_t n,
                                   uint64_t p,
                                   int64_t a,
                                   int64_t b,
                                   size_t *out,
                                   size_t cap,
                                   size_t *count);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INCIDENCE_H */
