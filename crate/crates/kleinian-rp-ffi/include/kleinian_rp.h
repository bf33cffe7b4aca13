/* C interface to the kleinian-rp library. Generated by cbindgen; do not edit. */

#ifndef KLEINIAN_RP_H
#define KLEINIAN_RP_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Exponent sentinel for `∞`.
#define KRP_EXP_INF -1

// Exponent sentinel for `∞̄`.
#define KRP_EXP_BARINF -2

// Status code of every fallible call.
enum KrpStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  KRP_STATUS_OK = 0,
  KRP_STATUS_NULL_POINTER = 1,
  KRP_STATUS_INVALID_ARGUMENT = 2,
  KRP_STATUS_DOMAIN_ERROR = 3,
  KRP_STATUS_PANIC = 4,
};
#ifndef __cplusplus
typedef int32_t KrpStatus;
#endif // __cplusplus

// Classification verdict; the numeric values match the CLI exit codes.
enum KrpVerdict
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  KRP_VERDICT_DISCRETE = 0,
  KRP_VERDICT_NOT_DISCRETE = 1,
  KRP_VERDICT_NOT_CLASS_D = 2,
  KRP_VERDICT_UNRESOLVED = 3,
};
#ifndef __cplusplus
typedef int32_t KrpVerdict;
#endif // __cplusplus

// Opaque classification result; free with [`krp_classification_free`].
typedef struct KrpClassification KrpClassification;

// Numerical policy knobs; obtain defaults from [`krp_options_default`].
typedef struct KrpOptions {
  // Relative tolerance for matching reals to table formulas.
  double tolerance;
  // Tolerance for relator matrices against ±identity.
  double relator_tolerance;
  // Integer search bound for row inversion.
  uint32_t int_bound;
  // Search bound for elliptic rotation orders.
  uint32_t order_bound;
  // Enumeration bound for infinite census families.
  uint32_t census_bound;
} KrpOptions;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Default options matching the library defaults.
struct KrpOptions krp_options_default(void);

// Library version as a static string; do not free.
const char *krp_version(void);

// Free a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must be a pointer previously returned through a `char**`
// out-parameter of this library and not yet freed.
void krp_string_free(char *s);

// Classify a parameter triple (β, β′, γ). `opts` may be NULL for defaults.
//
// # Safety
// `out` must point to writable storage for one pointer.
KrpStatus krp_classify(double beta,
                       double beta_prime,
                       double gamma,
                       const struct KrpOptions *opts,
                       struct KrpClassification **out);

// Discreteness for two primitive elliptic generators of orders n, m ≥ 3.
//
// # Safety
// `out` must point to writable storage for one pointer.
KrpStatus krp_two_elliptic(uint32_t n,
                           uint32_t m,
                           double gamma,
                           const struct KrpOptions *opts,
                           struct KrpClassification **out);

// # Safety
// `c` must be a live handle from `krp_classify` or `krp_two_elliptic`.
KrpVerdict krp_classification_verdict(const struct KrpClassification *c);

// Number of family-table matches (0 unless discrete).
//
// # Safety
// `c` must be a live handle.
size_t krp_classification_match_count(const struct KrpClassification *c);

// Table row (1..=24) of match `index`.
//
// # Safety
// `c` must be a live handle; `row_out` must be writable.
KrpStatus krp_classification_match_row(const struct KrpClassification *c,
                                       size_t index,
                                       uint8_t *row_out);

// Group name of match `index` in family notation, e.g. `GT[3,3;inf]`.
//
// # Safety
// `c` must be a live handle; `out` must be writable. Free the string with
// `krp_string_free`.
KrpStatus krp_classification_group_name(const struct KrpClassification *c,
                                        size_t index,
                                        char **out);

// Whole result as JSON (the same document the CLI emits).
//
// # Safety
// `c` must be a live handle; `out` must be writable. Free the string with
// `krp_string_free`.
KrpStatus krp_classification_to_json(const struct KrpClassification *c, char **out);

// # Safety
// `c` must come from this library and not be freed twice. NULL is ignored.
void krp_classification_free(struct KrpClassification *c);

// Realize (β, β′, γ) as a matrix pair. Each matrix is written as eight
// doubles, row-major with interleaved real and imaginary parts:
// `[re a, im a, re b, im b, re c, im c, re d, im d]`.
//
// # Safety
// `f_out` and `g_out` must point to writable arrays of eight doubles.
KrpStatus krp_realize(double beta,
                      double beta_prime,
                      double gamma,
                      const struct KrpOptions *opts,
                      double *f_out,
                      double *g_out);

// Classify (β, β′, γ) and verify the relators of every match; writes a
// JSON array of relator reports.
//
// # Safety
// `out` must be writable. Free the string with `krp_string_free`.
KrpStatus krp_verify_params(double beta,
                            double beta_prime,
                            double gamma,
                            const struct KrpOptions *opts,
                            char **out);

// Rewrite a non-primitive elliptic (order n, q turns, gcd(q,n) = 1,
// 1 < q < n/2) as a primitive power: writes the power r = q⁻¹ mod n and
// the rescaled γ.
//
// # Safety
// `r_out` and `gamma_out` must be writable.
KrpStatus krp_reduce(uint32_t n, uint32_t q, double gamma, uint32_t *r_out, double *gamma_out);

// Gram-matrix determinant for the R[n,m;q] orbifold and its sign test.
//
// # Safety
// `det_out` and `hyperbolic_out` must be writable.
KrpStatus krp_gram(uint32_t n, uint32_t m, uint32_t q, double *det_out, bool *hyperbolic_out);

// Finite-volume census as JSON lines. `filter`: 0 all, 1 compact,
// 2 cusped. `schema` may be NULL for every schema.
//
// # Safety
// `schema`, when non-NULL, must be a NUL-terminated string; `out` must be
// writable. Free the string with `krp_string_free`.
KrpStatus krp_census_json(int32_t filter, const char *schema, uint32_t bound, char **out);

// Canonical text of a presentation, e.g. `⟨f,g | f^5, g^inf⟩`. Exponents
// use the `int64_t` encoding described at the top; `abstract_form` drops
// the `∞` relators.
//
// # Safety
// `schema` must be NUL-terminated; `exponents` must point to `len` values;
// `out` must be writable. Free the string with `krp_string_free`.
KrpStatus krp_presentation_text(const char *schema,
                                const int64_t *exponents,
                                size_t len,
                                bool abstract_form,
                                char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KLEINIAN_RP_H */
