/* C interface of the cluster-hodge library. Generated by cbindgen; do not edit. */

#ifndef CLUSTER_HODGE_H
#define CLUSTER_HODGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Selects the generator list used for the mixed-weight basis families of
// the two-mutable case.
enum ChBasisVariant
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  // Families indexed by gcd(a, b), matching the closed-form table.
  CH_BASIS_VARIANT_STATEMENT = 0,
  // Families indexed by gcd(b, c).
  CH_BASIS_VARIANT_ALTERNATE = 1,
};
#ifndef __cplusplus
typedef int32_t ChBasisVariant;
#endif // __cplusplus

// Outcome of an FFI call.
enum ChStatus
#ifdef __cplusplus
  : int32_t
#endif // __cplusplus
 {
  // The call succeeded and the out parameters are valid.
  CH_STATUS_OK = 0,
  // A required pointer argument was null.
  CH_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  CH_STATUS_INVALID_UTF8 = 2,
  // The input could not be parsed or violates a structural requirement
  // (malformed JSON, non-skew principal part, unsupported dimension,
  // composite characteristic).
  CH_STATUS_MALFORMED_INPUT = 3,
  // The seed is valid but the requested artifact does not exist for its
  // classification (open case, no finite-type table, no published basis).
  CH_STATUS_UNSUPPORTED_CASE = 4,
  // Point counts over the verification primes fit no single integer
  // polynomial, so there is nothing to compare against the table.
  CH_STATUS_NON_POLYNOMIAL_COUNTS = 5,
  // An internal invariant failed; this indicates a bug in the library.
  CH_STATUS_INTERNAL_ERROR = 6,
};
#ifndef __cplusplus
typedef int32_t ChStatus;
#endif // __cplusplus

// Opaque handle to a parsed seed.
typedef struct ChSeed ChSeed;

// Opaque handle to a mixed Hodge number table.
typedef struct ChTable ChTable;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a seed from its JSON description `{"n", "m", "matrix", "labels"?}`.
//
// On success writes a new handle to `out`; release it with [`ch_seed_free`].
ChStatus ch_seed_parse(const char *json, struct ChSeed **out);

// Releases a seed handle. Null is ignored.
void ch_seed_free(struct ChSeed *seed);

// Writes the number of mutable vertices, frozen vertices, and the total
// dimension of the seed.
ChStatus ch_seed_shape(const struct ChSeed *seed, size_t *n, size_t *m, size_t *dim);

// Mutates the seed at the given mutable vertex, writing a new handle.
ChStatus ch_seed_mutate(const struct ChSeed *seed, size_t vertex, struct ChSeed **out);

// Serializes the seed back to its JSON description.
ChStatus ch_seed_to_json(const struct ChSeed *seed, char **out);

// Classifies the seed and writes the result as a JSON object with keys
// `case`, `description`, `mutations`, `params`, `variables`, and `smooth`
// (the latter only for cases carrying a table).
ChStatus ch_classify_json(const struct ChSeed *seed, char **out);

// Computes the mixed Hodge number table of the seed's variety. Pass
// `intersection = true` for the intersection cohomology variant, which
// differs only in the singular case.
ChStatus ch_table(const struct ChSeed *seed, bool intersection, struct ChTable **out);

// Releases a table handle. Null is ignored.
void ch_table_free(struct ChTable *table);

// Writes the entry h^{k,(p,p)} of the table; entries outside the
// admissible range are zero.
ChStatus ch_table_entry(const struct ChTable *table, size_t k, size_t p, int64_t *out);

// Writes the dimension, smoothness flag, and Euler characteristic.
ChStatus ch_table_summary(const struct ChTable *table, size_t *dim, bool *smooth, int64_t *euler);

// Serializes the table as JSON (`dim`, `smooth`, `variant`, `entries`).
ChStatus ch_table_to_json(const struct ChTable *table, char **out);

// Counts points of the seed's variety over the prime field F_prime.
ChStatus ch_count(const struct ChSeed *seed, uint64_t prime, uint64_t *out);

// Verifies the seed's table against finite-field point counts and writes
// the verification report as JSON (`case`, `params`, `predicted`,
// `observed`, `verdict`). Counts that fit no integer polynomial yield
// `NonPolynomialCounts` instead of a report.
ChStatus ch_verify_json(const struct ChSeed *seed, char **out);

// Runs the finite-type search on a seed with three mutable and no frozen
// vertices, writing the verdict as JSON.
ChStatus ch_finite_type_json(const struct ChSeed *seed, char **out);

// Computes the log-form basis realising the seed's table and writes it as
// JSON (`case`, `generators`, `groups` with rendered forms).
ChStatus ch_basis_json(const struct ChSeed *seed, ChBasisVariant variant, char **out);

// Releases a string returned by this library. Null is ignored.
void ch_string_free(char *text);

// Returns the message of the most recent failure on this thread. The
// pointer stays valid until the next failing call on the same thread; do
// not free it.
const char *ch_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CLUSTER_HODGE_H */
