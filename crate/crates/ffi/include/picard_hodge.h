#ifndef PICARD_HODGE_H
#define PICARD_HODGE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PhStatus {
  PH_STATUS_OK = 0,
  PH_STATUS_NOT_DOMINANT = 1,
  PH_STATUS_NOT_A_CHARACTER = 2,
  PH_STATUS_DEGREE_OUT_OF_RANGE = 3,
  PH_STATUS_NULL_POINTER = 4,
  PH_STATUS_BUFFER_TOO_SMALL = 5,
  PH_STATUS_INVALID_ARGUMENT = 6,
  PH_STATUS_OVERFLOW = 7,
  PH_STATUS_PANIC = 8,
} PhStatus;

/**
 * Irreducible decomposition of an exterior power. Opaque.
 */
typedef struct PhDecomposition PhDecomposition;

/**
 * Degree-indexed weight sets. Opaque.
 */
typedef struct PhWeightSets PhWeightSets;

/**
 * A torus character `(x, y, z, w)`.
 */
typedef struct PhCharacter {
  int64_t x;
  int64_t y;
  int64_t z;
  int64_t w;
} PhCharacter;

/**
 * A Hodge type `(p, q)`.
 */
typedef struct PhHodgeType {
  int64_t p;
  int64_t q;
} PhHodgeType;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static, NUL-terminated description of a status code.
 */
const char *ph_status_message(enum PhStatus status);

bool ph_is_dominant(struct PhCharacter chi);

/**
 * Length of the Weyl element with zero-based images `images[0..3]`.
 *
 * # Safety
 * `images` must point to three readable bytes; `out` must be writable.
 */
enum PhStatus ph_weyl_length(const uint8_t *images, uint32_t *out);

/**
 * `σ(λ + ρ) − ρ`.
 *
 * # Safety
 * `images` must point to three readable bytes; `out` must be writable.
 */
enum PhStatus ph_rho_shift(const uint8_t *images,
                           struct PhCharacter lambda,
                           struct PhCharacter *out);

/**
 * Characters of `H^k(W, F_λ)`, lexicographically sorted.
 *
 * # Safety
 * `out` must have room for `cap` elements; `len` must be writable.
 */
enum PhStatus ph_kostant_cohomology(struct PhCharacter lambda,
                                    uint32_t k,
                                    struct PhCharacter *out,
                                    size_t cap,
                                    size_t *len);

/**
 * Hodge types of `R^k i^* j_* μ(F_λ)`.
 *
 * # Safety
 * `out` must have room for `cap` elements; `len` must be writable.
 */
enum PhStatus ph_degeneration_types(struct PhCharacter lambda,
                                    uint32_t k,
                                    struct PhHodgeType *out,
                                    size_t cap,
                                    size_t *len);

/**
 * Weights of `R^k i^* j_* μ(F_λ)`.
 *
 * # Safety
 * `out` must have room for `cap` elements; `len` must be writable.
 */
enum PhStatus ph_degeneration_weights(struct PhCharacter lambda,
                                      uint32_t k,
                                      int64_t *out,
                                      size_t cap,
                                      size_t *len);

/**
 * # Safety
 * `out` must be writable.
 */
enum PhStatus ph_vhs_weight(struct PhCharacter lambda, int64_t *out);

/**
 * The six values `k - w + w̄`, sorted ascending.
 *
 * # Safety
 * `out` must have room for six elements.
 */
enum PhStatus ph_avoidance_list(struct PhCharacter lambda, int64_t *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum PhStatus ph_is_generic(struct PhCharacter lambda, bool *out);

/**
 * # Safety
 * `out` must be writable.
 */
enum PhStatus ph_irrep_dimension(struct PhCharacter lambda, uint64_t *out);

/**
 * Whether `F_λ` occurs in `∧^p(F_{0,0,-1,0}^r ⊕ F_{1,0,0,-1}^r)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PhStatus ph_lemma_predicate(struct PhCharacter lambda, uint32_t r, uint32_t p, bool *out);

/**
 * Decomposes `∧^p(F_{0,0,-1,0}^r ⊕ F_{1,0,0,-1}^r)`. The handle written to
 * `*out` must be released with [`ph_decomposition_free`].
 *
 * # Safety
 * `out` must be writable.
 */
enum PhStatus ph_decomposition_new(uint32_t r, uint32_t p, struct PhDecomposition **out);

/**
 * Number of irreducible terms; 0 for a null handle.
 *
 * # Safety
 * `handle` must be null or come from [`ph_decomposition_new`].
 */
size_t ph_decomposition_len(const struct PhDecomposition *handle);

/**
 * Highest weight and multiplicity of term `index`.
 *
 * # Safety
 * `handle` must come from [`ph_decomposition_new`]; the out-pointers must be
 * writable.
 */
enum PhStatus ph_decomposition_term(const struct PhDecomposition *handle,
                                    size_t index,
                                    struct PhCharacter *highest_weight,
                                    uint64_t *multiplicity);

/**
 * # Safety
 * `handle` must be null or come from [`ph_decomposition_new`], and must not
 * be used afterwards.
 */
void ph_decomposition_free(struct PhDecomposition *handle);

/**
 * Closed-form weight sets for `(r, p)`. Empty for `p > 6r`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PhStatus ph_weight_sets_predicted(uint32_t r, uint32_t p, struct PhWeightSets **out);

/**
 * Weight sets from the decomposition of `∧^p`.
 *
 * # Safety
 * `out` must be writable.
 */
enum PhStatus ph_weight_sets_computed(uint32_t r, uint32_t p, struct PhWeightSets **out);

/**
 * Sorted weights in degree `k`.
 *
 * # Safety
 * `handle` must come from one of the `ph_weight_sets_*` constructors; `out`
 * must have room for `cap` elements; `len` must be writable.
 */
enum PhStatus ph_weight_sets_get(const struct PhWeightSets *handle,
                                 uint32_t k,
                                 int64_t *out,
                                 size_t cap,
                                 size_t *len);

/**
 * # Safety
 * Both handles must be null or valid.
 */
bool ph_weight_sets_equal(const struct PhWeightSets *a, const struct PhWeightSets *b);

/**
 * # Safety
 * `handle` must be null or valid, and must not be used afterwards.
 */
void ph_weight_sets_free(struct PhWeightSets *handle);

/**
 * Runs every check for one `(r, p)` and reports whether all passed.
 *
 * # Safety
 * `passed` must be writable.
 */
enum PhStatus ph_verify_case(uint32_t r, uint32_t p, bool *passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PICARD_HODGE_H */
