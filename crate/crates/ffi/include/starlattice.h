#ifndef STARLATTICE_H
#define STARLATTICE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum SlStatus {
  SL_STATUS_OK = 0,
  SL_STATUS_NULL_POINTER = 1,
  SL_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed JSON, bad shapes or out-of-range arguments.
   */
  SL_STATUS_INVALID_INPUT = 3,
  SL_STATUS_NOT_SEMISIMPLE = 4,
  SL_STATUS_NOT_C_STAR = 5,
  SL_STATUS_DECOMPOSITION_FAILED = 6,
  /**
   * A state-space or lattice-operation failure.
   */
  SL_STATUS_VERIFICATION_ERROR = 7,
  /**
   * A Rust panic was caught at the boundary.
   */
  SL_STATUS_INTERNAL = 8,
} SlStatus;

typedef enum SlRing {
  SL_RING_REAL = 0,
  SL_RING_COMPLEX = 1,
  SL_RING_QUATERNION = 2,
} SlRing;

/**
 * Opaque finite-dimensional *-algebra.
 */
typedef struct SlAlgebra SlAlgebra;

/**
 * Opaque finite ortholattice.
 */
typedef struct SlLattice SlLattice;

/**
 * One row of the tensor-product deficit table.
 */
typedef struct SlDeficit {
  size_t sym_dim;
  size_t span_dim;
  size_t deficit;
} SlDeficit;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failing call on this thread; empty after a
 * success. Valid until the next call on the same thread.
 */
const char *sl_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *sl_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library, freed once.
 */
void sl_string_free(char *s);

/**
 * Parses an algebra from its JSON description.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a writable pointer.
 */
enum SlStatus sl_algebra_from_json(const char *json, struct SlAlgebra **out);

/**
 * Builds `M_n(K)` in its standard basis.
 *
 * # Safety
 * `out` must be a writable pointer.
 */
enum SlStatus sl_algebra_matrix(size_t n, enum SlRing ring, struct SlAlgebra **out);

/**
 * # Safety
 * `a` must be null or a handle from this library, freed once.
 */
void sl_algebra_free(struct SlAlgebra *a);

/**
 * Real dimension, or 0 for a null handle.
 *
 * # Safety
 * `a` must be null or a live handle.
 */
size_t sl_algebra_dim(const struct SlAlgebra *a);

/**
 * Serializes the algebra back to JSON.
 *
 * # Safety
 * `a` must be a live handle and `out_json` writable.
 */
enum SlStatus sl_algebra_to_json(const struct SlAlgebra *a, char **out_json);

/**
 * Runs the `verify-algebra` battery. `workers = 0` uses the default pool;
 * the report does not depend on it. `*out_passed` is set to whether every
 * check passed; the report JSON goes to `*out_json`.
 *
 * # Safety
 * `a` must be a live handle; `out_json` and `out_passed` writable.
 */
enum SlStatus sl_algebra_verify(const struct SlAlgebra *a,
                                uint64_t seed,
                                size_t samples,
                                size_t forms,
                                size_t workers,
                                char **out_json,
                                bool *out_passed);

/**
 * Block-diagonalizes the left-regular representation; the JSON lists the
 * blocks, the verification residual and the seed.
 *
 * # Safety
 * `a` must be a live handle and `out_json` writable.
 */
enum SlStatus sl_algebra_decompose(const struct SlAlgebra *a, uint64_t seed, char **out_json);

/**
 * State-space norm of the element with coordinates `coords[0..len]`.
 *
 * # Safety
 * `a` must be a live handle, `coords` readable for `len` doubles and
 * `out` writable.
 */
enum SlStatus sl_algebra_norm(const struct SlAlgebra *a,
                              const double *coords,
                              size_t len,
                              double *out);

/**
 * Deficit of `M_n(K) ⊗ M_m(K)`; the complex case uses the ℂ-linear tensor.
 *
 * # Safety
 * `out` must be writable.
 */
enum SlStatus sl_tensor_deficit(enum SlRing ring, size_t n, size_t m, struct SlDeficit *out);

/**
 * Parses a lattice from its JSON description.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum SlStatus sl_lattice_from_json(const char *json, struct SlLattice **out);

/**
 * # Safety
 * `l` must be null or a handle from this library, freed once.
 */
void sl_lattice_free(struct SlLattice *l);

/**
 * Number of elements, or 0 for a null handle.
 *
 * # Safety
 * `l` must be null or a live handle.
 */
size_t sl_lattice_size(const struct SlLattice *l);

/**
 * Runs the staged `verify-lattice` battery with no expected failures.
 *
 * # Safety
 * `l` must be a live handle; `out_json` and `out_passed` writable.
 */
enum SlStatus sl_lattice_verify(const struct SlLattice *l, char **out_json, bool *out_passed);

/**
 * Pointwise subspace-lattice axioms on `samples` random subspaces of `K^n`.
 *
 * # Safety
 * `out_json` and `out_passed` must be writable.
 */
enum SlStatus sl_subspace_verify(enum SlRing ring,
                                 size_t n,
                                 size_t samples,
                                 uint64_t seed,
                                 char **out_json,
                                 bool *out_passed);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* STARLATTICE_H */
