/* Copyright 2026 the Rosettes Authors */
/* SPDX-License-Identifier: Apache-2.0 */

#ifndef ROSETTES_H
#define ROSETTES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum RosettesAdjudication {
  ROSETTES_ADJUDICATION_SINGLE_FORM = 0,
  ROSETTES_ADJUDICATION_PRINTED_CONFIRMED = 1,
  ROSETTES_ADJUDICATION_RECOMPUTED_CONFIRMED = 2,
  ROSETTES_ADJUDICATION_AMBIGUOUS = 3,
  ROSETTES_ADJUDICATION_NEITHER_HOLDS = 4,
} RosettesAdjudication;

typedef enum RosettesIdentity {
  // Length against the areas of the curve, its double Wigner branch and its CWMS.
  ROSETTES_IDENTITY_WIGNER_CWMS = 0,
  // Length against the areas of the curve and its SMS; odd rotation numbers only.
  ROSETTES_IDENTITY_SMS = 1,
  // Area identity that vanishes on constant-width rosettes.
  ROSETTES_IDENTITY_CONSTANT_WIDTH = 2,
} RosettesIdentity;

typedef enum RosettesStatus {
  ROSETTES_STATUS_OK = 0,
  ROSETTES_STATUS_NULL_POINTER = 1,
  ROSETTES_STATUS_INVALID_ARGUMENT = 2,
  ROSETTES_STATUS_PARSE = 3,
  ROSETTES_STATUS_NOT_ROSETTE = 4,
  ROSETTES_STATUS_NON_GENERIC = 5,
  ROSETTES_STATUS_HYPOTHESIS = 6,
  ROSETTES_STATUS_INTERNAL = 7,
} RosettesStatus;

// A front derived from one or two rosettes.
typedef struct RosettesFront RosettesFront;

// A rosette given by its support function.
typedef struct RosettesRosette RosettesRosette;

// Closed-form residuals of an identity. `recomputed_residual` is NaN when
// the identity has a single form.
typedef struct RosettesIdentityResult {
  double printed_residual;
  double recomputed_residual;
  enum RosettesAdjudication adjudication;
} RosettesIdentityResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or null. Valid until
// the next call into the library on the same thread.
const char *rosettes_last_error_message(void);

// Builds `p(θ) = a0 + Σ a[i] cos(n[i]θ/m) + b[i] sin(n[i]θ/m)` without a
// sign check on the radius of curvature.
//
// # Safety
// `n`, `a` and `b` point to `len` readable values (or may be null when
// `len` is 0); `out` is writable.
enum RosettesStatus rosettes_rosette_new(uint32_t m,
                                         double a0,
                                         const uint32_t *n,
                                         const double *a,
                                         const double *b,
                                         size_t len,
                                         struct RosettesRosette **out);

// Parses a JSON curve file and checks that it is a rosette.
//
// # Safety
// `text` is a NUL-terminated string; `out` is writable.
enum RosettesStatus rosettes_rosette_from_json(const char *text, struct RosettesRosette **out);

// Writes the rosette as a JSON curve file. Release with `rosettes_string_free`.
//
// # Safety
// `rosette` is a live handle; `out` is writable.
enum RosettesStatus rosettes_rosette_to_json(const struct RosettesRosette *rosette, char **out);

// # Safety
// `rosette` is null or a handle not yet freed.
void rosettes_rosette_free(struct RosettesRosette *rosette);

// Rotation number `m` of the rosette, or 0 for a null handle.
//
// # Safety
// `rosette` is null or a live handle.
uint32_t rosettes_rosette_rotation_number(const struct RosettesRosette *rosette);

// Whether the radius of curvature is positive, with its minimum.
//
// # Safety
// `rosette` is a live handle; both outputs are writable.
enum RosettesStatus rosettes_rosette_validate(const struct RosettesRosette *rosette,
                                              bool *is_rosette,
                                              double *min_rho);

// Ordered and unordered counts of antipodal parameter pairs.
//
// # Safety
// `rosette` is a live handle; both outputs are writable.
enum RosettesStatus rosettes_rosette_antipodal_count(const struct RosettesRosette *rosette,
                                                     size_t *ordered,
                                                     size_t *distinct);

// Evaluates an identity in closed form and with an oracle at `samples` points.
//
// # Safety
// `rosette` is a live handle; `out` is writable.
enum RosettesStatus rosettes_rosette_identity(const struct RosettesRosette *rosette,
                                              enum RosettesIdentity identity,
                                              size_t samples,
                                              struct RosettesIdentityResult *out);

// The rosette itself as a front.
//
// # Safety
// `rosette` is a live handle; `out` is writable.
enum RosettesStatus rosettes_front_base(const struct RosettesRosette *rosette,
                                        struct RosettesFront **out);

// Branch `k` of the Wigner caustic, `1 <= k <= m`.
//
// # Safety
// `rosette` is a live handle; `out` is writable.
enum RosettesStatus rosettes_front_wigner(const struct RosettesRosette *rosette,
                                          uint32_t k,
                                          struct RosettesFront **out);

// Branch `k` of the affine `λ`-equidistant.
//
// # Safety
// `rosette` is a live handle; `out` is writable.
enum RosettesStatus rosettes_front_equidistant(const struct RosettesRosette *rosette,
                                               double lambda,
                                               uint32_t k,
                                               struct RosettesFront **out);

// # Safety
// `rosette` is a live handle; `out` is writable.
enum RosettesStatus rosettes_front_cwms(const struct RosettesRosette *rosette,
                                        struct RosettesFront **out);

// # Safety
// `rosette` is a live handle; `out` is writable.
enum RosettesStatus rosettes_front_sms(const struct RosettesRosette *rosette,
                                       struct RosettesFront **out);

// Offset with support `p − alpha`.
//
// # Safety
// `rosette` is a live handle; `out` is writable.
enum RosettesStatus rosettes_front_offset(const struct RosettesRosette *rosette,
                                          double alpha,
                                          struct RosettesFront **out);

// Branch `k` of the `λ`-equidistant of a pair of rosettes.
//
// # Safety
// `first` and `second` are live handles; `out` is writable.
enum RosettesStatus rosettes_front_pair(const struct RosettesRosette *first,
                                        const struct RosettesRosette *second,
                                        double lambda,
                                        uint32_t k,
                                        struct RosettesFront **out);

// # Safety
// `front` is null or a handle not yet freed.
void rosettes_front_free(struct RosettesFront *front);

// Closed-form length and oriented area, corrected for multiplicity.
//
// # Safety
// `front` is a live handle; both outputs are writable.
enum RosettesStatus rosettes_front_measures(const struct RosettesFront *front,
                                            double *length,
                                            double *area);

// Polyline length and extrapolated shoelace area from `samples` points.
//
// # Safety
// `front` is a live handle; both outputs are writable.
enum RosettesStatus rosettes_front_oracle_measures(const struct RosettesFront *front,
                                                   size_t samples,
                                                   double *length,
                                                   double *area);

// Number of cusps over one traversal. Fails with `NonGeneric` when a
// zero of the radius is tangential.
//
// # Safety
// `front` is a live handle; `count` is writable.
enum RosettesStatus rosettes_front_cusp_count(const struct RosettesFront *front, size_t *count);

// Rotation number as `numerator / denominator` in lowest terms.
//
// # Safety
// `front` is a live handle; both outputs are writable.
enum RosettesStatus rosettes_front_rotation_number(const struct RosettesFront *front,
                                                   uint32_t *numerator,
                                                   uint32_t *denominator);

// Writes `n` points of one traversal into `xs` and `ys`.
//
// # Safety
// `front` is a live handle; `xs` and `ys` each have room for `n` values.
enum RosettesStatus rosettes_front_sample(const struct RosettesFront *front,
                                          size_t n,
                                          double *xs,
                                          double *ys);

// Renders the rosette with the given comma-separated layers as SVG.
// Release with `rosettes_string_free`.
//
// # Safety
// `rosette` is a live handle; `layers` is a NUL-terminated string; `out` is writable.
enum RosettesStatus rosettes_render_svg(const struct RosettesRosette *rosette,
                                        const char *layers,
                                        char **out);

// # Safety
// `text` is null or a string returned by this library and not yet freed.
void rosettes_string_free(char *text);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ROSETTES_H */
