#ifndef CURVECOUNT_H
#define CURVECOUNT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes. The numeric values of `PRECONDITION` and `INTERNAL` match the
// command-line exit codes.
typedef enum CcStatus {
  CC_STATUS_OK = 0,
  CC_STATUS_NULL_POINTER = 1,
  CC_STATUS_INVALID_ARGUMENT = 2,
  CC_STATUS_PRECONDITION = 3,
  CC_STATUS_INTERNAL = 4,
  CC_STATUS_UNSUPPORTED = 5,
  CC_STATUS_PANIC = 6,
} CcStatus;

// Opaque Chow-ring class on a Grassmannian.
typedef struct CcClass CcClass;

// Opaque pipeline result.
typedef struct CcReport CcReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the last failure on this thread, or NULL. The pointer
// stays valid until the next failing call on the same thread.
const char *cc_last_error(void);

// Library version as a static NUL-terminated string.
const char *cc_version(void);

// # Safety
// `s` must be NULL or a string returned by this library that has not been freed.
void cc_string_free(char *s);

// Lines on a general degree-`degree` hypersurface in `P^ambient`.
//
// # Safety
// `out` must be valid for writing a pointer.
enum CcStatus cc_count_lines_hypersurface(uint32_t ambient, uint32_t degree, struct CcReport **out);

// Lines on a general complete intersection of `len` hypersurfaces.
//
// # Safety
// `degrees` must point to `len` readable `uint32_t` values; `out` must be writable.
enum CcStatus cc_count_lines_complete_intersection(uint32_t ambient,
                                                   const uint32_t *degrees,
                                                   size_t len,
                                                   struct CcReport **out);

// Conics on a general quintic threefold.
//
// # Safety
// `out` must be valid for writing a pointer.
enum CcStatus cc_count_conics_quintic(struct CcReport **out);

// Equivalence of the lines on a degree-`factor_degree` component.
//
// # Safety
// `out` must be valid for writing a pointer.
enum CcStatus cc_equivalence_lines_on_factor(uint32_t total_degree,
                                             uint32_t factor_degree,
                                             uint32_t ambient,
                                             struct CcReport **out);

// # Safety
// `out` must be valid for writing a pointer.
enum CcStatus cc_degeneration_split_report(uint32_t total_degree,
                                           uint32_t ambient,
                                           struct CcReport **out);

// # Safety
// `out` must be valid for writing a pointer.
enum CcStatus cc_tally_checks(struct CcReport **out);

// Always fails with `CC_STATUS_UNSUPPORTED`.
//
// # Safety
// `out` must be valid for writing a pointer.
enum CcStatus cc_count_twisted_cubics_quintic(struct CcReport **out);

// The count as a decimal string (free with `cc_string_free`); NULL if `report` is NULL.
//
// # Safety
// `report` must be NULL or a live handle.
char *cc_report_count(const struct CcReport *report);

// Structured JSON form of the report (free with `cc_string_free`).
//
// # Safety
// `report` must be NULL or a live handle.
char *cc_report_to_json(const struct CcReport *report, bool with_trace);

// True when every consistency identity in the report holds.
//
// # Safety
// `report` must be NULL or a live handle.
bool cc_report_all_consistent(const struct CcReport *report);

// # Safety
// `report` must be NULL or a handle not yet freed.
void cc_report_free(struct CcReport *report);

// The Schubert class `σ_λ` on `Gr(r, n)`; `parts` lists `λ` (may be NULL when `len == 0`).
//
// # Safety
// `parts` must point to `len` readable values; `out` must be writable.
enum CcStatus cc_class_schubert(uint32_t r,
                                uint32_t n,
                                const uint32_t *parts,
                                size_t len,
                                struct CcClass **out);

// Product of two classes on the same Grassmannian.
//
// # Safety
// `a`, `b` must be live handles; `out` must be writable.
enum CcStatus cc_class_multiply(const struct CcClass *a,
                                const struct CcClass *b,
                                struct CcClass **out);

// Pieri product with the special class `σ_k`.
//
// # Safety
// `a` must be a live handle; `out` must be writable.
enum CcStatus cc_class_pieri(const struct CcClass *a, uint32_t k, struct CcClass **out);

// Degree of the class as a decimal string (free with `cc_string_free`).
//
// # Safety
// `a` must be NULL or a live handle.
char *cc_class_integrate(const struct CcClass *a);

// Serialized class: JSON list of `[partition, "coefficient"]` pairs.
//
// # Safety
// `a` must be NULL or a live handle.
char *cc_class_to_json(const struct CcClass *a);

// # Safety
// `a` must be NULL or a handle not yet freed.
void cc_class_free(struct CcClass *a);

// `h^0` of `O(a) ⊕ O(b)` and whether the curve is infinitesimally rigid.
//
// # Safety
// `h0` and `rigid` must be writable.
enum CcStatus cc_normal_bundle_h0(int64_t a, int64_t b, int64_t *h0, bool *rigid);

// Reads a NUL-terminated partition string such as `"2,1"`.
//
// # Safety
// `text` must be a valid C string; `out` must be writable.
enum CcStatus cc_class_parse(uint32_t r, uint32_t n, const char *text, struct CcClass **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CURVECOUNT_H */
