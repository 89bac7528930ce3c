#ifndef DINFTY_H
#define DINFTY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes shared by every entry point.
typedef enum DinftyStatus {
  DINFTY_STATUS_OK = 0,
  DINFTY_STATUS_NULL_POINTER = 1,
  DINFTY_STATUS_INVALID_RANK = 2,
  DINFTY_STATUS_INVALID_INDEX = 3,
  // Malformed UTF-8, JSON, or a buffer that is too small.
  DINFTY_STATUS_INVALID_INPUT = 4,
  // Well-formed input that is not an element of the crystal.
  DINFTY_STATUS_INVALID_ELEMENT = 5,
  // `e_i` of the element is zero.
  DINFTY_STATUS_UNDEFINED = 6,
  DINFTY_STATUS_LIMIT_EXCEEDED = 7,
  DINFTY_STATUS_VERIFICATION_FAILED = 8,
  DINFTY_STATUS_INTERNAL = 9,
} DinftyStatus;

// A Kostant partition.
typedef struct DinftyKostant DinftyKostant;

// A marginally large tableau.
typedef struct DinftyTableau DinftyTableau;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. Valid until the
// next call into the library from the same thread.
const char *dinfty_last_error(void);

// Library version as a static string.
const char *dinfty_version(void);

// # Safety
// `s` must be NULL or a string returned by this library, not yet freed.
void dinfty_string_free(char *s);

// The highest-weight tableau `T∞` of `D_n`.
//
// # Safety
// `out` must be valid for writes.
enum DinftyStatus dinfty_tableau_highest_weight(size_t n, struct DinftyTableau **out);

// Parses `{"n":…,"rows":[[…],…]}`; barred letters are negative.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be valid for writes.
enum DinftyStatus dinfty_tableau_from_json(const char *json, struct DinftyTableau **out);

// # Safety
// `t` must be a live handle; `out` must be valid for writes.
enum DinftyStatus dinfty_tableau_to_json(const struct DinftyTableau *t, char **out);

// # Safety
// `t` must be a live handle; `out` must be valid for writes.
enum DinftyStatus dinfty_tableau_f(const struct DinftyTableau *t,
                                   size_t i,
                                   struct DinftyTableau **out);

// Returns `DINFTY_STATUS_UNDEFINED` and leaves `out` untouched when `e_i T = 0`.
//
// # Safety
// `t` must be a live handle; `out` must be valid for writes.
enum DinftyStatus dinfty_tableau_e(const struct DinftyTableau *t,
                                   size_t i,
                                   struct DinftyTableau **out);

// # Safety
// `t` must be a live handle; `out` must be valid for writes.
enum DinftyStatus dinfty_tableau_epsilon(const struct DinftyTableau *t, size_t i, uint32_t *out);

// # Safety
// `t` must be a live handle; `out` must be valid for writes.
enum DinftyStatus dinfty_tableau_phi(const struct DinftyTableau *t, size_t i, int64_t *out);

// Copies the weight (ε-coordinates, `n` entries) into `buf`. `written`, if
// not NULL, receives `n` even when `len` is too small.
//
// # Safety
// `t` must be a live handle; `buf` must hold `len` entries.
enum DinftyStatus dinfty_tableau_weight(const struct DinftyTableau *t,
                                        int64_t *buf,
                                        size_t len,
                                        size_t *written);

// # Safety
// `t` must be NULL or a handle not yet freed.
void dinfty_tableau_free(struct DinftyTableau *t);

// The empty partition of `D_n`.
//
// # Safety
// `out` must be valid for writes.
enum DinftyStatus dinfty_kostant_empty(size_t n, struct DinftyKostant **out);

// Parses `{"n":…,"parts":[{"kind":"beta","i":…,"k":…,"mult":…},…]}`.
//
// # Safety
// `json` must be a NUL-terminated string; `out` must be valid for writes.
enum DinftyStatus dinfty_kostant_from_json(const char *json, struct DinftyKostant **out);

// # Safety
// `a` must be a live handle; `out` must be valid for writes.
enum DinftyStatus dinfty_kostant_to_json(const struct DinftyKostant *a, char **out);

// # Safety
// `a` must be a live handle; `out` must be valid for writes.
enum DinftyStatus dinfty_kostant_f(const struct DinftyKostant *a,
                                   size_t i,
                                   struct DinftyKostant **out);

// Returns `DINFTY_STATUS_UNDEFINED` and leaves `out` untouched when `e_i A = 0`.
//
// # Safety
// `a` must be a live handle; `out` must be valid for writes.
enum DinftyStatus dinfty_kostant_e(const struct DinftyKostant *a,
                                   size_t i,
                                   struct DinftyKostant **out);

// # Safety
// `a` must be a live handle; `out` must be valid for writes.
enum DinftyStatus dinfty_kostant_epsilon(const struct DinftyKostant *a, size_t i, uint32_t *out);

// # Safety
// `a` must be a live handle; `out` must be valid for writes.
enum DinftyStatus dinfty_kostant_phi(const struct DinftyKostant *a, size_t i, int64_t *out);

// Same contract as [`dinfty_tableau_weight`].
//
// # Safety
// `a` must be a live handle; `buf` must hold `len` entries.
enum DinftyStatus dinfty_kostant_weight(const struct DinftyKostant *a,
                                        int64_t *buf,
                                        size_t len,
                                        size_t *written);

// # Safety
// `a` must be NULL or a handle not yet freed.
void dinfty_kostant_free(struct DinftyKostant *a);

// # Safety
// `t` must be a live handle; `out` must be valid for writes.
enum DinftyStatus dinfty_psi(const struct DinftyTableau *t, struct DinftyKostant **out);

// # Safety
// `a` must be a live handle; `out` must be valid for writes.
enum DinftyStatus dinfty_psi_inverse(const struct DinftyKostant *a, struct DinftyTableau **out);

// Generates both balls of radius `depth` in `D_n` and checks the map
// between them. `DINFTY_STATUS_VERIFICATION_FAILED` carries a summary in
// [`dinfty_last_error`].
enum DinftyStatus dinfty_verify(size_t n, size_t depth);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DINFTY_H */
