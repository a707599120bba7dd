#ifndef DNACODES_H
#define DNACODES_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DnaFlavor {
  DNA_FLAVOR_EUCLIDEAN = 0,
  DNA_FLAVOR_HERMITIAN = 1,
} DnaFlavor;

typedef enum DnaMethod {
  DNA_METHOD_THEOREM = 0,
  DNA_METHOD_ORACLE = 1,
  DNA_METHOD_BOTH = 2,
} DnaMethod;

typedef enum DnaMode {
  DNA_MODE_REVERSIBLE = 0,
  DNA_MODE_REVERSE_COMPLEMENT = 1,
} DnaMode;

typedef enum DnaStatus {
  DNA_STATUS_OK = 0,
  DNA_STATUS_NULL_POINTER = 1,
  DNA_STATUS_INVALID_UTF8 = 2,
  DNA_STATUS_PARSE = 3,
  DNA_STATUS_INVALID_INPUT = 4,
  DNA_STATUS_CAP_EXCEEDED = 5,
  DNA_STATUS_INTERNAL = 6,
} DnaStatus;

/**
 * Opaque code handle.
 */
typedef struct DnaCode DnaCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds a code from a JSON spec `{"n": .., "generators": [..]}`.
 * On success `*out` owns a handle to release with `dna_code_free`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum DnaStatus dna_code_from_json(const char *json, struct DnaCode **out);

/**
 * # Safety
 * `code` must come from this library and not be used afterwards. Null is ignored.
 */
void dna_code_free(struct DnaCode *code);

/**
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum DnaStatus dna_code_length(const struct DnaCode *code, size_t *out);

/**
 * F2-dimension; the code has `2^dim` words.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum DnaStatus dna_code_dim(const struct DnaCode *code, size_t *out);

/**
 * Minimum Hamming distance, or -1 for the zero code. Fails with
 * `CAP_EXCEEDED` when the dimension is above `cap`.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum DnaStatus dna_code_min_distance(const struct DnaCode *code, size_t cap, int32_t *out);

/**
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum DnaStatus dna_code_is_reversible(const struct DnaCode *code, bool *out);

/**
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum DnaStatus dna_code_is_rc_closed(const struct DnaCode *code, bool *out);

/**
 * Whether the DNA string (two nucleotides per coordinate) is a codeword.
 *
 * # Safety
 * `code` must be a live handle, `dna` NUL-terminated, `out` writable.
 */
enum DnaStatus dna_code_contains_dna(const struct DnaCode *code, const char *dna, bool *out);

/**
 * New handle for the dual code.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum DnaStatus dna_code_dual(const struct DnaCode *code,
                             enum DnaFlavor flavor,
                             struct DnaCode **out);

/**
 * JSON report; release with `dna_string_free`.
 *
 * # Safety
 * `code` must be a live handle; `out` must be writable.
 */
enum DnaStatus dna_code_report_json(const struct DnaCode *code, size_t cap, char **out);

/**
 * Theorem and/or exhaustive check of a JSON spec; the result is the JSON
 * check report. `*satisfied` receives the overall outcome.
 *
 * # Safety
 * `spec` must be NUL-terminated; `satisfied` and `out` must be writable.
 */
enum DnaStatus dna_check_json(const char *spec,
                              enum DnaMode mode,
                              enum DnaMethod method,
                              size_t cap,
                              bool *satisfied,
                              char **out);

/**
 * The worked example's multiples and shifts as a JSON array of DNA strings.
 *
 * # Safety
 * `out` must be writable.
 */
enum DnaStatus dna_table2_json(char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards. Null is ignored.
 */
void dna_string_free(char *s);

/**
 * Message for the last failure on this thread, or null. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *dna_last_error_message(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* DNACODES_H */
