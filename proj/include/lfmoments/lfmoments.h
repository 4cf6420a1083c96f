/* SPDX-License-Identifier: Apache-2.0 */
#ifndef LFMOMENTS_LFMOMENTS_H
#define LFMOMENTS_LFMOMENTS_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(LFM_BUILDING_LIBRARY)
#define LFM_API __attribute__((visibility("default")))
#else
#define LFM_API
#endif

typedef struct lfm_context lfm_context;

typedef enum lfm_status {
  LFM_OK = 0,
  LFM_ERR_INVALID_ARGUMENT = 1,
  LFM_ERR_DOMAIN = 2,
  LFM_ERR_PRECISION = 3,
  LFM_ERR_IO = 4,
  LFM_ERR_INTERNAL = 5
} lfm_status;

LFM_API const char* lfm_version(void);
LFM_API const char* lfm_status_string(lfm_status status);

/* Defaults: 256 bits, prime cutoff 10000, cache directory from LFMOMENTS_CACHE_DIR,
   output digits 0 (full stored precision). */
LFM_API lfm_status lfm_context_create(lfm_context** out);
LFM_API void lfm_context_destroy(lfm_context* ctx);

LFM_API lfm_status lfm_context_set_precision(lfm_context* ctx, long bits);
LFM_API lfm_status lfm_context_set_prime_cutoff(lfm_context* ctx, long cutoff);
/* NULL or "" disables the disk cache. */
LFM_API lfm_status lfm_context_set_cache_dir(lfm_context* ctx, const char* dir);
/* Significant digits of real values in JSON output; 0 means full stored precision. */
LFM_API lfm_status lfm_context_set_output_digits(lfm_context* ctx, int digits);

/* Message for the last failed call on ctx, or on any NULL-context call in this thread.
   Valid until the next call on the same context. */
LFM_API const char* lfm_last_error(const lfm_context* ctx);

/* Every *_json function stores a NUL-terminated JSON document in *out on success.
   Release it with lfm_string_free. On failure *out is set to NULL. */
LFM_API void lfm_string_free(char* s);

/* Partitions are passed as text: "3,1", "[3,1]" or "[]". Families are
   "qd-plus", "qd-minus" or "e11". */

LFM_API lfm_status lfm_partitions_json(lfm_context* ctx, int weight, char** out);
LFM_API lfm_status lfm_plambda_json(lfm_context* ctx, int max_weight, char** out);
LFM_API lfm_status lfm_nlambda_json(lfm_context* ctx, int max_weight, char** out);
/* Compares against the stored reference table ("plambda" or "nlambda") for weights up
   to max_weight; the document carries "ok" and the list of mismatches. */
LFM_API lfm_status lfm_table_check_json(lfm_context* ctx, const char* table, int max_weight, char** out);
LFM_API lfm_status lfm_dlambda_json(lfm_context* ctx, const char* partition, long k, char** out);

LFM_API lfm_status lfm_bcoeffs_json(lfm_context* ctx, const char* family, int k, int max_weight, char** out);
/* max_r < 0 selects every coefficient. */
LFM_API lfm_status lfm_coeffs_json(lfm_context* ctx, const char* family, int k, int max_r, char** out);
/* Includes the averaged polynomial and its 1/X remainder. */
LFM_API lfm_status lfm_qpoly_json(lfm_context* ctx, const char* family, int k, char** out);

/* suite: "cminus", "cplus", "identities" or "oracle". A failing suite still returns
   LFM_OK; the document's "ok" field carries the verdict. */
LFM_API lfm_status lfm_verify_json(lfm_context* ctx, const char* suite, int kmax, char** out);

#ifdef __cplusplus
}
#endif

#endif
