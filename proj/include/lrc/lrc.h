/* Copyright (c) 2026 The lrc-toolkit authors.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the locally-recoverable-code toolkit.  All handles are
 * opaque; every function returns a status code and reports details through
 * out-parameters.  Strings returned through char** out-parameters are
 * heap-allocated and must be released with lrc_string_free.
 */
#ifndef LRC_LRC_H
#define LRC_LRC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct lrc_code lrc_code; /* built code + its recovery structure */

typedef enum {
    LRC_OK = 0,
    LRC_ERR_INVALID_ARGUMENT = 1, /* null pointers, malformed JSON, bad sizes */
    LRC_ERR_DOMAIN = 2,           /* construction/parameter constraint violated */
    LRC_ERR_REFUSED = 3,          /* work budget exceeded */
    LRC_ERR_INTERNAL = 4,
} lrc_status;

/* Message for the most recent failure on the calling thread. */
const char* lrc_last_error(void);

void lrc_string_free(char* s);

/* spec_json: {"type": "tamo-barg" | "hermitian" | "power-cover" | "gk" |
 * "hermitian-lifted" | "nt-lifted", ...construction parameters}.
 * full_verify = 0 skips the generator-rank elimination on large codes. */
lrc_status lrc_code_build(const char* spec_json, int full_verify, lrc_code** out);
void lrc_code_free(lrc_code* code);

size_t lrc_code_length(const lrc_code* code);
size_t lrc_code_dimension(const lrc_code* code);

/* Construction report (n, k, localities, availability, design distance with
 * provenance, bound classification) as JSON. */
lrc_status lrc_code_describe(const lrc_code* code, char** out_json);

/* message: k element codes; out_word: n element codes. */
lrc_status lrc_encode(const lrc_code* code, const uint32_t* message, size_t message_len,
                      uint32_t* out_word);

/* word: n symbols, -1 marks an erasure; repaired in place.  cheapest_first
 * selects group trial order (1 = ascending support size, 0 = declared).
 * out_report_json (optional, may be NULL): {"repaired": [...],
 * "bandwidth": ..., "residual": [...]}. */
lrc_status lrc_recover(const lrc_code* code, int64_t* word, size_t word_len, int cheapest_first,
                       char** out_report_json);

/* Exact minimum distance by scalar-class enumeration; LRC_ERR_REFUSED when
 * the class count exceeds work_budget. */
lrc_status lrc_min_distance(const lrc_code* code, uint64_t work_budget, int32_t* out_d);

/* Verifies every repair-group identity against the generator matrix. */
lrc_status lrc_certify(const lrc_code* code, char** out_json);

/* Storage simulation.  With explicit_failures != NULL the given coordinate
 * set fails in every trial; otherwise failures are i.i.d. with probability
 * p.  Deterministic for a fixed seed. */
lrc_status lrc_simulate(const lrc_code* code, double p, const size_t* explicit_failures,
                        size_t failure_count, uint64_t seed, uint64_t trials, char** out_json);

/* Bound report for the parameter tuple; q is informational. */
lrc_status lrc_bounds_classify(long long n, long long k, long long d, long long r, long long t,
                               long long q, int all_symbol_locality, char** out_json);

/* Good-monomial enumeration for lifted codes.  curve: "hermitian" (q_or_r
 * = q) or "nt" (q_or_r = r).  delta = UINT32_MAX picks the construction
 * default.  Output: CSV "a,b,class" with class in {baseline, sporadic}. */
lrc_status lrc_good_monomials(const char* curve, uint32_t q_or_r, uint32_t delta, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif
