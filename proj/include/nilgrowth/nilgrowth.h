/* nilgrowth: exact-arithmetic experiments on content functions, nilgrowth
 * witnesses, degree-lowering recursion operators, and mod-p Hecke recursions.
 *
 * Conventions:
 *   - Every function returns ng_status; NG_OK is 0.  On failure,
 *     ng_last_error() describes the problem (thread-local storage).
 *   - Output strings (char **out) are heap-allocated, NUL-terminated, and
 *     owned by the caller: release them with ng_string_free.
 *   - Rational arguments and results are decimal strings "num" or "num/den".
 *   - Handles are opaque; release with the matching *_free function.
 */
#ifndef NILGROWTH_H
#define NILGROWTH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ng_status {
    NG_OK = 0,
    NG_ERROR_USAGE = 1,    /* malformed arguments */
    NG_ERROR_DOMAIN = 2,   /* arguments outside a function's domain */
    NG_ERROR_INTERNAL = 3, /* violated internal invariant; report a bug */
} ng_status;

typedef enum ng_format {
    NG_FORMAT_CSV = 0,
    NG_FORMAT_NDJSON = 1,
    NG_FORMAT_JSON = 2,
} ng_format;

/* Message for the most recent failure on this thread; never NULL. */
const char* ng_last_error(void);

void ng_string_free(char* s);

/* ---- content and carry words -------------------------------------- */

/* c_{b,beta}(q): expand q in base b, read the digits in base beta. */
ng_status ng_content_eval(uint32_t b, uint32_t beta, const char* q, char** out);

/* Carry word of m + n in base b as JSON.  With beta != 0 the document also
 * carries reed_beta of the word and both sides of the identity
 * c(m) + c(n) = c(m+n) + (b - beta) * reed_beta(r_b(m, n)). */
ng_status ng_carry_report_json(uint32_t b, uint32_t beta, const char* m, const char* n,
                               char** out);

/* ---- nilgrowth witness --------------------------------------------- */

/* Full witness report for the triple (b, d, D) as JSON: discreteness,
 * growth, base, and step verdicts with exact counterexamples.  *ok_out is 1
 * when every property holds.  n_max/k_max/n_budget bound the sampled
 * discreteness/growth range and the direct step enumeration (0 picks the
 * defaults 200/2/200). */
ng_status ng_witness_report_json(uint32_t b, uint32_t d, uint32_t bigd, uint64_t n_max,
                                 uint32_t k_max, uint64_t n_budget, int* ok_out, char** out);

/* ---- recursion operators ------------------------------------------- */

typedef struct ng_operator ng_operator;

/* Named example operator; see ng_gallery_names for the list. */
ng_status ng_operator_from_gallery(const char* name, ng_operator** out);

/* Hecke recursion operator for (p, ell) in {(2,3), (2,5), (3,2), (3,7)}.
 * variant 0: the printed companion (T_ell, modified to T_ell' for (3,7));
 * variant 1: the order-8 companion P5*(X^2+Delta^2) for (2,5);
 * variant 2: the order-8 quotient companion of plain T_7 for (3,7). */
ng_status ng_operator_hecke(uint64_t p, uint64_t ell, int variant, ng_operator** out);

void ng_operator_free(ng_operator* op);

/* Ring, companion polynomial (both sign conventions), initial values, and
 * shape flags as JSON. */
ng_status ng_operator_config_json(const ng_operator* op, char** out);

/* Table of (n, NT) with NT = N_T(y^n), the nilpotence index max{k : T^k y^n
 * != 0} (-1 encodes -infinity).  jobs 0 = one worker per core. */
ng_status ng_nilpotence_table(const ng_operator* op, const char* source_label, uint64_t n_max,
                              unsigned jobs, ng_format format, char** out);

/* Table of (n, NT, c_n, NT_over_bound_approx) against the witness value
 * c(n) = c_{b,b-bigd}(n/d), plus the growth-exponent estimate alpha_hat in
 * the parameter echo. */
ng_status ng_alpha_table(const ng_operator* op, const char* source_label, uint32_t b, uint32_t d,
                         uint32_t bigd, uint64_t n_max, unsigned jobs, ng_format format,
                         char** out);

/* Homogeneous cofactor S of the operator's companion top form H, with
 * H*S = X^e - y^e, as JSON (includes e = q^m(q-1) and the product shape). */
ng_status ng_cofactor_report_json(const ng_operator* op, char** out);

/* ---- Hecke verification and scans ----------------------------------- */

/* Recursion-vs-oracle verdicts for the pair (p, ell) up to n_max, plus the
 * kernel check t_p(Delta^n) = 0 iff p does not divide n, as JSON.  For
 * (2,5) and (3,7) the order-8 variant recurrences are verified too.
 * *ok_out is 1 when every part holds. */
ng_status ng_hecke_verify_json(uint64_t p, uint64_t ell, uint64_t n_max, int* ok_out, char** out);

/* Joint nilpotence N(Delta^n) = N_T + N_S over n prime to p.  CSV/NDJSON:
 * rows (n, NT, NS, N, ge_threshold).  JSON: the Hilbert-Samuel summary
 * document with count(k) for k in [k_min, k_max] and a diagnostic fitted
 * exponent. */
ng_status ng_hecke_scan(uint64_t p, uint64_t n_max, int64_t threshold, int64_t k_min,
                        int64_t k_max, unsigned jobs, ng_format format, char** out);

/* ---- gallery and configuration -------------------------------------- */

/* Newline-terminated list of example operator names. */
ng_status ng_gallery_names(char** out);

/* Directory consulted by Delta q-expansions ("" disables caching).  Set
 * before compute calls; the cache affects speed only, never results. */
ng_status ng_set_delta_cache_dir(const char* dir);

#ifdef __cplusplus
}
#endif

#endif /* NILGROWTH_H */
