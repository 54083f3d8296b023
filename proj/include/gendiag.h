/*
 * C interface to the generalized-diagonal ordering library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return gd_status; on failure, gd_last_error() carries a
 * thread-local description.  Strings returned through char** out-params are
 * owned by the caller and must be released with gd_string_free().
 *
 * Permutation elements and matrix indices are 1-based at this boundary.
 */
#ifndef GENDIAG_H
#define GENDIAG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gd_status {
  GD_OK = 0,
  GD_MALFORMED_INPUT,
  GD_NOT_A_BIJECTION,
  GD_REPEATED_ELEMENT,
  GD_OUT_OF_RANGE,
  GD_DEGREE_MISMATCH,
  GD_DEGREE_TOO_LARGE,
  GD_NOT_CERTIFIED,
  GD_NOT_INCOMPARABLE,
  GD_CASE_SEARCH_FAILED,
  GD_GENERATION_FAILED,
  GD_INVALID_ARGUMENT,
  GD_INTERNAL_ERROR
} gd_status;

typedef struct gd_perm gd_perm;
typedef struct gd_matrix gd_matrix;

const char* gd_last_error(void);
void gd_string_free(char* s);

/* ---- permutations -------------------------------------------------- */

gd_status gd_perm_parse_one_line(const char* text, gd_perm** out);
gd_status gd_perm_parse_cycles(const char* text, int n, gd_perm** out);
void gd_perm_free(gd_perm* p);
int gd_perm_degree(const gd_perm* p);
gd_status gd_perm_format_cycles(const gd_perm* p, char** out);
gd_status gd_perm_format_one_line(const gd_perm* p, char** out);
gd_status gd_perm_is_involution(const gd_perm* p, int* out);

/* ---- order relations ----------------------------------------------- */

typedef enum gd_setting {
  GD_SETTING_COMPLEX_ABS = 0,
  GD_SETTING_COMPLEX_PLAIN,
  GD_SETTING_REAL_PLAIN
} gd_setting;

typedef enum gd_relation {
  GD_ALWAYS_EQUAL = 0,
  GD_SIGMA_LEQ_TAU,
  GD_TAU_LEQ_SIGMA,
  GD_INCOMPARABLE,
  GD_UNDEFINED
} gd_relation;

/* witness_tau / witness_sigma receive the certifying pair in cycle notation
 * when the verdict is a comparison, NULL otherwise; either may be NULL when
 * the caller does not want them. */
gd_status gd_classify(const gd_perm* sigma, const gd_perm* tau, gd_setting setting,
                      gd_relation* verdict, char** witness_tau, char** witness_sigma);
gd_status gd_cycle_leq(const gd_perm* tau, const gd_perm* sigma, int* out);
gd_status gd_cycle_equiv(const gd_perm* a, const gd_perm* b, int* out);
gd_status gd_bruhat_leq(const gd_perm* tau, const gd_perm* sigma, int* out);

/* ---- matrices ------------------------------------------------------- */

gd_status gd_matrix_parse(const char* text, gd_matrix** out);
gd_status gd_matrix_format(const gd_matrix* m, char** out);
void gd_matrix_free(gd_matrix* m);
int gd_matrix_dim(const gd_matrix* m);

typedef enum gd_field { GD_FIELD_REAL = 0, GD_FIELD_COMPLEX } gd_field;
typedef enum gd_gram_kind { GD_GRAM_PSD = 0, GD_GRAM_PD } gd_gram_kind;

gd_status gd_matrix_random_gram(int n, uint64_t seed, gd_field field, gd_gram_kind kind,
                                gd_matrix** out);
/* p, q are 1-based */
gd_status gd_matrix_epsilon_gram(int n, int p, int q, double epsilon, gd_matrix** out);

typedef enum gd_psd_verdict {
  GD_PD = 0,
  GD_PSD,
  GD_NOT_PSD,
  GD_NOT_HERMITIAN
} gd_psd_verdict;

typedef struct gd_psd_certificate {
  double hermitian_defect;
  double min_eigenvalue;
  gd_psd_verdict verdict;
} gd_psd_certificate;

gd_status gd_matrix_certify(const gd_matrix* m, double tol, gd_psd_certificate* out);

typedef struct gd_diag_value {
  double log_magnitude; /* -inf when a factor is exactly zero */
  double phase_re;
  double phase_im;
  int has_phase;
  int is_real;
  int sign; /* +1/-1, 0 when unset */
} gd_diag_value;

gd_status gd_generalized_diagonal(const gd_matrix* m, const gd_perm* sigma, gd_diag_value* out);

/* ---- verification and export ---------------------------------------- */

/* json_report gets the full JSON document; failure_count the number of
 * recorded failures. */
gd_status gd_verify_poset(int n, char** json_report, int* failure_count);
gd_status gd_verify_audit(int n, int trials, uint64_t seed, char** json_report,
                          int* failure_count);

/* DOT digraph of covering edges; on_classes selects the class order,
 * otherwise the cycle order on permutations is used. */
gd_status gd_hasse_dot(int n, int on_classes, char** dot);

#ifdef __cplusplus
}
#endif

#endif /* GENDIAG_H */
