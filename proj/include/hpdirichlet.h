/*
 * hpdirichlet C API.
 *
 * Flat wrapper around the Dirichlet-polynomial laboratory: opaque handles,
 * integer status codes, UTF-8 JSON strings in and out. Every function is
 * thread-safe; the error message is thread-local and valid until the next
 * failing call on the same thread. Strings returned through `char**` are
 * owned by the caller and released with hpd_free_string().
 */

#ifndef HPDIRICHLET_H
#define HPDIRICHLET_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hpd_status {
  HPD_OK = 0,
  HPD_INVALID_ARGUMENT = 1, /* bad parameter value or null pointer */
  HPD_DOMAIN_ERROR = 2,     /* precondition violated (boundary point, short character, ...) */
  HPD_PARSE_ERROR = 3,      /* malformed JSON / CSV */
  HPD_IO_ERROR = 4,         /* filesystem failure, message carries the path */
  HPD_INTERNAL_ERROR = 5
} hpd_status;

typedef struct hpd_poly hpd_poly;
typedef struct hpd_character hpd_character;
typedef struct hpd_report hpd_report;

const char* hpd_version(void);
const char* hpd_status_name(hpd_status status);
const char* hpd_last_error(void);
void hpd_free_string(char* text);

/* Worker threads used by quadratures and Monte Carlo. Affects speed only;
 * results are bit-identical for every setting. n <= 0 restores the default. */
void hpd_set_max_threads(int32_t n);

/* ---- Dirichlet polynomials -------------------------------------------- */

/* JSON shape: { "n_max": N, "coeffs": [[re, im], ...] } */
hpd_status hpd_poly_from_json(const char* text, hpd_poly** out);
hpd_status hpd_poly_to_json(const hpd_poly* f, char** out_text);
/* generator JSON: { "type": "random-gaussian" | "random-signs" |
 * "zeta-truncation" | "explicit", "n_max": N, "decay": d, "coeffs": [...] } */
hpd_status hpd_poly_generate(const char* generator_json, uint64_t seed, hpd_poly** out);
hpd_status hpd_poly_length(const hpd_poly* f, uint32_t* out_length);
hpd_status hpd_poly_eval(const hpd_poly* f, double sigma, double t, double out_re_im[2]);
hpd_status hpd_poly_translate_h(const hpd_poly* f, double kappa, hpd_poly** out);
hpd_status hpd_poly_translate_v(const hpd_poly* f, double tau, hpd_poly** out);
void hpd_poly_free(hpd_poly* f);

/* ---- Characters (points of the restricted torus) ---------------------- */

hpd_status hpd_character_sample(uint32_t prime_count, uint64_t seed, hpd_character** out);
hpd_status hpd_character_from_json(const char* text, hpd_character** out);
hpd_status hpd_character_to_json(const hpd_character* chi, char** out_text);
hpd_status hpd_character_twist(const hpd_character* chi, double tau, hpd_character** out);
hpd_status hpd_character_eval(const hpd_character* chi, uint32_t n, double out_re_im[2]);
hpd_status hpd_boundary_eval(const hpd_poly* f, const hpd_character* chi, double out_re_im[2]);
hpd_status hpd_vertical_limit(const hpd_poly* f, const hpd_character* chi, hpd_poly** out);
void hpd_character_free(hpd_character* chi);

/* ---- Means ------------------------------------------------------------ */

hpd_status hpd_exact_mean_2(const hpd_poly* f, double sigma, double* out_value);
hpd_status hpd_exact_finite_mean_2(const hpd_poly* f, double sigma, double horizon,
                                   double* out_value);
/* steps = 0 picks twice the minimum resolution for the horizon. */
hpd_status hpd_time_mean(const hpd_poly* f, double sigma, double p, double horizon,
                         uint64_t steps, double* out_value, double* out_error_bound);
hpd_status hpd_mc_torus_mean(const hpd_poly* f, double p, uint64_t samples, uint64_t seed,
                             double* out_value, double* out_stderr);

/* ---- Riesz means ------------------------------------------------------ */

hpd_status hpd_riesz_mean(const hpd_poly* f, uint32_t smoothing_n, double order,
                          double sigma, double t, double out_re_im[2]);
/* contour_x <= 0 uses the order; y_cutoff <= 0 picks the tail target. */
hpd_status hpd_riesz_contour(const hpd_poly* f, uint32_t smoothing_n, double order,
                             double contour_x, double y_cutoff, double sigma, double t,
                             double out_re_im[2], double* out_error_bound);
hpd_status hpd_hankel_residual(double u, double order, double x, double y_cutoff,
                               double* out_residual);

/* ---- Poisson extension ------------------------------------------------ */

/* Estimates the flow-growth certificate on [0, cert_T_max] at cert_grid_step,
 * then evaluates the Poisson integral over |tau - t| <= window at the given
 * trapezoid step. out_error_bound = certificate tail + quadrature estimate. */
hpd_status hpd_poisson_extend(const hpd_poly* f, const hpd_character* chi, double sigma,
                              double t, double p, double cert_T_max, double cert_grid_step,
                              double window, double step, double out_re_im[2],
                              double* out_error_bound);

/* ---- Experiment harness ------------------------------------------------ */

hpd_status hpd_config_validate(const char* config_json);
hpd_status hpd_config_canonical(const char* config_json, char** out_json);
hpd_status hpd_config_output_path(const char* config_json, char** out_path);
/* has_seed / output_path override the config copy; pass 0 / NULL to keep it. */
hpd_status hpd_config_with_overrides(const char* config_json, int has_seed, uint64_t seed,
                                     const char* output_path, char** out_json);
hpd_status hpd_poly_from_config(const char* config_json, hpd_poly** out);

hpd_status hpd_suite_run(const char* config_json, const char* suite_name, hpd_report** out);
/* Runs config.suites (all known suites when the list is empty). */
hpd_status hpd_suites_run_all(const char* config_json, hpd_report** out);

hpd_status hpd_report_row_count(const hpd_report* report, uint64_t* out_rows);
hpd_status hpd_report_counts(const hpd_report* report, uint64_t* out_pass,
                             uint64_t* out_fail, uint64_t* out_inconclusive);
hpd_status hpd_report_to_csv(const hpd_report* report, char** out_text);
hpd_status hpd_report_summary_json(const hpd_report* report, char** out_text);
hpd_status hpd_report_wall_seconds(const hpd_report* report, double* out_seconds);
/* Writes <base_path>.csv and <base_path>.json; byte-identical per config. */
hpd_status hpd_report_write(const hpd_report* report, const char* base_path);
void hpd_report_free(hpd_report* report);

/* Re-derives each row's status from (measured, bound, tolerance) and counts
 * disagreements with the stored status plus the status distribution. */
hpd_status hpd_report_audit_csv(const char* csv_text, uint64_t* out_mismatches,
                                uint64_t* out_pass, uint64_t* out_fail,
                                uint64_t* out_inconclusive);

/* CSV renderings of the operation-level outputs used by the CLI:
 * means   -> method,p,sigma,T_or_samples,value,stderr
 * riesz   -> N,k,sigma,t,abs_error,bound
 * poisson -> check,point,measured,bound,margin,pass */
hpd_status hpd_means_csv(const char* config_json, char** out_csv);
hpd_status hpd_riesz_csv(const char* config_json, char** out_csv);
hpd_status hpd_poisson_csv(const char* config_json, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* HPDIRICHLET_H */
