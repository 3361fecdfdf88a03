/*
 * park — probabilistic parking on a line segment (labeled IDLA).
 *
 * C interface to the simulation engine, the exact analytics layer, the
 * Catalan counting layer, the samplers, and the statistics harness. All
 * functions return a park_status; results travel through out-parameters.
 * Handles are opaque and freed with their matching *_free function. Exact
 * values (big integers / rationals) are returned as heap strings; release
 * them with park_string_free.
 *
 * Probabilities passed as strings select the arithmetic mode: "2/3" keeps
 * exact rational arithmetic end to end, "0.5" computes in doubles.
 */

#ifndef PARK_H
#define PARK_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32
#define PARK_API __declspec(dllexport)
#else
#define PARK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum park_status {
    PARK_OK = 0,
    PARK_EINVAL = 1,   /* malformed input (bad list, unparseable argument) */
    PARK_EDOMAIN = 2,  /* arguments outside a formula's domain */
    PARK_ENOCONV = 3,  /* a series failed to converge within its budget */
    PARK_ECHECK = 4,   /* a verification suite ran and failed */
    PARK_EINTERNAL = 5
} park_status;

PARK_API const char* park_status_name(park_status s);
/* message for the last failing call on this thread; empty string if none */
PARK_API const char* park_last_error(void);
PARK_API const char* park_version(void);
PARK_API void park_string_free(char* s);

/* ---------------- preference lists ---------------- */

typedef struct park_prefs park_prefs;

PARK_API park_status park_prefs_create(const int64_t* entries, size_t n, park_prefs** out);
/* comma/whitespace separated, e.g. "1,2,1" */
PARK_API park_status park_prefs_parse(const char* text, park_prefs** out);
PARK_API void park_prefs_free(park_prefs* p);
PARK_API size_t park_prefs_len(const park_prefs* p);
PARK_API int64_t park_prefs_entry(const park_prefs* p, size_t car_1based);

PARK_API park_status park_prefs_classify(const park_prefs* p, int* is_parking_function,
                                         int* is_identity_outcome, int* is_weakly_increasing);
PARK_API park_status park_prefs_mirror(const park_prefs* p, park_prefs** out);
/* out must hold park_prefs_len entries; requires identity outcome */
PARK_API park_status park_prefs_displacement(const park_prefs* p, int64_t* out);

/* ---------------- result documents ---------------- */

/* structured results serialized as JSON (UTF-8); pointer owned by the doc */
typedef struct park_doc park_doc;
PARK_API const char* park_doc_json(const park_doc* d);
/* 1 when the underlying checks all passed, 0 otherwise; docs that carry no
 * pass/fail notion report 1 */
PARK_API int park_doc_passed(const park_doc* d);
PARK_API void park_doc_free(park_doc* d);

/* classical rightward protocol: slots, lucky cars, failed cars, displacement */
PARK_API park_status park_classical(const park_prefs* p, park_doc** out);

/* Dyck-path bridge: "UUDD..." <-> weakly increasing preference lists */
PARK_API park_status park_dyck_to_wipf(const char* path, park_prefs** out);
PARK_API park_status park_wipf_to_dyck(const park_prefs* p, char** path_out);
PARK_API park_status park_dyck_returns(const char* path, int64_t* out);

/* ---------------- stochastic protocol ---------------- */

typedef struct park_walk_params {
    double p;              /* rightward step probability */
    int unbounded;         /* 0: open boundary, 1: unbounded */
    int64_t step_cap;      /* per-walk cap; CAP_EXCEEDED reported separately */
    int64_t escape_margin; /* 0: derived from p (unbounded only) */
    int record_trajectories;
} park_walk_params;

PARK_API void park_walk_params_init(park_walk_params* params);

typedef struct park_sim_summary {
    uint64_t trials;
    uint64_t all_park_count;
    uint64_t cap_exceeded_trials;
    double all_park_freq;
    double cond_mean_steps; /* over trials where every car parked */
    double cond_var_steps;
} park_sim_summary;

/* seeded batch of protocol runs; summary and doc are each optional */
PARK_API park_status park_simulate(const park_prefs* p, const park_walk_params* params,
                                   uint64_t seed, uint64_t trials, park_sim_summary* summary,
                                   park_doc** doc);

/* ---------------- exact analytics ----------------
 * value_out always receives the double value; exact_out (optional) receives
 * the exact rational as a string when p was given as a ratio, else NULL. */

PARK_API park_status park_open_prob_single(int64_t i, int64_t s, const char* p, double* value_out,
                                           char** exact_out);
PARK_API park_status park_open_prob_all(const park_prefs* alpha, const char* p, double* value_out,
                                        char** exact_out);
PARK_API park_status park_open_time_single(int64_t i, int64_t s, const char* p, double* value_out,
                                           char** exact_out);
PARK_API park_status park_open_time_all(const park_prefs* alpha, const char* p, double* value_out,
                                        char** exact_out);
/* (2n^3+3n^2+n)/18 - (1/3) sum alpha_i^2, the p = 1/2 closed form */
PARK_API park_status park_open_time_all_half(const park_prefs* alpha, double* value_out,
                                             char** exact_out);
PARK_API park_status park_unbounded_prob_single(int64_t d, const char* p, double tol,
                                                double* value_out, char** exact_out);
PARK_API park_status park_unbounded_prob_all(const park_prefs* alpha, const char* p,
                                             double* value_out, char** exact_out);
PARK_API park_status park_unbounded_time(int64_t d, const char* p, double* value_out,
                                         char** exact_out);
PARK_API park_status park_unbounded_variance(int64_t d, const char* p, double* value_out,
                                             char** exact_out);

/* truncated series with certified tail; PARK_ENOCONV when the budget runs out */
PARK_API park_status park_unbounded_prob_series(int64_t d, double p, double tol, double* value_out,
                                                int64_t* terms_out, double* tail_out);
PARK_API park_status park_time_via_paths(int64_t i, int64_t s, double p, double tol,
                                         double* value_out, int64_t* terms_out, double* tail_out);

PARK_API park_status park_ruin_path_count(int64_t b, int64_t k, char** count_out);
PARK_API park_status park_catalan_convolution(int64_t d, int64_t l, char** count_out);
PARK_API park_status park_bounded_path_count(int64_t i, int64_t j, int64_t k, char** count_out);

/* residual of the expected-time closed form in its linear system */
PARK_API park_status park_verify_time_solution(int64_t i, const char* p, double* max_residual_out,
                                               int* exact_zero_out);

/* ---------------- counting layer ---------------- */

PARK_API park_status park_catalan_number(int64_t n, char** out);
PARK_API park_status park_catalan_triangle(int64_t n, int64_t k, char** out);
PARK_API park_status park_wipf_entry_count(int64_t n, int64_t i, int64_t j, char** out);
/* {"n":..,"counts":["..",..],"total":".."} */
PARK_API park_status park_last_entry_distribution(int64_t n, park_doc** out);
/* exact mean (n^2+2)/(n+2) and the shifted closed form n(n-1)/(n+2) */
PARK_API park_status park_expected_last_entry(int64_t n, char** mean_out, char** alt_out);
PARK_API park_status park_lucky_set_probability(int64_t n, const int64_t* members, size_t count,
                                                char** out);
/* use_alt_factor != 0 evaluates the unnormalized n/k variant */
PARK_API park_status park_lucky_count_distribution(int64_t n, int use_alt_factor, park_doc** out);
PARK_API park_status park_expected_lucky(int64_t n, char** out);
/* formula: wipf-fraction | last-entry-fixed | last-entry-near-top | last-entry-growing */
PARK_API park_status park_asymptotic(const char* formula, int64_t n, int64_t j, double* value_out,
                                     char** exact_ratio_out);
PARK_API park_status park_identity_checks(int64_t n_max, park_doc** out);
PARK_API park_status park_conditional_monotonicity(int64_t n, int64_t m, const int64_t* indices,
                                                   size_t count, int* holds_out);

/* ---------------- samplers ---------------- */

/* family: "pf" | "wipf" | "pf-id"; the draw is a pure function of
 * (family, n, seed, draw_index) */
PARK_API park_status park_sample(const char* family, int64_t n, uint64_t seed, uint64_t draw_index,
                                 park_prefs** out);
/* empirical WIPF statistics against the exact layer */
PARK_API park_status park_sampler_stats(int64_t n, uint64_t seed, uint64_t draws, park_doc** out);

/* ---------------- statistics harness ---------------- */

/* subsets: semicolon-separated member lists, e.g. "2,3;1,2,3"; NULL for none */
PARK_API park_status park_correlation_test(const park_prefs* alpha, const park_walk_params* params,
                                           uint64_t seed, uint64_t trials, const char* subsets,
                                           park_doc** out);
PARK_API park_status park_chernoff_check(const park_prefs* alpha, const park_walk_params* params,
                                         uint64_t seed, uint64_t trials, const double* deltas,
                                         size_t delta_count, park_doc** out);
PARK_API park_status park_cross_validate(int64_t n_max, const double* ps, size_t p_count,
                                         uint64_t trials, uint64_t seed, park_doc** out);
/* exact unconditional per-car parking probabilities (open boundary, n <= 20) */
PARK_API park_status park_exact_marginals(const park_prefs* alpha, const char* p, double* out);

typedef struct park_heatmap park_heatmap;
PARK_API park_status park_heatmap_compute(int64_t n, int64_t p_steps, int64_t y_steps,
                                          park_heatmap** out);
PARK_API size_t park_heatmap_p_count(const park_heatmap* h);
PARK_API size_t park_heatmap_y_count(const park_heatmap* h);
PARK_API double park_heatmap_p_at(const park_heatmap* h, size_t pi);
PARK_API double park_heatmap_y_at(const park_heatmap* h, size_t yi);
PARK_API uint64_t park_heatmap_cell(const park_heatmap* h, size_t pi, size_t yi);
PARK_API uint64_t park_heatmap_total(const park_heatmap* h);
PARK_API void park_heatmap_free(park_heatmap* h);

/* named verification suites: identities | convolution | series | time-solution |
 * dyck | combinatorics-oracle | discrepancies | montecarlo | all.
 * Returns PARK_ECHECK (doc still produced) when a suite fails. */
PARK_API park_status park_verify_suite(const char* suite, int64_t n_max, uint64_t trials,
                                       uint64_t seed, park_doc** out);

#ifdef __cplusplus
}
#endif

#endif /* PARK_H */
