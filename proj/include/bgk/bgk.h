/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#ifndef BGK_BGK_H
#define BGK_BGK_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(BGK_BUILDING_LIBRARY)
#    define BGK_API __declspec(dllexport)
#  else
#    define BGK_API __declspec(dllimport)
#  endif
#else
#  define BGK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bgk_status {
  BGK_OK = 0,
  BGK_ERR_INVALID_ARGUMENT = 1,
  BGK_ERR_DOMAIN = 2,
  BGK_ERR_SPECTRAL_PROXIMITY = 3,
  BGK_ERR_SINGULAR = 4,
  BGK_ERR_REFINEMENT = 5,
  BGK_ERR_POLE_OUTSIDE_WINDOW = 6,
  BGK_ERR_NON_FINITE = 7,
  BGK_ERR_DEGENERATE = 8,
  BGK_ERR_NON_DECAYING = 9,
  BGK_ERR_FIT_WINDOW = 10,
  BGK_ERR_IO = 11,
  BGK_ERR_INTERNAL = 99
} bgk_status;

typedef enum bgk_format {
  BGK_FORMAT_CSV = 1,
  BGK_FORMAT_JSON = 2,
  BGK_FORMAT_SVG = 4
} bgk_format;

typedef struct bgk_dispersion_table bgk_dispersion_table;
typedef struct bgk_index_result bgk_index_result;
typedef struct bgk_slice bgk_slice;
typedef struct bgk_field bgk_field;
typedef struct bgk_decay_report bgk_decay_report;

typedef struct bgk_options {
  double truncation;     /* velocity window half-width */
  int points_per_panel;  /* Gauss-Legendre points per panel */
  double dt;             /* RK4 oracle step */
} bgk_options;

/* Message of the last failed call on this thread ("" if none). */
BGK_API const char *bgk_last_error(void);
BGK_API const char *bgk_status_name(bgk_status s);
BGK_API void bgk_string_free(char *s);

/* Scalars */
BGK_API double bgk_sqrt_pi(void);
BGK_API double bgk_xi_edge_clip(void);
BGK_API bgk_status bgk_gaussian_weight(double v, double *out);
BGK_API bgk_status bgk_dawson(double v, double *out);
BGK_API bgk_status bgk_xi_function(double eta, double *out);
BGK_API bgk_status bgk_eta_of_xi(double xi, double *out);
BGK_API bgk_status bgk_lambda_of_xi(double xi, double *out);
BGK_API bgk_status bgk_constraint_residual(double lambda_re, double lambda_im, double xi,
                                           double *re, double *im);

/* Dispersion table */
BGK_API bgk_status bgk_dispersion_table_create(const double *xi, size_t n, double tolerance,
                                               bgk_dispersion_table **out);
BGK_API size_t bgk_dispersion_table_size(const bgk_dispersion_table *t);
BGK_API bgk_status bgk_dispersion_table_point(const bgk_dispersion_table *t, size_t i,
                                              double *xi, double *eta, double *lambda,
                                              double *residual);
/* *ok = 1 iff every residual is below tolerance and Lambda is monotone in |xi| */
BGK_API bgk_status bgk_dispersion_table_check(const bgk_dispersion_table *t, int *ok);
/* formats: bitwise OR of bgk_format; files are <stem>.csv / .json / .svg */
BGK_API bgk_status bgk_dispersion_table_write(const bgk_dispersion_table *t, const char *stem,
                                              int formats);
BGK_API void bgk_dispersion_table_free(bgk_dispersion_table *t);

/* Winding index */
BGK_API bgk_status bgk_index_create(double xi, bgk_index_result **out);
BGK_API int bgk_index_chi(const bgk_index_result *r);
BGK_API size_t bgk_index_curve_size(const bgk_index_result *r);
BGK_API bgk_status bgk_index_write(const bgk_index_result *r, const char *stem, int formats);
BGK_API void bgk_index_free(bgk_index_result *r);

/* Spectral slice from a corpus profile ("gds-profile", "gaussian", "shifted-gaussian") */
BGK_API bgk_options bgk_options_default(void);
/* opt may be NULL for defaults */
BGK_API bgk_status bgk_slice_create(double xi, const char *corpus, const bgk_options *opt,
                                    bgk_slice **out);
BGK_API int bgk_slice_chi(const bgk_slice *s);
BGK_API bgk_status bgk_slice_lambda(const bgk_slice *s, double *out);
BGK_API void bgk_slice_c0(const bgk_slice *s, double *re, double *im);
BGK_API size_t bgk_slice_size(const bgk_slice *s);
BGK_API bgk_status bgk_slice_node(const bgk_slice *s, size_t i, double *v, double *k0_re,
                                  double *k0_im);
/* relative phi-norm error of the t = 0 reconstruction */
BGK_API double bgk_slice_reconstruction_error(const bgk_slice *s);
BGK_API bgk_status bgk_slice_write_json(const bgk_slice *s, const char *path);
BGK_API void bgk_slice_free(bgk_slice *s);

/* Evolution of a slice: spectral solution and RK4 oracle at time t */
BGK_API bgk_status bgk_evolve(const bgk_slice *s, double t, double dt, bgk_field **out);
BGK_API size_t bgk_field_size(const bgk_field *f);
BGK_API bgk_status bgk_field_node(const bgk_field *f, size_t i, double *v, double *re,
                                  double *im, double *oracle_re, double *oracle_im);
BGK_API double bgk_field_oracle_error(const bgk_field *f);
BGK_API void bgk_field_density(const bgk_field *f, double *re, double *im);
/* NULL when resolved, otherwise a message owned by the field */
BGK_API const char *bgk_field_warning(const bgk_field *f);
BGK_API void bgk_field_free(bgk_field *f);

/* Decay study */
BGK_API bgk_status bgk_decay_create(const char *corpus, const double *xi, size_t nxi,
                                    const double *times, size_t nt, double fit_lo,
                                    double fit_hi, int with_oracle, const bgk_options *opt,
                                    bgk_decay_report **out);
BGK_API size_t bgk_decay_series_count(const bgk_decay_report *r);
/* chi, slopes (NaN when not defined), reconstruction error, max oracle error (NaN if off),
   ratio_decreasing */
BGK_API bgk_status bgk_decay_series(const bgk_decay_report *r, size_t i, double *xi, int *chi,
                                    double *lambda, double *slope_gds, double *slope_residual,
                                    double *slope_total, double *reconstruction_error,
                                    double *max_oracle_error, int *ratio_decreasing);
/* largest residual norm over all times of series i */
BGK_API double bgk_decay_max_residual(const bgk_decay_report *r, size_t i);
BGK_API bgk_status bgk_decay_write(const bgk_decay_report *r, const char *stem, int formats);
BGK_API void bgk_decay_free(bgk_decay_report *r);

/* Verification suites: comma-separated names or NULL/"" for all.
   *json_out must be released with bgk_string_free. */
BGK_API bgk_status bgk_verify_run(const char *suites, int flip_dawson_sign,
                                  double tolerance_scale, char **json_out, int *all_passed);

#ifdef __cplusplus
}
#endif

#endif
