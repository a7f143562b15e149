/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
/* Exercises the shared library through its C header only. */
#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "bgk/bgk.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static void test_scalars(void) {
  double x = 0.0, re = 0.0, im = 0.0;
  EXPECT(bgk_dawson(1.0, &x) == BGK_OK);
  EXPECT(fabs(x - 0.538079506912768419) < 1e-15);
  EXPECT(bgk_xi_function(0.0, &x) == BGK_ERR_DOMAIN);
  EXPECT(strlen(bgk_last_error()) > 0);
  EXPECT(bgk_lambda_of_xi(0.5, &x) == BGK_OK);
  EXPECT(fabs(x + 0.113911634571638163) < 1e-14);
  EXPECT(bgk_lambda_of_xi(1.7725, &x) == BGK_ERR_DOMAIN);
  EXPECT(bgk_eta_of_xi(0.5, NULL) == BGK_ERR_INVALID_ARGUMENT);
  EXPECT(bgk_constraint_residual(-0.113911634571638163, 0.0, 0.5, &re, &im) == BGK_OK);
  EXPECT(hypot(re, im) < 1e-8);
  EXPECT(fabs(bgk_sqrt_pi() - 1.7724538509055160) < 1e-15);
  EXPECT(bgk_xi_edge_clip() == 1e-6);
  EXPECT(strcmp(bgk_status_name(BGK_ERR_SPECTRAL_PROXIMITY), "spectral_proximity") == 0);
  EXPECT(strcmp(bgk_status_name(BGK_OK), "ok") == 0);
}

static void test_dispersion(void) {
  double xi[5] = {-1.5, -0.5, 0.0, 0.5, 1.5};
  bgk_dispersion_table *t = NULL;
  int ok = 0;
  double a, eta, lam, res;
  EXPECT(bgk_dispersion_table_create(xi, 5, 1e-8, &t) == BGK_OK);
  EXPECT(bgk_dispersion_table_size(t) == 5);
  EXPECT(bgk_dispersion_table_point(t, 3, &a, &eta, &lam, &res) == BGK_OK);
  EXPECT(a == 0.5 && res < 1e-8);
  EXPECT(bgk_dispersion_table_point(t, 9, &a, &eta, &lam, &res) == BGK_ERR_INVALID_ARGUMENT);
  EXPECT(bgk_dispersion_table_check(t, &ok) == BGK_OK && ok == 1);
  EXPECT(bgk_dispersion_table_write(t, "/nonexistent-dir/x/disp", BGK_FORMAT_CSV) == BGK_ERR_IO);
  bgk_dispersion_table_free(t);
  xi[4] = 2.0;
  t = NULL;
  EXPECT(bgk_dispersion_table_create(xi, 5, 1e-8, &t) == BGK_ERR_DOMAIN);
  EXPECT(t == NULL);
}

static void test_index(void) {
  bgk_index_result *r = NULL;
  EXPECT(bgk_index_create(0.5, &r) == BGK_OK);
  EXPECT(bgk_index_chi(r) == -1);
  EXPECT(bgk_index_curve_size(r) >= 400);
  bgk_index_free(r);
  EXPECT(bgk_index_create(3.75, &r) == BGK_OK);
  EXPECT(bgk_index_chi(r) == 0);
  bgk_index_free(r);
  EXPECT(bgk_index_create(1.7725, &r) == BGK_ERR_DOMAIN);
}

static void test_slice_and_evolve(void) {
  bgk_slice *s = NULL;
  bgk_field *f = NULL;
  double lam = 0.0, re, im, v, kre, kim;
  bgk_options opt = bgk_options_default();
  EXPECT(bgk_slice_create(0.5, "gaussian", NULL, &s) == BGK_OK);
  EXPECT(bgk_slice_chi(s) == -1);
  EXPECT(bgk_slice_lambda(s, &lam) == BGK_OK);
  bgk_slice_c0(s, &re, &im);
  EXPECT(fabs(re - 0.818231731792) < 1e-9);
  EXPECT(bgk_slice_size(s) > 100);
  EXPECT(bgk_slice_node(s, 0, &v, &kre, &kim) == BGK_OK);
  EXPECT(v < -7.0);
  EXPECT(bgk_slice_reconstruction_error(s) < 1e-4);
  EXPECT(bgk_evolve(s, 1.0, 0.01, &f) == BGK_OK);
  EXPECT(bgk_field_oracle_error(f) < 1e-3);
  EXPECT(bgk_field_warning(f) == NULL);
  bgk_field_density(f, &re, &im);
  EXPECT(isfinite(re) && isfinite(im));
  bgk_field_free(f);
  EXPECT(bgk_evolve(s, -1.0, 0.01, &f) == BGK_ERR_INVALID_ARGUMENT);
  bgk_slice_free(s);

  EXPECT(bgk_slice_create(2.0, "shifted-gaussian", &opt, &s) == BGK_OK);
  EXPECT(bgk_slice_chi(s) == 0);
  EXPECT(bgk_slice_lambda(s, &lam) == BGK_ERR_DOMAIN);
  bgk_slice_c0(s, &re, &im);
  EXPECT(re == 0.0 && im == 0.0);
  bgk_slice_free(s);

  EXPECT(bgk_slice_create(0.5, "nope", NULL, &s) == BGK_ERR_INVALID_ARGUMENT);
  EXPECT(bgk_slice_create(2.0, "gds-profile", NULL, &s) == BGK_ERR_DOMAIN);
  opt.points_per_panel = 1;
  EXPECT(bgk_slice_create(0.5, "gaussian", &opt, &s) == BGK_ERR_INVALID_ARGUMENT);
}

static void test_decay(void) {
  double xi[2] = {0.5, 2.0};
  double times[9];
  bgk_decay_report *r = NULL;
  double x, lam, sg, sr, st, rec, oe;
  int chi, dec, i;
  for (i = 0; i < 9; ++i) times[i] = 0.5 * i;
  EXPECT(bgk_decay_create("gds-profile", xi, 1, times, 9, 1.0, 4.0, 1, NULL, &r) == BGK_OK);
  EXPECT(bgk_decay_series_count(r) == 1);
  EXPECT(bgk_decay_max_residual(r, 0) < 1e-6);
  EXPECT(bgk_decay_series(r, 0, &x, &chi, &lam, &sg, &sr, &st, &rec, &oe, &dec) == BGK_OK);
  EXPECT(isnan(sr));
  EXPECT(fabs(sg - lam) < 1e-10);
  bgk_decay_free(r);
  EXPECT(bgk_decay_create("gaussian", xi, 2, times, 9, 1.0, 4.0, 0, NULL, &r) == BGK_OK);
  EXPECT(bgk_decay_series(r, 1, &x, &chi, &lam, &sg, &sr, &st, &rec, &oe, &dec) == BGK_OK);
  EXPECT(chi == 0 && isnan(lam) && isnan(sg) && isnan(oe));
  EXPECT(bgk_decay_series(r, 2, &x, &chi, &lam, &sg, &sr, &st, &rec, &oe, &dec) == BGK_ERR_INVALID_ARGUMENT);
  bgk_decay_free(r);
  EXPECT(bgk_decay_create("gaussian", xi, 1, times, 9, 3.9, 4.0, 0, NULL, &r) == BGK_ERR_FIT_WINDOW);
}

static void test_verify(void) {
  char *json = NULL;
  int passed = 0;
  EXPECT(bgk_verify_run("index", 0, 1.0, &json, &passed) == BGK_OK);
  EXPECT(passed == 1);
  EXPECT(json != NULL && strstr(json, "\"index\"") != NULL);
  bgk_string_free(json);
  json = NULL;
  EXPECT(bgk_verify_run("hilbert", 1, 1.0, &json, &passed) == BGK_OK);
  EXPECT(passed == 0);
  bgk_string_free(json);
  EXPECT(bgk_verify_run("bogus", 0, 1.0, &json, &passed) == BGK_ERR_INVALID_ARGUMENT);
}

int main(void) {
  test_scalars();
  test_dispersion();
  test_index();
  test_slice_and_evolve();
  test_decay();
  test_verify();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
