/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bgk/bgk.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "bgk/coefficients.hpp"
#include "bgk/dispersion.hpp"
#include "bgk/evolution.hpp"
#include "bgk/io.hpp"
#include "bgk/specfun.hpp"
#include "bgk/verify.hpp"

struct bgk_dispersion_table {
  bgk::DispersionTable table;
};

struct bgk_index_result {
  bgk::IndexResult result;
};

struct bgk_slice {
  bgk::SpectralSlice slice;
  bgk::VSliceFunction fhat0;
  double reconstruction_error;
};

struct bgk_field {
  bgk::VSliceFunction spectral;
  bgk::VSliceFunction oracle;
  double oracle_error;
  std::optional<std::string> warning;
};

struct bgk_decay_report {
  bgk::DecayReport report;
};

namespace {

thread_local std::string g_last_error;

bgk_status to_status(bgk::ErrorCode c) {
  return static_cast<bgk_status>(static_cast<int>(c));
}

template <class F>
bgk_status guarded(F &&f) {
  try {
    g_last_error.clear();
    f();
    return BGK_OK;
  } catch (const bgk::Error &e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return BGK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return BGK_ERR_INTERNAL;
  }
}

void need(const void *p, const char *what) {
  if (!p) throw bgk::Error(bgk::ErrorCode::InvalidArgument, std::string("null ") + what);
}

void write_formats(const std::string &stem, int formats, const std::string &csv,
                   const std::string &json, const std::string &svg) {
  if (formats == 0) throw bgk::Error(bgk::ErrorCode::InvalidArgument, "no output format selected");
  if (formats & BGK_FORMAT_CSV) bgk::write_text(stem + ".csv", csv);
  if (formats & BGK_FORMAT_JSON) bgk::write_text(stem + ".json", json);
  if (formats & BGK_FORMAT_SVG) bgk::write_text(stem + ".svg", svg);
}

bgk::SolverOptions solver_options(const bgk_options *opt) {
  bgk::SolverOptions o;
  if (!opt) return o;
  if (!(opt->truncation > 1.0) || opt->points_per_panel < 4 || opt->points_per_panel > 128)
    throw bgk::Error(bgk::ErrorCode::InvalidArgument, "options: need truncation > 1 and 4..128 points per panel");
  o.truncation = opt->truncation;
  o.points_per_panel = opt->points_per_panel;
  return o;
}

std::vector<std::string> split_csv(const char *s) {
  std::vector<std::string> out;
  if (!s) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

extern "C" {

const char *bgk_last_error(void) { return g_last_error.c_str(); }

const char *bgk_status_name(bgk_status s) {
  if (s == BGK_OK) return "ok";
  if (s == BGK_ERR_INTERNAL) return "internal";
  return bgk::error_code_name(static_cast<bgk::ErrorCode>(s));
}

void bgk_string_free(char *s) { delete[] s; }

double bgk_sqrt_pi(void) { return bgk::kSqrtPi; }
double bgk_xi_edge_clip(void) { return bgk::kXiEdgeClip; }

bgk_status bgk_gaussian_weight(double v, double *out) {
  return guarded([&] { need(out, "out"); *out = bgk::gaussian_weight(v); });
}

bgk_status bgk_dawson(double v, double *out) {
  return guarded([&] { need(out, "out"); *out = bgk::dawson(v); });
}

bgk_status bgk_xi_function(double eta, double *out) {
  return guarded([&] { need(out, "out"); *out = bgk::xi_function(eta); });
}

bgk_status bgk_eta_of_xi(double xi, double *out) {
  return guarded([&] { need(out, "out"); *out = bgk::eta_of_xi(xi); });
}

bgk_status bgk_lambda_of_xi(double xi, double *out) {
  return guarded([&] { need(out, "out"); *out = bgk::lambda_of_xi(xi); });
}

bgk_status bgk_constraint_residual(double lambda_re, double lambda_im, double xi, double *re,
                                   double *im) {
  return guarded([&] {
    need(re, "re");
    need(im, "im");
    const bgk::cplx r = bgk::constraint_residual(bgk::cplx(lambda_re, lambda_im), xi);
    *re = r.real();
    *im = r.imag();
  });
}

bgk_status bgk_dispersion_table_create(const double *xi, size_t n, double tolerance,
                                       bgk_dispersion_table **out) {
  return guarded([&] {
    need(out, "out");
    if (n > 0) need(xi, "xi");
    *out = nullptr;
    auto *t = new bgk_dispersion_table{bgk::build_dispersion_table(std::vector<double>(xi, xi + n), tolerance)};
    *out = t;
  });
}

size_t bgk_dispersion_table_size(const bgk_dispersion_table *t) { return t ? t->table.points.size() : 0; }

bgk_status bgk_dispersion_table_point(const bgk_dispersion_table *t, size_t i, double *xi,
                                      double *eta, double *lambda, double *residual) {
  return guarded([&] {
    need(t, "table");
    if (i >= t->table.points.size()) throw bgk::Error(bgk::ErrorCode::InvalidArgument, "index out of range");
    const auto &p = t->table.points[i];
    if (xi) *xi = p.xi;
    if (eta) *eta = p.eta;
    if (lambda) *lambda = p.lambda;
    if (residual) *residual = t->table.residuals[i];
  });
}

bgk_status bgk_dispersion_table_check(const bgk_dispersion_table *t, int *ok) {
  return guarded([&] {
    need(t, "table");
    need(ok, "ok");
    *ok = t->table.residuals_within() && t->table.monotone_in_abs_xi();
  });
}

bgk_status bgk_dispersion_table_write(const bgk_dispersion_table *t, const char *stem, int formats) {
  return guarded([&] {
    need(t, "table");
    need(stem, "stem");
    write_formats(stem, formats, bgk::dispersion_csv(t->table), bgk::dispersion_json(t->table),
                  bgk::dispersion_svg(t->table));
  });
}

void bgk_dispersion_table_free(bgk_dispersion_table *t) { delete t; }

bgk_status bgk_index_create(double xi, bgk_index_result **out) {
  return guarded([&] {
    need(out, "out");
    *out = nullptr;
    *out = new bgk_index_result{bgk::winding_index(xi)};
  });
}

int bgk_index_chi(const bgk_index_result *r) { return r ? r->result.chi : 0; }

size_t bgk_index_curve_size(const bgk_index_result *r) { return r ? r->result.image_curve.size() : 0; }

bgk_status bgk_index_write(const bgk_index_result *r, const char *stem, int formats) {
  return guarded([&] {
    need(r, "index result");
    need(stem, "stem");
    write_formats(stem, formats, bgk::image_curve_csv(r->result), bgk::image_curve_json(r->result),
                  bgk::image_curve_svg(r->result));
  });
}

void bgk_index_free(bgk_index_result *r) { delete r; }

bgk_options bgk_options_default(void) {
  const bgk::SolverOptions d;
  return bgk_options{d.truncation, d.points_per_panel, 0.01};
}

bgk_status bgk_slice_create(double xi, const char *corpus, const bgk_options *opt, bgk_slice **out) {
  return guarded([&] {
    need(out, "out");
    need(corpus, "corpus");
    *out = nullptr;
    const bgk::InitialData data = bgk::corpus_profile(corpus);
    if (!data.in_support(xi))
      throw bgk::Error(bgk::ErrorCode::Domain, std::string("xi outside the support of ") + corpus);
    const bgk::SliceSolver solver(xi, solver_options(opt));
    bgk::VSliceFunction f0 = solver.sample([&](double v) { return data(xi, v); });
    bgk::SpectralSlice s = solver.solve(f0);
    const double err = bgk::relative_distance(bgk::evolve_spectral(s, 0.0), f0);
    *out = new bgk_slice{std::move(s), std::move(f0), err};
  });
}

int bgk_slice_chi(const bgk_slice *s) { return s ? s->slice.chi : 0; }

bgk_status bgk_slice_lambda(const bgk_slice *s, double *out) {
  return guarded([&] {
    need(s, "slice");
    need(out, "out");
    if (!s->slice.lambda) throw bgk::Error(bgk::ErrorCode::Domain, "no real branch for this xi");
    *out = *s->slice.lambda;
  });
}

void bgk_slice_c0(const bgk_slice *s, double *re, double *im) {
  if (!s) return;
  if (re) *re = s->slice.c0.real();
  if (im) *im = s->slice.c0.imag();
}

size_t bgk_slice_size(const bgk_slice *s) { return s ? s->slice.k0.size() : 0; }

bgk_status bgk_slice_node(const bgk_slice *s, size_t i, double *v, double *k0_re, double *k0_im) {
  return guarded([&] {
    need(s, "slice");
    if (i >= s->slice.k0.size()) throw bgk::Error(bgk::ErrorCode::InvalidArgument, "index out of range");
    if (v) *v = s->slice.grid->grid.nodes[i];
    if (k0_re) *k0_re = s->slice.k0[i].real();
    if (k0_im) *k0_im = s->slice.k0[i].imag();
  });
}

double bgk_slice_reconstruction_error(const bgk_slice *s) {
  return s ? s->reconstruction_error : std::numeric_limits<double>::quiet_NaN();
}

bgk_status bgk_slice_write_json(const bgk_slice *s, const char *path) {
  return guarded([&] {
    need(s, "slice");
    need(path, "path");
    bgk::write_text(path, bgk::slice_json(s->slice));
  });
}

void bgk_slice_free(bgk_slice *s) { delete s; }

bgk_status bgk_evolve(const bgk_slice *s, double t, double dt, bgk_field **out) {
  return guarded([&] {
    need(s, "slice");
    need(out, "out");
    *out = nullptr;
    bgk::VSliceFunction spectral = bgk::evolve_spectral(s->slice, t);
    bgk::VSliceFunction oracle = bgk::oracle_integrate(s->fhat0, t, dt);
    const double err = bgk::relative_distance(spectral, oracle);
    *out = new bgk_field{std::move(spectral), std::move(oracle), err,
                         bgk::oscillation_warning(s->slice, t)};
  });
}

size_t bgk_field_size(const bgk_field *f) { return f ? f->spectral.size() : 0; }

bgk_status bgk_field_node(const bgk_field *f, size_t i, double *v, double *re, double *im,
                          double *oracle_re, double *oracle_im) {
  return guarded([&] {
    need(f, "field");
    if (i >= f->spectral.size()) throw bgk::Error(bgk::ErrorCode::InvalidArgument, "index out of range");
    if (v) *v = f->spectral.grid->nodes[i];
    if (re) *re = f->spectral.values[i].real();
    if (im) *im = f->spectral.values[i].imag();
    if (oracle_re) *oracle_re = f->oracle.values[i].real();
    if (oracle_im) *oracle_im = f->oracle.values[i].imag();
  });
}

double bgk_field_oracle_error(const bgk_field *f) {
  return f ? f->oracle_error : std::numeric_limits<double>::quiet_NaN();
}

void bgk_field_density(const bgk_field *f, double *re, double *im) {
  if (!f) return;
  const bgk::cplx d = bgk::density_moment(f->spectral);
  if (re) *re = d.real();
  if (im) *im = d.imag();
}

const char *bgk_field_warning(const bgk_field *f) {
  return f && f->warning ? f->warning->c_str() : nullptr;
}

void bgk_field_free(bgk_field *f) { delete f; }

bgk_status bgk_decay_create(const char *corpus, const double *xi, size_t nxi, const double *times,
                            size_t nt, double fit_lo, double fit_hi, int with_oracle,
                            const bgk_options *options, bgk_decay_report **out) {
  return guarded([&] {
    need(corpus, "corpus");
    need(out, "out");
    if (nxi > 0) need(xi, "xi");
    if (nt > 0) need(times, "times");
    *out = nullptr;
    const bgk::InitialData data = bgk::corpus_profile(corpus);
    for (size_t i = 0; i < nxi; ++i)
      if (!data.in_support(xi[i]))
        throw bgk::Error(bgk::ErrorCode::Domain, std::string("xi outside the support of ") + corpus);
    bgk::DecayOptions opt;
    opt.fit_lo = fit_lo;
    opt.fit_hi = fit_hi;
    opt.with_oracle = with_oracle != 0;
    opt.solver = solver_options(options);
    if (options) {
      if (!(options->dt > 0.0)) throw bgk::Error(bgk::ErrorCode::InvalidArgument, "options: dt must be positive");
      opt.dt = options->dt;
    }
    *out = new bgk_decay_report{bgk::decay_study(data, std::vector<double>(xi, xi + nxi),
                                                 std::vector<double>(times, times + nt), opt)};
  });
}

double bgk_decay_max_residual(const bgk_decay_report *r, size_t i) {
  if (!r || i >= r->report.series.size()) return std::numeric_limits<double>::quiet_NaN();
  double m = 0.0;
  for (double x : r->report.series[i].residual_norm) m = std::max(m, x);
  return m;
}

size_t bgk_decay_series_count(const bgk_decay_report *r) { return r ? r->report.series.size() : 0; }

bgk_status bgk_decay_series(const bgk_decay_report *r, size_t i, double *xi, int *chi,
                            double *lambda, double *slope_gds, double *slope_residual,
                            double *slope_total, double *reconstruction_error,
                            double *max_oracle_error, int *ratio_decreasing) {
  return guarded([&] {
    need(r, "report");
    if (i >= r->report.series.size()) throw bgk::Error(bgk::ErrorCode::InvalidArgument, "index out of range");
    const auto &s = r->report.series[i];
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (xi) *xi = s.xi;
    if (chi) *chi = s.chi;
    if (lambda) *lambda = s.lambda.value_or(nan);
    if (slope_gds) *slope_gds = s.slope_gds.value_or(nan);
    if (slope_residual) *slope_residual = s.slope_residual.value_or(nan);
    if (slope_total) *slope_total = s.slope_total;
    if (reconstruction_error) *reconstruction_error = s.reconstruction_error;
    if (max_oracle_error) {
      double m = s.oracle_error.empty() ? nan : 0.0;
      for (double e : s.oracle_error) m = std::max(m, e);
      *max_oracle_error = m;
    }
    if (ratio_decreasing) *ratio_decreasing = s.ratio_decreasing ? 1 : 0;
  });
}

bgk_status bgk_decay_write(const bgk_decay_report *r, const char *stem, int formats) {
  return guarded([&] {
    need(r, "report");
    need(stem, "stem");
    write_formats(stem, formats, bgk::decay_csv(r->report), bgk::decay_json(r->report),
                  bgk::decay_svg(r->report));
  });
}

void bgk_decay_free(bgk_decay_report *r) { delete r; }

bgk_status bgk_verify_run(const char *suites, int flip_dawson_sign, double tolerance_scale,
                          char **json_out, int *all_passed) {
  return guarded([&] {
    need(json_out, "json_out");
    *json_out = nullptr;
    bgk::VerifyOptions opt;
    opt.suites = split_csv(suites);
    opt.flip_dawson_sign = flip_dawson_sign != 0;
    opt.tolerance_scale = tolerance_scale;
    const auto results = bgk::run_verify(opt);
    const std::string text = bgk::verify_json(results);
    char *buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *json_out = buf;
    if (all_passed) *all_passed = bgk::all_passed(results) ? 1 : 0;
  });
}

}  // extern "C"
