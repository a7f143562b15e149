/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bgk/bgk.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitCheck = 2;

// CLI grids stay this far from +-sqrt(pi).
constexpr double kXiGuard = 5e-3;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string out = ".";
  std::vector<std::string> formats{"csv"};
  std::vector<double> xi;
  double xi_min = -1.76;
  double xi_max = 1.76;
  int xi_count = 101;
  double t_max = 4.0;
  int t_steps = 17;
  double dt = 0.01;
  int order = 16;
  double truncation = 8.0;
  double tolerance = -1.0;  // command default when negative
  double slope_tol = 0.05;
  double lambda_tol = 0.02;
  double fit_lo = 1.0;
  double fit_hi = 4.0;
  std::string corpus = "gaussian";
  std::vector<std::string> suites;
  bool flip_dawson = false;
  bool no_oracle = false;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int format_mask(const RunConfig &c) {
  int m = 0;
  for (const auto &f : c.formats) {
    if (f == "csv") m |= BGK_FORMAT_CSV;
    else if (f == "json") m |= BGK_FORMAT_JSON;
    else if (f == "svg") m |= BGK_FORMAT_SVG;
    else throw ConfigError("unknown format: " + f);
  }
  if (m == 0) throw ConfigError("no output format selected");
  return m;
}

std::string out_path(const RunConfig &c, const std::string &name) {
  std::error_code ec;
  std::filesystem::create_directories(c.out, ec);
  if (ec) throw ConfigError("cannot create output directory " + c.out);
  return (std::filesystem::path(c.out) / name).string();
}

void check_positive(double x, const char *what) {
  if (!(x > 0.0) || !std::isfinite(x)) throw ConfigError(std::string(what) + " must be positive");
}

void check_xi_guard(const std::vector<double> &xi, bool branch_only) {
  const double root = bgk_sqrt_pi();
  for (double x : xi) {
    if (!std::isfinite(x)) throw ConfigError("xi must be finite");
    if (std::fabs(std::fabs(x) - root) < kXiGuard)
      throw ConfigError("xi = " + fmt(x) + " lies within " + fmt(kXiGuard) + " of +-sqrt(pi)");
    if (branch_only && std::fabs(x) >= root)
      throw ConfigError("xi = " + fmt(x) + " is outside the real branch |xi| < sqrt(pi)");
  }
}

bgk_options solver_options(const RunConfig &c) {
  bgk_options o = bgk_options_default();
  o.truncation = c.truncation;
  o.points_per_panel = c.order;
  o.dt = c.dt;
  return o;
}

void fail_if(bgk_status s) {
  if (s == BGK_OK) return;
  const std::string msg = std::string(bgk_status_name(s)) + ": " + bgk_last_error();
  if (s == BGK_ERR_DOMAIN || s == BGK_ERR_INVALID_ARGUMENT || s == BGK_ERR_FIT_WINDOW)
    throw ConfigError(msg);
  throw std::runtime_error(msg);
}

std::vector<double> time_grid(const RunConfig &c) {
  check_positive(c.t_max, "--t-max");
  if (c.t_steps < 2) throw ConfigError("--t-steps must be >= 2");
  std::vector<double> t(c.t_steps);
  for (int i = 0; i < c.t_steps; ++i) t[i] = c.t_max * i / (c.t_steps - 1);
  return t;
}

int cmd_dispersion(const RunConfig &c) {
  std::vector<double> xi = c.xi;
  if (xi.empty()) {
    if (c.xi_count < 2) throw ConfigError("--xi-count must be >= 2");
    for (int i = 0; i < c.xi_count; ++i)
      xi.push_back(c.xi_min + (c.xi_max - c.xi_min) * i / (c.xi_count - 1));
  }
  check_xi_guard(xi, true);
  const double tol = c.tolerance > 0.0 ? c.tolerance : 1e-8;
  if (c.tolerance == 0.0) throw ConfigError("--tolerance must be positive");
  const int mask = format_mask(c);
  bgk_dispersion_table *t = nullptr;
  fail_if(bgk_dispersion_table_create(xi.data(), xi.size(), tol, &t));
  std::unique_ptr<bgk_dispersion_table, decltype(&bgk_dispersion_table_free)> guard(t, bgk_dispersion_table_free);
  fail_if(bgk_dispersion_table_write(t, out_path(c, "dispersion").c_str(), mask));
  int ok = 0;
  fail_if(bgk_dispersion_table_check(t, &ok));
  double worst = 0.0;
  for (size_t i = 0; i < bgk_dispersion_table_size(t); ++i) {
    double r = 0.0;
    fail_if(bgk_dispersion_table_point(t, i, nullptr, nullptr, nullptr, &r));
    worst = std::max(worst, r);
  }
  std::cout << "dispersion: " << xi.size() << " points, max residual " << fmt(worst)
            << ", tolerance " << fmt(tol) << (ok ? " ok" : " FAILED") << "\n";
  return ok ? kExitOk : kExitCheck;
}

int cmd_verify(const RunConfig &c) {
  std::string suites;
  for (const auto &s : c.suites) suites += (suites.empty() ? "" : ",") + s;
  const double scale = c.tolerance > 0.0 ? c.tolerance : 1.0;
  char *json = nullptr;
  int passed = 0;
  fail_if(bgk_verify_run(suites.c_str(), c.flip_dawson ? 1 : 0, scale, &json, &passed));
  const std::string text = json;
  bgk_string_free(json);
  std::cout << text;
  std::ofstream(out_path(c, "verify.json"), std::ios::binary) << text;
  return passed ? kExitOk : kExitCheck;
}

int cmd_index(const RunConfig &c) {
  const std::vector<double> xi = c.xi.empty() ? std::vector<double>{0.5, -2.0, 3.75} : c.xi;
  check_xi_guard(xi, false);
  const int mask = format_mask(c);
  for (double x : xi) {
    bgk_index_result *r = nullptr;
    fail_if(bgk_index_create(x, &r));
    std::unique_ptr<bgk_index_result, decltype(&bgk_index_free)> guard(r, bgk_index_free);
    fail_if(bgk_index_write(r, out_path(c, "index_xi" + fmt(x)).c_str(), mask));
    std::cout << "xi " << fmt(x) << " chi " << bgk_index_chi(r) << "\n";
  }
  return kExitOk;
}

int cmd_evolve(const RunConfig &c) {
  const std::vector<double> xi = c.xi.empty() ? std::vector<double>{0.5} : c.xi;
  check_xi_guard(xi, false);
  const auto times = time_grid(c);
  check_positive(c.dt, "--dt");
  const double tol = c.tolerance > 0.0 ? c.tolerance : 1e-3;
  const bgk_options opt = solver_options(c);
  std::ostringstream csv;
  csv << "t,xi,v,re,im,oracle_re,oracle_im\n";
  std::ostringstream summary;
  summary << "{\n  \"schema_version\": 1,\n  \"kind\": \"evolve_summary\",\n  \"corpus\": \"" << c.corpus
          << "\",\n  \"runs\": [";
  bool ok = true, first = true;
  for (double x : xi) {
    bgk_slice *s = nullptr;
    fail_if(bgk_slice_create(x, c.corpus.c_str(), &opt, &s));
    std::unique_ptr<bgk_slice, decltype(&bgk_slice_free)> sguard(s, bgk_slice_free);
    fail_if(bgk_slice_write_json(s, out_path(c, "slice_xi" + fmt(x) + ".json").c_str()));
    for (double t : times) {
      bgk_field *f = nullptr;
      fail_if(bgk_evolve(s, t, c.dt, &f));
      std::unique_ptr<bgk_field, decltype(&bgk_field_free)> fguard(f, bgk_field_free);
      if (const char *w = bgk_field_warning(f)) std::cerr << "warning: " << w << "\n";
      for (size_t i = 0; i < bgk_field_size(f); ++i) {
        double v, re, im, ore, oim;
        fail_if(bgk_field_node(f, i, &v, &re, &im, &ore, &oim));
        csv << fmt(t) << ',' << fmt(x) << ',' << fmt(v) << ',' << fmt(re) << ',' << fmt(im) << ','
            << fmt(ore) << ',' << fmt(oim) << '\n';
      }
      double dre, dim;
      bgk_field_density(f, &dre, &dim);
      const double err = bgk_field_oracle_error(f);
      ok = ok && err < tol;
      summary << (first ? "" : ",") << "\n    {\"xi\": " << fmt(x) << ", \"t\": " << fmt(t)
              << ", \"oracle_error\": " << fmt(err) << ", \"density\": [" << fmt(dre) << ", "
              << fmt(dim) << "]}";
      first = false;
    }
    std::cout << "xi " << fmt(x) << " reconstruction error " << fmt(bgk_slice_reconstruction_error(s))
              << "\n";
  }
  summary << "\n  ],\n  \"tolerance\": " << fmt(tol) << ",\n  \"passed\": " << (ok ? "true" : "false")
          << "\n}\n";
  const int mask = format_mask(c);
  if (mask & BGK_FORMAT_CSV) std::ofstream(out_path(c, "evolve.csv"), std::ios::binary) << csv.str();
  if (mask & BGK_FORMAT_JSON) std::ofstream(out_path(c, "evolve.json"), std::ios::binary) << summary.str();
  std::cout << "evolve: oracle agreement " << (ok ? "ok" : "FAILED") << " (tolerance " << fmt(tol) << ")\n";
  return ok ? kExitOk : kExitCheck;
}

int cmd_decay(const RunConfig &c) {
  const std::vector<double> xi = c.xi.empty() ? std::vector<double>{0.25, 0.5, 1.0} : c.xi;
  check_xi_guard(xi, false);
  const auto times = time_grid(c);
  check_positive(c.slope_tol, "--slope-tol");
  check_positive(c.lambda_tol, "--lambda-tol");
  check_positive(c.dt, "--dt");
  const double fit_hi = std::min(c.fit_hi, c.t_max);
  const double oracle_tol = c.tolerance > 0.0 ? c.tolerance : 1e-3;
  const bgk_options opt = solver_options(c);
  const int mask = format_mask(c);
  bgk_decay_report *r = nullptr;
  fail_if(bgk_decay_create(c.corpus.c_str(), xi.data(), xi.size(), times.data(), times.size(), c.fit_lo,
                           fit_hi, c.no_oracle ? 0 : 1, &opt, &r));
  std::unique_ptr<bgk_decay_report, decltype(&bgk_decay_free)> guard(r, bgk_decay_free);
  fail_if(bgk_decay_write(r, out_path(c, "decay_" + c.corpus).c_str(), mask));
  bool ok = true;
  for (size_t i = 0; i < bgk_decay_series_count(r); ++i) {
    double x, lam, sg, sr, st, rec, orc;
    int chi, dec;
    fail_if(bgk_decay_series(r, i, &x, &chi, &lam, &sg, &sr, &st, &rec, &orc, &dec));
    const double residual_max = bgk_decay_max_residual(r, i);
    bool row = rec < 1e-4 && (std::isnan(orc) || orc < oracle_tol);
    if (chi == -1) {
      if (!std::isnan(sg)) row = row && std::fabs(sg - lam) <= c.lambda_tol * std::fabs(lam);
      if (std::isnan(sr)) {
        row = row && residual_max < 1e-6;
      } else {
        row = row && std::fabs(sr + 1.0) <= c.slope_tol && dec == 1;
      }
    }
    ok = ok && row;
    std::cout << "xi " << fmt(x) << " chi " << chi;
    if (chi == -1) std::cout << " lambda " << fmt(lam) << " slope_gds " << fmt(sg);
    std::cout << " slope_residual " << fmt(sr) << " slope_total " << fmt(st) << " residual_max "
              << fmt(residual_max) << " reconstruction " << fmt(rec) << " oracle " << fmt(orc)
              << (row ? " ok" : " FAILED") << "\n";
  }
  return ok ? kExitOk : kExitCheck;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Spectral solver for the Fourier-transformed 1D BGK equation"};
  app.set_config("--config", "", "INI/TOML configuration file; flags override it");
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&c](CLI::App *sub) {
    sub->add_option("--out", c.out, "Output directory");
    sub->add_option("--format", c.formats, "Output formats: csv,json,svg")->delimiter(',');
    sub->add_option("--xi", c.xi, "Wavenumbers (comma separated)")->delimiter(',');
    sub->add_option("--tolerance", c.tolerance, "Pass/fail tolerance override");
    sub->add_option("--order", c.order, "Gauss-Legendre points per panel");
    sub->add_option("--truncation", c.truncation, "Velocity window half-width");
  };

  auto *disp = app.add_subcommand("dispersion", "Tabulate eta(xi), Lambda(xi) and the constraint residual");
  common(disp);
  disp->add_option("--xi-min", c.xi_min);
  disp->add_option("--xi-max", c.xi_max);
  disp->add_option("--xi-count", c.xi_count);

  auto *ver = app.add_subcommand("verify", "Run the invariant suites");
  common(ver);
  ver->add_option("--suite", c.suites, "specfun, hilbert, quadrature, operator, riemann, index")->delimiter(',');
  ver->add_flag("--flip-dawson-sign", c.flip_dawson, "Harness mode: feed a sign-flipped Dawson function");

  auto *idx = app.add_subcommand("index", "Winding index and image curve of G");
  common(idx);

  auto *evo = app.add_subcommand("evolve", "Spectral evolution against the RK4 oracle");
  common(evo);
  evo->add_option("--corpus", c.corpus, "gds-profile, gaussian, shifted-gaussian");
  evo->add_option("--t-max", c.t_max);
  evo->add_option("--t-steps", c.t_steps);
  evo->add_option("--dt", c.dt, "RK4 step");

  auto *dec = app.add_subcommand("decay", "Decay study onto the grossly determined part");
  common(dec);
  dec->add_option("--corpus", c.corpus, "gds-profile, gaussian, shifted-gaussian");
  dec->add_option("--t-max", c.t_max);
  dec->add_option("--t-steps", c.t_steps);
  dec->add_option("--dt", c.dt, "RK4 step");
  dec->add_option("--fit-lo", c.fit_lo);
  dec->add_option("--fit-hi", c.fit_hi);
  dec->add_option("--slope-tol", c.slope_tol, "Absolute band around -1 for the residual slope");
  dec->add_option("--lambda-tol", c.lambda_tol, "Relative band around Lambda for the GDS slope");
  dec->add_flag("--no-oracle", c.no_oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (c.order < 4 || c.order > 128) throw ConfigError("--order must be in 4..128");
    if (!(c.truncation > 1.0)) throw ConfigError("--truncation must exceed 1");
    if (*disp) return cmd_dispersion(c);
    if (*ver) return cmd_verify(c);
    if (*idx) return cmd_index(c);
    if (*evo) return cmd_evolve(c);
    if (*dec) return cmd_decay(c);
  } catch (const ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheck;
  }
  return kExitConfig;
}
