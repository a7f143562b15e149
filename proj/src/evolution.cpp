/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bgk/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bgk/dispersion.hpp"
#include "bgk/specfun.hpp"
#include "parallel.hpp"

namespace bgk {

namespace {

std::shared_ptr<const VelocityGrid> slice_grid(const SpectralSlice &s) {
  if (!s.grid) throw Error(ErrorCode::InvalidArgument, "spectral slice without grid");
  return std::shared_ptr<const VelocityGrid>(s.grid, &s.grid->grid);
}

void check_finite(const CVec &f, const char *who) {
  for (const cplx &z : f)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::NonFinite, std::string(who) + ": non-finite values");
}

// Plain RK4 on the node system from t0 to t1.
CVec rk4(CVec f, const VelocityGrid &g, double xi, double t0, double t1, double dt) {
  const double span = t1 - t0;
  if (span <= 0.0) return f;
  const int steps = static_cast<int>(std::ceil(span / dt - 1e-9));
  const double h = span / steps;
  const std::size_t n = f.size();
  std::vector<cplx> rate(n);
  for (std::size_t i = 0; i < n; ++i) rate[i] = -cplx(1.0, xi * g.nodes[i]);
  auto deriv = [&](const CVec &u, CVec &out) {
    cplx m = 0.0;
    for (std::size_t i = 0; i < n; ++i) m += g.weights[i] * u[i];
    for (std::size_t i = 0; i < n; ++i) out[i] = rate[i] * u[i] + m;
  };
  CVec k1(n), k2(n), k3(n), k4(n), tmp(n);
  for (int s = 0; s < steps; ++s) {
    deriv(f, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = f[i] + 0.5 * h * k1[i];
    deriv(tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = f[i] + 0.5 * h * k2[i];
    deriv(tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = f[i] + h * k3[i];
    deriv(tmp, k4);
    for (std::size_t i = 0; i < n; ++i) f[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    for (const cplx &z : f)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw Error(ErrorCode::NonFinite, "oracle_integrate: step produced non-finite values");
  }
  return f;
}

}  // namespace

VSliceFunction evolve_spectral(const SpectralSlice &slice, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "evolve_spectral: t must be >= 0");
  auto grid = slice_grid(slice);
  const auto &x = grid->nodes;
  const std::size_t n = x.size();
  if (slice.k0.size() != n) throw Error(ErrorCode::InvalidArgument, "evolve_spectral: K0 size mismatch");
  const double xi = slice.xi;
  CVec shifted(n);
  for (std::size_t i = 0; i < n; ++i) shifted[i] = slice.k0[i] * std::polar(1.0, -xi * x[i] * t);
  const CVec pv = slice.grid->cauchy.apply(shifted);
  VSliceFunction out{grid, CVec(n), xi};
  const double decay = std::exp(-t);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx a(xi, -2.0 * dawson(x[i]));
    const cplx ell = cplx(0.0, 1.0) * pv[i] + shifted[i] / gaussian_weight(x[i]) * a;
    out.values[i] = decay * ell;
  }
  if (slice.chi == -1 && slice.lambda) {
    const double lam = *slice.lambda;
    const cplx c = std::exp(lam * t) * slice.c0;
    for (std::size_t i = 0; i < n; ++i) out.values[i] += c / cplx(1.0 + lam, xi * x[i]);
  }
  check_finite(out.values, "evolve_spectral");
  return out;
}

std::optional<std::string> oscillation_warning(const SpectralSlice &slice, double t) {
  auto grid = slice_grid(slice);
  const auto &b = grid->layout.breaks;
  double widest = 0.0;
  for (std::size_t i = 1; i < b.size(); ++i) widest = std::max(widest, b[i] - b[i - 1]);
  const int p = grid->points_per_panel;
  const double phase = std::fabs(slice.xi) * t * widest;
  const int needed = static_cast<int>(std::ceil(phase / 2.0)) + 8;
  if (needed <= p) return std::nullopt;
  std::ostringstream os;
  os << "e^{-i xi v t} under-resolved at xi = " << slice.xi << ", t = " << t << ": about "
     << needed << " points per panel (" << needed * b.size() << " nodes) needed, have " << p;
  return os.str();
}

VSliceFunction gds_solution(cplx rho0_hat, double xi, double t,
                            std::shared_ptr<const VelocityGrid> grid) {
  if (!grid) throw Error(ErrorCode::InvalidArgument, "gds_solution: no grid");
  if (std::fabs(xi) > kSqrtPi - kXiEdgeClip)
    throw Error(ErrorCode::Domain, "gds_solution: |xi| must be below sqrt(pi)");
  const double lam = lambda_of_xi(xi);
  const cplx c = std::exp(lam * t) * rho0_hat;
  return make_slice_function(std::move(grid), xi,
                             [&](double v) { return c / cplx(1.0 + lam, xi * v); });
}

cplx density_moment(const VSliceFunction &f) { return collision_moment(f); }

VSliceFunction oracle_integrate(const VSliceFunction &fhat0, double t_end, double dt) {
  if (!fhat0.grid) throw Error(ErrorCode::InvalidArgument, "oracle_integrate: no grid");
  if (!(t_end >= 0.0) || !(dt > 0.0))
    throw Error(ErrorCode::InvalidArgument, "oracle_integrate: need t_end >= 0 and dt > 0");
  check_finite(fhat0.values, "oracle_integrate");
  VSliceFunction out = fhat0;
  out.values = rk4(fhat0.values, *fhat0.grid, fhat0.xi, 0.0, t_end, dt);
  return out;
}

double fit_log_slope(const std::vector<double> &times, const std::vector<double> &norms,
                     double lo, double hi) {
  if (times.size() != norms.size()) throw Error(ErrorCode::InvalidArgument, "fit_log_slope: size mismatch");
  double st = 0.0, sy = 0.0, stt = 0.0, sty = 0.0;
  int m = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < lo - 1e-12 || times[i] > hi + 1e-12 || !(norms[i] > 0.0)) continue;
    const double y = std::log(norms[i]);
    st += times[i];
    sy += y;
    stt += times[i] * times[i];
    sty += times[i] * y;
    ++m;
  }
  if (m < 3) throw Error(ErrorCode::FitWindow, "fit_log_slope: fewer than 3 samples in the fit window");
  const double det = m * stt - st * st;
  if (det <= 0.0) throw Error(ErrorCode::FitWindow, "fit_log_slope: degenerate fit window");
  return (m * sty - st * sy) / det;
}

DecayReport decay_study(const InitialData &field0, const std::vector<double> &xi,
                        const std::vector<double> &times, const DecayOptions &opt) {
  if (times.empty()) throw Error(ErrorCode::InvalidArgument, "decay_study: no times");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] >= 0.0)) throw Error(ErrorCode::InvalidArgument, "decay_study: negative time");
    if (i > 0 && !(times[i] > times[i - 1]))
      throw Error(ErrorCode::InvalidArgument, "decay_study: times must increase");
  }
  DecayReport report;
  report.corpus = field0.name;
  report.times = times;
  report.fit_lo = opt.fit_lo;
  report.fit_hi = opt.fit_hi;
  report.series.resize(xi.size());
  detail::parallel_for(xi.size(), [&](std::size_t j) {
    DecaySeries &s = report.series[j];
    const SliceSolver solver(xi[j], opt.solver);
    const VSliceFunction f0 = solver.sample([&](double v) { return field0(xi[j], v); });
    const SpectralSlice slice = solver.solve(f0);
    s.xi = xi[j];
    s.lambda = slice.lambda;
    s.chi = slice.chi;
    s.c0 = slice.c0;
    s.reconstruction_error = relative_distance(evolve_spectral(slice, 0.0), f0);
    s.warnings = holder_screen(field0, xi[j], 100.0);
    if (auto w = oscillation_warning(slice, times.back())) s.warnings.push_back(*w);
    CVec oracle = f0.values;
    double t_prev = 0.0;
    for (double t : times) {
      const VSliceFunction f = evolve_spectral(slice, t);
      VSliceFunction gds = f;
      for (std::size_t i = 0; i < gds.size(); ++i) {
        const double v = f.grid->nodes[i];
        gds.values[i] = slice.chi == -1 ? std::exp(*slice.lambda * t) * slice.c0 /
                                              cplx(1.0 + *slice.lambda, slice.xi * v)
                                        : cplx(0.0);
      }
      VSliceFunction residual = f;
      for (std::size_t i = 0; i < f.size(); ++i) residual.values[i] -= gds.values[i];
      s.gds_norm.push_back(norm_phi(gds));
      s.residual_norm.push_back(norm_phi(residual));
      s.total_norm.push_back(norm_phi(f));
      s.residual_density.push_back(density_moment(residual));
      if (opt.with_oracle) {
        oracle = rk4(oracle, *f.grid, slice.xi, t_prev, t, opt.dt);
        t_prev = t;
        VSliceFunction o = f;
        o.values = oracle;
        s.oracle_error.push_back(relative_distance(f, o));
      }
    }
    s.slope_total = fit_log_slope(times, s.total_norm, opt.fit_lo, opt.fit_hi);
    const bool has_gds = slice.chi == -1 && std::abs(slice.c0) > 0.0;
    if (has_gds) s.slope_gds = fit_log_slope(times, s.gds_norm, opt.fit_lo, opt.fit_hi);
    double smallest = HUGE_VAL;
    for (std::size_t i = 0; i < times.size(); ++i)
      if (times[i] >= opt.fit_lo - 1e-12 && times[i] <= opt.fit_hi + 1e-12)
        smallest = std::min(smallest, s.residual_norm[i] / std::max(1e-300, s.total_norm[i]));
    // a residual at round-off level carries no rate
    if (smallest > 1e-10) s.slope_residual = fit_log_slope(times, s.residual_norm, opt.fit_lo, opt.fit_hi);
    s.ratio_decreasing = has_gds;
    double last = HUGE_VAL;
    for (std::size_t i = 0; has_gds && i < times.size(); ++i) {
      if (times[i] < opt.fit_lo - 1e-12 || times[i] > opt.fit_hi + 1e-12) continue;
      const double r = s.residual_norm[i] / s.gds_norm[i];
      if (!(r < last)) s.ratio_decreasing = false;
      last = r;
    }
  });
  return report;
}

CVec inverse_fourier_density(const std::vector<double> &xi, const CVec &rho_hat,
                             const std::vector<double> &x) {
  if (xi.size() != rho_hat.size() || xi.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "inverse_fourier_density: need matching xi and rho_hat");
  std::vector<double> w(xi.size(), 0.0);
  for (std::size_t k = 0; k + 1 < xi.size(); ++k) {
    const double h = xi[k + 1] - xi[k];
    if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "inverse_fourier_density: xi must increase");
    w[k] += 0.5 * h;
    w[k + 1] += 0.5 * h;
  }
  CVec out(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    cplx sum = 0.0;
    for (std::size_t k = 0; k < xi.size(); ++k) sum += w[k] * rho_hat[k] * std::polar(1.0, xi[k] * x[j]);
    out[j] = sum / (2.0 * kPi);
  }
  return out;
}

}  // namespace bgk
