/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bgk/riemann.hpp"

#include <algorithm>
#include <cmath>

#include "bgk/coefficients.hpp"
#include "bgk/specfun.hpp"

namespace bgk {

namespace {

constexpr double kIndexSpan = 12.0;
constexpr double kMaxArgStep = kPi / 2.0;
constexpr int kMaxDepth = 48;
constexpr int kTailPoints = 48;

void check_xi(double xi, const char *who) {
  if (!std::isfinite(xi)) throw Error(ErrorCode::InvalidArgument, std::string(who) + ": xi must be finite");
  if (std::fabs(std::fabs(xi) - kSqrtPi) < kIndexEdgeGuard)
    throw Error(ErrorCode::Domain, std::string(who) + ": xi too close to +-sqrt(pi)");
}

cplx rho(double xi, int chi, double t) {
  cplx r = boundary_G(xi, t);
  const cplx m = cplx(t, -1.0) / cplx(t, 1.0);
  for (int k = 0; k < -chi; ++k) r *= m;
  for (int k = 0; k < chi; ++k) r /= m;
  return r;
}

template <class F>
double arg_increment(const F &f, double a, double b, cplx fa, cplx fb, int depth,
                     std::vector<ImageSample> *trace = nullptr) {
  const double inc = std::arg(fb / fa);
  if (std::fabs(inc) <= kMaxArgStep) return inc;
  if (depth >= kMaxDepth)
    throw Error(ErrorCode::Refinement, "argument jump stays above pi/2 after refinement");
  const double m = 0.5 * (a + b);
  const cplx fm = f(m);
  const double left = arg_increment(f, a, m, fa, fm, depth + 1, trace);
  if (trace) trace->push_back({m, fm});
  return left + arg_increment(f, m, b, fm, fb, depth + 1, trace);
}

const GaussRule &tail_rule() {
  static const GaussRule r = gauss_legendre(kTailPoints);
  return r;
}

}  // namespace

cplx BoundaryCoefficients::A(double v) const { return {xi, -2.0 * dawson(v)}; }
double BoundaryCoefficients::B(double v) const { return -kPi * gaussian_weight(v); }

cplx boundary_G(double xi, double v) {
  const double phi = gaussian_weight(v);
  const double d = dawson(v);
  const double pphi = kPi * phi;
  const double den = (xi - pphi) * (xi - pphi) + 4.0 * d * d;
  if (den == 0.0) throw Error(ErrorCode::Singular, "boundary_G: vanishing denominator");
  return {(xi * xi - pphi * pphi + 4.0 * d * d) / den, 4.0 * pphi * d / den};
}

int expected_index(double xi) { return std::fabs(xi) < kSqrtPi ? -1 : 0; }

IndexResult winding_index(double xi, int base_samples) {
  check_xi(xi, "winding_index");
  if (base_samples < 8) throw Error(ErrorCode::InvalidArgument, "winding_index: too few samples");
  // sinh spacing puts most samples near v = 0 where G turns fastest
  const double a = 6.0;
  std::vector<double> v(base_samples);
  for (int k = 0; k < base_samples; ++k) {
    const double u = -1.0 + 2.0 * k / (base_samples - 1);
    v[k] = kIndexSpan * std::sinh(a * u) / std::sinh(a);
  }
  auto g = [xi](double t) { return boundary_G(xi, t); };
  IndexResult r;
  r.xi = xi;
  cplx prev = g(v[0]);
  r.image_curve.push_back({v[0], prev});
  double total = std::arg(prev);
  for (int k = 1; k < base_samples; ++k) {
    const cplx cur = g(v[k]);
    total += arg_increment(g, v[k - 1], v[k], prev, cur, 0, &r.image_curve);
    r.image_curve.push_back({v[k], cur});
    prev = cur;
  }
  total -= std::arg(prev);
  r.total_increment = total;
  const double turns = total / (2.0 * kPi);
  const double rounded = std::nearbyint(turns);
  if (std::fabs(turns - rounded) > 0.25)
    throw Error(ErrorCode::Refinement, "winding_index: argument increment is not a whole turn");
  r.chi = static_cast<int>(rounded);
  return r;
}

CanonicalSolution::CanonicalSolution(double xi, int chi, std::shared_ptr<const SpectralGrid> grid)
    : xi_(xi), chi_(chi), grid_(std::move(grid)) {
  check_xi(xi, "CanonicalSolution");
  if (chi != expected_index(xi))
    throw Error(ErrorCode::InvalidArgument, "CanonicalSolution: chi does not match xi");
  const auto &x = grid_->grid.nodes;
  const std::size_t n = x.size();
  auto f = [this](double t) { return rho(xi_, chi_, t); };
  CVec r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = f(x[i]);
  std::vector<double> arg(n);
  arg[n - 1] = std::arg(r[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;)
    arg[i] = arg[i + 1] + arg_increment(f, x[i + 1], x[i], r[i + 1], r[i], 0);
  const double far_left = 2.0 * chi_ * std::atan(1.0 / x[0]);
  if (std::fabs(arg[0] - far_left) > 0.5)
    throw Error(ErrorCode::Refinement, "CanonicalSolution: log branch does not close over the real line");
  lnrho_.resize(n);
  for (std::size_t i = 0; i < n; ++i) lnrho_[i] = {std::log(std::abs(r[i])), arg[i]};
  const CVec pv = grid_->cauchy.apply(lnrho_);
  gamma_.resize(n);
  xplus_.resize(n);
  const cplx two_pi_i(0.0, 2.0 * kPi);
  for (std::size_t i = 0; i < n; ++i) {
    gamma_[i] = 0.5 * lnrho_[i] + (pv[i] + tail(x[i])) / two_pi_i;
    xplus_[i] = std::exp(gamma_[i]);
  }
}

cplx CanonicalSolution::log_rho(double v) const {
  const auto &x = grid_->grid.nodes;
  auto f = [this](double t) { return rho(xi_, chi_, t); };
  const cplx rv = f(v);
  if (v >= x.back() || v <= x.front()) return std::log(rv);
  auto it = std::lower_bound(x.begin(), x.end(), v);
  std::size_t k = static_cast<std::size_t>(it - x.begin());
  if (k > 0 && v - x[k - 1] < x[k] - v) --k;
  const cplx rk = f(x[k]);
  const double arg = lnrho_[k].imag() + arg_increment(f, x[k], v, rk, rv, 0);
  return {std::log(std::abs(rv)), arg};
}

cplx CanonicalSolution::tail(cplx z) const {
  if (chi_ == 0) return 0.0;
  const double t = grid_->grid.layout.upper();
  const double a = 1.0 / t;
  const GaussRule &gl = tail_rule();
  // t = 1/u maps |t| > T onto |u| < a
  double i1 = 0.0;
  for (int k = 0; k < kTailPoints; ++k) {
    const double u = a * gl.nodes[k];
    i1 += a * gl.weights[k] * (u == 0.0 ? 1.0 : std::atan(u) / u);
  }
  cplx i2 = 0.0;
  if (z.imag() == 0.0) {
    const double v = z.real();
    if (v != 0.0) {
      if (std::fabs(std::fabs(v) - t) < 1e-12)
        throw Error(ErrorCode::PoleOutsideWindow, "tail: velocity on the truncation edge");
      const double c = std::atan(1.0 / v);
      double body = 0.0;
      for (int k = 0; k < kTailPoints; ++k) {
        const double u = a * gl.nodes[k];
        const double den = 1.0 - u * v;
        body += a * gl.weights[k] * (den == 0.0 ? -1.0 / (v * (1.0 + u * u)) : (std::atan(u) - c) / den);
      }
      i2 = body - c / v * std::log(std::fabs((1.0 - a * v) / (1.0 + a * v)));
    }
  } else {
    for (int k = 0; k < kTailPoints; ++k) {
      const double u = a * gl.nodes[k];
      i2 += a * gl.weights[k] * std::atan(u) / (1.0 - u * z);
    }
  }
  return cplx(0.0, 2.0 * chi_) * (i1 + z * i2);
}

cplx CanonicalSolution::gamma_plus(double v) const {
  if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "gamma_plus: v must be finite");
  const auto &layout = grid_->grid.layout;
  const double t = layout.upper();
  const cplx two_pi_i(0.0, 2.0 * kPi);
  const cplx lv = log_rho(v);
  cplx body;
  if (std::fabs(v) < t) {
    PVKernelSpec spec;
    spec.pole = v;
    spec.truncation = t;
    spec.refinement = grid_->grid.points_per_panel;
    spec.fine_scale = std::min(0.125, layout.breaks[1] - layout.breaks[0]);
    spec.extra_breaks = layout.breaks;
    spec.integrand = [this](double s) { return log_rho(s); };
    body = pv_integral(spec);
  } else {
    const auto &x = grid_->grid.nodes;
    const auto &w = grid_->grid.dv_weights;
    for (std::size_t i = 0; i < x.size(); ++i) body += w[i] * lnrho_[i] / (x[i] - v);
  }
  return 0.5 * lv + (body + tail(cplx(v, 0.0))) / two_pi_i;
}

cplx CanonicalSolution::gamma_sectional(cplx z) const {
  if (z.imag() == 0.0) throw Error(ErrorCode::InvalidArgument, "gamma_sectional: z must be off the real axis");
  const auto &layout = grid_->grid.layout;
  const double t = layout.upper();
  const double v = z.real();
  const double eps = std::fabs(z.imag());
  const cplx two_pi_i(0.0, 2.0 * kPi);
  cplx body;
  if (std::fabs(v) < t) {
    // subtract log_rho(v) so the remaining integrand stays bounded as eps -> 0
    const cplx lv = log_rho(v);
    PanelLayout fine = PanelLayout::graded(t, v, std::min(0.125, eps / 4.0)).merged(layout);
    body = integrate([&](double s) { return (log_rho(s) - lv) / (s - z); }, fine,
                     grid_->grid.points_per_panel);
    body += lv * (std::log(cplx(t, 0.0) - z) - std::log(cplx(-t, 0.0) - z));
  } else {
    body = integrate([&](double s) { return log_rho(s) / (s - z); }, layout,
                     grid_->grid.points_per_panel);
  }
  return (body + tail(z)) / two_pi_i;
}

cplx CanonicalSolution::gamma_boundary(double v, int side) const {
  if (side != 1 && side != -1) throw Error(ErrorCode::InvalidArgument, "gamma_boundary: side must be +1 or -1");
  constexpr int levels = 5;
  const double h0 = 0.04;
  cplx table[levels];
  double eps[levels];
  for (int k = 0; k < levels; ++k) {
    eps[k] = h0 / std::pow(2.0, k);
    table[k] = gamma_sectional(cplx(v, side * eps[k]));
  }
  // Neville extrapolation to eps = 0
  for (int m = 1; m < levels; ++m)
    for (int k = levels - 1; k >= m; --k)
      table[k] = (eps[k - m] * table[k] - eps[k] * table[k - 1]) / (eps[k - m] - eps[k]);
  return table[levels - 1];
}

cplx gamma_plus(double xi, double v, int chi) {
  const CanonicalSolution cs(xi, chi, make_spectral_grid(xi));
  return cs.gamma_plus(v);
}

}  // namespace bgk
