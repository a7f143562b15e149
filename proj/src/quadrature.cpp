/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bgk/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "bgk/specfun.hpp"

namespace bgk {

namespace {

const GaussRule &cached_legendre(int n) {
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, gauss_legendre(n)).first;
  return it->second;
}

// Spectral differentiation matrix on the reference Legendre nodes.
std::vector<double> reference_diff_matrix(const std::vector<double> &x) {
  const std::size_t n = x.size();
  std::vector<double> c(n, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (k != i) c[i] *= x[i] - x[k];
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      d[i * n + j] = c[i] / c[j] / (x[i] - x[j]);
      row += d[i * n + j];
    }
    d[i * n + i] = -row;
  }
  return d;
}

void push_side(std::vector<double> &out, double center, double fine,
               double coarse, double edge, int dir) {
  const double tiny = 1e-12;
  auto inside = [&](double x) { return dir > 0 ? x < edge - tiny : x > edge + tiny; };
  for (double d = fine; d < 1.0; d *= 2.0) {
    const double x = center + dir * d;
    if (!inside(x)) break;
    out.push_back(x);
  }
  for (double x = center + dir * 1.0; inside(x); x += dir * coarse)
    out.push_back(x);
  out.push_back(edge);
}

}  // namespace

GaussRule gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "gauss_legendre: n must be >= 1");
  GaussRule r;
  r.nodes.assign(n, 0.0);
  r.weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) < 1e-15) {
        // one more derivative refresh at the converged root
        p1 = 1.0;
        p2 = 0.0;
        for (int j = 1; j <= n; ++j) {
          const double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
        }
        pp = n * (z * p1 - p2) / (z * z - 1.0);
        break;
      }
    }
    r.nodes[i] = -z;
    r.nodes[n - 1 - i] = z;
    r.weights[i] = r.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

PanelLayout PanelLayout::graded(double truncation, double center,
                                double fine_scale, double coarse_width) {
  if (!(truncation > 0.0) || !std::isfinite(truncation))
    throw Error(ErrorCode::InvalidArgument, "graded layout: truncation must be positive");
  if (!(std::fabs(center) < truncation))
    throw Error(ErrorCode::PoleOutsideWindow, "graded layout: center outside window");
  if (!(fine_scale > 0.0) || !(coarse_width > 0.0))
    throw Error(ErrorCode::InvalidArgument, "graded layout: scales must be positive");
  std::vector<double> right, left;
  push_side(right, center, fine_scale, coarse_width, truncation, +1);
  push_side(left, center, fine_scale, coarse_width, -truncation, -1);
  PanelLayout out;
  out.breaks.assign(left.rbegin(), left.rend());
  out.breaks.push_back(center);
  out.breaks.insert(out.breaks.end(), right.begin(), right.end());
  return out;
}

PanelLayout PanelLayout::merged(const PanelLayout &other, double tol) const {
  std::vector<double> all = breaks;
  all.insert(all.end(), other.breaks.begin(), other.breaks.end());
  std::sort(all.begin(), all.end());
  PanelLayout out;
  for (double b : all)
    if (out.breaks.empty() || b - out.breaks.back() > tol) out.breaks.push_back(b);
  return out;
}

VelocityGrid gauss_hermite(int order) {
  if (order < 2) throw Error(ErrorCode::InvalidArgument, "gauss_hermite: order must be >= 2");
  const int n = order;
  // orthonormal Hermite recurrence; returns p_n and the derivative factor
  auto eval = [n](double z, double &pp) {
    const double pim4 = 0.7511255444649425;  // pi^{-1/4}
    double p1 = pim4, p2 = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
    }
    pp = std::sqrt(2.0 * n) * p2;
    return p1;
  };
  // roots are separated by more than pi / sqrt(2n + 1)
  const double zmax = std::sqrt(2.0 * n + 1.0) + 1.0;
  const double step = 0.25 * kPi / std::sqrt(2.0 * n + 1.0);
  std::vector<double> roots, weights;
  double pp = 0.0;
  double a = n % 2 == 1 ? 0.5 * step : 0.0;
  double fa = eval(a, pp);
  for (double b = a + step; b <= zmax + step; b += step) {
    const double fb = eval(b, pp);
    if ((fa < 0.0) != (fb < 0.0)) {
      double lo = a, hi = b, flo = fa;
      double z = 0.5 * (lo + hi);
      for (int it = 0; it < 100; ++it) {
        const double f = eval(z, pp);
        if ((f < 0.0) == (flo < 0.0)) {
          lo = z;
          flo = f;
        } else {
          hi = z;
        }
        double next = z - f / pp;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        const bool done = std::fabs(next - z) <= 1e-15 * std::max(1.0, std::fabs(z));
        z = next;
        if (done) break;
      }
      eval(z, pp);
      roots.push_back(z);
      weights.push_back(2.0 / (pp * pp) / kSqrtPi);
    }
    a = b;
    fa = fb;
  }
  if (static_cast<int>(roots.size()) != n / 2)
    throw Error(ErrorCode::Refinement, "gauss_hermite: root scan missed nodes");
  VelocityGrid g;
  g.kind = GridKind::GaussHermite;
  g.order = order;
  for (std::size_t i = roots.size(); i-- > 0;) {
    g.nodes.push_back(-roots[i]);
    g.weights.push_back(weights[i]);
  }
  if (n % 2 == 1) {
    eval(0.0, pp);
    g.nodes.push_back(0.0);
    g.weights.push_back(2.0 / (pp * pp) / kSqrtPi);
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    g.nodes.push_back(roots[i]);
    g.weights.push_back(weights[i]);
  }
  g.dv_weights.resize(n);
  for (int i = 0; i < n; ++i) g.dv_weights[i] = g.weights[i] / gaussian_weight(g.nodes[i]);
  return g;
}

VelocityGrid composite_grid(const PanelLayout &layout, int points_per_panel) {
  if (layout.breaks.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "composite_grid: layout needs two breaks");
  const GaussRule &ref = cached_legendre(points_per_panel);
  VelocityGrid g;
  g.kind = GridKind::Composite;
  g.layout = layout;
  g.points_per_panel = points_per_panel;
  const std::size_t n = layout.panels() * points_per_panel;
  g.order = static_cast<int>(n);
  g.nodes.reserve(n);
  g.dv_weights.reserve(n);
  for (std::size_t p = 0; p < layout.panels(); ++p) {
    const double a = layout.breaks[p], b = layout.breaks[p + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int k = 0; k < points_per_panel; ++k) {
      g.nodes.push_back(mid + half * ref.nodes[k]);
      g.dv_weights.push_back(half * ref.weights[k]);
    }
  }
  g.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    g.weights[i] = g.dv_weights[i] * gaussian_weight(g.nodes[i]);
  return g;
}

CauchyMatrix::CauchyMatrix(const VelocityGrid &grid) : n_(grid.size()), m_(n_ * n_, 0.0) {
  if (grid.kind != GridKind::Composite)
    throw Error(ErrorCode::InvalidArgument, "CauchyMatrix: composite grid required");
  const auto &x = grid.nodes;
  const auto &w = grid.dv_weights;
  const double lo = grid.layout.lower(), hi = grid.layout.upper();
  for (std::size_t j = 0; j < n_; ++j) {
    double diag = std::log((hi - x[j]) / (x[j] - lo));
    double *row = &m_[j * n_];
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == j) continue;
      row[i] = w[i] / (x[i] - x[j]);
      diag -= row[i];
    }
    row[j] = diag;
  }
  const int p = grid.points_per_panel;
  const GaussRule &ref = cached_legendre(p);
  const auto dref = reference_diff_matrix(ref.nodes);
  for (std::size_t pan = 0; pan < grid.layout.panels(); ++pan) {
    const double half = 0.5 * (grid.layout.breaks[pan + 1] - grid.layout.breaks[pan]);
    const std::size_t base = pan * p;
    for (int a = 0; a < p; ++a) {
      const std::size_t j = base + a;
      for (int b = 0; b < p; ++b)
        m_[j * n_ + base + b] += w[j] * dref[a * p + b] / half;
    }
  }
}

CVec CauchyMatrix::apply(const CVec &g) const {
  if (g.size() != n_) throw Error(ErrorCode::InvalidArgument, "CauchyMatrix: size mismatch");
  CVec out(n_);
  for (std::size_t j = 0; j < n_; ++j) {
    const double *row = &m_[j * n_];
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      re += row[i] * g[i].real();
      im += row[i] * g[i].imag();
    }
    out[j] = {re, im};
  }
  return out;
}

cplx integrate(const std::function<cplx(double)> &f, const PanelLayout &layout,
               int points_per_panel) {
  const GaussRule &ref = cached_legendre(points_per_panel);
  cplx sum = 0.0;
  for (std::size_t p = 0; p < layout.panels(); ++p) {
    const double a = layout.breaks[p], b = layout.breaks[p + 1];
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int k = 0; k < points_per_panel; ++k) sum += half * ref.weights[k] * f(mid + half * ref.nodes[k]);
  }
  return sum;
}

cplx pv_integral(const PVKernelSpec &spec) {
  const double v = spec.pole, t = spec.truncation;
  if (!std::isfinite(v) || !(std::fabs(v) < t))
    throw Error(ErrorCode::PoleOutsideWindow, "pv_integral: pole outside truncation window");
  if (!spec.integrand) throw Error(ErrorCode::InvalidArgument, "pv_integral: no integrand");
  if (spec.refinement < 2) throw Error(ErrorCode::InvalidArgument, "pv_integral: refinement must be >= 2");
  PanelLayout layout = PanelLayout::graded(t, v, spec.fine_scale);
  if (!spec.extra_breaks.empty()) {
    PanelLayout extra;
    for (double b : spec.extra_breaks)
      if (std::fabs(b) < t) extra.breaks.push_back(b);
    std::sort(extra.breaks.begin(), extra.breaks.end());
    layout = layout.merged(extra);
  }
  const cplx gv = spec.integrand(v);
  if (!std::isfinite(gv.real()) || !std::isfinite(gv.imag()))
    throw Error(ErrorCode::NonFinite, "pv_integral: non-finite integrand at the pole");
  bool finite = true;
  const cplx body = integrate(
      [&](double w) {
        const cplx g = spec.integrand(w);
        if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) finite = false;
        return (g - gv) / (w - v);
      },
      layout, spec.refinement);
  if (!finite) throw Error(ErrorCode::NonFinite, "pv_integral: non-finite integrand sample");
  return body + gv * std::log((t - v) / (t + v));
}

}  // namespace bgk
