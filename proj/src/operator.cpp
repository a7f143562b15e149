/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bgk/operator.hpp"

#include <algorithm>
#include <cmath>

#include "bgk/specfun.hpp"

namespace bgk {

namespace {

void check(const VSliceFunction &g) {
  if (!g.grid) throw Error(ErrorCode::InvalidArgument, "slice function without grid");
  if (g.values.size() != g.grid->size())
    throw Error(ErrorCode::InvalidArgument, "slice function size does not match its grid");
  for (const cplx &z : g.values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::NonFinite, "slice function has non-finite values");
}

void check_pair(const VSliceFunction &a, const VSliceFunction &b) {
  check(a);
  check(b);
  if (a.grid != b.grid && a.grid->nodes != b.grid->nodes)
    throw Error(ErrorCode::InvalidArgument, "slice functions live on different grids");
}

}  // namespace

VSliceFunction make_slice_function(std::shared_ptr<const VelocityGrid> grid, double xi,
                                   const std::function<cplx(double)> &f) {
  VSliceFunction out{grid, CVec(grid->size()), xi};
  for (std::size_t i = 0; i < grid->size(); ++i) out.values[i] = f(grid->nodes[i]);
  return out;
}

cplx collision_moment(const VSliceFunction &g) {
  check(g);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) sum += g.grid->weights[i] * g.values[i];
  return sum;
}

VSliceFunction apply_collision(const VSliceFunction &g) {
  const cplx m = collision_moment(g);
  VSliceFunction out = g;
  for (auto &z : out.values) z = m - z;
  return out;
}

VSliceFunction apply_L(const VSliceFunction &g) {
  const cplx m = collision_moment(g);
  VSliceFunction out = g;
  const auto &v = g.grid->nodes;
  for (std::size_t i = 0; i < g.size(); ++i)
    out.values[i] = -cplx(1.0, g.xi * v[i]) * g.values[i] + m;
  return out;
}

cplx inner_phi(const VSliceFunction &f, const VSliceFunction &g) {
  check_pair(f, g);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i)
    sum += f.grid->weights[i] * f.values[i] * std::conj(g.values[i]);
  return sum;
}

double norm_phi(const VSliceFunction &g) { return std::sqrt(std::max(0.0, inner_phi(g, g).real())); }

double relative_distance(const VSliceFunction &a, const VSliceFunction &b) {
  check_pair(a, b);
  VSliceFunction d = a;
  for (std::size_t i = 0; i < d.size(); ++i) d.values[i] -= b.values[i];
  const double nb = norm_phi(b);
  return nb > 0.0 ? norm_phi(d) / nb : norm_phi(d);
}

double spectrum_distance(cplx lambda) {
  const double to_line = std::fabs(lambda.real() + 1.0);
  const double re = std::clamp(lambda.real(), -1.0, 0.0);
  const double to_segment = std::abs(lambda - cplx(re, 0.0));
  return std::min(to_line, to_segment);
}

VSliceFunction apply_resolvent(const VSliceFunction &h, cplx lambda) {
  check(h);
  if (spectrum_distance(lambda) < kSpectralProximity)
    throw Error(ErrorCode::SpectralProximity, "apply_resolvent: lambda lies on or near the spectrum");
  const auto &v = h.grid->nodes;
  const auto &w = h.grid->weights;
  CVec inv(h.size());
  cplx mh = 0.0, m1 = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const cplx den = 1.0 + lambda + cplx(0.0, h.xi * v[i]);
    if (std::abs(den) < 1e-300)
      throw Error(ErrorCode::Singular, "apply_resolvent: 1 + lambda + i xi v vanishes on the grid");
    inv[i] = 1.0 / den;
    mh += w[i] * h.values[i] * inv[i];
    m1 += w[i] * inv[i];
  }
  const cplx det = 1.0 - m1;
  if (std::abs(det) < 1e-13)
    throw Error(ErrorCode::Singular, "apply_resolvent: vanishing perturbation determinant");
  const cplx c = mh / det;
  VSliceFunction out = h;
  for (std::size_t i = 0; i < h.size(); ++i) out.values[i] = -(h.values[i] + c) * inv[i];
  return out;
}

cplx ell_weight(double xi, double alpha) {
  if (xi == 0.0 || !std::isfinite(xi) || !std::isfinite(alpha))
    throw Error(ErrorCode::InvalidArgument, "ell_weight: xi must be finite and nonzero");
  const double v0 = -alpha / xi;
  return std::fabs(xi) / gaussian_weight(v0) * cplx(1.0, -2.0 * dawson(v0) / xi);
}

cplx ell_moment_residual(double xi, double alpha) {
  const double v0 = -alpha / xi;
  // smooth part: p.v. int phi(v) / (i (xi v + alpha)) dv
  PVKernelSpec spec;
  spec.pole = v0;
  spec.integrand = [xi](double w) { return cplx(gaussian_weight(w) / xi, 0.0) / cplx(0.0, 1.0); };
  const cplx smooth = pv_integral(spec);
  const cplx delta = ell_weight(xi, alpha) * gaussian_weight(v0) / std::fabs(xi);
  return smooth + delta - 1.0;
}

}  // namespace bgk
