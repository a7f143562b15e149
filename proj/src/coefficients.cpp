/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bgk/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>

#include "bgk/dispersion.hpp"
#include "bgk/specfun.hpp"

namespace bgk {

double default_fine_scale(double xi) {
  const double ax = std::fabs(xi);
  double scale = std::fabs(ax - kSqrtPi);
  if (ax > 0.0 && ax <= kSqrtPi - kXiEdgeClip) scale = std::min(scale, std::fabs(eta_of_xi(xi)));
  return std::clamp(scale / 4.0, 1e-5, 0.125);
}

std::shared_ptr<const SpectralGrid> make_spectral_grid(double xi, const SolverOptions &opt) {
  const PanelLayout layout =
      PanelLayout::graded(opt.truncation, 0.0, default_fine_scale(xi), opt.coarse_width);
  return std::make_shared<const SpectralGrid>(composite_grid(layout, opt.points_per_panel));
}

SliceSolver::SliceSolver(double xi, const SolverOptions &opt) : xi_(xi), opt_(opt) {
  const IndexResult index = winding_index(xi);
  if (index.chi != expected_index(xi))
    throw Error(ErrorCode::Refinement, "SliceSolver: sampled index disagrees with the index rule");
  chi_ = index.chi;
  if (chi_ == -1) lambda_ = lambda_of_xi(xi);
  grid_ = make_spectral_grid(xi, opt);
  vgrid_ = std::shared_ptr<const VelocityGrid>(grid_, &grid_->grid);
  canonical_ = std::make_shared<const CanonicalSolution>(xi, chi_, grid_);
  const auto &x = grid_->grid.nodes;
  const BoundaryCoefficients bc{xi};
  a_.resize(x.size());
  b_.resize(x.size());
  den_.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    a_[i] = bc.A(x[i]);
    b_[i] = bc.B(x[i]);
    den_[i] = cplx(1.0 + lambda_.value_or(0.0), xi * x[i]);
  }
}

std::shared_ptr<const VelocityGrid> SliceSolver::velocity_grid() const { return vgrid_; }

VSliceFunction SliceSolver::sample(const std::function<cplx(double)> &f) const {
  return make_slice_function(vgrid_, xi_, f);
}

void SliceSolver::check_slice(const VSliceFunction &f) const {
  if (f.values.size() != grid_->grid.size())
    throw Error(ErrorCode::InvalidArgument, "slice function is not sampled on this solver's grid");
  for (const cplx &z : f.values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::NonFinite, "slice function has non-finite values");
}

VSliceFunction SliceSolver::build_F0(const VSliceFunction &fhat0, cplx c0) const {
  check_slice(fhat0);
  if (chi_ == 0 && c0 != 0.0)
    throw Error(ErrorCode::InvalidArgument, "build_F0: C0 must vanish for |xi| >= sqrt(pi)");
  VSliceFunction out{vgrid_, CVec(fhat0.size()), xi_};
  const auto &x = grid_->grid.nodes;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const cplx gds = chi_ == -1 ? c0 / den_[i] : cplx(0.0);
    out.values[i] = gaussian_weight(x[i]) * (fhat0.values[i] - gds);
  }
  return out;
}

cplx SliceSolver::compute_C0(const VSliceFunction &fhat0) const {
  check_slice(fhat0);
  if (chi_ == 0) return 0.0;
  const auto &x = grid_->grid.nodes;
  const auto &w = grid_->grid.weights;
  const auto &xp = canonical_->x_plus_nodes();
  cplx num = 0.0, den = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const cplx base = w[i] / (xp[i] * (a_[i] + b_[i]) * cplx(x[i], 1.0));
    num += base * fhat0.values[i];
    den += base / den_[i];
    scale += std::abs(base / den_[i]);
  }
  if (!(std::abs(den) > 1e-13 * scale))
    throw Error(ErrorCode::Degenerate, "compute_C0: denominator integral vanishes");
  return num / den;
}

VSliceFunction SliceSolver::compute_K0(const VSliceFunction &fhat0, cplx c0) const {
  const VSliceFunction f0 = build_F0(fhat0, c0);
  const auto &x = grid_->grid.nodes;
  const auto &xp = canonical_->x_plus_nodes();
  const std::size_t n = x.size();
  CVec h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = f0.values[i] / (xp[i] * (a_[i] + b_[i]));
  const CVec pv = grid_->cauchy.apply(h);
  VSliceFunction k{vgrid_, CVec(n), xi_};
  const cplx inv_pi_i(0.0, -1.0 / kPi);
  double peak = 0.0, tail = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const cplx a = a_[i], b = b_[i];
    k.values[i] = a / (a * a - b * b) * f0.values[i] - xp[i] * b / (a - b) * inv_pi_i * pv[i];
    if (!std::isfinite(k.values[i].real()) || !std::isfinite(k.values[i].imag()))
      throw Error(ErrorCode::NonFinite, "compute_K0: non-finite value");
    const double m = std::abs(k.values[i]);
    peak = std::max(peak, m);
    if (std::fabs(x[i]) > opt_.tail_start) tail = std::max(tail, m);
  }
  if (tail > opt_.tail_tolerance * std::max(1.0, peak))
    throw Error(ErrorCode::NonDecaying, "compute_K0: K0 does not decay; input outside the admissible class");
  return k;
}

SpectralSlice SliceSolver::solve(const VSliceFunction &fhat0) const {
  SpectralSlice s;
  s.xi = xi_;
  s.lambda = lambda_;
  s.chi = chi_;
  s.c0 = compute_C0(fhat0);
  s.k0 = compute_K0(fhat0, s.c0).values;
  s.grid = grid_;
  return s;
}

cplx InitialData::operator()(double xi, double v) const {
  if (!in_support(xi)) return 0.0;
  return sampler(xi, v);
}

InitialData InitialData::from_field(const ComplexField2D &field, std::string name) {
  field.validate();
  const auto &v = field.v_grid;
  const double h = (v.back() - v.front()) / (v.size() - 1);
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::fabs(v[i] - v[i - 1] - h) > 1e-9 * std::max(1.0, std::fabs(h)))
      throw Error(ErrorCode::InvalidArgument, "from_field: velocity grid must be uniform");
  using Spline = boost::math::interpolators::cardinal_cubic_b_spline<double>;
  struct Row {
    double xi;
    std::shared_ptr<Spline> re, im;
  };
  auto rows = std::make_shared<std::vector<Row>>();
  for (std::size_t r = 0; r < field.xi_grid.size(); ++r) {
    std::vector<double> re(v.size()), im(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      re[i] = field.at(r, i).real();
      im[i] = field.at(r, i).imag();
    }
    rows->push_back({field.xi_grid[r],
                     std::make_shared<Spline>(re.begin(), re.end(), v.front(), h),
                     std::make_shared<Spline>(im.begin(), im.end(), v.front(), h)});
  }
  const double lo = v.front(), hi = v.back();
  InitialData d;
  d.name = std::move(name);
  d.xi_support = field.support;
  d.smoothness_certificate = field.holder_smooth;
  d.sampler = [rows, lo, hi](double xi, double vv) -> cplx {
    for (const Row &row : *rows) {
      if (std::fabs(row.xi - xi) <= 1e-12 * std::max(1.0, std::fabs(xi))) {
        if (vv < lo || vv > hi) return 0.0;
        return {(*row.re)(vv), (*row.im)(vv)};
      }
    }
    throw Error(ErrorCode::InvalidArgument, "gridded initial data has no row at this xi");
  };
  return d;
}

std::vector<std::string> holder_screen(const InitialData &data, double xi, double bound,
                                       double alpha, double vmax, int samples) {
  std::vector<std::string> warnings;
  if (!data.smoothness_certificate)
    warnings.push_back("initial data carries no Hoelder certificate");
  if (samples < 2 || !(vmax > 0.0)) throw Error(ErrorCode::InvalidArgument, "holder_screen: bad sweep");
  const double h = 2.0 * vmax / (samples - 1);
  cplx prev = data(xi, -vmax);
  double worst = 0.0, where = -vmax;
  for (int k = 1; k < samples; ++k) {
    const double v = -vmax + k * h;
    const cplx cur = data(xi, v);
    const double q = std::abs(cur - prev) / std::pow(h, alpha);
    if (q > worst) {
      worst = q;
      where = v;
    }
    prev = cur;
  }
  if (worst > bound) {
    std::ostringstream os;
    os << "difference quotient " << worst << " exceeds " << bound << " near v = " << where
       << " at xi = " << xi;
    warnings.push_back(os.str());
  }
  return warnings;
}

InitialData corpus_profile(const std::string &name) {
  InitialData d;
  d.name = name;
  if (name == "gds-profile") {
    d.xi_support = {-(kSqrtPi - kXiEdgeClip), kSqrtPi - kXiEdgeClip};
    d.sampler = [](double xi, double v) {
      return 1.0 / cplx(1.0 + lambda_of_xi(xi), xi * v);
    };
  } else if (name == "gaussian") {
    d.sampler = [](double, double v) { return cplx(std::exp(-v * v), 0.0); };
  } else if (name == "shifted-gaussian") {
    d.sampler = [](double, double v) { return cplx(std::exp(-(v - 1.0) * (v - 1.0)), 0.0); };
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown corpus profile: " + name);
  }
  return d;
}

std::vector<std::string> corpus_names() { return {"gds-profile", "gaussian", "shifted-gaussian"}; }

std::vector<double> corpus_xi() { return {0.25, 0.5, 1.0, 1.5}; }

void ComplexField2D::validate() const {
  if (xi_grid.empty() || v_grid.size() < 4)
    throw Error(ErrorCode::InvalidArgument, "field: needs xi rows and at least 4 velocities");
  if (values.size() != xi_grid.size() * v_grid.size())
    throw Error(ErrorCode::InvalidArgument, "field: value count does not match the grid");
  if (!std::is_sorted(xi_grid.begin(), xi_grid.end()) || !std::is_sorted(v_grid.begin(), v_grid.end()))
    throw Error(ErrorCode::InvalidArgument, "field: grids must be increasing");
  for (const cplx &z : values)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::NonFinite, "field: non-finite entry");
  for (double xi : xi_grid)
    if (xi < support.first || xi > support.second)
      throw Error(ErrorCode::InvalidArgument, "field: xi row outside the declared support");
}

}  // namespace bgk
