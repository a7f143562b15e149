/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <memory>
#include <vector>

#include "bgk/quadrature.hpp"

namespace bgk {

// The Riemann problem is rejected for ||xi| - sqrt(pi)| below this.
inline constexpr double kIndexEdgeGuard = 1e-3;

struct BoundaryCoefficients {
  double xi;
  cplx A(double v) const;  // xi - 2 i D(v)
  double B(double v) const;  // -pi phi(v)
};

cplx boundary_G(double xi, double v);

struct ImageSample {
  double v;
  cplx g;
};

struct IndexResult {
  double xi;
  int chi;
  std::vector<ImageSample> image_curve;
  double total_increment;  // [arg G] over the real line, radians
};

IndexResult winding_index(double xi, int base_samples = 400);

// Expected index from the closed-form rule, for cross-checks.
int expected_index(double xi);

class CanonicalSolution {
public:
  CanonicalSolution(double xi, int chi, std::shared_ptr<const SpectralGrid> grid);

  double xi() const { return xi_; }
  int chi() const { return chi_; }
  const SpectralGrid &grid() const { return *grid_; }

  // Winding-corrected log((t-i)/(t+i))^{-chi} G(t), continuous, 0 at +-inf.
  cplx log_rho(double v) const;
  const CVec &log_rho_nodes() const { return lnrho_; }

  const CVec &gamma_plus_nodes() const { return gamma_; }
  const CVec &x_plus_nodes() const { return xplus_; }

  cplx gamma_plus(double v) const;
  // Cauchy integral (1 / 2 pi i) int log_rho(t) / (t - z) dt, Im z != 0.
  cplx gamma_sectional(cplx z) const;
  // One-sided limit v +- i0 by Richardson extrapolation of gamma_sectional.
  cplx gamma_boundary(double v, int side) const;

  // int_{|t|>T} log_rho(t) / (t - z) dt from the far-field form.
  cplx tail(cplx z) const;

private:
  double xi_;
  int chi_;
  std::shared_ptr<const SpectralGrid> grid_;
  CVec lnrho_;
  CVec gamma_;
  CVec xplus_;
};

// Gamma^+ for one velocity; builds a default grid for xi.
cplx gamma_plus(double xi, double v, int chi);

}  // namespace bgk
