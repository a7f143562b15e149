/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <vector>

#include "bgk/error.hpp"

namespace bgk {

// |xi| <= sqrt(pi) - kXiEdgeClip is the admissible real branch.
inline constexpr double kXiEdgeClip = 1e-6;

struct DispersionPoint {
  double xi;
  double eta;  // +inf encodes the xi = 0 extension
  double lambda;
};

struct DispersionTable {
  std::vector<DispersionPoint> points;
  std::vector<double> residuals;
  double tolerance = 1e-8;

  bool residuals_within() const;
  // Lambda strictly decreasing in |xi| over the sampled points.
  bool monotone_in_abs_xi() const;
};

double eta_of_xi(double xi);
double lambda_of_xi(double xi);

// int phi(v) dv / (1 + lambda + i xi v) - 1
cplx constraint_residual(cplx lambda, double xi);
inline cplx constraint_residual(double lambda, double xi) {
  return constraint_residual(cplx(lambda, 0.0), xi);
}

DispersionTable build_dispersion_table(const std::vector<double> &xi,
                                       double tolerance = 1e-8);

// n evenly spaced samples on [lo, hi]
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace bgk
