/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bgk/coefficients.hpp"

namespace bgk {

VSliceFunction evolve_spectral(const SpectralSlice &slice, double t);

// Non-empty when e^{-i xi w t} is under-resolved on the slice grid.
std::optional<std::string> oscillation_warning(const SpectralSlice &slice,
                                               double t);

VSliceFunction gds_solution(cplx rho0_hat, double xi, double t,
                            std::shared_ptr<const VelocityGrid> grid);

cplx density_moment(const VSliceFunction &f);

// RK4 on d/dt f = -(1 + i xi v) f + int phi f at the grid nodes.
VSliceFunction oracle_integrate(const VSliceFunction &fhat0, double t_end,
                                double dt = 0.01);

// Least-squares slope of log(norm) against t over [lo, hi].
double fit_log_slope(const std::vector<double> &times,
                     const std::vector<double> &norms, double lo, double hi);

struct DecaySeries {
  double xi = 0.0;
  std::optional<double> lambda;
  int chi = 0;
  cplx c0{0.0, 0.0};
  double reconstruction_error = 0.0;
  std::vector<double> gds_norm;
  std::vector<double> residual_norm;
  std::vector<double> total_norm;
  CVec residual_density;
  std::vector<double> oracle_error;  // empty when the oracle is off
  std::optional<double> slope_gds;
  std::optional<double> slope_residual;
  double slope_total = 0.0;
  bool ratio_decreasing = false;
  std::vector<std::string> warnings;
};

struct DecayOptions {
  double fit_lo = 1.0;
  double fit_hi = 4.0;
  bool with_oracle = true;
  double dt = 0.01;
  SolverOptions solver;
};

struct DecayReport {
  std::string corpus;
  std::vector<double> times;
  double fit_lo = 1.0;
  double fit_hi = 4.0;
  std::vector<DecaySeries> series;
};

DecayReport decay_study(const InitialData &field0, const std::vector<double> &xi,
                        const std::vector<double> &times,
                        const DecayOptions &opt = {});

// Diagnostic: rho(x) = (1/2pi) sum_k rho_hat(xi_k) e^{i xi_k x} dxi_k
// (trapezoid weights on the given xi grid).
CVec inverse_fourier_density(const std::vector<double> &xi, const CVec &rho_hat,
                             const std::vector<double> &x);

}  // namespace bgk
