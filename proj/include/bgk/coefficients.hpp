/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bgk/field.hpp"
#include "bgk/operator.hpp"
#include "bgk/riemann.hpp"

namespace bgk {

struct SolverOptions {
  double truncation = kDefaultTruncation;
  int points_per_panel = kDefaultPanelPoints;
  double coarse_width = 0.5;
  // K0 must stay below tail_tolerance * max|K0| for |v| > tail_start.
  double tail_start = 6.0;
  double tail_tolerance = 1e-6;
};

// Smallest panel width used near v = 0 for a given xi.
double default_fine_scale(double xi);
std::shared_ptr<const SpectralGrid> make_spectral_grid(double xi,
                                                      const SolverOptions &opt = {});

struct SpectralSlice {
  double xi = 0.0;
  std::optional<double> lambda;
  int chi = 0;
  cplx c0{0.0, 0.0};
  CVec k0;  // K0 at the grid nodes
  std::shared_ptr<const SpectralGrid> grid;
};

class SliceSolver {
public:
  explicit SliceSolver(double xi, const SolverOptions &opt = {});

  double xi() const { return xi_; }
  int chi() const { return chi_; }
  std::optional<double> lambda() const { return lambda_; }
  const SpectralGrid &grid() const { return *grid_; }
  std::shared_ptr<const SpectralGrid> grid_ptr() const { return grid_; }
  std::shared_ptr<const VelocityGrid> velocity_grid() const;
  const CanonicalSolution &canonical() const { return *canonical_; }

  VSliceFunction sample(const std::function<cplx(double)> &f) const;

  // phi (fhat0 - C0 / (1 + Lambda + i xi v))
  VSliceFunction build_F0(const VSliceFunction &fhat0, cplx c0) const;
  cplx compute_C0(const VSliceFunction &fhat0) const;
  VSliceFunction compute_K0(const VSliceFunction &fhat0, cplx c0) const;

  SpectralSlice solve(const VSliceFunction &fhat0) const;

private:
  void check_slice(const VSliceFunction &f) const;

  double xi_;
  int chi_;
  std::optional<double> lambda_;
  SolverOptions opt_;
  std::shared_ptr<const SpectralGrid> grid_;
  std::shared_ptr<const VelocityGrid> vgrid_;
  std::shared_ptr<const CanonicalSolution> canonical_;
  CVec a_, b_, den_;
};

struct InitialData {
  std::string name;
  std::function<cplx(double xi, double v)> sampler;
  std::pair<double, double> xi_support{-4.0, 4.0};
  bool smoothness_certificate = true;

  bool in_support(double xi) const {
    return xi >= xi_support.first && xi <= xi_support.second;
  }
  cplx operator()(double xi, double v) const;

  // Cubic B-spline in v on each stored xi row; xi must match a row.
  static InitialData from_field(const ComplexField2D &field, std::string name);
};

// Largest local difference quotient |f(v1) - f(v2)| / |v1 - v2|^alpha on a
// uniform sweep; warnings where it exceeds bound.
std::vector<std::string> holder_screen(const InitialData &data, double xi,
                                       double bound, double alpha = 0.5,
                                       double vmax = 6.0, int samples = 2000);

// Test corpus: "gds-profile", "gaussian", "shifted-gaussian".
InitialData corpus_profile(const std::string &name);
std::vector<std::string> corpus_names();
// The wavenumbers on which the corpus is exercised (chi = -1 slices).
std::vector<double> corpus_xi();
inline constexpr double kCorpusXiOutside = 2.0;

}  // namespace bgk
