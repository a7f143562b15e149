/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "bgk/error.hpp"

namespace bgk {

inline constexpr double kDefaultTruncation = 8.0;
inline constexpr int kDefaultPanelPoints = 16;
inline constexpr int kDefaultHermiteOrder = 200;

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule on [-1, 1].
GaussRule gauss_legendre(int n);

// Break points of a composite rule on [-truncation, truncation].
struct PanelLayout {
  std::vector<double> breaks;

  // Geometric refinement toward `center` starting at `fine_scale`, growing by
  // 2 up to distance 1, then uniform panels of `coarse_width` to the window.
  static PanelLayout graded(double truncation, double center, double fine_scale,
                            double coarse_width = 0.5);

  // Union of break points, closer-than-tol duplicates dropped.
  PanelLayout merged(const PanelLayout &other, double tol = 1e-13) const;

  double lower() const { return breaks.front(); }
  double upper() const { return breaks.back(); }
  std::size_t panels() const { return breaks.size() - 1; }
};

enum class GridKind { GaussHermite, Composite };

// Quadrature for int g(v) phi(v) dv. `weights` already carry phi and sum to 1.
struct VelocityGrid {
  GridKind kind = GridKind::GaussHermite;
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  // Composite grids only: plain dv weights and the panel structure.
  std::vector<double> dv_weights;
  PanelLayout layout;
  int points_per_panel = 0;

  std::size_t size() const { return nodes.size(); }
};

VelocityGrid gauss_hermite(int order);
VelocityGrid composite_grid(const PanelLayout &layout,
                            int points_per_panel = kDefaultPanelPoints);

// Dense nodal principal-value operator on a composite grid:
//   (M g)_j = p.v. int_{-T}^{T} g(w) / (w - x_j) dw
class CauchyMatrix {
public:
  explicit CauchyMatrix(const VelocityGrid &grid);

  CVec apply(const CVec &g) const;
  std::size_t size() const { return n_; }
  double operator()(std::size_t row, std::size_t col) const {
    return m_[row * n_ + col];
  }

private:
  std::size_t n_;
  std::vector<double> m_;
};

struct SpectralGrid {
  VelocityGrid grid;
  CauchyMatrix cauchy;

  SpectralGrid(VelocityGrid g) : grid(std::move(g)), cauchy(grid) {}
};

struct PVKernelSpec {
  double pole = 0.0;
  std::function<cplx(double)> integrand;
  double truncation = kDefaultTruncation;
  // Gauss-Legendre points per panel.
  int refinement = kDefaultPanelPoints;
  // Smallest panel next to the pole.
  double fine_scale = 0.125;
  // Extra break points, e.g. where the integrand varies quickly.
  std::vector<double> extra_breaks;
};

// p.v. int_{-T}^{T} g(w) / (w - pole) dw by singularity subtraction.
cplx pv_integral(const PVKernelSpec &spec);

// Regular integral of f over a layout with the given points per panel.
cplx integrate(const std::function<cplx(double)> &f, const PanelLayout &layout,
               int points_per_panel = kDefaultPanelPoints);

}  // namespace bgk
