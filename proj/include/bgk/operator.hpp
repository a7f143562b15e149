/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <memory>

#include "bgk/quadrature.hpp"

namespace bgk {

inline constexpr double kSpectralProximity = 1e-6;

struct VSliceFunction {
  std::shared_ptr<const VelocityGrid> grid;
  CVec values;
  double xi = 0.0;

  std::size_t size() const { return values.size(); }
};

VSliceFunction make_slice_function(std::shared_ptr<const VelocityGrid> grid,
                                   double xi,
                                   const std::function<cplx(double)> &f);

// -i xi v g - g + int phi g
VSliceFunction apply_L(const VSliceFunction &g);
// int phi g - g, the collision part alone
VSliceFunction apply_collision(const VSliceFunction &g);
cplx collision_moment(const VSliceFunction &g);

cplx inner_phi(const VSliceFunction &f, const VSliceFunction &g);
double norm_phi(const VSliceFunction &g);
double relative_distance(const VSliceFunction &a, const VSliceFunction &b);

// Distance from lambda to the spectrum {Re = -1} U (-1, 0].
double spectrum_distance(cplx lambda);

// (L - lambda)^{-1} h
VSliceFunction apply_resolvent(const VSliceFunction &h, cplx lambda);

// Delta weight of the eigendistribution at lambda = -1 + i alpha.
cplx ell_weight(double xi, double alpha);
// Moment of the smooth p.v. part plus the delta part, minus 1.
cplx ell_moment_residual(double xi, double alpha);

}  // namespace bgk
