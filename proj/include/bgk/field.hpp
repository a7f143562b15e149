/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <utility>
#include <vector>

#include "bgk/error.hpp"

namespace bgk {

// Samples of fhat(xi, v) on a xi x v product grid, row-major in xi.
struct ComplexField2D {
  std::vector<double> xi_grid;
  std::vector<double> v_grid;
  CVec values;
  double t = 0.0;
  std::pair<double, double> support{-1.7724538509055160273,
                                    1.7724538509055160273};
  bool holder_smooth = true;

  cplx &at(std::size_t ixi, std::size_t iv) {
    return values[ixi * v_grid.size() + iv];
  }
  const cplx &at(std::size_t ixi, std::size_t iv) const {
    return values[ixi * v_grid.size() + iv];
  }
  void validate() const;
};

}  // namespace bgk
