/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include "bgk/error.hpp"

namespace bgk {

inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kPi = 3.1415926535897932385;

struct WeightedValue {
  double v;
  cplx value;
};

// phi(v) = exp(-v^2)/sqrt(pi)
double gaussian_weight(double v);

// D(v) = exp(-v^2) * int_0^v exp(x^2) dx
double dawson(double v);

// p.v. int phi(w) / (i (w - v)) dw = 2 i D(v)
cplx hilbert_gaussian(double v);

// exp(x^2) erfc(x), x >= 0
double erfcx(double x);

// Xi(eta) = int eta phi(v) / (eta^2 + v^2) dv; odd, eta != 0
double xi_function(double eta);

}  // namespace bgk
