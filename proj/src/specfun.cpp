/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bgk/specfun.hpp"

#include <array>
#include <cmath>

namespace bgk {

namespace {

constexpr double kInvSqrtPi = 0.56418958354775628695;

// Branch seams for the Dawson function.
constexpr double kSeriesEdge = 0.2;
constexpr double kAsymptoticEdge = 10.0;

// D(x) = sum_n (-1)^n 2^n x^{2n+1} / (2n+1)!!
double dawson_series(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int n = 1; n < 16; ++n) {
    term *= -2.0 * x2 / (2.0 * n + 1.0);
    sum += term;
  }
  return sum;
}

// Rybicki: D(x) ~ (1/sqrt(pi)) sum_{n odd} exp(-(x - n h)^2) / n
constexpr double kRybickiH = 0.25;
constexpr int kRybickiTerms = 16;

double dawson_rybicki(double x) {
  const double ax = std::fabs(x);
  const double n0 = 2.0 * std::nearbyint(0.5 * ax / kRybickiH);
  const double xp = ax - n0 * kRybickiH;
  double sum = 0.0;
  for (int i = 0; i < kRybickiTerms; ++i) {
    const double k = 2.0 * i + 1.0;
    const double up = xp - k * kRybickiH;
    const double dn = xp + k * kRybickiH;
    sum += std::exp(-up * up) / (n0 + k);
    if (n0 - k != 0.0) sum += std::exp(-dn * dn) / (n0 - k);
  }
  return std::copysign(kInvSqrtPi * sum, x);
}

// D(x) ~ 1/(2x) sum_n (2n-1)!! / (2x^2)^n
double dawson_asymptotic(double x) {
  const double r = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 14; ++n) {
    term *= (2.0 * n - 1.0) * r;
    sum += term;
  }
  return sum / (2.0 * x);
}

// erfc(x) e^{x^2} = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
double erfcx_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int n = 1; n < 200; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return kInvSqrtPi / f;
}

}  // namespace

double gaussian_weight(double v) { return kInvSqrtPi * std::exp(-v * v); }

double dawson(double v) {
  const double a = std::fabs(v);
  if (a < kSeriesEdge) return dawson_series(v);
  if (a < kAsymptoticEdge) return dawson_rybicki(v);
  return dawson_asymptotic(v);
}

cplx hilbert_gaussian(double v) { return {0.0, 2.0 * dawson(v)}; }

double erfcx(double x) {
  if (x < 0.0) throw Error(ErrorCode::Domain, "erfcx: argument must be >= 0");
  if (x < 5.0) return std::exp(x * x) * std::erfc(x);
  return erfcx_continued_fraction(x);
}

double xi_function(double eta) {
  if (eta == 0.0 || !std::isfinite(eta))
    throw Error(ErrorCode::Domain, "xi_function: eta must be finite and nonzero");
  const double a = std::fabs(eta);
  const double value = a < 1e-8 ? kSqrtPi : kSqrtPi * erfcx(a);
  return std::copysign(value, eta);
}

}  // namespace bgk
