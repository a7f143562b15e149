/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bgk/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/toms748_solve.hpp>

#include "bgk/quadrature.hpp"
#include "bgk/specfun.hpp"
#include "parallel.hpp"

namespace bgk {

namespace {

// Above this eta, Lambda = Xi(eta) eta - 1 comes from its large-eta series.
constexpr double kEtaSeriesEdge = 100.0;

void check_branch(double xi, const char *who) {
  if (!std::isfinite(xi) || std::fabs(xi) > kSqrtPi - kXiEdgeClip)
    throw Error(ErrorCode::Domain, std::string(who) + ": |xi| must be below sqrt(pi) - 1e-6");
}

double lambda_from_eta(double eta) {
  if (eta < kEtaSeriesEdge) return xi_function(eta) * eta - 1.0;
  // Xi(eta) eta - 1 = -sum_{n>=1} (-1)^{n+1} (2n-1)!! / (2 eta^2)^n
  const double r = 1.0 / (2.0 * eta * eta);
  double term = 1.0, sum = 0.0;
  for (int n = 1; n < 8; ++n) {
    term *= (2.0 * n - 1.0) * r;
    sum += (n % 2 == 1 ? -term : term);
  }
  return sum;
}

}  // namespace

double eta_of_xi(double xi) {
  check_branch(xi, "eta_of_xi");
  if (xi == 0.0) throw Error(ErrorCode::Domain, "eta_of_xi: eta diverges at xi = 0");
  const double target = std::fabs(xi);
  // eta = 1/xi - xi/2 + xi^3/4 + O(xi^5) inverts the large-eta series of Xi
  if (target < 1e-3) return std::copysign(1.0 / target - target / 2.0 + target * target * target / 4.0, xi);
  // Xi(eta) eta < 1 puts the root below 1 / |xi|.
  double lo = 0.0, hi = 1.0 / target;
  auto f = [target](double eta) {
    return (eta == 0.0 ? kSqrtPi : xi_function(eta)) - target;
  };
  double flo = f(lo), fhi = f(hi);
  if (fhi == 0.0) return std::copysign(hi, xi);
  std::uintmax_t iters = 200;
  auto tol = boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 2);
  auto root = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  const double eta = 0.5 * (root.first + root.second);
  return std::copysign(eta, xi);
}

double lambda_of_xi(double xi) {
  check_branch(xi, "lambda_of_xi");
  if (xi == 0.0) return 0.0;
  return lambda_from_eta(std::fabs(eta_of_xi(xi)));
}

cplx constraint_residual(cplx lambda, double xi) {
  const cplx shift = 1.0 + lambda;
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()) || !std::isfinite(xi))
    throw Error(ErrorCode::InvalidArgument, "constraint_residual: non-finite input");
  if (xi == 0.0) {
    if (shift == 0.0) throw Error(ErrorCode::NonFinite, "constraint_residual: 1 + lambda = 0 at xi = 0");
    return 1.0 / shift - 1.0;
  }
  // pole of 1/(shift + i xi v) at v = i shift / xi
  const double dist = std::fabs(shift.real() / xi);
  if (dist == 0.0)
    throw Error(ErrorCode::NonFinite, "constraint_residual: pole on the real velocity axis");
  const double center = std::clamp(-shift.imag() / xi, -kDefaultTruncation + 1.0,
                                   kDefaultTruncation - 1.0);
  const double fine = std::clamp(dist / 4.0, 1e-7, 0.125);
  const PanelLayout layout = PanelLayout::graded(kDefaultTruncation, center, fine);
  const cplx integral = integrate(
      [&](double v) { return gaussian_weight(v) / (shift + cplx(0.0, xi * v)); }, layout);
  if (!std::isfinite(integral.real()) || !std::isfinite(integral.imag()))
    throw Error(ErrorCode::NonFinite, "constraint_residual: non-finite quadrature");
  return integral - 1.0;
}

bool DispersionTable::residuals_within() const {
  return std::all_of(residuals.begin(), residuals.end(),
                     [this](double r) { return r < tolerance; });
}

bool DispersionTable::monotone_in_abs_xi() const {
  std::vector<DispersionPoint> sorted = points;
  std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
    return std::fabs(a.xi) < std::fabs(b.xi);
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    // mirrored samples from a symmetric grid may differ in |xi| by rounding
    if (std::fabs(sorted[i].xi) - std::fabs(sorted[i - 1].xi) <= 1e-12 * std::fabs(sorted[i].xi)) {
      if (std::fabs(sorted[i].lambda - sorted[i - 1].lambda) > 1e-12) return false;
      continue;
    }
    if (!(sorted[i].lambda < sorted[i - 1].lambda)) return false;
  }
  return true;
}

DispersionTable build_dispersion_table(const std::vector<double> &xi, double tolerance) {
  if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidArgument, "dispersion table: tolerance must be positive");
  for (double x : xi) check_branch(x, "dispersion table");
  DispersionTable table;
  table.tolerance = tolerance;
  table.points.resize(xi.size());
  table.residuals.resize(xi.size());
  detail::parallel_for(xi.size(), [&](std::size_t i) {
    const double x = xi[i];
    DispersionPoint p;
    p.xi = x;
    p.eta = x == 0.0 ? std::numeric_limits<double>::infinity() : eta_of_xi(x);
    p.lambda = lambda_of_xi(x);
    table.points[i] = p;
    table.residuals[i] = std::abs(constraint_residual(p.lambda, x));
  });
  return table;
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "linspace: n must be >= 1");
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
  out[n - 1] = hi;
  return out;
}

}  // namespace bgk
