/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>

#include "bgk/coefficients.hpp"
#include "bgk/riemann.hpp"
#include "bgk/specfun.hpp"

using namespace bgk;

TEST_SUITE("riemann") {

TEST_CASE("boundary coefficient G") {
  for (double xi : {0.5, -2.0, 3.75}) {
    CAPTURE(xi);
    CHECK(std::abs(boundary_G(xi, 0.0) - cplx((xi + kSqrtPi) / (xi - kSqrtPi), 0.0)) < 1e-14);
    CHECK(std::abs(boundary_G(xi, 30.0) - 1.0) < 1e-3);
    CHECK(std::abs(boundary_G(xi, -1e4) - 1.0) < 1e-7);
    const BoundaryCoefficients bc{xi};
    for (double v : {-3.0, -0.4, 0.1, 1.0, 2.5}) {
      const cplx a = bc.A(v);
      const double b = bc.B(v);
      CHECK(std::abs(boundary_G(xi, v) - (a - b) / (a + b)) < 1e-12);
    }
  }
  CHECK(std::abs(BoundaryCoefficients{0.5}.A(1.0) - cplx(0.5, -2.0 * dawson(1.0))) == 0.0);
}

TEST_CASE("winding index values") {
  CHECK(winding_index(0.5).chi == -1);
  CHECK(winding_index(-2.0).chi == 0);
  CHECK(winding_index(3.75).chi == 0);
  for (double xi : {-1.7, -1.0, -0.01, 0.01, 0.25, 1.0, 1.5, 1.76, 1.78, 2.0, 5.0, -9.0}) {
    CAPTURE(xi);
    const IndexResult r = winding_index(xi);
    CHECK(r.chi == expected_index(xi));
    CHECK(std::fabs(r.total_increment - 2.0 * kPi * r.chi) < 0.05);
    CHECK(r.image_curve.front().v < r.image_curve.back().v);
  }
}

TEST_CASE("winding index is stable under resampling") {
  for (double xi : {0.5, 1.7, 2.0}) {
    const int a = winding_index(xi, 40).chi;
    CHECK(winding_index(xi, 400).chi == a);
    CHECK(winding_index(xi, 4000).chi == a);
  }
  CHECK_THROWS_AS(winding_index(0.5, 4), Error);
}

TEST_CASE("the index is refused next to the edge") {
  for (double xi : {kSqrtPi, kSqrtPi - 5e-4, -kSqrtPi + 5e-4}) {
    try {
      winding_index(xi);
      FAIL("expected a domain error");
    } catch (const Error &e) {
      CHECK(e.code() == ErrorCode::Domain);
    }
  }
}

TEST_CASE("canonical solution jump condition") {
  const CanonicalSolution cs(0.5, -1, make_spectral_grid(0.5));
  for (double v : {-2.0, -1.0, 0.0, 0.3, 1.0, 2.0}) {
    CAPTURE(v);
    const cplx gp = cs.gamma_boundary(v, 1);
    const cplx gm = cs.gamma_boundary(v, -1);
    CHECK(std::abs(gp - gm - cs.log_rho(v)) < 1e-6);
    const cplx m = cplx(v, -1.0) / cplx(v, 1.0);
    const cplx g = std::exp(gp - gm) * std::pow(m, cs.chi());
    CHECK(std::abs(g - boundary_G(0.5, v)) < 1e-6 * std::abs(boundary_G(0.5, v)));
    CHECK(std::abs(cs.gamma_plus(v) - gp) < 1e-6);
  }
}

TEST_CASE("corrected log closes over the line") {
  for (double xi : {0.5, 1.5, 2.0, -2.0}) {
    const CanonicalSolution cs(xi, expected_index(xi), make_spectral_grid(xi));
    // the index factor leaves a 2 |chi| / v tail
    const double c = 2.0 * std::abs(cs.chi()) + 0.05;
    CHECK(40.0 * std::abs(cs.log_rho(40.0)) < c);
    CHECK(40.0 * std::abs(cs.log_rho(-40.0)) < c);
    CHECK(1e4 * std::abs(cs.log_rho(1e4)) < c);
  }
}

TEST_CASE("gamma plus decays on the chi = 0 branch") {
  const CanonicalSolution cs(2.0, 0, make_spectral_grid(2.0));
  const double g4 = std::abs(cs.gamma_plus(4.0));
  const double g20 = std::abs(cs.gamma_plus(20.0));
  const double g100 = std::abs(cs.gamma_plus(100.0));
  CHECK(g20 < g4);
  CHECK(g100 < g20);
  CHECK(100.0 * g100 < 20.0 * g20 * 1.1);
  CHECK(std::abs(gamma_plus(2.0, 100.0, 0) - cs.gamma_plus(100.0)) < 1e-12);
}

TEST_CASE("nodal and off-node gamma plus agree") {
  for (double xi : {0.5, 2.0}) {
    const CanonicalSolution cs(xi, expected_index(xi), make_spectral_grid(xi));
    const auto &x = cs.grid().grid.nodes;
    for (std::size_t i = 3; i < x.size(); i += x.size() / 7) {
      CAPTURE(x[i]);
      CHECK(std::abs(cs.gamma_plus_nodes()[i] - cs.gamma_plus(x[i])) < 1e-7);
      CHECK(std::abs(cs.x_plus_nodes()[i] - std::exp(cs.gamma_plus_nodes()[i])) < 1e-14);
    }
  }
}

TEST_CASE("canonical solution argument checks") {
  CHECK_THROWS_AS(CanonicalSolution(0.5, 0, make_spectral_grid(0.5)), Error);
  CHECK_THROWS_AS(CanonicalSolution(2.0, -1, make_spectral_grid(2.0)), Error);
  const CanonicalSolution cs(0.5, -1, make_spectral_grid(0.5));
  CHECK_THROWS_AS(cs.gamma_sectional(cplx(0.3, 0.0)), Error);
  CHECK_THROWS_AS(cs.gamma_boundary(0.3, 0), Error);
  CHECK_THROWS_AS(cs.gamma_plus(std::nan("")), Error);
}

}
