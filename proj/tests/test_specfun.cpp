/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>

#include "bgk/quadrature.hpp"
#include "bgk/specfun.hpp"
#include "oracles.hpp"

using namespace bgk;

TEST_SUITE("specfun") {

TEST_CASE("gaussian weight values and normalisation") {
  CHECK(gaussian_weight(0.0) == doctest::Approx(0.5641895835477563).epsilon(1e-15));
  CHECK(gaussian_weight(1.0) == doctest::Approx(std::exp(-1.0) / oracle::sqrt_pi).epsilon(1e-15));
  for (double v : {0.3, 1.7, 4.0}) CHECK(gaussian_weight(v) == gaussian_weight(-v));
  CHECK(gaussian_weight(40.0) == 0.0);
  CHECK(gaussian_weight(26.0) > 0.0);
  const VelocityGrid g = composite_grid(PanelLayout::graded(8.0, 0.0, 0.125));
  double sum = 0.0;
  for (double w : g.weights) sum += w;
  CHECK(std::fabs(sum - 1.0) < 1e-14);
}

TEST_CASE("dawson against reference values") {
  CHECK(dawson(0.0) == 0.0);
  CHECK(std::fabs(dawson(1.0) - oracle::dawson_1) < 1e-15);
  CHECK(std::fabs(dawson(0.2) - oracle::dawson_02) < 1e-15);
  CHECK(std::fabs(dawson(3.0) - oracle::dawson_3) < 1e-15);
  CHECK(std::fabs(dawson(10.0) - oracle::dawson_10) < 1e-16);
  CHECK(dawson(-1.0) == -dawson(1.0));
}

TEST_CASE("dawson against adaptive quadrature") {
  for (double v : {0.05, 0.19, 0.21, 0.7, 1.5, 2.5, 4.0, 6.0, 9.5}) {
    CAPTURE(v);
    CHECK(std::fabs(dawson(v) - oracle::dawson_quad(v)) < 1e-13);
  }
}

TEST_CASE("dawson branches agree at the seams") {
  for (double seam : {0.2, 10.0}) {
    CAPTURE(seam);
    const double d = 1e-9;
    const double slope = 1.0 - 2.0 * seam * dawson(seam);
    CHECK(std::fabs(dawson(seam + d) - dawson(seam - d) - 2.0 * d * slope) < 1e-12);
  }
}

TEST_CASE("dawson ODE and asymptote") {
  for (double v = -7.0; v <= 7.0; v += 0.35) {
    const double h = 1e-5;
    const double fd = (dawson(v + h) - dawson(v - h)) / (2.0 * h);
    CHECK(std::fabs(fd - (1.0 - 2.0 * v * dawson(v))) < 1e-6);
  }
  for (double v : {20.0, 50.0, 200.0}) CHECK(std::fabs(2.0 * v * dawson(v) - 1.0) < 1.0 / (v * v));
}

TEST_CASE("hilbert transform of the gaussian is 2iD") {
  CHECK(hilbert_gaussian(0.0) == cplx(0.0, 0.0));
  const cplx h = hilbert_gaussian(1.0);
  CHECK(h.real() == 0.0);
  CHECK(std::fabs(h.imag() - 2.0 * oracle::dawson_1) < 1e-15);
  for (double v : {-3.0, -1.0, -0.1, 0.1, 1.0, 3.0}) {
    PVKernelSpec spec;
    spec.pole = v;
    spec.integrand = [](double w) { return cplx(0.0, -gaussian_weight(w)); };
    CHECK(std::abs(pv_integral(spec) - hilbert_gaussian(v)) < 1e-8);
  }
}

TEST_CASE("erfcx is continuous across its branch point") {
  CHECK(erfcx(0.0) == 1.0);
  const double d = 1e-10;
  const double slope = 2.0 * 5.0 * erfcx(5.0) - 2.0 / oracle::sqrt_pi;
  CHECK(std::fabs(erfcx(5.0 + d) - erfcx(5.0 - d) - 2.0 * d * slope) < 1e-13);
  CHECK_THROWS_AS(erfcx(-1.0), Error);
}

TEST_CASE("xi function") {
  CHECK_THROWS_AS(xi_function(0.0), Error);
  CHECK(xi_function(1e-9) == oracle::sqrt_pi);
  CHECK(xi_function(-1e-9) == -oracle::sqrt_pi);
  CHECK(std::fabs(xi_function(1.0) - oracle::xi_1) < 1e-15);
  CHECK(std::fabs(xi_function(0.01) - oracle::xi_001) < 1e-14);
  CHECK(std::fabs(20.0 * xi_function(20.0) - oracle::xi_20_times_20) < 1e-14);
  CHECK(xi_function(-1.0) == -xi_function(1.0));
  const double x20 = 20.0 * xi_function(20.0);
  CHECK(x20 > 0.99);
  CHECK(x20 < 1.0);
  for (double eta : {0.02, 0.3, 1.0, 2.5, 7.0, 25.0}) {
    CAPTURE(eta);
    CHECK(std::fabs(xi_function(eta) - oracle::xi_quad(eta)) < 1e-12);
  }
  double prev = xi_function(1e-6);
  for (double eta = 1e-5; eta < 100.0; eta *= 1.3) {
    const double cur = xi_function(eta);
    CHECK(cur < prev);
    prev = cur;
  }
}

}
