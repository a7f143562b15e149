/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <doctest.h>

#include <cmath>

#include "bgk/coefficients.hpp"
#include "bgk/dispersion.hpp"
#include "bgk/evolution.hpp"
#include "bgk/specfun.hpp"

using namespace bgk;

namespace {

double max_abs(const CVec &v) {
  double m = 0.0;
  for (const cplx &z : v) m = std::max(m, std::abs(z));
  return m;
}

}  // namespace

TEST_SUITE("coefficients") {

TEST_CASE("fine scale and grid") {
  CHECK(default_fine_scale(0.0) == 0.125);
  CHECK(default_fine_scale(kSqrtPi - 2e-5) == doctest::Approx(1e-5).epsilon(0.6));
  CHECK(default_fine_scale(1.0) == doctest::Approx(std::min(0.125, eta_of_xi(1.0) / 4.0)));
  const auto g = make_spectral_grid(0.5);
  CHECK(g->grid.kind == GridKind::Composite);
  CHECK(g->grid.layout.lower() == -kDefaultTruncation);
  CHECK(g->cauchy.size() == g->grid.size());
}

TEST_CASE("F0 of a pure GDS profile vanishes") {
  const SliceSolver s(0.5);
  const double lam = *s.lambda();
  const cplx c(0.3, -1.1);
  const auto f = s.sample([&](double v) { return c / cplx(1.0 + lam, 0.5 * v); });
  CHECK(max_abs(s.build_F0(f, c).values) < 1e-15);
  const auto zero = s.sample([](double) { return cplx(0.0); });
  CHECK(max_abs(s.build_F0(zero, 0.0).values) == 0.0);
  CHECK(std::abs(s.compute_C0(f) - c) < 1e-12);
  CHECK(std::abs(s.compute_C0(zero)) == 0.0);
  CHECK(max_abs(s.compute_K0(f, c).values) < 1e-12);
}

TEST_CASE("F0 of a gaussian is finite and decaying") {
  const SliceSolver s(0.5);
  const auto f = s.sample([](double v) { return cplx(std::exp(-v * v), 0.0); });
  const auto f0 = s.build_F0(f, s.compute_C0(f));
  const auto &x = s.grid().grid.nodes;
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(std::isfinite(std::abs(f0.values[i])));
    if (std::fabs(x[i]) > 6.0) CHECK(std::abs(f0.values[i]) < 1e-15);
  }
  CHECK_THROWS_AS(SliceSolver(2.0).build_F0(SliceSolver(2.0).sample([](double) { return cplx(1.0); }), 1.0),
                  Error);
}

TEST_CASE("C0 of a gaussian") {
  const SliceSolver s(0.5);
  const auto f = s.sample([](double v) { return cplx(std::exp(-v * v), 0.0); });
  const cplx c0 = s.compute_C0(f);
  CHECK(std::fabs(c0.imag()) < 1e-12);
  CHECK(c0.real() == doctest::Approx(0.818231731792).epsilon(1e-9));
}

TEST_CASE("C0 matches the long-time density of the RK4 oracle") {
  // rho_hat(t) e^{-Lambda t} -> C0 once the e^{-t} transient has died out
  for (double xi : {0.5, 1.0}) {
    for (auto prof : {+[](double v) { return cplx(std::exp(-v * v), 0.0); },
                      +[](double v) { return cplx(std::exp(-(v - 1) * (v - 1)), 0.0); }}) {
      const SliceSolver s(xi);
      const auto f = s.sample(prof);
      const cplx c0 = s.compute_C0(f);
      const double t = 25.0;
      const auto ft = oracle_integrate(f, t, 0.01);
      const cplx limit = density_moment(ft) * std::exp(-*s.lambda() * t);
      CAPTURE(xi);
      CHECK(std::abs(limit - c0) < 1e-6);
    }
  }
}

TEST_CASE("C0 vanishes outside the branch") {
  const SliceSolver s(2.0);
  CHECK(s.chi() == 0);
  CHECK(!s.lambda());
  CHECK(s.compute_C0(s.sample([](double v) { return cplx(std::exp(-v * v), 0.0); })) == cplx(0.0));
}

TEST_CASE("K0 is linear") {
  const SliceSolver s(1.0);
  const auto a = s.sample([](double v) { return cplx(std::exp(-v * v), 0.0); });
  const auto b = s.sample([](double v) { return cplx(0.0, v * std::exp(-v * v)); });
  auto ab = a;
  for (std::size_t i = 0; i < ab.size(); ++i) ab.values[i] = 2.0 * a.values[i] + b.values[i];
  const cplx ca = s.compute_C0(a), cb = s.compute_C0(b);
  const auto ka = s.compute_K0(a, ca), kb = s.compute_K0(b, cb), kab = s.compute_K0(ab, 2.0 * ca + cb);
  double worst = 0.0;
  for (std::size_t i = 0; i < ka.size(); ++i)
    worst = std::max(worst, std::abs(kab.values[i] - 2.0 * ka.values[i] - kb.values[i]));
  CHECK(worst < 1e-12 * max_abs(kab.values));
}

TEST_CASE("reconstruction at t = 0 over the corpus") {
  std::vector<double> xs = corpus_xi();
  xs.push_back(kCorpusXiOutside);
  xs.push_back(-0.5);
  for (const auto &name : corpus_names()) {
    const InitialData d = corpus_profile(name);
    for (double xi : xs) {
      if (!d.in_support(xi)) continue;
      CAPTURE(name);
      CAPTURE(xi);
      const SliceSolver s(xi);
      const auto f = s.sample([&](double v) { return d(xi, v); });
      const SpectralSlice sl = s.solve(f);
      CHECK(relative_distance(evolve_spectral(sl, 0.0), f) < 1e-4);
      double tail = 0.0;
      const auto &x = s.grid().grid.nodes;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (std::fabs(x[i]) > 6.0) tail = std::max(tail, std::abs(sl.k0[i]));
      CHECK(tail < 1e-6);
    }
  }
}

TEST_CASE("K0 rejects non-decaying data") {
  const SliceSolver s(0.5);
  const auto f = s.sample([](double v) { return cplx(std::exp(v * v), 0.0); });
  try {
    s.solve(f);
    FAIL("expected a non-decaying error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NonDecaying);
  }
}

TEST_CASE("foreign and non-finite slices are refused") {
  const SliceSolver s(0.5);
  const SliceSolver other(1.0, SolverOptions{8.0, 8});
  CHECK_THROWS_AS(s.compute_C0(other.sample([](double) { return cplx(1.0); })), Error);
  auto f = s.sample([](double) { return cplx(1.0); });
  f.values[0] = cplx(INFINITY, 0.0);
  CHECK_THROWS_AS(s.compute_C0(f), Error);
}

TEST_CASE("corpus and initial data") {
  CHECK(corpus_names().size() == 3);
  CHECK(corpus_xi().size() == 4);
  CHECK_THROWS_AS(corpus_profile("nope"), Error);
  const InitialData g = corpus_profile("gds-profile");
  CHECK(!g.in_support(2.0));
  CHECK(g.in_support(1.5));
  CHECK(std::abs(g(0.0, 3.0) - 1.0) < 1e-15);
  CHECK(corpus_profile("gaussian").in_support(2.0));
}

TEST_CASE("gridded initial data") {
  ComplexField2D field;
  field.xi_grid = {0.25, 0.5};
  field.v_grid = linspace(-8.0, 8.0, 321);
  field.values.resize(2 * field.v_grid.size());
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t i = 0; i < field.v_grid.size(); ++i)
      field.at(k, i) = cplx(std::exp(-field.v_grid[i] * field.v_grid[i]), field.xi_grid[k]);
  const InitialData d = InitialData::from_field(field, "grid");
  CHECK(std::abs(d(0.5, 0.3) - cplx(std::exp(-0.09), 0.5)) < 1e-5);
  CHECK_THROWS_AS(d(0.3, 0.0), Error);
  ComplexField2D bad = field;
  bad.v_grid[5] += 1e-3;
  CHECK_THROWS_AS(InitialData::from_field(bad, "bad"), Error);
  bad = field;
  bad.values[7] = cplx(NAN, 0.0);
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = field;
  bad.xi_grid = {0.25, 2.0};
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("holder screen") {
  const InitialData smooth = corpus_profile("gaussian");
  CHECK(holder_screen(smooth, 0.5, 10.0).empty());
  InitialData rough;
  rough.name = "rough";
  rough.sampler = [](double, double v) { return cplx(std::sqrt(std::fabs(v - 0.1234)) * 100.0, 0.0); };
  CHECK(!holder_screen(rough, 0.5, 10.0, 0.9).empty());
  CHECK_THROWS_AS(holder_screen(smooth, 0.5, 1.0, 0.5, 6.0, 1), Error);
}

}
