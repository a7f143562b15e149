/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "bgk/coefficients.hpp"
#include "bgk/dispersion.hpp"
#include "bgk/evolution.hpp"
#include "bgk/operator.hpp"
#include "bgk/quadrature.hpp"
#include "bgk/riemann.hpp"
#include "bgk/specfun.hpp"

using namespace bgk;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  void require(bool ok, const std::string &what) {
    if (!ok) {
      passed = false;
      detail << " [fail: " << what << "]";
    }
  }
};

using Criterion = std::function<void(Outcome &)>;

void dispersion(Outcome &o) {
  const DispersionTable t = build_dispersion_table(linspace(-1.76, 1.76, 101));
  double worst = 0.0;
  for (double r : t.residuals) worst = std::max(worst, r);
  bool in_range = true;
  for (const auto &p : t.points) in_range = in_range && p.lambda > -1.0 && p.lambda <= 0.0;
  const double edge = std::max(std::fabs(lambda_of_xi(kSqrtPi - 1e-4) + 1.0),
                               std::fabs(lambda_of_xi(-(kSqrtPi - 1e-4)) + 1.0));
  const double origin = std::max(std::fabs(lambda_of_xi(1e-4)), std::fabs(lambda_of_xi(-1e-4)));
  o.detail << "max residual " << worst << ", |Lambda+1| at edge " << edge << ", |Lambda| near 0 "
           << origin;
  o.require(worst < 1e-8, "residual");
  o.require(in_range, "Lambda outside (-1, 0]");
  o.require(edge < 1e-3, "edge limit");
  o.require(origin < 1e-6, "origin limit");
}

void hilbert(Outcome &o) {
  double worst = 0.0;
  for (int k = 0; k < 11; ++k) {
    const double v = -4.0 + 0.8 * k;
    PVKernelSpec spec;
    spec.pole = v;
    spec.integrand = [](double w) { return cplx(gaussian_weight(w), 0.0) / cplx(0.0, 1.0); };
    worst = std::max(worst, std::abs(pv_integral(spec) - cplx(0.0, 2.0 * dawson(v))));
  }
  o.detail << "max |pv - 2iD| over 11 velocities " << worst;
  o.require(worst < 1e-8, "hilbert identity");
}

void index_map(Outcome &o) {
  for (double xi : {0.1, 0.5, 1.0, 1.7}) {
    const int chi = winding_index(xi).chi;
    o.detail << " chi(" << xi << ")=" << chi;
    o.require(chi == -1, "chi at " + std::to_string(xi));
  }
  for (double xi : {-2.0, 1.8, 3.75}) {
    const int chi = winding_index(xi).chi;
    o.detail << " chi(" << xi << ")=" << chi;
    o.require(chi == 0, "chi at " + std::to_string(xi));
  }
}

void plemelj(Outcome &o) {
  double worst = 0.0;
  for (double xi : {0.5, 2.0}) {
    const CanonicalSolution cs(xi, winding_index(xi).chi, make_spectral_grid(xi));
    for (double v : {-2.0, -1.0, 0.3, 1.0, 2.0}) {
      const cplx gp = cs.gamma_boundary(v, 1);
      const cplx gm = cs.gamma_boundary(v, -1);
      // X = e^Gamma times the index factor ((z - i)/(z + i))^chi
      const cplx ratio = std::exp(gp - gm) * std::pow(cplx(v, -1.0) / cplx(v, 1.0), cs.chi());
      const cplx g = boundary_G(xi, v);
      worst = std::max(worst, std::abs(ratio - g) / std::abs(g));
    }
  }
  o.detail << "max |X+/X- - G| / |G| " << worst;
  o.require(worst < 1e-6, "jump condition");
}

void completeness(Outcome &o) {
  double worst = 0.0;
  for (const auto &name : corpus_names()) {
    const InitialData d = corpus_profile(name);
    for (double xi : corpus_xi()) {
      const SliceSolver s(xi);
      const auto f = s.sample([&](double v) { return d(xi, v); });
      worst = std::max(worst, relative_distance(evolve_spectral(s.solve(f), 0.0), f));
    }
  }
  o.detail << "max relative reconstruction error " << worst;
  o.require(worst < 1e-4, "reconstruction");
}

void oracle(Outcome &o) {
  double worst = 0.0;
  for (const auto &name : corpus_names()) {
    const InitialData d = corpus_profile(name);
    for (double xi : corpus_xi()) {
      const SliceSolver s(xi);
      const auto f0 = s.sample([&](double v) { return d(xi, v); });
      const SpectralSlice sl = s.solve(f0);
      VSliceFunction rk = f0;
      double t_prev = 0.0;
      for (double t : {0.5, 1.0, 2.0}) {
        rk = oracle_integrate(rk, t - t_prev, 0.01);
        t_prev = t;
        worst = std::max(worst, relative_distance(evolve_spectral(sl, t), rk));
      }
    }
  }
  o.detail << "max spectral vs RK4 relative error " << worst;
  o.require(worst < 1e-3, "oracle agreement");
}

void eigenfunction(Outcome &o) {
  auto grid = std::make_shared<const VelocityGrid>(gauss_hermite(kDefaultHermiteOrder));
  double eig = 0.0, semi = 0.0;
  for (double xi : {0.25, 0.5, 1.0}) {
    const double lam = lambda_of_xi(xi);
    const auto b = make_slice_function(grid, xi, [&](double v) { return 1.0 / cplx(1.0 + lam, xi * v); });
    auto expect = b;
    for (auto &z : expect.values) z *= lam;
    eig = std::max(eig, norm_phi(VSliceFunction{grid, [&] {
                                   CVec d = apply_L(b).values;
                                   for (std::size_t i = 0; i < d.size(); ++i) d[i] -= expect.values[i];
                                   return d;
                                 }(), xi}) / norm_phi(b));
    for (auto [s, t] : {std::pair{0.5, 1.0}, std::pair{1.0, 2.5}}) {
      const auto whole = gds_solution(1.0, xi, s + t, grid);
      auto split = gds_solution(std::exp(lam * s), xi, t, grid);
      semi = std::max(semi, relative_distance(whole, split));
    }
  }
  o.detail << "max eigen residual " << eig << ", max semigroup error " << semi;
  o.require(eig < 1e-8, "eigenfunction residual");
  o.require(semi < 1e-10, "semigroup");
}

void decay(Outcome &o) {
  const std::vector<double> times = linspace(0.0, 4.0, 17);
  for (const char *name : {"gaussian", "shifted-gaussian"}) {
    const DecayReport r = decay_study(corpus_profile(name), {0.25, 0.5, 1.0}, times);
    for (const DecaySeries &s : r.series) {
      const double lam = *s.lambda;
      const double sg = s.slope_gds.value_or(NAN);
      const double sr = s.slope_residual.value_or(NAN);
      o.detail << ' ' << name << " xi=" << s.xi << ": residual slope " << sr << ", gds slope " << sg
               << " (Lambda " << lam << ")" << (s.ratio_decreasing ? "" : ", ratio not decreasing")
               << ';';
      const std::string tag = std::string(name) + " xi=" + std::to_string(s.xi);
      o.require(std::fabs(sr + 1.0) <= 0.05, tag + " residual slope");
      o.require(std::fabs(sg - lam) <= 0.02 * std::fabs(lam), tag + " gds slope");
      o.require(s.ratio_decreasing, tag + " ratio");
    }
  }
}

void resolvent(Outcome &o) {
  auto grid = std::make_shared<const VelocityGrid>(gauss_hermite(kDefaultHermiteOrder));
  const std::vector<std::function<cplx(double)>> hs = {
      [](double v) { return cplx(std::exp(-v * v / 2.0), 0.0); },
      [](double v) { return cplx(v, 1.0 + v * v); },
  };
  double worst = 0.0;
  for (double xi : {0.5, 1.0}) {
    for (cplx lam : {cplx(1, 0), cplx(2, 1), cplx(-0.5, 3), cplx(-2, 0)}) {
      for (const auto &h : hs) {
        const auto hh = make_slice_function(grid, xi, h);
        const auto r = apply_resolvent(hh, lam);
        auto back = apply_L(r);
        for (std::size_t i = 0; i < back.size(); ++i) back.values[i] -= lam * r.values[i];
        worst = std::max(worst, relative_distance(back, hh));
      }
    }
  }
  o.detail << "max round-trip error " << worst;
  o.require(worst < 1e-8, "round trip");
  const auto h = make_slice_function(grid, 0.5, hs[0]);
  for (cplx lam : {cplx(-0.5, 0.0), cplx(-1.0, 2.0)}) {
    bool rejected = false;
    try {
      apply_resolvent(h, lam);
    } catch (const Error &e) {
      rejected = e.code() == ErrorCode::SpectralProximity;
    }
    o.detail << ", lambda=" << lam.real() << (lam.imag() >= 0 ? "+" : "") << lam.imag() << "i "
             << (rejected ? "rejected" : "accepted");
    o.require(rejected, "spectral-proximity rejection");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<const char *, Criterion>> criteria = {
      {"dispersion correctness", dispersion},
      {"hilbert/dawson identity", hilbert},
      {"index map", index_map},
      {"plemelj consistency", plemelj},
      {"transform completeness", completeness},
      {"oracle equivalence", oracle},
      {"eigenfunction property", eigenfunction},
      {"asymptotic decay", decay},
      {"resolvent round trip", resolvent},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(o);
    } catch (const std::exception &e) {
      o.passed = false;
      o.detail << " [error: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu %-26s %s (%.2f s): %s\n", k + 1, criteria[k].first,
                o.passed ? "PASS" : "FAIL", secs, o.detail.str().c_str());
    failed += !o.passed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed ? 1 : 0;
}
