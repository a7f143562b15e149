/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bgk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include <json.hpp>

#include "bgk/coefficients.hpp"
#include "bgk/dispersion.hpp"
#include "bgk/evolution.hpp"
#include "bgk/operator.hpp"
#include "bgk/quadrature.hpp"
#include "bgk/riemann.hpp"
#include "bgk/specfun.hpp"

namespace bgk {

namespace {

using Dawson = std::function<double(double)>;

struct Suite {
  SuiteResult result;
  double scale;

  void below(const std::string &name, double value, double tol) {
    const double t = tol * scale;
    result.checks.push_back({name, std::isfinite(value) && value < t, value, t});
  }
  void truth(const std::string &name, bool ok) {
    result.checks.push_back({name, ok, ok ? 0.0 : 1.0, 0.5});
  }
};

const std::vector<double> &hilbert_points() {
  static const std::vector<double> v{-5.0, -3.0, -1.0, -0.5, -0.1, 0.0, 0.1, 0.5, 1.0, 3.0, 5.0};
  return v;
}

void specfun_suite(Suite &s, const Dawson &dawson_fn) {
  double ode = 0.0, odd = 0.0;
  for (double v = -6.0; v <= 6.0; v += 0.25) {
    const double h = 1e-5;
    const double dprime = (dawson_fn(v + h) - dawson_fn(v - h)) / (2.0 * h);
    ode = std::max(ode, std::fabs(dprime - (1.0 - 2.0 * v * dawson_fn(v))));
    odd = std::max(odd, std::fabs(dawson_fn(-v) + dawson_fn(v)));
  }
  s.below("dawson_ode", ode, 1e-6);
  s.below("dawson_odd", odd, 1e-15);
  s.below("dawson_large_v", std::fabs(2.0 * 40.0 * dawson_fn(40.0) - 1.0), 1e-3);
  const double x20 = xi_function(20.0) * 20.0;
  s.truth("xi_eta_limit", x20 > 0.99 && x20 < 1.0);
  bool mono = true;
  double prev = xi_function(1e-3);
  for (double e = 2e-3; e < 30.0; e *= 1.1) {
    const double cur = xi_function(e);
    mono = mono && cur < prev;
    prev = cur;
  }
  s.truth("xi_monotone", mono);
  s.below("xi_odd", std::fabs(xi_function(-1.0) + xi_function(1.0)), 1e-15);
  double phi_even = 0.0;
  for (double v = 0.0; v < 6.0; v += 0.5)
    phi_even = std::max(phi_even, std::fabs(gaussian_weight(v) - gaussian_weight(-v)));
  s.below("phi_even", phi_even, 1e-18);
}

void hilbert_suite(Suite &s, const Dawson &dawson_fn) {
  double worst = 0.0;
  for (double v : hilbert_points()) {
    PVKernelSpec spec;
    spec.pole = v;
    spec.integrand = [](double w) { return cplx(0.0, -gaussian_weight(w)); };
    const cplx reference(0.0, 2.0 * dawson_fn(v));
    worst = std::max(worst, std::abs(pv_integral(spec) - reference));
  }
  s.below("pv_matches_2iD", worst, 1e-8);
}

void quadrature_suite(Suite &s) {
  const VelocityGrid g = gauss_hermite(kDefaultHermiteOrder);
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    m0 += g.weights[i];
    m1 += g.weights[i] * g.nodes[i];
    m2 += g.weights[i] * g.nodes[i] * g.nodes[i];
  }
  s.below("gh_moment0", std::fabs(m0 - 1.0), 1e-13);
  s.below("gh_moment1", std::fabs(m1), 1e-13);
  s.below("gh_moment2", std::fabs(m2 - 0.5), 1e-13);
  double sym = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) sym = std::max(sym, std::fabs(g.nodes[i] + g.nodes[g.size() - 1 - i]));
  s.below("gh_symmetric", sym, 1e-12);

  double conv = 0.0, lin = 0.0;
  auto f1 = [](double w) { return cplx(gaussian_weight(w), 0.0); };
  auto f2 = [](double w) { return cplx(w * gaussian_weight(w - 0.5), std::exp(-2.0 * w * w)); };
  for (double v : {-2.0, -0.3, 0.0, 0.7, 2.5}) {
    PVKernelSpec a;
    a.pole = v;
    a.integrand = f2;
    PVKernelSpec b = a;
    b.refinement = 2 * a.refinement;
    b.fine_scale = a.fine_scale / 2.0;
    conv = std::max(conv, std::abs(pv_integral(a) - pv_integral(b)));
    PVKernelSpec c = a;
    c.integrand = [&](double w) { return 2.0 * f1(w) - 3.0 * f2(w); };
    PVKernelSpec d = a;
    d.integrand = f1;
    lin = std::max(lin, std::abs(pv_integral(c) - (2.0 * pv_integral(d) - 3.0 * pv_integral(a))));
  }
  s.below("pv_self_convergence", conv, 1e-8);
  s.below("pv_linearity", lin, 1e-12);
}

void operator_suite(Suite &s) {
  auto grid = std::make_shared<const VelocityGrid>(gauss_hermite(kDefaultHermiteOrder));
  std::mt19937_64 rng(20260101);
  std::normal_distribution<double> normal;
  auto random_fn = [&](double xi) {
    VSliceFunction f{grid, CVec(grid->size()), xi};
    for (auto &z : f.values) z = {normal(rng), 0.0};
    return f;
  };
  const VSliceFunction g = random_fn(0.0), h = random_fn(0.0);
  const cplx lhs = inner_phi(apply_collision(g), h), rhs = inner_phi(g, apply_collision(h));
  s.below("collision_self_adjoint", std::abs(lhs - rhs), 1e-10);
  s.truth("collision_semi_negative", inner_phi(apply_collision(g), g).real() <= 1e-12);

  const VSliceFunction c = make_slice_function(grid, 0.7, [](double) { return cplx(2.0, 1.0); });
  const VSliceFunction lc = apply_L(c);
  double constant = 0.0;
  for (std::size_t i = 0; i < lc.size(); ++i)
    constant = std::max(constant, std::abs(lc.values[i] - cplx(0.0, -0.7 * grid->nodes[i]) * c.values[i]));
  s.below("L_on_constant", constant, 1e-12);

  double round_trip = 0.0;
  const std::vector<cplx> lambdas{{1.0, 0.0}, {2.0, 1.0}, {-0.5, 3.0}, {-2.0, 0.0}};
  for (double xi : {0.0, 0.5, 1.3})
    for (cplx lam : lambdas)
      for (int k = 0; k < 2; ++k) {
        const VSliceFunction rhs_fn = make_slice_function(grid, xi, [k](double v) {
          return k == 0 ? cplx(std::exp(-v * v / 3.0), 0.0) : cplx(v, std::cos(v));
        });
        const VSliceFunction u = apply_resolvent(rhs_fn, lam);
        VSliceFunction back = apply_L(u);
        for (std::size_t i = 0; i < back.size(); ++i) back.values[i] -= lam * u.values[i];
        round_trip = std::max(round_trip, relative_distance(back, rhs_fn));
      }
  s.below("resolvent_round_trip", round_trip, 1e-8);

  bool rejects = true;
  for (cplx lam : {cplx(-0.5, 0.0), cplx(-1.0, 2.0)}) {
    try {
      apply_resolvent(c, lam);
      rejects = false;
    } catch (const Error &e) {
      rejects = rejects && e.code() == ErrorCode::SpectralProximity;
    }
  }
  s.truth("resolvent_rejects_spectrum", rejects);

  double eig = 0.0;
  for (double xi : {0.25, 0.5, 1.0}) {
    const double lam = lambda_of_xi(xi);
    const VSliceFunction b =
        make_slice_function(grid, xi, [&](double v) { return 1.0 / cplx(1.0 + lam, xi * v); });
    VSliceFunction r = apply_L(b);
    for (std::size_t i = 0; i < r.size(); ++i) r.values[i] -= lam * b.values[i];
    eig = std::max(eig, norm_phi(r));
  }
  s.below("real_branch_eigen_residual", eig, 1e-8);

  double ell = 0.0;
  for (double xi : {0.3, -0.8, 1.5})
    for (double alpha : {-0.6, 0.1, 0.9}) ell = std::max(ell, std::abs(ell_moment_residual(xi, alpha)));
  s.below("ell_branch_moment", ell, 1e-8);
}

void riemann_suite(Suite &s) {
  double split = 0.0, conj = 0.0;
  for (double xi : {0.5, -1.2, 2.0, 3.75}) {
    const BoundaryCoefficients bc{xi};
    for (double v = -5.0; v <= 5.0; v += 0.37) {
      const cplx a = bc.A(v);
      const double b = bc.B(v);
      split = std::max(split, std::abs(boundary_G(xi, v) - (a - b) / (a + b)));
      conj = std::max(conj, std::abs(boundary_G(xi, -v) - std::conj(boundary_G(xi, v))));
    }
  }
  s.below("G_explicit_split", split, 1e-12);
  s.below("G_conjugate_symmetry", conj, 1e-14);
  s.below("G_at_zero", std::abs(boundary_G(0.5, 0.0) - (0.5 + kSqrtPi) / (0.5 - kSqrtPi)), 1e-12);
  s.below("G_at_infinity", std::abs(boundary_G(0.5, 60.0) - 1.0), 1e-3);

  double plemelj = 0.0, routes = 0.0;
  for (double xi : {0.5, 2.0}) {
    const SliceSolver solver(xi);
    const CanonicalSolution &cs = solver.canonical();
    for (double v : {-2.0, -1.0, 0.3, 1.0, 2.0}) {
      const cplx gp = cs.gamma_plus(v);
      const cplx gm = cs.gamma_boundary(v, -1);
      const cplx m = cplx(v, -1.0) / cplx(v, 1.0);
      cplx xminus = std::exp(gm);
      for (int k = 0; k < -cs.chi(); ++k) xminus *= m;
      plemelj = std::max(plemelj, std::abs(std::exp(gp) / xminus - boundary_G(xi, v)));
      routes = std::max(routes, std::abs(gp - cs.gamma_boundary(v, +1)));
    }
  }
  s.below("plemelj_jump", plemelj, 1e-6);
  s.below("gamma_plus_two_routes", routes, 1e-6);
}

void index_suite(Suite &s) {
  bool ok = true, stable = true;
  for (double xi : {0.1, 0.5, 1.0, 1.7, -2.0, 1.8, 3.75}) {
    const int chi = winding_index(xi).chi;
    ok = ok && chi == expected_index(xi);
    stable = stable && winding_index(xi, 800).chi == chi;
  }
  s.truth("index_values", ok);
  s.truth("index_resolution_stable", stable);
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

std::vector<std::string> verify_suite_names() {
  return {"specfun", "hilbert", "quadrature", "operator", "riemann", "index"};
}

std::vector<SuiteResult> run_verify(const VerifyOptions &opt) {
  const auto known = verify_suite_names();
  std::vector<std::string> chosen = opt.suites.empty() ? known : opt.suites;
  for (const auto &name : chosen)
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw Error(ErrorCode::InvalidArgument, "unknown verify suite: " + name);
  if (!(opt.tolerance_scale > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance scale must be positive");
  Dawson d = [](double v) { return dawson(v); };
  if (opt.flip_dawson_sign) d = [](double v) { return -dawson(v); };
  std::vector<SuiteResult> out;
  for (const auto &name : chosen) {
    Suite s{{name, {}}, opt.tolerance_scale};
    try {
      if (name == "specfun") specfun_suite(s, d);
      else if (name == "hilbert") hilbert_suite(s, d);
      else if (name == "quadrature") quadrature_suite(s);
      else if (name == "operator") operator_suite(s);
      else if (name == "riemann") riemann_suite(s);
      else if (name == "index") index_suite(s);
    } catch (const Error &e) {
      s.result.checks.push_back({std::string("error: ") + e.what(), false, 1.0, 0.0});
    }
    out.push_back(s.result);
  }
  return out;
}

std::string verify_json(const std::vector<SuiteResult> &results) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["kind"] = "verify_report";
  j["passed"] = all_passed(results);
  nlohmann::json suites = nlohmann::json::array();
  for (const auto &r : results) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto &c : r.checks)
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"value", c.value}, {"tolerance", c.tolerance}});
    suites.push_back({{"name", r.name}, {"passed", r.passed()}, {"checks", checks}});
  }
  j["suites"] = suites;
  return j.dump(2) + "\n";
}

bool all_passed(const std::vector<SuiteResult> &results) {
  return std::all_of(results.begin(), results.end(), [](const SuiteResult &r) { return r.passed(); });
}

}  // namespace bgk
