/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bgk {

struct CheckResult {
  std::string name;
  bool passed;
  double value;
  double tolerance;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct VerifyOptions {
  // Empty selects every suite: specfun, quadrature, operator, riemann, index.
  std::vector<std::string> suites;
  // Harness mode: feed the suites a Dawson with flipped sign.
  bool flip_dawson_sign = false;
  double tolerance_scale = 1.0;
};

std::vector<std::string> verify_suite_names();
std::vector<SuiteResult> run_verify(const VerifyOptions &opt);
std::string verify_json(const std::vector<SuiteResult> &results);
bool all_passed(const std::vector<SuiteResult> &results);

}  // namespace bgk
