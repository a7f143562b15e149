/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgk {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

enum class ErrorCode {
  InvalidArgument = 1,
  Domain,
  SpectralProximity,
  Singular,
  Refinement,
  PoleOutsideWindow,
  NonFinite,
  Degenerate,
  NonDecaying,
  FitWindow,
  Io
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace bgk
