/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bgk/error.hpp"

namespace bgk {

const char *error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::SpectralProximity: return "spectral_proximity";
    case ErrorCode::Singular: return "singular";
    case ErrorCode::Refinement: return "refinement";
    case ErrorCode::PoleOutsideWindow: return "pole_outside_window";
    case ErrorCode::NonFinite: return "non_finite";
    case ErrorCode::Degenerate: return "degenerate";
    case ErrorCode::NonDecaying: return "non_decaying";
    case ErrorCode::FitWindow: return "fit_window";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

}  // namespace bgk
