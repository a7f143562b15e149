/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>
#include <vector>

#include "bgk/coefficients.hpp"
#include "bgk/dispersion.hpp"
#include "bgk/evolution.hpp"
#include "bgk/riemann.hpp"

namespace bgk {

inline constexpr int kSchemaVersion = 1;

std::string format_double(double x);

std::string dispersion_csv(const DispersionTable &table);
std::string dispersion_json(const DispersionTable &table);
std::string dispersion_svg(const DispersionTable &table);

std::string image_curve_csv(const IndexResult &r);
std::string image_curve_json(const IndexResult &r);
std::string image_curve_svg(const IndexResult &r);

std::string slice_json(const SpectralSlice &slice);

std::string decay_csv(const DecayReport &report);
std::string decay_json(const DecayReport &report);
std::string decay_svg(const DecayReport &report);

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

std::string svg_plot(const std::vector<Series> &series, const std::string &title,
                     const std::string &xlabel, const std::string &ylabel,
                     bool log_y = false);

void write_text(const std::string &path, const std::string &content);

}  // namespace bgk
