/*
 * (C) Copyright 2026 bgk-spectral contributors
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "bgk/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace bgk {

namespace {

using nlohmann::json;

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json optional_json(const std::optional<double> &x) { return x ? json(*x) : json(nullptr); }

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

const char *kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string xml_escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dispersion_csv(const DispersionTable &table) {
  std::ostringstream os;
  os << "xi,eta,lambda,residual\n";
  for (std::size_t i = 0; i < table.points.size(); ++i) {
    const auto &p = table.points[i];
    os << format_double(p.xi) << ',' << format_double(p.eta) << ',' << format_double(p.lambda)
       << ',' << format_double(table.residuals[i]) << '\n';
  }
  return os.str();
}

std::string dispersion_json(const DispersionTable &table) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "dispersion_table";
  j["tolerance"] = table.tolerance;
  j["residuals_within_tolerance"] = table.residuals_within();
  j["monotone_in_abs_xi"] = table.monotone_in_abs_xi();
  json pts = json::array();
  for (std::size_t i = 0; i < table.points.size(); ++i) {
    const auto &p = table.points[i];
    pts.push_back({{"xi", p.xi}, {"eta", finite_or_null(p.eta)}, {"lambda", p.lambda},
                   {"residual", table.residuals[i]}});
  }
  j["points"] = pts;
  return j.dump(2) + "\n";
}

std::string dispersion_svg(const DispersionTable &table) {
  Series s{"Lambda(xi)", {}, {}};
  for (const auto &p : table.points) {
    s.x.push_back(p.xi);
    s.y.push_back(p.lambda);
  }
  return svg_plot({s}, "Real spectral branch", "xi", "lambda");
}

std::string image_curve_csv(const IndexResult &r) {
  std::ostringstream os;
  os << "v,re_g,im_g\n";
  for (const auto &s : r.image_curve)
    os << format_double(s.v) << ',' << format_double(s.g.real()) << ',' << format_double(s.g.imag())
       << '\n';
  return os.str();
}

std::string image_curve_json(const IndexResult &r) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "index_result";
  j["xi"] = r.xi;
  j["chi"] = r.chi;
  j["total_increment"] = r.total_increment;
  json curve = json::array();
  for (const auto &s : r.image_curve) curve.push_back({s.v, s.g.real(), s.g.imag()});
  j["image_curve"] = curve;
  return j.dump(2) + "\n";
}

std::string image_curve_svg(const IndexResult &r) {
  Series s{"G(v)", {}, {}};
  for (const auto &p : r.image_curve) {
    // squash the large excursions near v = 0 so the loop stays visible
    const cplx g = p.g;
    const double m = std::abs(g);
    const cplx q = m > 4.0 ? g / m * (4.0 + std::log(m / 4.0)) : g;
    s.x.push_back(q.real());
    s.y.push_back(q.imag());
  }
  std::ostringstream title;
  title << "Image of G, xi = " << format_double(r.xi) << ", chi = " << r.chi;
  return svg_plot({s}, title.str(), "Re G", "Im G");
}

std::string slice_json(const SpectralSlice &slice) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "spectral_slice";
  j["xi"] = slice.xi;
  j["lambda"] = optional_json(slice.lambda);
  j["chi"] = slice.chi;
  j["C0"] = complex_json(slice.c0);
  json nodes = json::array(), values = json::array();
  if (slice.grid)
    for (std::size_t i = 0; i < slice.k0.size(); ++i) {
      nodes.push_back(slice.grid->grid.nodes[i]);
      values.push_back(complex_json(slice.k0[i]));
    }
  j["K0"] = {{"nodes", nodes}, {"values", values}};
  return j.dump(2) + "\n";
}

std::string decay_csv(const DecayReport &report) {
  std::ostringstream os;
  os << "t,xi,gds_norm,residual_norm,total_norm,residual_density_re,residual_density_im,oracle_error\n";
  for (const auto &s : report.series)
    for (std::size_t i = 0; i < report.times.size(); ++i)
      os << format_double(report.times[i]) << ',' << format_double(s.xi) << ','
         << format_double(s.gds_norm[i]) << ',' << format_double(s.residual_norm[i]) << ','
         << format_double(s.total_norm[i]) << ',' << format_double(s.residual_density[i].real())
         << ',' << format_double(s.residual_density[i].imag()) << ','
         << (s.oracle_error.empty() ? std::string("") : format_double(s.oracle_error[i])) << '\n';
  return os.str();
}

std::string decay_json(const DecayReport &report) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "decay_report";
  j["corpus"] = report.corpus;
  j["times"] = report.times;
  j["fit_window"] = {report.fit_lo, report.fit_hi};
  json arr = json::array();
  for (const auto &s : report.series) {
    json e;
    e["xi"] = s.xi;
    e["lambda"] = optional_json(s.lambda);
    e["chi"] = s.chi;
    e["C0"] = complex_json(s.c0);
    e["reconstruction_error"] = s.reconstruction_error;
    e["slope_gds"] = optional_json(s.slope_gds);
    e["slope_residual"] = optional_json(s.slope_residual);
    e["slope_total"] = s.slope_total;
    e["ratio_decreasing"] = s.ratio_decreasing;
    e["max_oracle_error"] = s.oracle_error.empty()
                                ? json(nullptr)
                                : json(*std::max_element(s.oracle_error.begin(), s.oracle_error.end()));
    e["warnings"] = s.warnings;
    arr.push_back(e);
  }
  j["series"] = arr;
  return j.dump(2) + "\n";
}

std::string decay_svg(const DecayReport &report) {
  std::vector<Series> all;
  for (const auto &s : report.series) {
    Series g{"gds xi=" + format_double(s.xi), report.times, s.gds_norm};
    Series r{"residual xi=" + format_double(s.xi), report.times, s.residual_norm};
    if (s.chi == -1) all.push_back(g);
    all.push_back(r);
  }
  return svg_plot(all, "Decay onto the grossly determined part (" + report.corpus + ")", "t",
                  "norm", true);
}

std::string svg_plot(const std::vector<Series> &series, const std::string &title,
                     const std::string &xlabel, const std::string &ylabel, bool log_y) {
  const double width = 720, height = 460, left = 70, right = 190, top = 40, bottom = 50;
  double x0 = HUGE_VAL, x1 = -HUGE_VAL, y0 = HUGE_VAL, y1 = -HUGE_VAL;
  auto ty = [log_y](double y) { return log_y ? std::log10(y) : y; };
  for (const auto &s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (log_y && !(s.y[i] > 0.0)) continue;
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, ty(s.y[i]));
      y1 = std::max(y1, ty(s.y[i]));
    }
  if (!std::isfinite(x0) || !std::isfinite(y0)) x0 = y0 = 0.0, x1 = y1 = 1.0;
  if (!(x1 > x0)) {
    x0 -= 1.0;
    x1 += 1.0;
  }
  if (!(y1 > y0)) {
    y0 -= 1.0;
    y1 += 1.0;
  }
  const double pw = width - left - right, ph = height - top - bottom;
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return top + (1.0 - (ty(y) - y0) / (y1 - y0)) * ph; };
  std::ostringstream os;
  char buf[64];
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << left << "\" y=\"24\" font-size=\"14\">" << xml_escape(title) << "</text>\n";
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = x0 + (x1 - x0) * k / 4.0;
    const double yv = y0 + (y1 - y0) * k / 4.0;
    std::snprintf(buf, sizeof buf, "%.3g", xv);
    os << "<text x=\"" << px(xv) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">" << buf
       << "</text>\n";
    std::snprintf(buf, sizeof buf, log_y ? "1e%.2g" : "%.3g", yv);
    os << "<text x=\"" << left - 6 << "\" y=\"" << top + (1.0 - k / 4.0) * ph + 4
       << "\" text-anchor=\"end\">" << buf << "</text>\n";
  }
  os << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 10 << "\" text-anchor=\"middle\">"
     << xml_escape(xlabel) << "</text>\n";
  os << "<text x=\"16\" y=\"" << top + ph / 2 << "\" transform=\"rotate(-90 16 " << top + ph / 2
     << ")\" text-anchor=\"middle\">" << xml_escape(ylabel) << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto &s = series[k];
    const char *color = kPalette[k % (sizeof kPalette / sizeof kPalette[0])];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (log_y && !(s.y[i] > 0.0)) continue;
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(s.x[i]), py(s.y[i]));
      os << buf;
    }
    os << "\"/>\n";
    const double ly = top + 14 + 16 * k;
    os << "<line x1=\"" << left + pw + 10 << "\" y1=\"" << ly - 4 << "\" x2=\"" << left + pw + 30
       << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << left + pw + 36 << "\" y=\"" << ly << "\">" << xml_escape(s.label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void write_text(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open for writing: " + path);
  out << content;
  if (!out) throw Error(ErrorCode::Io, "write failed: " + path);
}

}  // namespace bgk
