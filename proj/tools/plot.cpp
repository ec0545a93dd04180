#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include "stapulse/errors.hpp"
#include "stapulse/io.hpp"

namespace stapulse::cli {

namespace {

constexpr int kWidth = 720;
constexpr int kHeight = 440;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 20;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 50;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    if (std::isfinite(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  void pad() {
    if (!(lo < hi)) {
      lo -= 0.5;
      hi += 0.5;
    }
    const double m = 0.04 * (hi - lo);
    lo -= m;
    hi += m;
  }
};

// Round tick spacing to 1/2/5 times a power of ten.
double tick_step(const Range& r, int target) {
  const double raw = (r.hi - r.lo) / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) {
      return m * mag;
    }
  }
  return 10.0 * mag;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

void write_line_chart(const std::filesystem::path& path, const ChartSpec& spec) {
  Range xr, yr;
  for (const Series& s : spec.series) {
    for (double v : s.x) {
      xr.include(v);
    }
    for (double v : s.y) {
      yr.include(v);
    }
  }
  if (!std::isfinite(xr.lo) || !std::isfinite(yr.lo)) {
    throw ValidationError("chart has no finite data points");
  }
  xr.pad();
  yr.pad();

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto px = [&](double x) { return kMarginLeft + plot_w * (x - xr.lo) / (xr.hi - xr.lo); };
  auto py = [&](double y) { return kMarginTop + plot_h * (yr.hi - y) / (yr.hi - yr.lo); };

  std::ofstream out(path);
  if (!out) {
    throw ValidationError("cannot open " + path.string() + " for writing");
  }
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-family=\"sans-serif\" font-size=\"16\">" << escape(spec.title) << "</text>\n";

  // Grid and ticks.
  const double xs = tick_step(xr, 8);
  const double ys = tick_step(yr, 6);
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#444\">\n";
  for (double x = std::ceil(xr.lo / xs) * xs; x <= xr.hi + 1e-12; x += xs) {
    const double gx = px(x);
    out << "<line x1=\"" << gx << "\" y1=\"" << kMarginTop << "\" x2=\"" << gx << "\" y2=\""
        << kMarginTop + plot_h << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << gx << "\" y=\"" << kMarginTop + plot_h + 16
        << "\" text-anchor=\"middle\">" << format_value(std::abs(x) < 1e-12 ? 0.0 : x)
        << "</text>\n";
  }
  for (double y = std::ceil(yr.lo / ys) * ys; y <= yr.hi + 1e-12; y += ys) {
    const double gy = py(y);
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << gy << "\" x2=\""
        << kMarginLeft + plot_w << "\" y2=\"" << gy << "\" stroke=\"#ddd\"/>\n";
    out << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << gy + 4
        << "\" text-anchor=\"end\">" << format_value(std::abs(y) < 1e-12 ? 0.0 : y)
        << "</text>\n";
  }
  out << "</g>\n";

  out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#333\"/>\n";

  for (size_t i = 0; i < spec.series.size(); ++i) {
    const Series& s = spec.series[i];
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (size_t j = 0; j < s.x.size() && j < s.y.size(); ++j) {
      out << px(s.x[j]) << "," << py(s.y[j]) << " ";
    }
    out << "\"/>\n";
    out << "<text x=\"" << kMarginLeft + 10 << "\" y=\"" << kMarginTop + 16 + 16 * i
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color << "\">"
        << escape(s.label) << "</text>\n";
  }

  out << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
      << escape(spec.x_label) << "</text>\n";
  out << "<text x=\"16\" y=\"" << kMarginTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
      << "transform=\"rotate(-90 16 " << kMarginTop + plot_h / 2 << ")\">"
      << escape(spec.y_label) << "</text>\n";
  out << "</svg>\n";
}

}  // namespace stapulse::cli
