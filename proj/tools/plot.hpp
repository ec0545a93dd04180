#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace stapulse::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct ChartSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

// Renders a line chart as a standalone SVG file. Purely cosmetic output;
// axis limits come from the data with a small margin.
void write_line_chart(const std::filesystem::path& path, const ChartSpec& spec);

}  // namespace stapulse::cli
