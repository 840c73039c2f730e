#pragma once

// Minimal self-contained SVG plotting: polylines, dots, filled bands and
// linear axes.  Output is a pure function of the series data, so plots can be
// regenerated from the CSV artifacts at any time.

#include <filesystem>
#include <string>
#include <vector>

namespace proflik::cli {

struct Series {
  enum class Style { line, dots, band_fill };
  Style style = Style::line;
  std::string color = "#d62728";
  std::vector<double> x;
  std::vector<double> y;   // line/dots
  std::vector<double> y2;  // upper edge for band_fill (y is the lower edge)
};

struct Figure {
  std::string x_label;
  std::string y_label;
  std::string title;
  std::vector<Series> series;
  // optional guide lines
  std::vector<double> h_lines;
  std::vector<double> v_lines;
};

void write_svg(const Figure& figure, const std::filesystem::path& path);

}  // namespace proflik::cli
