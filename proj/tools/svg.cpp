#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "proflik/errors.hpp"
#include "proflik/numfmt.hpp"

namespace proflik::cli {

namespace {

constexpr double kWidth = 640, kHeight = 480;
constexpr double kLeft = 70, kRight = 20, kTop = 36, kBottom = 50;

struct Range {
  double lo = 0.0, hi = 1.0;
  double clamp01(double v) const { return (v - lo) / (hi - lo); }
};

void grow(Range& r, double v, bool& first) {
  if (!std::isfinite(v)) return;
  if (first) {
    r.lo = r.hi = v;
    first = false;
  } else {
    r.lo = std::min(r.lo, v);
    r.hi = std::max(r.hi, v);
  }
}

void pad(Range& r) {
  if (r.hi <= r.lo) {
    r.lo -= 1.0;
    r.hi += 1.0;
    return;
  }
  const double margin = 0.05 * (r.hi - r.lo);
  r.lo -= margin;
  r.hi += margin;
}

// round tick spacing to 1/2/5 times a power of ten
std::vector<double> ticks(const Range& r) {
  const double span = r.hi - r.lo;
  double step = std::pow(10.0, std::floor(std::log10(span / 5.0)));
  if (span / step > 10.0) step *= 2.0;
  if (span / step > 10.0) step *= 2.5;
  if (span / step > 10.0) step *= 2.0;
  std::vector<double> out;
  for (double t = std::ceil(r.lo / step) * step; t <= r.hi + 1e-12 * span; t += step)
    out.push_back(std::abs(t) < 1e-12 * span ? 0.0 : t);
  return out;
}

std::string fmt2(double v) {
  std::ostringstream ss;
  ss.precision(6);
  ss << v;
  return ss.str();
}

std::string tick_label(double v) {
  // shortest round-trip is overkill for labels; trim to 6 significant digits
  return fmt2(v);
}

}  // namespace

void write_svg(const Figure& figure, const std::filesystem::path& path) {
  Range rx, ry;
  bool fx = true, fy = true;
  for (const Series& s : figure.series) {
    for (double v : s.x) grow(rx, v, fx);
    for (double v : s.y) grow(ry, v, fy);
    for (double v : s.y2) grow(ry, v, fy);
  }
  for (double v : figure.h_lines) grow(ry, v, fy);
  for (double v : figure.v_lines) grow(rx, v, fx);
  pad(rx);
  pad(ry);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto X = [&](double v) { return kLeft + plot_w * rx.clamp01(v); };
  auto Y = [&](double v) { return kTop + plot_h * (1.0 - ry.clamp01(v)); };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  out << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  // frame and ticks
  out << "<g stroke=\"#444\" fill=\"none\" stroke-width=\"1\">\n";
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w << "\" height=\""
      << plot_h << "\"/>\n";
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#222\">\n";
  for (double t : ticks(rx)) {
    const double x = X(t);
    out << "<line x1=\"" << fmt2(x) << "\" y1=\"" << fmt2(kTop + plot_h) << "\" x2=\"" << fmt2(x)
        << "\" y2=\"" << fmt2(kTop + plot_h + 5) << "\" stroke=\"#444\"/>\n";
    out << "<text x=\"" << fmt2(x) << "\" y=\"" << fmt2(kTop + plot_h + 18)
        << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
  }
  for (double t : ticks(ry)) {
    const double y = Y(t);
    out << "<line x1=\"" << fmt2(kLeft - 5) << "\" y1=\"" << fmt2(y) << "\" x2=\"" << fmt2(kLeft)
        << "\" y2=\"" << fmt2(y) << "\" stroke=\"#444\"/>\n";
    out << "<text x=\"" << fmt2(kLeft - 8) << "\" y=\"" << fmt2(y + 4)
        << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
  }
  out << "<text x=\"" << fmt2(kLeft + plot_w / 2) << "\" y=\"" << fmt2(kHeight - 12)
      << "\" text-anchor=\"middle\">" << figure.x_label << "</text>\n";
  out << "<text x=\"16\" y=\"" << fmt2(kTop + plot_h / 2)
      << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << fmt2(kTop + plot_h / 2)
      << ")\">" << figure.y_label << "</text>\n";
  if (!figure.title.empty())
    out << "<text x=\"" << fmt2(kLeft + plot_w / 2)
        << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << figure.title << "</text>\n";
  out << "</g>\n";

  // clip series to the plot area
  out << "<clipPath id=\"plot\"><rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
      << plot_w << "\" height=\"" << plot_h << "\"/></clipPath>\n";
  out << "<g clip-path=\"url(#plot)\">\n";

  for (double v : figure.h_lines)
    out << "<line x1=\"" << fmt2(kLeft) << "\" y1=\"" << fmt2(Y(v)) << "\" x2=\""
        << fmt2(kLeft + plot_w) << "\" y2=\"" << fmt2(Y(v))
        << "\" stroke=\"#c8a200\" stroke-width=\"1.5\"/>\n";
  for (double v : figure.v_lines)
    out << "<line x1=\"" << fmt2(X(v)) << "\" y1=\"" << fmt2(kTop) << "\" x2=\"" << fmt2(X(v))
        << "\" y2=\"" << fmt2(kTop + plot_h)
        << "\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";

  for (const Series& s : figure.series) {
    switch (s.style) {
      case Series::Style::band_fill: {
        out << "<path d=\"M";
        for (std::size_t i = 0; i < s.x.size(); ++i)
          out << fmt2(X(s.x[i])) << ' ' << fmt2(Y(s.y2[i])) << (i + 1 < s.x.size() ? " L" : "");
        for (std::size_t i = s.x.size(); i-- > 0;)
          out << " L" << fmt2(X(s.x[i])) << ' ' << fmt2(Y(s.y[i]));
        out << " Z\" fill=\"" << s.color << "\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
        break;
      }
      case Series::Style::line: {
        out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.8\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
          out << fmt2(X(s.x[i])) << ',' << fmt2(Y(s.y[i])) << (i + 1 < s.x.size() ? " " : "");
        out << "\"/>\n";
        break;
      }
      case Series::Style::dots: {
        out << "<g fill=\"" << s.color << "\">\n";
        for (std::size_t i = 0; i < s.x.size(); ++i)
          out << "<circle cx=\"" << fmt2(X(s.x[i])) << "\" cy=\"" << fmt2(Y(s.y[i]))
              << "\" r=\"3\"/>\n";
        out << "</g>\n";
        break;
      }
    }
  }
  out << "</g>\n</svg>\n";
  if (!out) throw std::runtime_error("failed while writing '" + path.string() + "'");
}

}  // namespace proflik::cli
