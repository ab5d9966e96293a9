#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "error.hpp"
#include "numfmt.hpp"

namespace rdc::svg {

namespace {

constexpr int kPlotSize = 600;   // target plot edge in px
constexpr int kMarginLeft = 70;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 55;

struct Anchor {
  double t;
  Rgb color;
};

constexpr Anchor kSequentialAnchors[] = {
    {0.00, {68, 1, 84}},   {0.25, {59, 82, 139}}, {0.50, {33, 145, 140}},
    {0.75, {94, 201, 98}}, {1.00, {253, 231, 37}},
};

const char* kCategoryPalette[17] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#aec7e8", "#ffbb78", "#98df8a", "#ff9896", "#c5b0d5", "#c49c94",
    "#f7b6d2",
};

std::uint8_t lerp_channel(std::uint8_t a, std::uint8_t b, double t) {
  return static_cast<std::uint8_t>(std::lround(a + (b - a) * t));
}

std::string escape_text(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += ch;
    }
  }
  return out;
}

// Tick indices: endpoints plus three interior quarters, deduplicated.
std::vector<std::size_t> tick_indices(std::size_t n) {
  std::vector<std::size_t> ticks;
  for (int k = 0; k <= 4; ++k) {
    const std::size_t i = (n - 1) * static_cast<std::size_t>(k) / 4;
    if (ticks.empty() || ticks.back() != i) ticks.push_back(i);
  }
  return ticks;
}

struct Layout {
  int cell;
  int plot_w;
  int plot_h;
  int width;
  int height;
  int extra_right;  // legend / colorbar area
};

Layout make_layout(std::size_t rows, std::size_t cols, int extra_right) {
  Layout l;
  l.cell = std::max(2, kPlotSize / static_cast<int>(std::max(rows, cols)));
  l.plot_w = l.cell * static_cast<int>(cols);
  l.plot_h = l.cell * static_cast<int>(rows);
  l.extra_right = extra_right;
  l.width = kMarginLeft + l.plot_w + extra_right;
  l.height = kMarginTop + l.plot_h + kMarginBottom;
  return l;
}

void open_svg(std::ostringstream& out, const Layout& l, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << l.width << "\" height=\""
      << l.height << "\" viewBox=\"0 0 " << l.width << " " << l.height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << l.width << "\" height=\"" << l.height
      << "\" fill=\"#ffffff\"/>\n";
  out << "<text x=\"" << kMarginLeft << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">"
      << escape_text(title) << "</text>\n";
}

void draw_axes(std::ostringstream& out, const Layout& l, const std::vector<double>& x_axis,
               const std::vector<double>& y_axis, const std::string& x_label,
               const std::string& y_label) {
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#000000\">\n";
  for (std::size_t i : tick_indices(x_axis.size())) {
    const int x = kMarginLeft + static_cast<int>(i) * l.cell + l.cell / 2;
    out << "<text x=\"" << x << "\" y=\"" << kMarginTop + l.plot_h + 16
        << "\" text-anchor=\"middle\">" << format_double(x_axis[i]) << "</text>\n";
  }
  for (std::size_t i : tick_indices(y_axis.size())) {
    const int y = kMarginTop + l.plot_h - static_cast<int>(i) * l.cell - l.cell / 2;
    out << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\">" << format_double(y_axis[i]) << "</text>\n";
  }
  out << "<text x=\"" << kMarginLeft + l.plot_w / 2 << "\" y=\"" << kMarginTop + l.plot_h + 38
      << "\" text-anchor=\"middle\" font-size=\"13\">" << escape_text(x_label) << "</text>\n";
  out << "<text x=\"16\" y=\"" << kMarginTop + l.plot_h / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
      << kMarginTop + l.plot_h / 2 << ")\">" << escape_text(y_label) << "</text>\n";
  out << "</g>\n";
}

// Pixel position of an axis value, interpolated between cell centers.
double axis_to_px(const std::vector<double>& axis, double v, int cell, bool invert, int origin,
                  int extent) {
  const double lo = axis.front();
  const double hi = axis.back();
  double frac = hi == lo ? 0.5 : (v - lo) / (hi - lo);
  frac = std::clamp(frac, 0.0, 1.0);
  const double span = static_cast<double>(extent - cell);
  const double offset = cell / 2.0 + frac * span;
  return invert ? origin + extent - offset : origin + offset;
}

}  // namespace

std::string hex(Rgb c) {
  static const char* digits = "0123456789abcdef";
  std::string s = "#......";
  s[1] = digits[c.r >> 4];
  s[2] = digits[c.r & 15];
  s[3] = digits[c.g >> 4];
  s[4] = digits[c.g & 15];
  s[5] = digits[c.b >> 4];
  s[6] = digits[c.b & 15];
  return s;
}

Rgb sequential_color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  for (std::size_t i = 0; i + 1 < std::size(kSequentialAnchors); ++i) {
    const Anchor& a = kSequentialAnchors[i];
    const Anchor& b = kSequentialAnchors[i + 1];
    if (t <= b.t) {
      const double f = (t - a.t) / (b.t - a.t);
      return Rgb{lerp_channel(a.color.r, b.color.r, f), lerp_channel(a.color.g, b.color.g, f),
                 lerp_channel(a.color.b, b.color.b, f)};
    }
  }
  return kSequentialAnchors[std::size(kSequentialAnchors) - 1].color;
}

Rgb category_color(std::size_t index) {
  const char* s = kCategoryPalette[index % std::size(kCategoryPalette)];
  auto nibble = [](char c) -> std::uint8_t {
    return c <= '9' ? static_cast<std::uint8_t>(c - '0')
                    : static_cast<std::uint8_t>(10 + c - 'a');
  };
  return Rgb{static_cast<std::uint8_t>(nibble(s[1]) * 16 + nibble(s[2])),
             static_cast<std::uint8_t>(nibble(s[3]) * 16 + nibble(s[4])),
             static_cast<std::uint8_t>(nibble(s[5]) * 16 + nibble(s[6]))};
}

std::string continuous_heatmap(const Mat<double>& values, const std::vector<double>& x_axis,
                               const std::vector<double>& y_axis, const std::string& title,
                               const std::string& x_label, const std::string& y_label,
                               const std::string& value_label) {
  if (values.rows() != y_axis.size() || values.cols() != x_axis.size()) {
    fail(ErrorKind::invalid_argument, "heatmap: matrix shape does not match axes");
  }
  double lo = 0.0, hi = 0.0;
  bool seen = false;
  for (double v : values.data()) {
    if (!std::isfinite(v)) continue;
    if (!seen || v < lo) lo = v;
    if (!seen || v > hi) hi = v;
    seen = true;
  }
  if (!seen) lo = hi = 0.0;

  const Layout l = make_layout(values.rows(), values.cols(), 110);
  std::ostringstream out;
  open_svg(out, l, title);
  for (std::size_t r = 0; r < values.rows(); ++r) {
    const int y = kMarginTop + l.plot_h - static_cast<int>(r + 1) * l.cell;
    for (std::size_t c = 0; c < values.cols(); ++c) {
      const double v = values.at(r, c);
      const double t = !std::isfinite(v) || hi == lo ? 0.0 : (v - lo) / (hi - lo);
      const int x = kMarginLeft + static_cast<int>(c) * l.cell;
      out << "<rect class=\"cell\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << l.cell
          << "\" height=\"" << l.cell << "\" fill=\"" << hex(sequential_color(t)) << "\"/>\n";
    }
  }
  draw_axes(out, l, x_axis, y_axis, x_label, y_label);

  // color bar
  const int bar_x = kMarginLeft + l.plot_w + 28;
  const int bar_h = l.plot_h;
  const int steps = 48;
  for (int i = 0; i < steps; ++i) {
    const double t = (i + 0.5) / steps;
    const int seg_top = kMarginTop + bar_h - (i + 1) * bar_h / steps;
    const int seg_bot = kMarginTop + bar_h - i * bar_h / steps;
    out << "<rect x=\"" << bar_x << "\" y=\"" << seg_top << "\" width=\"14\" height=\""
        << seg_bot - seg_top << "\" fill=\"" << hex(sequential_color(t)) << "\"/>\n";
  }
  out << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<text x=\"" << bar_x + 18 << "\" y=\"" << kMarginTop + bar_h << "\">" << format_double(lo)
      << "</text>\n";
  out << "<text x=\"" << bar_x + 18 << "\" y=\"" << kMarginTop + 10 << "\">" << format_double(hi)
      << "</text>\n";
  out << "<text x=\"" << bar_x << "\" y=\"" << kMarginTop - 8 << "\" font-size=\"12\">"
      << escape_text(value_label) << "</text>\n";
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

std::string categorical_heatmap(const Mat<std::size_t>& cells, const std::vector<double>& x_axis,
                                const std::vector<double>& y_axis,
                                const std::vector<std::string>& legend, const std::string& title,
                                const std::string& x_label, const std::string& y_label,
                                std::optional<std::pair<double, double>> mark) {
  if (cells.rows() != y_axis.size() || cells.cols() != x_axis.size()) {
    fail(ErrorKind::invalid_argument, "heatmap: matrix shape does not match axes");
  }
  const Layout l = make_layout(cells.rows(), cells.cols(), 190);
  std::ostringstream out;
  open_svg(out, l, title);
  for (std::size_t r = 0; r < cells.rows(); ++r) {
    const int y = kMarginTop + l.plot_h - static_cast<int>(r + 1) * l.cell;
    for (std::size_t c = 0; c < cells.cols(); ++c) {
      const int x = kMarginLeft + static_cast<int>(c) * l.cell;
      out << "<rect class=\"cell\" x=\"" << x << "\" y=\"" << y << "\" width=\"" << l.cell
          << "\" height=\"" << l.cell << "\" fill=\"" << hex(category_color(cells.at(r, c)))
          << "\"/>\n";
    }
  }
  draw_axes(out, l, x_axis, y_axis, x_label, y_label);

  // legend: only the indices that actually appear, in index order
  std::vector<bool> present(legend.size(), false);
  for (std::size_t idx : cells.data()) {
    if (idx < present.size()) present[idx] = true;
  }
  const int legend_x = kMarginLeft + l.plot_w + 24;
  int legend_y = kMarginTop + 8;
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < legend.size(); ++i) {
    if (!present[i]) continue;
    out << "<rect x=\"" << legend_x << "\" y=\"" << legend_y - 10
        << "\" width=\"12\" height=\"12\" fill=\"" << hex(category_color(i)) << "\"/>\n";
    out << "<text x=\"" << legend_x + 18 << "\" y=\"" << legend_y << "\">" << i << ": "
        << escape_text(legend[i]) << "</text>\n";
    legend_y += 18;
  }
  out << "</g>\n";

  if (mark && mark->first >= x_axis.front() && mark->first <= x_axis.back() &&
      mark->second >= y_axis.front() && mark->second <= y_axis.back()) {
    const double mx = axis_to_px(x_axis, mark->first, l.cell, false, kMarginLeft, l.plot_w);
    const double my = axis_to_px(y_axis, mark->second, l.cell, true, kMarginTop, l.plot_h);
    out << "<circle class=\"app-point\" cx=\"" << format_double(mx) << "\" cy=\""
        << format_double(my)
        << "\" r=\"5\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << format_double(mx + 8) << "\" y=\"" << format_double(my - 8)
        << "\" font-family=\"sans-serif\" font-size=\"12\">(" << format_double(mark->first) << ", "
        << format_double(mark->second) << ") dB</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rdc::svg
