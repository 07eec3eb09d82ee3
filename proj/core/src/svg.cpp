#include "intrans/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "intrans/text.hpp"

namespace intrans {

namespace {

constexpr double kWidth = 640.0, kHeight = 480.0;
constexpr double kLeft = 64.0, kRight = 24.0, kTop = 32.0, kBottom = 48.0;

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

struct Axis {
  double lo = 0.0, hi = 1.0;
  int label_decimals = 0;
  std::vector<double> ticks;

  std::string label(double tick) const { return format_fixed(tick, label_decimals); }
};

// Rounds a raw step to the usual 1/2/5 ladder.
double nice_step(double raw) {
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double r = raw / mag;
  if (r <= 1.0) return mag;
  if (r <= 2.0) return 2.0 * mag;
  if (r <= 5.0) return 5.0 * mag;
  return 10.0 * mag;
}

Axis make_axis(double lo, double hi) {
  Axis axis;
  if (!(lo <= hi)) {  // no data
    lo = 0.0;
    hi = 1.0;
  }
  if (lo == hi) {
    const double pad = lo == 0.0 ? 0.5 : std::abs(lo) * 0.1;
    lo -= pad;
    hi += pad;
  }
  const double pad = (hi - lo) * 0.05;
  axis.lo = lo - pad;
  axis.hi = hi + pad;
  const double step = nice_step((axis.hi - axis.lo) / 5.0);
  axis.label_decimals =
      step >= 1.0 ? 0 : static_cast<int>(-std::floor(std::log10(step) + 1e-9));
  // ticks as integer multiples of the step, so labels stay clean
  const long long first = static_cast<long long>(std::ceil(axis.lo / step - 1e-9));
  const long long last = static_cast<long long>(std::floor(axis.hi / step + 1e-9));
  for (long long m = first; m <= last; ++m) {
    axis.ticks.push_back(static_cast<double>(m) * step);
  }
  return axis;
}

std::string esc(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

}  // namespace

void emit_svg_scatter(const CsvTable& data, const std::string& x_column,
                      const std::string& y_column, const std::string& group_column,
                      const std::filesystem::path& path) {
  const std::size_t xi = data.column_index(x_column);
  const std::size_t yi = data.column_index(y_column);
  const bool grouped = !group_column.empty();
  const std::size_t gi = grouped ? data.column_index(group_column) : 0;

  std::vector<double> groups;  // distinct group values, ascending
  if (grouped) {
    for (const auto& row : data.rows) groups.push_back(row[gi]);
    std::sort(groups.begin(), groups.end());
    groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
  }

  double x_lo = 1.0, x_hi = 0.0, y_lo = 1.0, y_hi = 0.0;  // deliberately inverted: "no data"
  bool any = false;
  for (const auto& row : data.rows) {
    if (!std::isfinite(row[xi]) || !std::isfinite(row[yi])) continue;
    if (!any) {
      x_lo = x_hi = row[xi];
      y_lo = y_hi = row[yi];
      any = true;
    } else {
      x_lo = std::min(x_lo, row[xi]);
      x_hi = std::max(x_hi, row[xi]);
      y_lo = std::min(y_lo, row[yi]);
      y_hi = std::max(y_hi, row[yi]);
    }
  }
  const Axis x_axis = make_axis(any ? x_lo : 1.0, any ? x_hi : 0.0);
  const Axis y_axis = make_axis(any ? y_lo : 1.0, any ? y_hi : 0.0);

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto to_x = [&](double v) {
    return kLeft + (v - x_axis.lo) / (x_axis.hi - x_axis.lo) * plot_w;
  };
  const auto to_y = [&](double v) {
    return kTop + plot_h - (v - y_axis.lo) / (y_axis.hi - y_axis.lo) * plot_h;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  svg << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

  // frame and ticks
  svg << "<g stroke=\"#333333\" stroke-width=\"1\" fill=\"none\">\n";
  svg << "<rect x=\"" << format_fixed(kLeft, 2) << "\" y=\"" << format_fixed(kTop, 2)
      << "\" width=\"" << format_fixed(plot_w, 2) << "\" height=\"" << format_fixed(plot_h, 2)
      << "\"/>\n";
  for (double t : x_axis.ticks) {
    const std::string x = format_fixed(to_x(t), 2);
    svg << "<line x1=\"" << x << "\" y1=\"" << format_fixed(kTop + plot_h, 2) << "\" x2=\"" << x
        << "\" y2=\"" << format_fixed(kTop + plot_h + 5, 2) << "\"/>\n";
  }
  for (double t : y_axis.ticks) {
    const std::string y = format_fixed(to_y(t), 2);
    svg << "<line x1=\"" << format_fixed(kLeft - 5, 2) << "\" y1=\"" << y << "\" x2=\""
        << format_fixed(kLeft, 2) << "\" y2=\"" << y << "\"/>\n";
  }
  svg << "</g>\n";

  svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
  for (double t : x_axis.ticks) {
    svg << "<text x=\"" << format_fixed(to_x(t), 2) << "\" y=\""
        << format_fixed(kTop + plot_h + 18, 2) << "\" text-anchor=\"middle\">"
        << x_axis.label(t) << "</text>\n";
  }
  for (double t : y_axis.ticks) {
    svg << "<text x=\"" << format_fixed(kLeft - 8, 2) << "\" y=\""
        << format_fixed(to_y(t) + 4, 2) << "\" text-anchor=\"end\">" << y_axis.label(t)
        << "</text>\n";
  }
  svg << "<text x=\"" << format_fixed(kLeft + plot_w / 2, 2) << "\" y=\""
      << format_fixed(kHeight - 10, 2) << "\" text-anchor=\"middle\" font-size=\"13\">"
      << esc(x_column) << "</text>\n";
  svg << "<text x=\"" << format_fixed(14, 2) << "\" y=\""
      << format_fixed(kTop + plot_h / 2, 2) << "\" text-anchor=\"middle\" font-size=\"13\""
      << " transform=\"rotate(-90 14 " << format_fixed(kTop + plot_h / 2, 2) << ")\">"
      << esc(y_column) << "</text>\n";
  svg << "<text x=\"" << format_fixed(kLeft + plot_w / 2, 2) << "\" y=\"18\""
      << " text-anchor=\"middle\" font-size=\"13\">" << esc(y_column) << " vs "
      << esc(x_column) << "</text>\n";
  svg << "</g>\n";

  // points
  svg << "<g fill-opacity=\"0.75\">\n";
  for (const auto& row : data.rows) {
    if (!std::isfinite(row[xi]) || !std::isfinite(row[yi])) continue;
    const char* color = kPalette[0];
    if (grouped) {
      const auto it = std::lower_bound(groups.begin(), groups.end(), row[gi]);
      color = kPalette[static_cast<std::size_t>(it - groups.begin()) % kPaletteSize];
    }
    svg << "<circle cx=\"" << format_fixed(to_x(row[xi]), 2) << "\" cy=\""
        << format_fixed(to_y(row[yi]), 2) << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
  }
  svg << "</g>\n";

  if (grouped) {
    const double lx = kLeft + plot_w - 120.0;
    double ly = kTop + 10.0;
    svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
    for (std::size_t g = 0; g < groups.size(); ++g) {
      svg << "<rect x=\"" << format_fixed(lx, 2) << "\" y=\"" << format_fixed(ly - 8, 2)
          << "\" width=\"10\" height=\"10\" fill=\"" << kPalette[g % kPaletteSize] << "\"/>\n";
      svg << "<text x=\"" << format_fixed(lx + 16, 2) << "\" y=\"" << format_fixed(ly + 1, 2)
          << "\">" << esc(group_column) << " = " << format_double(groups[g]) << "</text>\n";
      ly += 16.0;
    }
    svg << "</g>\n";
  }

  svg << "</svg>\n";

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << svg.str();
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace intrans
