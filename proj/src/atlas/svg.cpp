#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "nearfield/atlas.hpp"

namespace nearfield {

namespace {

using L = SvgLayout;

struct Series {
  double SweepRow::*column;
  const char* name;
  const char* label;
  const char* color;
  bool array;
};

constexpr Series kSeries[] = {
    {&SweepRow::dF_array, "dF_array", "Fraunhofer, array", "#1f4fb4", true},
    {&SweepRow::dN_array, "dN_array", "Fresnel, array", "#c2401a", true},
    {&SweepRow::dF_single, "dF_single", "Fraunhofer, single element", "#1f4fb4", false},
    {&SweepRow::dN_single, "dN_single", "Fresnel, single element", "#c2401a", false},
};

std::string fmt(const char* format, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

std::string px(double v) { return fmt("%.2f", v); }

double max_distance(std::span<const SweepRow> rows) {
  double m = 0.0;
  for (const SweepRow& row : rows) {
    for (const Series& s : kSeries) m = std::max(m, row.*s.column);
  }
  return m;
}

// Powers of two no closer than min_gap pixels once mapped onto [0, extent].
std::vector<double> power_of_two_ticks(double y_max, double extent, double min_gap) {
  std::vector<double> ticks;
  for (double t = y_max; t > 0.0 && ticks.size() < 64; t *= 0.5) {
    if (!ticks.empty() && (ticks.back() - t) / y_max * extent < min_gap) break;
    ticks.push_back(t);
  }
  std::reverse(ticks.begin(), ticks.end());
  return ticks;
}

void header(std::string& out, double y_max, SvgStyle style) {
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 960 600\" width=\"960\" "
         "height=\"600\" data-style=\"";
  out += style == SvgStyle::Cartesian ? "cartesian" : "polar";
  out += "\" data-y-max=\"" + fmt("%.17g", y_max) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"960\" height=\"600\" fill=\"white\"/>\n";
}

void legend(std::string& out, SvgStyle style) {
  double y = 60.0;
  for (const Series& s : kSeries) {
    const char* dash = s.array ? "" : (style == SvgStyle::Cartesian ? "6 4" : "2 3");
    out += "<line x1=\"780\" y1=\"" + px(y) + "\" x2=\"820\" y2=\"" + px(y) +
           "\" stroke=\"" + s.color + "\" stroke-width=\"2\"";
    if (*dash) out += std::string(" stroke-dasharray=\"") + dash + "\"";
    out += "/>\n";
    out += "<text x=\"828\" y=\"" + px(y + 4.0) + "\" font-size=\"11\">" + s.label +
           "</text>\n";
    y += 22.0;
  }
}

void style_attrs(std::string& out, const Series& s, SvgStyle style) {
  out += std::string(" fill=\"none\" stroke=\"") + s.color + "\" stroke-width=\"1.5\"";
  if (!s.array) {
    out += style == SvgStyle::Cartesian ? " stroke-dasharray=\"6 4\"" : " stroke-dasharray=\"2 3\"";
  }
}

std::string cartesian(std::span<const SweepRow> rows) {
  const double y_max = svg_axis_limit(max_distance(rows));
  const double x_lo = rows.front().theta_deg;
  const double x_hi = rows.back().theta_deg > x_lo ? rows.back().theta_deg : x_lo + 1.0;
  auto x_of = [&](double deg) { return L::kLeft + (deg - x_lo) / (x_hi - x_lo) * (L::kRight - L::kLeft); };
  auto y_of = [&](double d) { return L::kBottom - d / y_max * (L::kBottom - L::kTop); };

  std::string out;
  header(out, y_max, SvgStyle::Cartesian);
  // axes
  out += "<line x1=\"" + px(L::kLeft) + "\" y1=\"" + px(L::kBottom) + "\" x2=\"" +
         px(L::kRight) + "\" y2=\"" + px(L::kBottom) + "\" stroke=\"black\"/>\n";
  out += "<line x1=\"" + px(L::kLeft) + "\" y1=\"" + px(L::kTop) + "\" x2=\"" + px(L::kLeft) +
         "\" y2=\"" + px(L::kBottom) + "\" stroke=\"black\"/>\n";
  for (double deg = std::ceil(x_lo / 15.0) * 15.0; deg <= x_hi + 1e-9; deg += 15.0) {
    const double x = x_of(deg);
    out += "<line x1=\"" + px(x) + "\" y1=\"" + px(L::kBottom) + "\" x2=\"" + px(x) +
           "\" y2=\"" + px(L::kTop) + "\" stroke=\"#dddddd\"/>\n";
    out += "<text x=\"" + px(x) + "\" y=\"" + px(L::kBottom + 18.0) +
           "\" font-size=\"11\" text-anchor=\"middle\">" + fmt("%g", deg) + "</text>\n";
  }
  for (double t : power_of_two_ticks(y_max, L::kBottom - L::kTop, 14.0)) {
    const double y = y_of(t);
    out += "<line x1=\"" + px(L::kLeft) + "\" y1=\"" + px(y) + "\" x2=\"" + px(L::kRight) +
           "\" y2=\"" + px(y) + "\" stroke=\"#dddddd\"/>\n";
    out += "<text x=\"" + px(L::kLeft - 6.0) + "\" y=\"" + px(y + 4.0) +
           "\" font-size=\"11\" text-anchor=\"end\">" + fmt("%g", t) + "</text>\n";
  }
  out += "<text x=\"420\" y=\"580\" font-size=\"13\" text-anchor=\"middle\">observation angle "
         "(deg)</text>\n";
  out += "<text x=\"20\" y=\"290\" font-size=\"13\" transform=\"rotate(-90 20 290)\" "
         "text-anchor=\"middle\">distance / wavelength</text>\n";

  for (const Series& s : kSeries) {
    out += std::string("<polyline class=\"boundary\" data-series=\"") + s.name + "\" points=\"";
    bool first = true;
    for (const SweepRow& row : rows) {
      if (!first) out += ' ';
      first = false;
      out += px(x_of(row.theta_deg)) + "," + px(y_of(row.*s.column));
    }
    out += "\"";
    style_attrs(out, s, SvgStyle::Cartesian);
    out += "/>\n";
  }
  legend(out, SvgStyle::Cartesian);
  out += "</svg>\n";
  return out;
}

std::string polar(std::span<const SweepRow> rows) {
  const double y_max = svg_axis_limit(max_distance(rows));
  const double scale = L::kPolarRadius / y_max;
  std::string out;
  header(out, y_max, SvgStyle::Polar);
  for (double t : power_of_two_ticks(y_max, L::kPolarRadius, 14.0)) {
    out += "<circle cx=\"" + px(L::kPolarCx) + "\" cy=\"" + px(L::kPolarCy) + "\" r=\"" +
           px(t * scale) + "\" fill=\"none\" stroke=\"#dddddd\"/>\n";
    out += "<text x=\"" + px(L::kPolarCx + 3.0) + "\" y=\"" +
           px(L::kPolarCy - t * scale - 2.0) + "\" font-size=\"10\">" + fmt("%g", t) +
           "</text>\n";
  }
  for (int deg = 0; deg < 360; deg += 15) {
    const double a = deg * kPi / 180.0;
    out += "<line x1=\"" + px(L::kPolarCx) + "\" y1=\"" + px(L::kPolarCy) + "\" x2=\"" +
           px(L::kPolarCx + L::kPolarRadius * std::cos(a)) + "\" y2=\"" +
           px(L::kPolarCy - L::kPolarRadius * std::sin(a)) + "\" stroke=\"#eeeeee\"/>\n";
  }
  // antenna along the horizontal axis
  out += "<line x1=\"" + px(L::kPolarCx - 8.0) + "\" y1=\"" + px(L::kPolarCy) + "\" x2=\"" +
         px(L::kPolarCx + 8.0) + "\" y2=\"" + px(L::kPolarCy) +
         "\" stroke=\"black\" stroke-width=\"3\"/>\n";

  for (const Series& s : kSeries) {
    out += std::string("<path class=\"boundary\" data-series=\"") + s.name + "\" d=\"";
    // Upper half over the sweep, lower half mirrored back, closed.
    bool first = true;
    auto emit = [&](const SweepRow& row, double side) {
      const double a = row.theta_deg * kPi / 180.0;
      const double r = row.*s.column * scale;
      out += first ? "M" : " L";
      first = false;
      out += px(L::kPolarCx + r * std::cos(a)) + " " + px(L::kPolarCy - side * r * std::sin(a));
    };
    for (const SweepRow& row : rows) emit(row, 1.0);
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) emit(*it, -1.0);
    out += " Z\"";
    style_attrs(out, s, SvgStyle::Polar);
    out += "/>\n";
  }
  legend(out, SvgStyle::Polar);
  out += "</svg>\n";
  return out;
}

}  // namespace

double svg_axis_limit(double max_value) {
  double limit = 1.0;
  while (limit < max_value) limit *= 2.0;
  return limit;
}

std::string to_svg(std::span<const SweepRow> rows, SvgStyle style) {
  if (rows.empty()) throw InvalidArgument("to_svg: no rows");
  return style == SvgStyle::Cartesian ? cartesian(rows) : polar(rows);
}

}  // namespace nearfield
