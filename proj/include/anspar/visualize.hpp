#pragma once

// Figure-style artifacts as plain files: a 2-D cluster scatter and per-token
// attention heat strips. Everything is SVG 1.1 text written by hand — no
// plotting dependency — and every image comes with a CSV twin carrying the
// same values at 9 significant digits so downstream checks never have to
// parse SVG.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "anspar/matrix.hpp"
#include "anspar/types.hpp"

namespace anspar {

struct ScatterPoint {
  double x = 0.0;
  double y = 0.0;
  int cluster = 0;
};

struct ScatterSpec {
  std::vector<ScatterPoint> points;
  int k = 0;
};

struct AttentionStrip {
  TokenSeq tokens;
  Vec weights;
  std::vector<bool> kept;  // survived answer extraction
};

/// "plot.svg" -> "plot.csv"; a path without the .svg suffix gets ".csv"
/// appended.
inline std::string csv_twin_path(const std::string& svg_path) {
  if (svg_path.size() >= 4 && svg_path.compare(svg_path.size() - 4, 4, ".svg") == 0) {
    return svg_path.substr(0, svg_path.size() - 4) + ".csv";
  }
  return svg_path + ".csv";
}

namespace detail {

inline std::string fmt9(double v) {
  // 12 significant digits: comfortably inside the 1e-9 round-trip budget for
  // the coordinate/weight magnitudes these artifacts carry
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline std::string cluster_color(int cluster, int k) {
  // evenly spaced hues, fixed saturation/value, converted to hex rgb
  const double h = 360.0 * static_cast<double>(cluster) / static_cast<double>(std::max(k, 1));
  const double s = 0.65, v = 0.85;
  const double c = v * s;
  const double hp = h / 60.0;
  const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
  double r = 0.0, g = 0.0, b = 0.0;
  if (hp < 1.0) {
    r = c; g = x;
  } else if (hp < 2.0) {
    r = x; g = c;
  } else if (hp < 3.0) {
    g = c; b = x;
  } else if (hp < 4.0) {
    g = x; b = c;
  } else if (hp < 5.0) {
    r = x; b = c;
  } else {
    r = c; b = x;
  }
  const double m = v - c;
  char buf[16];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", static_cast<int>((r + m) * 255.0 + 0.5),
                static_cast<int>((g + m) * 255.0 + 0.5),
                static_cast<int>((b + m) * 255.0 + 0.5));
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    out += ch;
  }
  out += "\"";
  return out;
}

inline std::ofstream open_for_write(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write: " + path);
  return out;
}

}  // namespace detail

/// SVG scatter, one fill per cluster, plus a CSV twin (x,y,cluster).
inline void render_scatter(const ScatterSpec& spec, const std::string& svg_path) {
  for (const ScatterPoint& p : spec.points) {
    if (p.cluster < 0 || p.cluster >= spec.k)
      throw std::runtime_error("scatter point cluster " + std::to_string(p.cluster) +
                               " outside [0, " + std::to_string(spec.k) + ")");
  }

  const double W = 640.0, H = 480.0, margin = 50.0;
  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  if (!spec.points.empty()) {
    min_x = max_x = spec.points[0].x;
    min_y = max_y = spec.points[0].y;
    for (const ScatterPoint& p : spec.points) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  if (max_x == min_x) {
    min_x -= 1.0;
    max_x += 1.0;
  }
  if (max_y == min_y) {
    min_y -= 1.0;
    max_y += 1.0;
  }
  const auto sx = [&](double x) { return margin + (x - min_x) / (max_x - min_x) * (W - 2 * margin); };
  const auto sy = [&](double y) { return H - margin - (y - min_y) / (max_y - min_y) * (H - 2 * margin); };

  std::ofstream svg = detail::open_for_write(svg_path);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  svg << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << W - 2 * margin
      << "\" height=\"" << H - 2 * margin
      << "\" fill=\"none\" stroke=\"#888888\" stroke-width=\"1\"/>\n";
  for (const ScatterPoint& p : spec.points) {
    svg << "  <circle cx=\"" << detail::fmt9(sx(p.x)) << "\" cy=\"" << detail::fmt9(sy(p.y))
        << "\" r=\"4\" fill=\"" << detail::cluster_color(p.cluster, spec.k) << "\"/>\n";
  }
  svg << "</svg>\n";
  if (!svg) throw std::runtime_error("write failed: " + svg_path);

  std::ofstream csv = detail::open_for_write(csv_twin_path(svg_path));
  csv << "x,y,cluster\n";
  for (const ScatterPoint& p : spec.points) {
    csv << detail::fmt9(p.x) << "," << detail::fmt9(p.y) << "," << p.cluster << "\n";
  }
  if (!csv) throw std::runtime_error("write failed: " + csv_twin_path(svg_path));
}

/// SVG row of token boxes with fill opacity equal to the attention weight and
/// an outline on kept tokens, plus a CSV twin (token,weight,kept).
inline void render_attention(const AttentionStrip& strip, const std::string& svg_path) {
  if (strip.tokens.size() != strip.weights.size() || strip.tokens.size() != strip.kept.size())
    throw std::runtime_error("attention strip: tokens/weights/kept sizes differ");

  const double box_w = 96.0, box_h = 40.0, gap = 8.0, margin = 10.0;
  const double W = margin * 2 + static_cast<double>(strip.tokens.size()) * (box_w + gap);
  const double H = box_h + 2 * margin + 20.0;

  std::ofstream svg = detail::open_for_write(svg_path);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  for (size_t i = 0; i < strip.tokens.size(); ++i) {
    const double x = margin + static_cast<double>(i) * (box_w + gap);
    svg << "  <rect x=\"" << detail::fmt9(x) << "\" y=\"" << margin << "\" width=\"" << box_w
        << "\" height=\"" << box_h << "\" fill=\"#1f77b4\" fill-opacity=\""
        << detail::fmt9(strip.weights[i]) << "\"";
    if (strip.kept[i]) {
      svg << " stroke=\"#000000\" stroke-width=\"2\"";
    } else {
      svg << " stroke=\"none\"";
    }
    svg << "/>\n";
    svg << "  <text x=\"" << detail::fmt9(x + box_w / 2) << "\" y=\""
        << detail::fmt9(margin + box_h + 16.0)
        << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"13\">"
        << detail::xml_escape(strip.tokens[i]) << "</text>\n";
  }
  svg << "</svg>\n";
  if (!svg) throw std::runtime_error("write failed: " + svg_path);

  std::ofstream csv = detail::open_for_write(csv_twin_path(svg_path));
  csv << "token,weight,kept\n";
  for (size_t i = 0; i < strip.tokens.size(); ++i) {
    csv << detail::csv_escape(strip.tokens[i]) << "," << detail::fmt9(strip.weights[i]) << ","
        << (strip.kept[i] ? 1 : 0) << "\n";
  }
  if (!csv) throw std::runtime_error("write failed: " + csv_twin_path(svg_path));
}

}  // namespace anspar
