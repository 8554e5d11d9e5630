#pragma once

// Minimal SVG 1.1 writer: polylines only, viewBox auto-fitted with a 5%
// margin, no external assets.  Output is deterministic.

#include <ostream>
#include <string>
#include <vector>

#include "harmonic/csv.hpp"
#include "harmonic/types.hpp"

namespace harmonic::svg {

struct Polyline {
  std::vector<Complex> points;  // math coordinates, y up
  std::string stroke;           // CSS color
  bool closed = false;
};

inline void write_svg(std::ostream& out, const std::vector<Polyline>& lines) {
  double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
  bool first = true;
  for (const auto& line : lines) {
    for (const auto& p : line.points) {
      if (first) {
        min_x = max_x = p.real();
        min_y = max_y = p.imag();
        first = false;
      } else {
        min_x = std::min(min_x, p.real());
        max_x = std::max(max_x, p.real());
        min_y = std::min(min_y, p.imag());
        max_y = std::max(max_y, p.imag());
      }
    }
  }
  if (first) {
    min_x = min_y = -1.0;
    max_x = max_y = 1.0;
  }
  const double span = std::max(max_x - min_x, max_y - min_y);
  const double margin = 0.05 * (span > 0.0 ? span : 1.0);
  const double width = (max_x - min_x) + 2.0 * margin;
  const double height = (max_y - min_y) + 2.0 * margin;
  const double stroke_width = 0.004 * std::max(width, height);

  // SVG y grows downward; emit (x, -y) and shift the viewBox accordingly.
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
      << csv::format_double(min_x - margin) << ' ' << csv::format_double(-max_y - margin) << ' '
      << csv::format_double(width) << ' ' << csv::format_double(height) << "\">\n";
  for (const auto& line : lines) {
    if (line.points.empty()) continue;
    out << "<polyline fill=\"none\" stroke=\"" << line.stroke << "\" stroke-width=\""
        << csv::format_double(stroke_width) << "\" points=\"";
    bool first_point = true;
    auto emit = [&](const Complex& p) {
      if (!first_point) out << ' ';
      out << csv::format_double(p.real()) << ',' << csv::format_double(-p.imag());
      first_point = false;
    };
    for (const auto& p : line.points) emit(p);
    if (line.closed) emit(line.points.front());
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace harmonic::svg
