#pragma once

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <string>

#include "duporcq/geometry.hpp"
#include "duporcq/moebius.hpp"

namespace duporcq {

namespace detail {

inline const char* direction_color(char label) {
  switch (label) {
    case 'm': return "#8c8c8c";
    case 'b': return "#1f4e9c";
    case 'g': return "#2e8b57";
    case 'o': return "#e67e22";
    case 'y': return "#d4b000";
    case 'p': return "#e75480";
    default: return "#000000";
  }
}

inline std::string fmt3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

// Anchor pairs spanning each special direction on the base.
inline std::array<std::pair<int, int>, 6> direction_pairs() { return {{{0, 1}, {3, 4}, {1, 4}, {1, 3}, {0, 4}, {0, 3}}}; }

inline void panel(std::ostringstream& out, const Tuple5& P, const char* title, double x0, double size) {
  double minx = 1e300, maxx = -1e300, miny = 1e300, maxy = -1e300;
  for (const auto& p : P) {
    minx = std::min(minx, to_double(p.x));
    maxx = std::max(maxx, to_double(p.x));
    miny = std::min(miny, to_double(p.y));
    maxy = std::max(maxy, to_double(p.y));
  }
  double span = std::max({maxx - minx, maxy - miny, 1e-9});
  double margin = 40, scale = (size - 2 * margin) / span;
  auto X = [&](const PlanarPoint& p) { return x0 + margin + (to_double(p.x) - minx) * scale; };
  auto Y = [&](const PlanarPoint& p) { return 40 + margin + (maxy - to_double(p.y)) * scale; };
  out << "  <text x=\"" << fmt3(x0 + size / 2) << "\" y=\"24\" text-anchor=\"middle\">" << title << "</text>\n";
  auto pairs = direction_pairs();
  auto dirs = special_directions(P);
  for (size_t k = 0; k < 6; ++k) {
    const auto& [i, j] = pairs[k];
    const auto& a = P[static_cast<size_t>(i)];
    const auto& b = P[static_cast<size_t>(j)];
    out << "  <line x1=\"" << fmt3(X(a)) << "\" y1=\"" << fmt3(Y(a)) << "\" x2=\"" << fmt3(X(b)) << "\" y2=\""
        << fmt3(Y(b)) << "\" stroke=\"" << direction_color(dirs[k].label) << "\" stroke-width=\"2\"/>\n";
  }
  for (size_t k = 0; k < 5; ++k) {
    out << "  <circle cx=\"" << fmt3(X(P[k])) << "\" cy=\"" << fmt3(Y(P[k])) << "\" r=\"4\" fill=\"black\"/>\n";
    out << "  <text x=\"" << fmt3(X(P[k]) + 6) << "\" y=\"" << fmt3(Y(P[k]) - 6) << "\" font-size=\"12\">" << k + 1
        << "</text>\n";
  }
}

}  // namespace detail

// Base and platform side by side; the six special directions of the base
// are drawn in their colors on both.
inline std::string render_svg(const PentapodDesign& d) {
  const double size = 400;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * size << "\" height=\"" << size + 80
      << "\" font-family=\"sans-serif\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  detail::panel(out, d.planar_base(), "base", 0, size);
  detail::panel(out, d.planar_platform(), "platform", size, size);
  auto dirs = special_directions(d.planar_base());
  for (size_t k = 0; k < dirs.size(); ++k) {
    double x = 20 + 130.0 * static_cast<double>(k), y = size + 60;
    out << "  <rect x=\"" << detail::fmt3(x) << "\" y=\"" << detail::fmt3(y - 10) << "\" width=\"12\" height=\"12\" fill=\""
        << detail::direction_color(dirs[k].label) << "\"/>\n";
    out << "  <text x=\"" << detail::fmt3(x + 18) << "\" y=\"" << detail::fmt3(y) << "\" font-size=\"12\">"
        << dirs[k].label << ": " << dirs[k].color << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace duporcq
