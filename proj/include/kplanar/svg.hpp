// Copyright 2026 The kplanar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KPLANAR_SVG_HPP_
#define KPLANAR_SVG_HPP_

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "kplanar/drawing.hpp"

namespace kplanar {

struct SvgPoint {
  double x = 0, y = 0;
};

// Vertex i at angle 2 pi i / n, counter-clockwise; straight chords then cross
// exactly as in the convex drawing.
inline std::vector<SvgPoint> convex_layout(int n) {
  std::vector<SvgPoint> p(n);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i) p[i] = {std::cos(2 * pi * i / n), std::sin(2 * pi * i / n)};
  return p;
}

inline std::vector<SvgPoint> stored_layout(const Drawing& d) {
  if (!d.has_points()) throw InputError("drawing has no stored coordinates to render");
  std::vector<SvgPoint> p;
  for (const auto& v : d.vertices) p.push_back({to_double(v.pos->x), to_double(v.pos->y)});
  return p;
}

inline std::string render_svg(const Drawing& d, const std::vector<SvgPoint>& layout, bool use_bends = true) {
  if (static_cast<int>(layout.size()) != d.n()) throw InputError("layout size does not match the drawing");
  std::vector<std::vector<SvgPoint>> lines(d.m());
  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  auto grow = [&](SvgPoint q) {
    lo_x = std::min(lo_x, q.x), lo_y = std::min(lo_y, q.y);
    hi_x = std::max(hi_x, q.x), hi_y = std::max(hi_y, q.y);
  };
  for (auto q : layout) grow(q);
  for (int e = 0; e < d.m(); ++e) {
    lines[e].push_back(layout[d.edges[e].u]);
    if (use_bends && e < static_cast<int>(d.bends.size()))
      for (const auto& b : d.bends[e]) {
        lines[e].push_back({to_double(b.x), to_double(b.y)});
        grow(lines[e].back());
      }
    lines[e].push_back(layout[d.edges[e].v]);
  }
  if (d.n() == 0) lo_x = lo_y = 0, hi_x = hi_y = 1;
  const double size = 600, pad = 20;
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  double s = (size - 2 * pad) / span;
  auto X = [&](double x) { return pad + (x - lo_x) * s; };
  auto Y = [&](double y) { return size - pad - (y - lo_y) * s; };  // y up
  auto emit = [](std::string& out, const char* fmt, double a, double b) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, a, b);
    out += buf;
  };
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  out += "<g fill=\"none\" stroke=\"#222\" stroke-width=\"1\">\n";
  for (int e = 0; e < d.m(); ++e) {
    const char* color = d.crossings[e].empty() ? "#222" : "#c33";
    out += "<polyline data-edge=\"" + std::to_string(e) + "\" stroke=\"" + color + "\" points=\"";
    for (std::size_t i = 0; i < lines[e].size(); ++i) {
      if (i) out += " ";
      emit(out, "%.3f,%.3f", X(lines[e][i].x), Y(lines[e][i].y));
    }
    out += "\"/>\n";
  }
  out += "</g>\n<g fill=\"#000\">\n";
  for (int v = 0; v < d.n(); ++v) {
    out += "<circle data-vertex=\"" + std::to_string(v) + "\" r=\"3\" ";
    emit(out, "cx=\"%.3f\" cy=\"%.3f\"/>\n", X(layout[v].x), Y(layout[v].y));
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace kplanar

#endif  // KPLANAR_SVG_HPP_
