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

#ifndef KPLANAR_GEOMETRY_HPP_
#define KPLANAR_GEOMETRY_HPP_

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kplanar/drawing.hpp"

namespace kplanar {

class GeometryError : public InputError {
 public:
  GeometryError(const std::string& what, std::vector<int> edges)
      : InputError(what), edges_(std::move(edges)) {}
  const std::vector<int>& edges() const { return edges_; }

 private:
  std::vector<int> edges_;
};

namespace geom {

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

inline int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

inline int orient(const Point& a, const Point& b, const Point& c) { return sgn(cross(sub(b, a), sub(c, a))); }

// c collinear with ab assumed; is c within the closed box of ab?
inline bool on_segment(const Point& a, const Point& b, const Point& c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
         c.y <= std::max(a.y, b.y);
}

// Exact angular comparison of direction vectors, counter-clockwise from +x.
inline bool angle_less(const Point& a, const Point& b) {
  auto half = [](const Point& p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

enum class Contact { kNone, kProper, kTouch, kOverlap };

struct Intersection {
  Contact kind = Contact::kNone;
  Rational t, s;  // parameters along the two segments when proper
  Point at;
};

inline Intersection intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  Intersection r;
  int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 == 0 && o2 == 0) {
    // collinear: overlap if the projections share more than a point
    bool useX = a.x != b.x;
    auto key = [&](const Point& p) { return useX ? p.x : p.y; };
    Rational lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
    Rational lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
    Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo < hi) r.kind = Contact::kOverlap;
    else if (lo == hi) {
      r.kind = Contact::kTouch;
      for (const Point* p : {&a, &b})
        if (key(*p) == lo) r.at = *p;
    }
    return r;
  }
  if (o1 * o2 < 0 && o3 * o4 < 0) {
    Point rr = sub(b, a), uu = sub(d, c);
    Rational den = cross(rr, uu);
    r.kind = Contact::kProper;
    r.t = cross(sub(c, a), uu) / den;
    r.s = cross(sub(c, a), rr) / den;
    r.at = {a.x + r.t * rr.x, a.y + r.t * rr.y};
    return r;
  }
  if (o1 == 0 && on_segment(a, b, c)) return {Contact::kTouch, 0, 0, c};
  if (o2 == 0 && on_segment(a, b, d)) return {Contact::kTouch, 0, 0, d};
  if (o3 == 0 && on_segment(c, d, a)) return {Contact::kTouch, 0, 0, a};
  if (o4 == 0 && on_segment(c, d, b)) return {Contact::kTouch, 0, 0, b};
  return r;
}

}  // namespace geom

// Builds a drawing from exact coordinates. Edge e is the polyline
// points[u], bends[e]..., points[v]. Degenerate incidences throw
// GeometryError naming the edges involved; so do two edges that cross more
// than once, since their crossings cannot be paired unambiguously.
inline Drawing from_geometry(const std::vector<Point>& points, const std::vector<std::pair<int, int>>& ends,
                             const std::vector<std::vector<Point>>& bends = {}, bool multigraph = false) {
  using geom::Contact;
  const int n = static_cast<int>(points.size()), m = static_cast<int>(ends.size());
  Drawing d = Drawing::with_vertices(n);
  d.multigraph = multigraph;
  for (int i = 0; i < n; ++i) d.vertices[i].pos = points[i];
  for (auto [u, v] : ends) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw InputError("edge endpoint out of range");
    if (u == v) throw GeometryError("edge " + std::to_string(d.m()) + " is a self-loop", {d.m()});
    d.add_edge(u, v);
  }
  d.bends.assign(m, {});
  for (int e = 0; e < m && e < static_cast<int>(bends.size()); ++e) d.bends[e] = bends[e];
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (points[i] == points[j])
        throw GeometryError("vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide", {});

  std::vector<std::vector<Point>> poly(m);
  for (int e = 0; e < m; ++e) {
    poly[e].push_back(points[ends[e].first]);
    for (const auto& p : d.bends[e]) poly[e].push_back(p);
    poly[e].push_back(points[ends[e].second]);
    for (std::size_t k = 0; k + 1 < poly[e].size(); ++k)
      if (poly[e][k] == poly[e][k + 1]) throw GeometryError("edge " + std::to_string(e) + " has a zero-length piece", {e});
  }

  // a vertex may only sit at the ends of its own edges
  for (int w = 0; w < n; ++w)
    for (int e = 0; e < m; ++e)
      for (std::size_t k = 0; k + 1 < poly[e].size(); ++k) {
        const Point &a = poly[e][k], &b = poly[e][k + 1];
        if (geom::orient(a, b, points[w]) != 0 || !geom::on_segment(a, b, points[w])) continue;
        bool endpoint = (k == 0 && w == ends[e].first && a == points[w]) ||
                        (k + 2 == poly[e].size() && w == ends[e].second && b == points[w]);
        if (!endpoint)
          throw GeometryError("vertex " + std::to_string(w) + " lies on edge " + std::to_string(e), {e});
      }

  struct Event {
    std::size_t seg;
    Rational t;
    int other;
    int side;
    Point at;
  };
  std::vector<std::vector<Event>> events(m);
  std::map<std::pair<int, int>, int> pair_hits;
  for (int e = 0; e < m; ++e)
    for (int f = e; f < m; ++f)
      for (std::size_t i = 0; i + 1 < poly[e].size(); ++i)
        for (std::size_t j = (e == f ? i + 1 : 0); j + 1 < poly[f].size(); ++j) {
          const Point &a = poly[e][i], &b = poly[e][i + 1], &c = poly[f][j], &dd = poly[f][j + 1];
          auto x = geom::intersect(a, b, c, dd);
          if (x.kind == Contact::kNone) continue;
          if (x.kind == Contact::kOverlap)
            throw GeometryError("edges " + std::to_string(e) + " and " + std::to_string(f) + " overlap collinearly",
                                {e, f});
          if (x.kind == Contact::kTouch) {
            if (e == f) {
              if (j == i + 1 && x.at == b) continue;  // consecutive pieces meet at their bend
              throw GeometryError("edge " + std::to_string(e) + " intersects itself", {e});
            }
            // shared endpoint vertex is the only allowed touch
            bool ok = false;
            for (int w : {ends[e].first, ends[e].second})
              if ((w == ends[f].first || w == ends[f].second) && x.at == points[w]) ok = true;
            if (!ok)
              throw GeometryError("edges " + std::to_string(e) + " and " + std::to_string(f) +
                                      " touch without crossing",
                                  {e, f});
            continue;
          }
          if (e == f) throw GeometryError("edge " + std::to_string(e) + " intersects itself", {e});
          if (++pair_hits[{e, f}] > 1)
            throw GeometryError("edges " + std::to_string(e) + " and " + std::to_string(f) + " cross more than once",
                                {e, f});
          int s = geom::sgn(geom::cross(geom::sub(b, a), geom::sub(dd, c)));
          events[e].push_back({i, x.t, f, -s, x.at});
          events[f].push_back({j, x.s, e, s, x.at});
        }
  d.crossing_sides.assign(m, {});
  for (int e = 0; e < m; ++e) {
    auto& ev = events[e];
    std::sort(ev.begin(), ev.end(), [](const Event& p, const Event& q) {
      return std::tie(p.seg, p.t) < std::tie(q.seg, q.t);
    });
    for (std::size_t k = 0; k + 1 < ev.size(); ++k)
      if (ev[k].at == ev[k + 1].at)
        throw GeometryError("edges " + std::to_string(e) + ", " + std::to_string(ev[k].other) + " and " +
                                std::to_string(ev[k + 1].other) + " meet in a triple point",
                            {e, ev[k].other, ev[k + 1].other});
    for (const auto& x : ev) {
      d.crossings[e].push_back(x.other);
      d.crossing_sides[e].push_back(x.side);
    }
  }

  d.rotation.assign(n, {});
  std::vector<std::vector<std::pair<Point, int>>> dirs(n);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = ends[e];
    dirs[u].push_back({geom::sub(poly[e][1], poly[e][0]), e});
    dirs[v].push_back({geom::sub(poly[e][poly[e].size() - 2], poly[e].back()), e});
  }
  for (int w = 0; w < n; ++w) {
    std::stable_sort(dirs[w].begin(), dirs[w].end(),
                     [](const auto& p, const auto& q) { return geom::angle_less(p.first, q.first); });
    for (auto& [dir, e] : dirs[w]) d.rotation[w].push_back(e);
  }
  return d;
}

}  // namespace kplanar

#endif  // KPLANAR_GEOMETRY_HPP_
