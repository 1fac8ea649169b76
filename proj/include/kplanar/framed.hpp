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

#ifndef KPLANAR_FRAMED_HPP_
#define KPLANAR_FRAMED_HPP_

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kplanar/drawing.hpp"

namespace kplanar {

// Chords to draw inside one face of a plane skeleton. Positions index into
// `cycle`, which lists the face's boundary vertices with the face on the left.
struct FaceChords {
  std::vector<int> cycle;
  std::vector<std::pair<int, int>> chords;
};

namespace detail {

// Crossings of straight chords between model points: per chord, sorted
// (parameter, other chord index, side) triples.
inline std::vector<std::vector<std::tuple<Rational, int, int>>> model_crossings(
    const std::vector<Point>& pts, const std::vector<std::pair<int, int>>& chords) {
  const std::size_t k = chords.size();
  std::vector<std::vector<std::tuple<Rational, int, int>>> hits(k);
  for (std::size_t x = 0; x < k; ++x)
    for (std::size_t y = x + 1; y < k; ++y) {
      auto [a, b] = chords[x];
      auto [c, dd] = chords[y];
      if (a == c || a == dd || b == c || b == dd) continue;
      Rational rx = pts[b].x - pts[a].x, ry = pts[b].y - pts[a].y;
      Rational ux = pts[dd].x - pts[c].x, uy = pts[dd].y - pts[c].y;
      Rational den = rx * uy - ry * ux;
      if (den == 0) continue;  // parallel, so disjoint
      Rational wx = pts[c].x - pts[a].x, wy = pts[c].y - pts[a].y;
      Rational t = (wx * uy - wy * ux) / den;
      Rational s = (wx * ry - wy * rx) / den;
      if (t <= 0 || t >= 1 || s <= 0 || s >= 1) continue;
      int sg = den > 0 ? 1 : -1;
      hits[x].emplace_back(t, static_cast<int>(y), -sg);
      hits[y].emplace_back(s, static_cast<int>(x), sg);
    }
  for (auto& h : hits) std::sort(h.begin(), h.end());
  return hits;
}

}  // namespace detail

// Convex position points for an L-gon, counter-clockwise, chosen from the
// family (i, i^2 + c i^3) so that no three of the given chords are
// concurrent. Deterministic.
inline std::vector<Point> convex_model(int L, const std::vector<std::pair<int, int>>& chords) {
  static const std::pair<int, int> kCandidates[] = {{0, 1}, {1, 7}, {1, 13}, {2, 29}, {1, 97}, {3, 101}, {5, 211}};
  for (auto [p, q] : kCandidates) {
    Rational c = rat(p, q);
    std::vector<Point> pts;
    for (int i = 0; i < L; ++i) pts.push_back({Rational(i), Rational(i * i) + c * i * i * i});
    auto hits = detail::model_crossings(pts, chords);
    bool tie = false;
    for (const auto& h : hits)
      for (std::size_t j = 0; j + 1 < h.size(); ++j)
        if (std::get<0>(h[j]) == std::get<0>(h[j + 1])) tie = true;
    if (!tie) return pts;
  }
  throw Error("no generic convex model found");
}

struct FramedInput {
  int n = 0;
  std::vector<std::pair<int, int>> skeleton;
  std::vector<std::vector<int>> rotation;  // ccw skeleton edge ids per vertex
  std::vector<FaceChords> faces;
  bool multigraph = false;
};

// Draws each face's chords as straight segments of a convex polygon and
// glues the faces along the skeleton. Skeleton edge ids are kept; chords are
// appended face by face in input order.
inline Drawing build_framed(const FramedInput& in) {
  Drawing d = Drawing::with_vertices(in.n);
  d.multigraph = in.multigraph;
  for (auto [u, v] : in.skeleton) d.add_edge(u, v);
  const int ms = d.m();
  if (static_cast<int>(in.rotation.size()) != in.n) throw InputError("skeleton rotation has wrong size");

  struct ChordInfo { int face; int a, b; };
  std::vector<ChordInfo> info;
  for (int fi = 0; fi < static_cast<int>(in.faces.size()); ++fi) {
    const auto& F = in.faces[fi];
    const int L = static_cast<int>(F.cycle.size());
    for (auto [a, b] : F.chords) {
      if (a < 0 || b < 0 || a >= L || b >= L || a == b)
        throw InputError("chord position out of range in face " + std::to_string(fi));
      int gap = (b - a + L) % L;
      if ((gap == 1 || gap == L - 1) && !in.multigraph)
        throw InputError("chord (" + std::to_string(a) + "," + std::to_string(b) + ") in face " + std::to_string(fi) +
                         " runs along the boundary");
      d.add_edge(F.cycle[a], F.cycle[b]);
      info.push_back({fi, a, b});
    }
  }
  const int m = d.m();
  d.crossing_sides.assign(m, {});

  // crossings inside each face, from a convex model polygon
  {
    std::map<int, std::vector<int>> by_face;
    for (int c = 0; c < static_cast<int>(info.size()); ++c) by_face[info[c].face].push_back(c);
    for (auto& [fi, list] : by_face) {
      std::vector<std::pair<int, int>> local;
      for (int c : list) local.emplace_back(info[c].a, info[c].b);
      auto hits = detail::model_crossings(convex_model(static_cast<int>(in.faces[fi].cycle.size()), local), local);
      for (std::size_t x = 0; x < list.size(); ++x) {
        int e = ms + list[x];
        for (auto& [t, y, sg] : hits[x]) {
          d.crossings[e].push_back(ms + list[y]);
          d.crossing_sides[e].push_back(sg);
        }
      }
    }
  }

  // rotation: chords of a corner sit in the sector after the dart to the next
  // cycle vertex
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> sector;  // (w, skel edge) -> (order, edge)
  std::set<std::pair<int, int>> claimed;
  for (int fi = 0; fi < static_cast<int>(in.faces.size()); ++fi) {
    const auto& F = in.faces[fi];
    const int L = static_cast<int>(F.cycle.size());
    bool has_chords = !F.chords.empty();
    if (!has_chords) continue;
    for (int i = 0; i < L; ++i) {
      int w = F.cycle[i], nxt = F.cycle[(i + 1) % L], prv = F.cycle[(i + L - 1) % L];
      const auto& rot = in.rotation[w];
      int found = -1;
      for (int k = 0; k < static_cast<int>(rot.size()); ++k) {
        auto [a, b] = in.skeleton[rot[k]];
        if ((a == w && b == nxt) || (b == w && a == nxt)) {
          int after = rot[(k + 1) % rot.size()];
          auto [c, e2] = in.skeleton[after];
          if ((c == w && e2 == prv) || (e2 == w && c == prv)) {
            if (found != -1) throw InputError("ambiguous corner in face " + std::to_string(fi));
            found = rot[k];
          }
        }
      }
      if (found == -1)
        throw InputError("face " + std::to_string(fi) + " cycle disagrees with the skeleton rotation at vertex " +
                         std::to_string(w));
      if (!claimed.insert({w, found}).second)
        throw InputError("two faces claim the same corner at vertex " + std::to_string(w));
      auto& bucket = sector[{w, found}];
      for (int c = 0; c < static_cast<int>(info.size()); ++c) {
        if (info[c].face != fi) continue;
        int other = -1;
        if (info[c].a == i) other = info[c].b;
        else if (info[c].b == i) other = info[c].a;
        if (other < 0) continue;
        bucket.emplace_back((other - i + L) % L, ms + c);
      }
      std::sort(bucket.begin(), bucket.end());
    }
  }
  d.rotation.assign(in.n, {});
  for (int w = 0; w < in.n; ++w)
    for (int e : in.rotation[w]) {
      d.rotation[w].push_back(e);
      auto it = sector.find({w, e});
      if (it != sector.end())
        for (auto& [ord, c] : it->second) d.rotation[w].push_back(c);
    }
  return d;
}

// Convex n-gon with the given chords; duplicate_outer also routes a copy of
// every chord through the outer face.
inline Drawing from_convex(int n, const std::vector<std::pair<int, int>>& chords, bool duplicate_outer = false,
                           bool multigraph = false) {
  if (n < 3) throw InputError("convex drawing needs at least 3 vertices");
  multigraph = multigraph || duplicate_outer;
  FramedInput in;
  in.n = n;
  in.multigraph = multigraph;
  in.rotation.resize(n);
  for (int i = 0; i < n; ++i) {
    in.skeleton.emplace_back(i, (i + 1) % n);
    in.rotation[i] = {i, (i + n - 1) % n};
  }
  std::set<std::pair<int, int>> seen;
  FaceChords inner, outer;
  for (int i = 0; i < n; ++i) {
    inner.cycle.push_back(i);
    outer.cycle.push_back(n - 1 - i);
  }
  for (auto [a, b] : chords) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw InputError("chord endpoint out of range");
    if (a == b) throw InputError("chord (" + std::to_string(a) + "," + std::to_string(b) + ") is a self-loop");
    int gap = (b - a + n) % n;
    if ((gap == 1 || gap == n - 1) && !multigraph)
      throw InputError("chord (" + std::to_string(a) + "," + std::to_string(b) + ") duplicates a boundary edge");
    if (!seen.insert(std::minmax(a, b)).second && !multigraph)
      throw InputError("duplicate chord (" + std::to_string(a) + "," + std::to_string(b) + ")");
    inner.chords.emplace_back(a, b);
    outer.chords.emplace_back(n - 1 - a, n - 1 - b);
  }
  in.faces.push_back(inner);
  if (duplicate_outer) in.faces.push_back(outer);
  return build_framed(in);
}

}  // namespace kplanar

#endif  // KPLANAR_FRAMED_HPP_
