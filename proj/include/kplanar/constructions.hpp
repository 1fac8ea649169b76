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

#ifndef KPLANAR_CONSTRUCTIONS_HPP_
#define KPLANAR_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "kplanar/chords.hpp"
#include "kplanar/framed.hpp"
#include "kplanar/geometry.hpp"

namespace kplanar {

struct ChordPattern {
  int size = 0;
  int k = 0;
  std::vector<std::pair<int, int>> chords;
  int green = -1;  // index into chords
  std::vector<int> crossings;  // per chord

  int max_crossings() const { return crossings.empty() ? 0 : *std::max_element(crossings.begin(), crossings.end()); }
};

inline ChordPattern make_pattern(int size, int k, std::vector<std::pair<int, int>> chords, int green) {
  ChordPattern p;
  p.size = size;
  p.k = k;
  p.chords = std::move(chords);
  p.green = green;
  for (auto c : p.chords) {
    int cnt = 0;
    for (auto d : p.chords) cnt += chords_interleave(size, c, d);
    p.crossings.push_back(cnt);
  }
  return p;
}

// 26 chords in a convex 12-gon, each crossed at most 5 times. The green
// diagonal joins positions 1 and 7; the chords over those two positions,
// (0,2) and (6,8), are absent, while the chords over 3, 5, 9, 11 are present.
inline ChordPattern chord_pattern_12gon() {
  static const std::vector<std::pair<int, int>> kChords = {
      {0, 6}, {0, 7}, {0, 8}, {0, 9}, {0, 10}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 11}, {2, 4},
      {2, 5}, {2, 6}, {2, 7}, {3, 5}, {3, 6}, {4, 6}, {5, 7}, {7, 9}, {7, 10}, {7, 11}, {8, 10}, {8, 11}, {9, 11}};
  auto p = make_pattern(12, 5, kChords, 9);
  auto has = [&](int a, int b) {
    return std::find(p.chords.begin(), p.chords.end(), std::make_pair(a, b)) != p.chords.end();
  };
  if (p.chords.size() != 26 || p.max_crossings() > 5 || p.chords[p.green] != std::make_pair(1, 7) || has(0, 2) ||
      has(6, 8))
    throw Error("stored 12-gon pattern failed validation");
  return p;
}

// ---------------------------------------------------------------- convex fans

namespace detail {

// Fan of x faces of size L around vertex 0 of a convex polygon with
// n = (L-2)x + 2 vertices. Face i is 0, (L-2)i+1, ..., (L-2)i+L-1.
inline std::vector<std::pair<int, int>> fan_chords(int x, int L, const std::vector<std::pair<int, int>>& pattern,
                                                   bool separators_first = true) {
  std::vector<std::pair<int, int>> out;
  auto map = [&](int face, int pos) { return pos == 0 ? 0 : (L - 2) * face + pos; };
  if (separators_first)
    for (int i = 1; i < x; ++i) out.emplace_back(0, (L - 2) * i + 1);
  for (int i = 0; i < x; ++i)
    for (auto [a, b] : pattern) out.emplace_back(map(i, a), map(i, b));
  return out;
}

}  // namespace detail

inline Drawing outer_5planar_family(int x) {
  if (x < 1) throw InputError("x must be at least 1");
  return from_convex(10 * x + 2, detail::fan_chords(x, 12, chord_pattern_12gon().chords));
}

inline Drawing outer_6planar_family(int x) {
  if (x < 1) throw InputError("x must be at least 1");
  return from_convex(5 * x + 2, detail::fan_chords(x, 7, convex_chords(7)));
}

inline Drawing sixplanar_doubled(int x) {
  if (x < 1) throw InputError("x must be at least 1");
  return from_convex(5 * x + 2, detail::fan_chords(x, 7, convex_chords(7)), true);
}

// ----------------------------------------------------------- hexagonal cylinder

namespace detail {

struct HexCylinder {
  int x = 0;
  std::vector<Point> points;
  std::vector<std::pair<int, int>> edges;
  int ring(int j, int p) const { return 6 * j + ((p % 6) + 6) % 6; }
};

// Rings R_0 (outermost) .. R_x of six vertices; verticals between R_j and
// R_{j+1} at positions p = j (mod 2).
inline HexCylinder hex_cylinder_layout(int x) {
  static const int kBase[6][2] = {{2, 0}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}};
  HexCylinder h;
  h.x = x;
  for (int j = 0; j <= x; ++j)
    for (int p = 0; p < 6; ++p) h.points.push_back({rat(kBase[p][0] * (x + 1 - j)), rat(kBase[p][1] * (x + 1 - j))});
  for (int j = 0; j <= x; ++j)
    for (int p = 0; p < 6; ++p) h.edges.emplace_back(h.ring(j, p), h.ring(j, p + 1));
  for (int j = 0; j < x; ++j)
    for (int p = j % 2; p < 6; p += 2) h.edges.emplace_back(h.ring(j, p), h.ring(j + 1, p));
  return h;
}

}  // namespace detail

inline Drawing hex_cylinder(int x) {
  if (x < 1) throw InputError("x must be at least 1");
  auto h = detail::hex_cylinder_layout(x);
  return from_geometry(h.points, h.edges);
}

// ------------------------------------------------------- dodecagonal cylinder

namespace detail {

struct Dodecagonal {
  int x = 0;
  FramedInput frame;
  std::vector<Point> points;
  std::vector<std::vector<int>> lateral_cycles;
  std::vector<std::pair<int, int>> lateral_keys;  // (j, p)
  std::vector<int> lateral_offset;
  std::vector<int> top_cycle, bottom_cycle;
  int duplicates_removed = 0;
};

// Rotation of the 12-gon pattern in lateral face (j, p): the face starting
// at the vertical p puts its green diagonal on both verticals; the other two
// faces of the annulus use an outer and an inner ring subdivision vertex,
// alternating sides with the parity of j so no vertex is used twice.
inline int lateral_offset(int j, int p) {
  if (p == j % 2) return 4;
  return j % 2 == 0 ? 0 : 2;
}

inline Dodecagonal dodecagonal_skeleton(int x) {
  Dodecagonal D;
  D.x = x;
  auto h = hex_cylinder_layout(x);
  D.points = h.points;
  std::map<std::pair<int, int>, int> mid;
  std::vector<std::pair<int, int>> skel;
  for (auto [u, v] : h.edges) {
    int s = static_cast<int>(D.points.size());
    D.points.push_back({(h.points[u].x + h.points[v].x) / 2, (h.points[u].y + h.points[v].y) / 2});
    mid[std::minmax(u, v)] = s;
    skel.emplace_back(u, s);
    skel.emplace_back(s, v);
  }
  Drawing g = from_geometry(D.points, skel);
  D.frame.n = g.n();
  D.frame.skeleton = skel;
  D.frame.rotation = g.rotation;
  auto R = [&](int j, int p) { return h.ring(j, p); };
  auto S = [&](int a, int b) { return mid.at(std::minmax(a, b)); };
  for (int j = 0; j < x; ++j)
    for (int p = j % 2; p < 6; p += 2) {
      std::vector<int> c = {R(j, p),         S(R(j, p), R(j, p + 1)),         R(j, p + 1),
                            S(R(j, p + 1), R(j, p + 2)), R(j, p + 2),         S(R(j, p + 2), R(j + 1, p + 2)),
                            R(j + 1, p + 2), S(R(j + 1, p + 1), R(j + 1, p + 2)), R(j + 1, p + 1),
                            S(R(j + 1, p), R(j + 1, p + 1)), R(j + 1, p),     S(R(j, p), R(j + 1, p))};
      D.lateral_cycles.push_back(c);
      D.lateral_keys.emplace_back(j, p);
      D.lateral_offset.push_back(lateral_offset(j, p));
    }
  for (int q = 0; q < 6; ++q) {
    int t = (6 - q) % 6;
    D.top_cycle.push_back(R(0, t));
    D.top_cycle.push_back(S(R(0, t), R(0, t + 5)));
    D.bottom_cycle.push_back(R(x, q));
    D.bottom_cycle.push_back(S(R(x, q), R(x, q + 1)));
  }
  return D;
}

// Lateral faces filled with the rotated 12-gon pattern; a chord present in
// two lateral faces keeps only the copy in the lexicographically larger face.
inline Dodecagonal dodecagonal_lateral(int x) {
  Dodecagonal D = dodecagonal_skeleton(x);
  const auto P = chord_pattern_12gon();
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> owners;  // vertex pair -> (face, chord)
  std::vector<FaceChords> faces(D.lateral_cycles.size());
  for (std::size_t f = 0; f < D.lateral_cycles.size(); ++f) {
    faces[f].cycle = D.lateral_cycles[f];
    int r = D.lateral_offset[f];
    for (auto [a, b] : P.chords) {
      int pa = (a + r) % 12, pb = (b + r) % 12;
      faces[f].chords.emplace_back(pa, pb);
      owners[std::minmax(faces[f].cycle[pa], faces[f].cycle[pb])].emplace_back(static_cast<int>(f),
                                                                              static_cast<int>(faces[f].chords.size()) - 1);
    }
  }
  std::set<std::pair<int, int>> drop;
  for (auto& [pair, list] : owners) {
    if (list.size() < 2) continue;
    if (list.size() > 2) throw Error("a vertex pair is joined in three lateral faces");
    auto [f1, c1] = list[0];
    auto [f2, c2] = list[1];
    drop.insert(D.lateral_keys[f1] < D.lateral_keys[f2] ? std::make_pair(f1, c1) : std::make_pair(f2, c2));
  }
  D.duplicates_removed = static_cast<int>(drop.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    FaceChords kept;
    kept.cycle = faces[f].cycle;
    for (int c = 0; c < static_cast<int>(faces[f].chords.size()); ++c)
      if (!drop.count({static_cast<int>(f), c})) kept.chords.push_back(faces[f].chords[c]);
    D.frame.faces.push_back(kept);
  }
  return D;
}

// Position pairs of a cap cycle already joined in the lateral drawing.
inline std::vector<std::pair<int, int>> cap_forbidden(const Dodecagonal& D, const std::vector<int>& cycle) {
  std::set<std::pair<int, int>> adj;
  for (auto [u, v] : D.frame.skeleton) adj.insert(std::minmax(u, v));
  for (const auto& F : D.frame.faces)
    for (auto [a, b] : F.chords) adj.insert(std::minmax(F.cycle[a], F.cycle[b]));
  std::vector<std::pair<int, int>> out;
  for (auto c : convex_chords(12))
    if (adj.count(std::minmax(cycle[c.first], cycle[c.second]))) out.push_back(c);
  return out;
}

}  // namespace detail

// 21-chord cap patterns (positions in the top or bottom 12-cycle) that avoid
// every pair joined by the lateral faces next to them, with every chord
// crossed so the skeleton keeps its 12-faces. The bottom cap's neighbours
// depend on the parity of x.
inline std::vector<std::pair<int, int>> dodecagonal_top_pattern() {
  return {{0, 4}, {0, 5},  {1, 4},  {1, 5}, {1, 11}, {2, 4}, {2, 11}, {3, 5},  {3, 11}, {4, 10}, {4, 11},
          {5, 8}, {5, 9},  {5, 10}, {5, 11}, {6, 8}, {6, 9}, {6, 10}, {6, 11}, {7, 9},  {7, 10}};
}

inline std::vector<std::pair<int, int>> dodecagonal_bottom_pattern(int x) {
  if (x % 2 == 1)
    return {{0, 9}, {0, 10}, {1, 9}, {1, 10}, {1, 11}, {2, 8}, {2, 9}, {2, 10}, {2, 11}, {3, 5}, {3, 6},
            {3, 7}, {3, 8}, {3, 9}, {3, 10}, {4, 8}, {4, 9}, {5, 8}, {5, 9}, {6, 8}, {7, 9}};
  return {{0, 9},  {0, 10}, {1, 3}, {1, 9}, {1, 10}, {2, 8}, {2, 9}, {2, 10}, {2, 11}, {3, 7}, {3, 8},
          {3, 9},  {3, 10}, {4, 7}, {4, 8}, {4, 9},  {5, 7}, {5, 8}, {5, 9},  {6, 8},  {9, 11}};
}

inline Drawing dodecagonal_cylinder(int x) {
  if (x < 1) throw InputError("x must be at least 1");
  auto D = detail::dodecagonal_lateral(x);
  if (D.duplicates_removed != 3 * x - 2) throw Error("unexpected number of parallel lateral pairs");
  D.frame.faces.push_back({D.top_cycle, dodecagonal_top_pattern()});
  D.frame.faces.push_back({D.bottom_cycle, dodecagonal_bottom_pattern(x)});
  Drawing d = build_framed(D.frame);
  for (int v = 0; v < d.n(); ++v) d.vertices[v].pos = D.points[v];
  return d;
}

// ------------------------------------------------------ six-planar tiling

namespace detail {

struct Annulus {
  int outer, inner;                     // cycle lengths
  std::vector<std::pair<int, int>> arcs;  // per face: edges along outer / inner cycle
};

// Concentric cycles; consecutive cycles are joined by spokes that cut the
// annulus into faces with the given arc lengths.
inline std::vector<Annulus> tiling_plan(int t) {
  if (t == 1) return {{7, 3, {{4, 1}, {3, 2}}}};
  std::vector<Annulus> plan;
  plan.push_back({7, 8, {{2, 3}, {2, 3}, {3, 2}}});
  for (int i = 0; i < t - 2; ++i) plan.push_back({8, 8, {{1, 0}, {2, 3}, {2, 3}, {3, 2}}});
  plan.push_back({8, 3, {{1, 0}, {4, 1}, {3, 2}}});
  return plan;
}

}  // namespace detail

// f_3 = t, f_7 = 3t on n = 8t+2 vertices; every heptagon holds all 14
// chords. Chords of different heptagons can join the same pair, so the
// result is flagged as a multigraph (copies are never homotopic).
inline Drawing sixplanar_simple_tiling(int t) {
  if (t < 1) throw InputError("t must be at least 1");
  auto plan = detail::tiling_plan(t);
  std::vector<int> sizes = {plan[0].outer};
  for (const auto& a : plan) sizes.push_back(a.inner);
  std::vector<int> start;
  int n = 0;
  for (int s : sizes) start.push_back(n), n += s;
  auto V = [&](int c, int q) { return start[c] + ((q % sizes[c]) + sizes[c]) % sizes[c]; };
  FramedInput in;
  in.n = n;
  in.multigraph = true;
  auto add = [&](int u, int v) {
    in.skeleton.emplace_back(u, v);
    return static_cast<int>(in.skeleton.size()) - 1;
  };
  // ccw at a cycle vertex: forward cycle edge, inward spokes, backward edge,
  // outward spokes
  std::vector<std::vector<int>> fwd(n), out_sp(n), back(n), in_sp(n);
  for (int c = 0; c < static_cast<int>(sizes.size()); ++c)
    for (int q = 0; q < sizes[c]; ++q) {
      int e = add(V(c, q), V(c, q + 1));
      fwd[V(c, q)].push_back(e);
      back[V(c, q + 1)].push_back(e);
    }
  std::vector<FaceChords> faces;
  for (int a = 0; a < static_cast<int>(plan.size()); ++a) {
    int co = a, ci = a + 1;
    int po = 0, pi = 0;
    std::vector<std::pair<int, int>> spokes;  // (outer pos, inner pos)
    for (auto [o, i] : plan[a].arcs) {
      spokes.emplace_back(po, pi);
      po += o;
      pi += i;
    }
    if (po != sizes[co] || pi != sizes[ci]) throw Error("tiling plan does not close");
    for (auto [o, i] : spokes) {
      int e = add(V(co, o), V(ci, i));
      in_sp[V(co, o)].push_back(e);
      out_sp[V(ci, i)].push_back(e);
    }
    // face between spoke s and s+1, boundary with the face on the left:
    // outer cycle forward, spoke inward, inner cycle backward, spoke outward
    for (std::size_t s = 0; s < spokes.size(); ++s) {
      auto [o0, i0] = spokes[s];
      int olen = plan[a].arcs[s].first, ilen = plan[a].arcs[s].second;
      std::vector<int> cyc;
      for (int k = 0; k <= olen; ++k) cyc.push_back(V(co, o0 + k));
      for (int k = 0; k <= ilen; ++k) cyc.push_back(V(ci, i0 + ilen - k));
      FaceChords f;
      f.cycle = cyc;
      if (cyc.size() == 7) f.chords = convex_chords(7);
      faces.push_back(f);
    }
  }
  FaceChords top, bottom;
  for (int q = sizes[0]; q > 0; --q) top.cycle.push_back(V(0, q));
  top.chords = convex_chords(7);
  for (int q = 0; q < sizes.back(); ++q) bottom.cycle.push_back(V(static_cast<int>(sizes.size()) - 1, q));
  faces.push_back(top);
  faces.push_back(bottom);
  in.rotation.assign(n, {});
  for (int v = 0; v < n; ++v) {
    auto& r = in.rotation[v];
    r = fwd[v];
    std::vector<int> i = in_sp[v];
    std::sort(i.begin(), i.end(), [&](int e1, int e2) { return in.skeleton[e1].second > in.skeleton[e2].second; });
    r.insert(r.end(), i.begin(), i.end());
    r.insert(r.end(), back[v].begin(), back[v].end());
    std::vector<int> o = out_sp[v];
    std::sort(o.begin(), o.end(), [&](int e1, int e2) { return in.skeleton[e1].first < in.skeleton[e2].first; });
    r.insert(r.end(), o.begin(), o.end());
  }
  in.faces = faces;
  return build_framed(in);
}

}  // namespace kplanar

#endif  // KPLANAR_CONSTRUCTIONS_HPP_
