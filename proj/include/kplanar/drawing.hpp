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

#ifndef KPLANAR_DRAWING_HPP_
#define KPLANAR_DRAWING_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kplanar/rational.hpp"

namespace kplanar {

struct Point {
  Rational x, y;
  friend bool operator==(const Point&, const Point&) = default;
};

struct Vertex {
  int id = 0;
  std::optional<Point> pos;
};

struct Edge {
  int u = 0, v = 0;
  int other(int w) const { return w == u ? v : u; }
};

// A topological drawing on the sphere.
//
// crossings[e] lists the edges crossing e, ordered from tail (u) to head (v).
// crossing_sides[e][i] is +1 when crossings[e][i] passes e from its left to
// its right, -1 otherwise. rotation[w] is the counter-clockwise cyclic order
// of edge ids at w. Sides and rotation together fix the embedding; either may
// be empty when the drawing only carries combinatorial crossing data.
struct Drawing {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> crossings;
  std::vector<std::vector<int>> crossing_sides;
  std::vector<std::vector<int>> rotation;
  std::vector<std::vector<Point>> bends;  // optional interior polyline points
  bool multigraph = false;

  int n() const { return static_cast<int>(vertices.size()); }
  int m() const { return static_cast<int>(edges.size()); }

  bool has_embedding() const {
    return rotation.size() == vertices.size() && crossing_sides.size() == edges.size();
  }
  bool has_points() const {
    if (vertices.empty()) return false;
    for (const auto& v : vertices)
      if (!v.pos) return false;
    return true;
  }

  static Drawing with_vertices(int n) {
    Drawing d;
    d.vertices.resize(n);
    for (int i = 0; i < n; ++i) d.vertices[i].id = i;
    return d;
  }

  int add_edge(int u, int v) {
    edges.push_back({u, v});
    crossings.emplace_back();
    return m() - 1;
  }
};

// Checks the structural invariants every Drawing must satisfy: ids in range,
// no self-loops, no parallel edges unless multigraph, mutual crossing
// consistency, rotation is a permutation of incident edges. Returns the list
// of problems, empty when sound.
inline std::vector<std::string> structural_problems(const Drawing& d) {
  std::vector<std::string> out;
  const int n = d.n(), m = d.m();
  if (static_cast<int>(d.crossings.size()) != m) {
    out.push_back("crossings table has " + std::to_string(d.crossings.size()) + " rows for " +
                  std::to_string(m) + " edges");
    return out;
  }
  std::set<std::pair<int, int>> seen;
  for (int e = 0; e < m; ++e) {
    auto [u, v] = d.edges[e];
    if (u < 0 || u >= n || v < 0 || v >= n) {
      out.push_back("edge " + std::to_string(e) + " has endpoint out of range");
      continue;
    }
    if (u == v) out.push_back("edge " + std::to_string(e) + " is a self-loop");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second && !d.multigraph)
      out.push_back("edge " + std::to_string(e) + " duplicates {" + std::to_string(u) + "," +
                    std::to_string(v) + "}");
  }
  std::map<std::pair<int, int>, int> count;
  for (int e = 0; e < m; ++e)
    for (int f : d.crossings[e]) {
      if (f < 0 || f >= m || f == e) {
        out.push_back("edge " + std::to_string(e) + " lists invalid crossing partner " +
                      std::to_string(f));
        continue;
      }
      ++count[{e, f}];
    }
  for (auto [k, c] : count) {
    auto [e, f] = k;
    auto it = count.find({f, e});
    int back = it == count.end() ? 0 : it->second;
    if (back == c) continue;
    if (e < f || back == 0)  // report each unordered pair once
      out.push_back("edges " + std::to_string(e) + " and " + std::to_string(f) + " list each other " +
                    std::to_string(c) + " vs " + std::to_string(back) + " times");
  }
  if (!d.crossing_sides.empty()) {
    if (static_cast<int>(d.crossing_sides.size()) != m) {
      out.push_back("crossing_sides table size mismatch");
    } else {
      for (int e = 0; e < m; ++e) {
        if (d.crossing_sides[e].size() != d.crossings[e].size()) {
          out.push_back("crossing_sides row " + std::to_string(e) + " length mismatch");
          continue;
        }
        for (int s : d.crossing_sides[e])
          if (s != 1 && s != -1) out.push_back("crossing side of edge " + std::to_string(e) + " is not +-1");
      }
    }
  }
  if (!d.rotation.empty()) {
    if (static_cast<int>(d.rotation.size()) != n) {
      out.push_back("rotation table size mismatch");
    } else {
      std::vector<std::vector<int>> inc(n);
      for (int e = 0; e < m; ++e) {
        auto [u, v] = d.edges[e];
        if (u < 0 || u >= n || v < 0 || v >= n) continue;
        inc[u].push_back(e);
        if (v != u) inc[v].push_back(e);
      }
      for (int w = 0; w < n; ++w) {
        auto a = inc[w], b = d.rotation[w];
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) out.push_back("rotation at vertex " + std::to_string(w) + " is not its incident edge set");
      }
    }
  }
  return out;
}

struct CrossingProfile {
  std::vector<int> per_edge;
  int max_crossings = 0;
  long long total_crossings = 0;

  bool is_k_planar(int k) const { return max_crossings <= k; }
};

inline CrossingProfile crossing_profile(const Drawing& d) {
  CrossingProfile p;
  p.per_edge.resize(d.m());
  long long sum = 0;
  for (int e = 0; e < d.m(); ++e) {
    p.per_edge[e] = static_cast<int>(d.crossings[e].size());
    p.max_crossings = std::max(p.max_crossings, p.per_edge[e]);
    sum += p.per_edge[e];
  }
  p.total_crossings = sum / 2;
  return p;
}

inline bool is_k_planar(const Drawing& d, int k) { return crossing_profile(d).is_k_planar(k); }

// Every crossing pair has an edge with at most k crossings.
inline bool is_min_k_planar(const Drawing& d, int k) {
  for (int e = 0; e < d.m(); ++e)
    for (int f : d.crossings[e])
      if (std::min(d.crossings[e].size(), d.crossings[f].size()) > static_cast<std::size_t>(k)) return false;
  return true;
}

}  // namespace kplanar

#endif  // KPLANAR_DRAWING_HPP_
