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

#ifndef KPLANAR_PLANARIZATION_HPP_
#define KPLANAR_PLANARIZATION_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "kplanar/drawing.hpp"

namespace kplanar {

class PlanarizationError : public Error {
 public:
  using Error::Error;
};

namespace graph {

// Articulation points of an undirected multigraph given as adjacency lists.
// Vertices with empty adjacency are ignored.
inline std::vector<bool> articulation_points(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<bool> cut(n, false);
  int timer = 0;
  // iterative DFS; parallel edges are harmless for cut-vertex detection
  for (int root = 0; root < n; ++root) {
    if (disc[root] != -1 || adj[root].empty()) continue;
    struct Frame { int v, parent; std::size_t next; };
    std::vector<Frame> st{{root, -1, 0}};
    disc[root] = low[root] = timer++;
    int root_children = 0;
    while (!st.empty()) {
      auto& fr = st.back();
      if (fr.next < adj[fr.v].size()) {
        int w = adj[fr.v][fr.next++];
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          if (fr.v == root) ++root_children;
          st.push_back({w, fr.v, 0});
        } else if (w != fr.parent) {
          low[fr.v] = std::min(low[fr.v], disc[w]);
        }
      } else {
        int v = fr.v, p = fr.parent;
        st.pop_back();
        if (p != -1) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) cut[p] = true;
        }
      }
    }
    if (root_children > 1) cut[root] = true;
  }
  return cut;
}

// Number of connected components among vertices with removed[v] == false.
inline int components(const std::vector<std::vector<int>>& adj, const std::vector<bool>& removed) {
  const int n = static_cast<int>(adj.size());
  std::vector<bool> seen(n, false);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || seen[s]) continue;
    ++c;
    std::vector<int> st{s};
    seen[s] = true;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : adj[v])
        if (!removed[w] && !seen[w]) seen[w] = true, st.push_back(w);
    }
  }
  return c;
}

}  // namespace graph

struct Face {
  std::vector<int> darts;  // boundary walk, face on the left
  int size() const { return static_cast<int>(darts.size()); }
  int originals = 0;       // |V(f)|, counted with multiplicity
  std::pair<int, int> cls() const { return {originals, size()}; }
};

struct Segment {
  int edge = -1;
  int pos = 0;  // index along the parent edge, tail side first
  int tail = -1, head = -1;
};

// Half-edge structure over original vertices (nodes 0..n-1) and crossing
// nodes. Dart 2s runs tail->head along segment s, dart 2s+1 runs back.
struct Planarization {
  int n = 0;
  int num_nodes = 0;
  std::vector<std::pair<int, int>> crossing_parents;  // node n+i -> (e, f), e < f
  std::map<std::pair<int, int>, int> crossing_node;
  std::vector<Segment> segments;
  std::vector<int> first_segment;  // per edge
  std::vector<std::vector<int>> node_darts;  // ccw, darts leaving the node
  std::vector<int> rot_index;                // dart -> index in node_darts[origin]
  std::vector<int> dart_face;
  std::vector<Face> faces;
  int edge_components = 0;
  bool biconnected = false;

  int num_darts() const { return 2 * static_cast<int>(segments.size()); }
  static int twin(int d) { return d ^ 1; }
  int origin(int d) const { return (d & 1) ? segments[d >> 1].head : segments[d >> 1].tail; }
  int target(int d) const { return origin(d ^ 1); }
  int parent_edge(int d) const { return segments[d >> 1].edge; }
  bool is_crossing(int node) const { return node >= n; }
  int rot_next(int d) const {
    const auto& r = node_darts[origin(d)];
    return r[(rot_index[d] + 1) % r.size()];
  }
  int rot_prev(int d) const {
    const auto& r = node_darts[origin(d)];
    return r[(rot_index[d] + r.size() - 1) % r.size()];
  }
  // next dart along the face on the left
  int face_next(int d) const { return rot_prev(twin(d)); }
  int segment_count(int e) const {
    int end = e + 1 < static_cast<int>(first_segment.size()) ? first_segment[e + 1]
                                                             : static_cast<int>(segments.size());
    return end - first_segment[e];
  }
  // dart of segment `pos` of edge e, oriented tail->head when forward
  int edge_dart(int e, int pos, bool forward = true) const {
    return 2 * (first_segment[e] + pos) + (forward ? 0 : 1);
  }
  int face_left(int e, int pos) const { return dart_face[edge_dart(e, pos, true)]; }
  int face_right(int e, int pos) const { return dart_face[edge_dart(e, pos, false)]; }
};

inline Planarization planarize(const Drawing& d) {
  if (auto probs = structural_problems(d); !probs.empty()) throw PlanarizationError(probs.front());
  if (!d.has_embedding()) throw PlanarizationError("drawing carries no rotation/crossing sides");
  Planarization p;
  const int n = d.n(), m = d.m();
  p.n = n;
  int next_node = n;
  std::vector<std::map<int, int>> index_of(m);  // e -> (f -> position in crossings[e])
  for (int e = 0; e < m; ++e)
    for (int i = 0; i < static_cast<int>(d.crossings[e].size()); ++i) {
      int f = d.crossings[e][i];
      if (!index_of[e].emplace(f, i).second)
        throw PlanarizationError("edges " + std::to_string(e) + " and " + std::to_string(f) +
                                 " cross more than once");
      if (d.edges[e].u == d.edges[f].u || d.edges[e].u == d.edges[f].v || d.edges[e].v == d.edges[f].u ||
          d.edges[e].v == d.edges[f].v)
        throw PlanarizationError("adjacent edges " + std::to_string(e) + " and " + std::to_string(f) + " cross");
      auto key = std::minmax(e, f);
      if (!p.crossing_node.count(key)) {
        p.crossing_node[key] = next_node++;
        p.crossing_parents.push_back(key);
      }
    }
  p.num_nodes = next_node;
  p.first_segment.resize(m);
  for (int e = 0; e < m; ++e) {
    p.first_segment[e] = static_cast<int>(p.segments.size());
    int prev = d.edges[e].u;
    int k = static_cast<int>(d.crossings[e].size());
    for (int i = 0; i <= k; ++i) {
      int nxt = i < k ? p.crossing_node.at(std::minmax(e, d.crossings[e][i])) : d.edges[e].v;
      p.segments.push_back({e, i, prev, nxt});
      prev = nxt;
    }
  }
  p.node_darts.assign(p.num_nodes, {});
  for (int w = 0; w < n; ++w)
    for (int e : d.rotation[w]) {
      int k = static_cast<int>(d.crossings[e].size());
      p.node_darts[w].push_back(d.edges[e].u == w ? p.edge_dart(e, 0, true) : p.edge_dart(e, k, false));
    }
  for (int c = 0; c < static_cast<int>(p.crossing_parents.size()); ++c) {
    auto [e, f] = p.crossing_parents[c];
    int i = index_of[e].at(f), j = index_of[f].at(e);
    int s = d.crossing_sides[e][i];
    if (d.crossing_sides[f][j] != -s)
      throw PlanarizationError("crossing sides of edges " + std::to_string(e) + " and " + std::to_string(f) +
                               " disagree");
    int e_head = p.edge_dart(e, i + 1, true), e_tail = p.edge_dart(e, i, false);
    int f_head = p.edge_dart(f, j + 1, true), f_tail = p.edge_dart(f, j, false);
    if (s > 0)
      p.node_darts[n + c] = {e_head, f_tail, e_tail, f_head};
    else
      p.node_darts[n + c] = {e_head, f_head, e_tail, f_tail};
  }
  p.rot_index.assign(p.num_darts(), -1);
  for (int v = 0; v < p.num_nodes; ++v)
    for (int i = 0; i < static_cast<int>(p.node_darts[v].size()); ++i) {
      int dd = p.node_darts[v][i];
      if (p.origin(dd) != v) throw PlanarizationError("rotation lists a dart not leaving its node");
      p.rot_index[dd] = i;
    }
  p.dart_face.assign(p.num_darts(), -1);
  for (int d0 = 0; d0 < p.num_darts(); ++d0) {
    if (p.dart_face[d0] != -1) continue;
    Face f;
    int id = static_cast<int>(p.faces.size());
    int dd = d0;
    do {
      p.dart_face[dd] = id;
      f.darts.push_back(dd);
      if (p.origin(dd) < n) ++f.originals;
      dd = p.face_next(dd);
    } while (dd != d0);
    p.faces.push_back(std::move(f));
  }

  // Euler, component by component
  std::vector<int> comp(p.num_nodes, -1);
  std::vector<std::vector<int>> adj(p.num_nodes);
  for (const auto& s : p.segments) {
    adj[s.tail].push_back(s.head);
    adj[s.head].push_back(s.tail);
  }
  int C = 0;
  for (int s = 0; s < p.num_nodes; ++s) {
    if (comp[s] != -1 || adj[s].empty()) continue;
    std::vector<int> st{s};
    comp[s] = C;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w : adj[v])
        if (comp[w] == -1) comp[w] = C, st.push_back(w);
    }
    ++C;
  }
  p.edge_components = C;
  std::vector<long long> chi(C, 0);
  for (int v = 0; v < p.num_nodes; ++v)
    if (comp[v] != -1) ++chi[comp[v]];
  for (const auto& s : p.segments) --chi[comp[s.tail]];
  for (const auto& f : p.faces) ++chi[comp[p.origin(f.darts[0])]];
  for (int c = 0; c < C; ++c)
    if (chi[c] != 2)
      throw PlanarizationError("embedding is not spherical: component " + std::to_string(c) + " has V-E+F = " +
                               std::to_string(chi[c]));

  bool isolated = false;
  for (int w = 0; w < n; ++w) isolated |= adj[w].empty();
  auto cut = graph::articulation_points(adj);
  p.biconnected = C == 1 && !isolated && p.num_nodes >= 3 &&
                  std::none_of(cut.begin(), cut.end(), [](bool b) { return b; });
  return p;
}

struct FaceCensus {
  std::map<std::pair<int, int>, int> classes;  // (|V(f)|, |f|) -> count
  Rational total_charge;
  bool biconnected = false;
  bool connected = false;
};

inline FaceCensus face_census(const Planarization& p) {
  FaceCensus c;
  for (const auto& f : p.faces) {
    ++c.classes[f.cls()];
    c.total_charge += f.size() + f.originals - 4;
  }
  c.biconnected = p.biconnected;
  c.connected = p.edge_components == 1;
  return c;
}

}  // namespace kplanar

#endif  // KPLANAR_PLANARIZATION_HPP_
