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

#ifndef KPLANAR_AUDIT_HPP_
#define KPLANAR_AUDIT_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kplanar/drawing.hpp"
#include "kplanar/planarization.hpp"

namespace kplanar {

struct SimplicityReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

namespace detail {

// Do the parallel edges e1, e2 (both from a to b) enclose some other original
// vertex on each side? Faces are merged across every segment not on e1/e2.
inline bool parallel_pair_separates(const Planarization& p, int e1, int e2, int a, int b) {
  const int F = static_cast<int>(p.faces.size());
  std::vector<int> uf(F);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<int(int)> find = [&](int x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  for (int s = 0; s < static_cast<int>(p.segments.size()); ++s) {
    int e = p.segments[s].edge;
    if (e == e1 || e == e2) continue;
    uf[find(p.dart_face[2 * s])] = find(p.dart_face[2 * s + 1]);
  }
  int left = find(p.face_left(e1, 0)), right = find(p.face_right(e1, 0));
  if (left == right) return false;
  bool seen_left = false, seen_right = false;
  for (int w = 0; w < p.n; ++w) {
    if (w == a || w == b || p.node_darts[w].empty()) continue;
    int c = find(p.dart_face[p.node_darts[w][0]]);
    seen_left |= c == left;
    seen_right |= c == right;
  }
  return seen_left && seen_right;
}

}  // namespace detail

// Adjacent edges never cross, every pair crosses at most once, and (for
// multigraphs) parallel edges are not homotopic.
inline SimplicityReport validate_simplicity(const Drawing& d) {
  SimplicityReport r;
  r.problems = structural_problems(d);
  if (!r.ok()) return r;
  for (int e = 0; e < d.m(); ++e) {
    std::map<int, int> times;
    for (int f : d.crossings[e]) ++times[f];
    for (auto [f, c] : times) {
      if (f < e) continue;
      const auto &A = d.edges[e], &B = d.edges[f];
      if (A.u == B.u || A.u == B.v || A.v == B.u || A.v == B.v)
        r.problems.push_back("adjacent edges " + std::to_string(e) + " and " + std::to_string(f) + " cross");
      if (c > 1)
        r.problems.push_back("edges " + std::to_string(e) + " and " + std::to_string(f) + " cross " +
                             std::to_string(c) + " times");
    }
  }
  if (!r.ok() || !d.multigraph) return r;
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (int e = 0; e < d.m(); ++e) groups[std::minmax(d.edges[e].u, d.edges[e].v)].push_back(e);
  bool any = false;
  for (auto& [k, g] : groups) any |= g.size() > 1;
  if (!any) return r;
  if (!d.has_embedding()) {
    r.problems.push_back("parallel edges present but no embedding to check homotopy");
    return r;
  }
  Planarization p = planarize(d);
  for (auto& [k, g] : groups)
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        if (!detail::parallel_pair_separates(p, g[i], g[j], k.first, k.second))
          r.problems.push_back("parallel edges " + std::to_string(g[i]) + " and " + std::to_string(g[j]) +
                               " are homotopic");
  return r;
}

struct SkeletonProfile {
  std::vector<int> edges;                     // crossing-free edge ids
  std::vector<std::vector<int>> faces;        // vertex cycles, face on the left
  std::vector<std::vector<int>> face_edges;   // matching edge ids
  std::map<int, int> face_histogram;          // size -> count
  bool simple = false, spanning = false, biconnected = false, triconnected = false, dual_simple = false;
  int h = 0;
  // outer drawing: a skeleton face holding all vertices, untouched by edges
  bool outer_strict = false, outer_lenient = false;
  int outer_face = -1;

  bool is_h_framed(int hh) const { return simple && spanning && biconnected && h <= hh; }
  bool is_framed() const { return simple && spanning && biconnected; }
  bool is_polyhedral() const { return is_framed() && triconnected; }
};

inline SkeletonProfile skeleton_audit(const Drawing& d) {
  SkeletonProfile s;
  const int n = d.n();
  for (int e = 0; e < d.m(); ++e)
    if (d.crossings[e].empty()) s.edges.push_back(e);
  std::vector<std::vector<int>> adj(n);
  std::set<std::pair<int, int>> pairs;
  s.simple = true;
  for (int e : s.edges) {
    auto [u, v] = d.edges[e];
    adj[u].push_back(v);
    adj[v].push_back(u);
    if (!pairs.insert(std::minmax(u, v)).second) s.simple = false;
  }
  bool all_touched = std::all_of(adj.begin(), adj.end(), [](const auto& a) { return !a.empty(); });
  std::vector<bool> none(n, false);
  bool connected = n > 0 && graph::components(adj, none) == 1;
  s.spanning = all_touched && connected;
  auto cut = graph::articulation_points(adj);
  s.biconnected = s.spanning && n >= 3 && std::none_of(cut.begin(), cut.end(), [](bool b) { return b; });
  if (s.biconnected && n >= 4) {
    s.triconnected = true;
    for (int a = 0; a < n && s.triconnected; ++a)
      for (int b = a + 1; b < n && s.triconnected; ++b) {
        std::vector<bool> rm(n, false);
        rm[a] = rm[b] = true;
        if (graph::components(adj, rm) != 1) s.triconnected = false;
      }
  }
  if (!d.has_embedding()) return s;

  // skeleton darts: 2e (u->v), 2e+1 (v->u)
  std::vector<std::vector<int>> rot(n);
  std::vector<int> pos(2 * d.m(), -1);
  std::vector<bool> in_skel(d.m(), false);
  for (int e : s.edges) in_skel[e] = true;
  for (int w = 0; w < n; ++w)
    for (int e : d.rotation[w])
      if (in_skel[e]) {
        int dart = d.edges[e].u == w ? 2 * e : 2 * e + 1;
        pos[dart] = static_cast<int>(rot[w].size());
        rot[w].push_back(dart);
      }
  auto origin = [&](int dart) { return (dart & 1) ? d.edges[dart >> 1].v : d.edges[dart >> 1].u; };
  auto next = [&](int dart) {
    int t = dart ^ 1, w = origin(t);
    return rot[w][(pos[t] + rot[w].size() - 1) % rot[w].size()];
  };
  std::vector<int> dart_face(2 * d.m(), -1);
  std::vector<std::vector<int>> face_darts;
  for (int e : s.edges)
    for (int d0 : {2 * e, 2 * e + 1}) {
      if (dart_face[d0] != -1) continue;
      int id = static_cast<int>(s.faces.size());
      std::vector<int> cyc, eds, ds;
      int x = d0;
      do {
        dart_face[x] = id;
        cyc.push_back(origin(x));
        eds.push_back(x >> 1);
        ds.push_back(x);
        x = next(x);
      } while (x != d0);
      s.faces.push_back(cyc);
      s.face_edges.push_back(eds);
      face_darts.push_back(ds);
      ++s.face_histogram[static_cast<int>(cyc.size())];
      s.h = std::max(s.h, static_cast<int>(cyc.size()));
    }
  s.dual_simple = !s.faces.empty();
  std::set<std::pair<int, int>> face_pairs;
  for (int e : s.edges) {
    int a = dart_face[2 * e], b = dart_face[2 * e + 1];
    if (a == b || !face_pairs.insert(std::minmax(a, b)).second) s.dual_simple = false;
  }

  Planarization p;
  try {
    p = planarize(d);
  } catch (const Error&) {
    return s;
  }
  for (int f = 0; f < static_cast<int>(s.faces.size()); ++f) {
    std::set<int> verts(s.faces[f].begin(), s.faces[f].end());
    if (static_cast<int>(verts.size()) != n) continue;
    // the planarization face on the same side must consist of exactly these darts
    int pf = p.dart_face[p.edge_dart(face_darts[f][0] >> 1, 0, (face_darts[f][0] & 1) == 0)];
    const auto& pd = p.faces[pf].darts;
    if (pd.size() != face_darts[f].size()) continue;
    bool same = true;
    for (int x : face_darts[f])
      if (p.dart_face[p.edge_dart(x >> 1, 0, (x & 1) == 0)] != pf) same = false;
    if (!same) continue;
    s.outer_lenient = true;
    if (static_cast<int>(s.faces[f].size()) == n) {
      s.outer_strict = true;
      s.outer_face = f;
    } else if (s.outer_face == -1) {
      s.outer_face = f;
    }
  }
  return s;
}

}  // namespace kplanar

#endif  // KPLANAR_AUDIT_HPP_
