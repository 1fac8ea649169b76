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

#ifndef KPLANAR_DISCHARGE_HPP_
#define KPLANAR_DISCHARGE_HPP_

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kplanar/audit.hpp"
#include "kplanar/drawing.hpp"
#include "kplanar/planarization.hpp"
#include "kplanar/rational.hpp"

namespace kplanar {

enum class BlockShape { kHexagonal, kQuadrangular, kNone };

inline std::string to_string(BlockShape s) {
  switch (s) {
    case BlockShape::kHexagonal: return "hexagonal";
    case BlockShape::kQuadrangular: return "quadrangular";
    default: return "none";
  }
}

struct RuleSet {
  std::string name;
  int k = 5;
  bool min_k = false;  // k bounds min-k-planarity instead of k-planarity
  Rational alpha;
  BlockShape shape = BlockShape::kHexagonal;
  Rational step1 = rat(1, 5);
  bool transfers = false;
  bool outer_rule = false;

  Rational step2() const { return rmax(alpha - step1, Rational(0)); }
  Rational beta() const { return 30 - 8 / alpha; }
  Rational gamma() const { return beta() - 2; }
  int block_initial() const { return shape == BlockShape::kQuadrangular ? 4 : 8; }
};

inline RuleSet five_planar_main() {
  RuleSet r;
  r.name = "five_planar_main";
  r.k = 5;
  r.alpha = rat(49, 170);
  r.transfers = true;
  return r;
}

inline RuleSet k_planar_general(int k) {
  if (k < 5) throw InputError("k_planar_general needs k >= 5");
  RuleSet r;
  r.name = "k_planar_general(" + std::to_string(k) + ")";
  r.k = k;
  r.alpha = rat(4, 3 * k);  // 2 / (1.5 k)
  return r;
}

inline RuleSet four_planar() {
  RuleSet r;
  r.name = "four_planar";
  r.k = 4;
  r.alpha = rat(8, 25);
  return r;
}

inline RuleSet min_k(int k) {
  if (k < 4) throw InputError("min_k needs k >= 4");
  RuleSet r;
  r.name = "min_k(" + std::to_string(k) + ")";
  r.k = k;
  r.min_k = true;
  r.alpha = rmin(rat(1, 5), rat(1, k));
  r.shape = BlockShape::kQuadrangular;
  return r;
}

inline RuleSet outer_five() {
  RuleSet r = five_planar_main();
  r.name = "outer_five";
  r.outer_rule = true;
  return r;
}

// Accepts "five_planar_main", "four_planar", "outer_five", "k_planar_general(K)",
// "min_k(K)"; ":" may replace the parentheses.
inline RuleSet ruleset_by_name(const std::string& s) {
  if (s == "five_planar_main") return five_planar_main();
  if (s == "four_planar") return four_planar();
  if (s == "outer_five") return outer_five();
  auto param = [&](const std::string& head) -> std::optional<int> {
    if (s.rfind(head, 0) != 0) return std::nullopt;
    std::string rest = s.substr(head.size());
    if (rest.empty()) return std::nullopt;
    if (rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    else if (rest.front() == ':') rest = rest.substr(1);
    else return std::nullopt;
    try {
      std::size_t used = 0;
      int v = std::stoi(rest, &used);
      if (used != rest.size()) return std::nullopt;
      return v;
    } catch (...) {
      return std::nullopt;
    }
  };
  if (auto k = param("k_planar_general")) return k_planar_general(*k);
  if (auto k = param("min_k")) return min_k(*k);
  throw InputError("unknown rule set '" + s + "'");
}

inline std::vector<RuleSet> ruleset_catalog() {
  return {five_planar_main(), k_planar_general(5), k_planar_general(6), four_planar(), min_k(4), min_k(5),
          outer_five()};
}

// ------------------------------------------------------------ decomposition

struct HBlock {
  std::vector<int> corners;   // ccw around the block
  std::vector<int> defining;  // original edge ids spanning the block
  std::vector<int> removed;   // original edges meeting the interior, defining ones included
  std::vector<int> side_uid;  // per side (corners[i], corners[i+1]): edge uid in the reduced drawing
  std::vector<bool> side_existing;        // the side is an edge of the input graph
  std::vector<std::vector<int>> exits;    // per side: removed edges leaving through it (one entry per passage)
  int face = -1;                          // face of the reduced planarization
};

struct BlockDecomposition {
  BlockShape shape = BlockShape::kNone;
  std::vector<HBlock> blocks;
  Drawing reduced;
  std::vector<int> reduced_uid;  // reduced edge -> uid; uid < m is an input edge
  int input_edges = 0;
  std::vector<std::vector<int>> edge_blocks;  // input edge -> blocks whose interior it meets
  Planarization planarization;                // of the reduced drawing
  std::vector<int> face_block;                // face -> block or -1
  int q_blocks = 0;
  std::vector<std::string> warnings;

  int original_of(int reduced_edge) const {
    int u = reduced_uid[reduced_edge];
    return u < input_edges ? u : -1;
  }
};

namespace detail {

// The sub-drawing of a block's defining edges: its face holding the endpoints
// is walked with that face on the left, i.e. clockwise around the block.
struct BlockFrame {
  std::vector<int> corners;           // ccw, input vertex ids
  std::map<int, int> corner_edge;     // corner -> defining edge (current ids)
  std::vector<int> dart_side;         // dart of the sub-planarization -> side index, -1 inside
  Planarization sub;
  std::vector<int> sub_edge;          // defining edge (current id) -> sub-drawing edge
  std::map<int, int> local_edge;
};

inline BlockFrame block_frame(const Drawing& cur, const std::vector<int>& defining) {
  BlockFrame F;
  std::map<int, int> vmap;
  std::vector<int> vback;
  for (int e : defining)
    for (int w : {cur.edges[e].u, cur.edges[e].v})
      if (!vmap.count(w)) vmap[w] = static_cast<int>(vback.size()), vback.push_back(w);
  Drawing s = Drawing::with_vertices(static_cast<int>(vback.size()));
  std::set<int> def(defining.begin(), defining.end());
  for (std::size_t i = 0; i < defining.size(); ++i) {
    int e = defining[i];
    s.add_edge(vmap[cur.edges[e].u], vmap[cur.edges[e].v]);
    F.local_edge[e] = static_cast<int>(i);
  }
  s.crossing_sides.assign(defining.size(), {});
  for (std::size_t i = 0; i < defining.size(); ++i) {
    int e = defining[i];
    for (std::size_t j = 0; j < cur.crossings[e].size(); ++j)
      if (def.count(cur.crossings[e][j])) {
        s.crossings[i].push_back(F.local_edge[cur.crossings[e][j]]);
        s.crossing_sides[i].push_back(cur.crossing_sides[e][j]);
      }
  }
  s.rotation.assign(s.n(), {});
  for (int i = 0; i < s.m(); ++i) {
    s.rotation[s.edges[i].u].push_back(i);
    s.rotation[s.edges[i].v].push_back(i);
  }
  F.sub = planarize(s);
  int outer = -1;
  for (int f = 0; f < static_cast<int>(F.sub.faces.size()); ++f)
    if (F.sub.faces[f].originals > 0) {
      if (outer >= 0) throw Error("defining edges leave more than one face with endpoints");
      outer = f;
    }
  if (outer < 0) throw Error("defining edges enclose no endpoint face");
  const auto& darts = F.sub.faces[outer].darts;
  // rotate the walk to start right after an arrival at an endpoint
  int L = static_cast<int>(darts.size()), start = 0;
  for (int i = 0; i < L; ++i)
    if (!F.sub.is_crossing(F.sub.target(darts[i]))) {
      start = (i + 1) % L;
      break;
    }
  std::vector<int> cw;
  std::vector<std::vector<int>> path;  // darts after leaving cw[i]
  cw.push_back(F.sub.origin(darts[start]));
  path.emplace_back();
  for (int k = 0; k < L; ++k) {
    int d = darts[(start + k) % L];
    path.back().push_back(d);
    int t = F.sub.target(d);
    if (!F.sub.is_crossing(t) && k + 1 < L) {
      cw.push_back(t);
      path.emplace_back();
    }
  }
  const int h = static_cast<int>(cw.size());
  if (h != 2 * static_cast<int>(defining.size())) throw Error("block walk does not visit every endpoint once");
  // ccw corners are cw reversed; the path leaving cw[i] ends at cw[i+1], which
  // is side (cw[i+1], cw[i]) in ccw terms
  for (int i = h - 1; i >= 0; --i) F.corners.push_back(vback[cw[i]]);
  F.dart_side.assign(F.sub.num_darts(), -1);
  for (int i = 0; i < h; ++i) {
    int side = h - 1 - ((i + 1) % h);
    for (int d : path[i]) F.dart_side[d] = side;
  }
  for (std::size_t i = 0; i < defining.size(); ++i) {
    int e = defining[i];
    F.corner_edge[cur.edges[e].u] = e;
    F.corner_edge[cur.edges[e].v] = e;
  }
  return F;
}

// Side through which removed edge r passes at its crossing with defining edge
// e (index idx in r's list), heading to r's head when `forward`.
inline int exit_side(const Drawing& cur, const BlockFrame& F, const std::set<int>& def, int r, int idx,
                     bool forward) {
  int e = cur.crossings[r][idx];
  int j = static_cast<int>(std::find(cur.crossings[e].begin(), cur.crossings[e].end(), r) - cur.crossings[e].begin());
  int sign = cur.crossing_sides[e][j];
  int pos = 0;
  for (int q = 0; q < j; ++q) pos += def.count(cur.crossings[e][q]) ? 1 : 0;
  int se = F.local_edge.at(e);
  // after the crossing r lies right of e when sign is +1; the face right of
  // e is left of the backward dart
  bool right = forward ? sign > 0 : sign < 0;
  int dart = F.sub.edge_dart(se, pos, !right);
  return F.dart_side[dart];
}

}  // namespace detail

inline BlockDecomposition decompose_blocks(const Drawing& d, BlockShape shape, int k = 5) {
  BlockDecomposition B;
  B.shape = shape;
  B.input_edges = d.m();
  const int m = d.m();
  Drawing cur = d;
  cur.bends.clear();
  std::vector<int> uid(m);
  for (int e = 0; e < m; ++e) uid[e] = e;
  int next_uid = m;
  B.edge_blocks.assign(m, {});
  while (shape != BlockShape::kNone) {
    Planarization P = planarize(cur);
    std::optional<std::vector<int>> best;
    std::vector<int> best_cur;
    for (const auto& f : P.faces) {
      if (f.size() != 3 || f.originals != 0) continue;
      std::vector<int> es;
      for (int dd : f.darts) es.push_back(P.parent_edge(dd));
      std::vector<int> key;
      for (int e : es) key.push_back(uid[e]);
      std::vector<int> order = {0, 1, 2};
      std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
      std::vector<int> sk = {key[order[0]], key[order[1]], key[order[2]]};
      if (!best || sk < *best) {
        best = sk;
        best_cur = {es[order[0]], es[order[1]], es[order[2]]};
      }
    }
    if (!best) break;
    std::vector<int> defining = best_cur;
    if (shape == BlockShape::kQuadrangular) {
      std::vector<int> light;
      for (int e : defining)
        if (static_cast<int>(d.crossings[uid[e]].size()) <= k) light.push_back(e);
      if (light.size() < 2) throw InputError("pairwise crossing triple has fewer than two edges with at most k crossings");
      defining = {light[0], light[1]};
    }
    auto F = detail::block_frame(cur, defining);
    const int h = static_cast<int>(F.corners.size());
    std::set<int> def(defining.begin(), defining.end());
    std::set<int> R(defining.begin(), defining.end());
    for (int e : defining)
      for (int x : cur.crossings[e]) R.insert(x);
    HBlock H;
    H.corners = F.corners;
    for (int e : defining) H.defining.push_back(uid[e]);
    for (int e : R) H.removed.push_back(uid[e]);
    std::sort(H.removed.begin(), H.removed.end());
    H.exits.assign(h, {});
    auto inside_corner = [&](int w, int r) {
      auto it = F.corner_edge.find(w);
      if (it == F.corner_edge.end()) return false;
      const auto& rot = cur.rotation[w];
      int L = static_cast<int>(rot.size());
      int p = static_cast<int>(std::find(rot.begin(), rot.end(), it->second) - rot.begin());
      for (int dir : {1, -1})
        for (int s = 1; s < L; ++s) {
          int e = rot[((p + dir * s) % L + L) % L];
          if (!R.count(e)) break;
          if (e == r) return true;
        }
      return false;
    };
    for (int r : R) {
      if (def.count(r)) continue;
      const auto& cr = cur.crossings[r];
      int first = -1, last = -1;
      for (int i = 0; i < static_cast<int>(cr.size()); ++i)
        if (def.count(cr[i])) {
          if (first < 0) first = i;
          last = i;
        }
      if (!inside_corner(cur.edges[r].u, r)) {
        int s = detail::exit_side(cur, F, def, r, first, false);
        if (s < 0) B.warnings.push_back("edge " + std::to_string(uid[r]) + " leaves a block through its core");
        else H.exits[s].push_back(uid[r]);
      }
      if (!inside_corner(cur.edges[r].v, r)) {
        int s = detail::exit_side(cur, F, def, r, last, true);
        if (s < 0) B.warnings.push_back("edge " + std::to_string(uid[r]) + " leaves a block through its core");
        else H.exits[s].push_back(uid[r]);
      }
    }
    // sides: reuse an edge joining the two corners, rerouted along the block
    std::vector<int> side_edge(h, -1);  // current id, or -1 for a new edge
    std::set<int> rerouted;
    for (int i = 0; i < h; ++i) {
      int a = F.corners[i], b = F.corners[(i + 1) % h];
      for (int e = 0; e < cur.m(); ++e)
        if (!R.count(e) && !rerouted.count(e) &&
            ((cur.edges[e].u == a && cur.edges[e].v == b) || (cur.edges[e].u == b && cur.edges[e].v == a))) {
          side_edge[i] = e;
          rerouted.insert(e);
          break;
        }
    }
    Drawing nx = Drawing::with_vertices(cur.n());
    nx.vertices = cur.vertices;
    nx.multigraph = cur.multigraph;
    std::vector<int> nid(cur.m(), -1), nuid;
    for (int e = 0; e < cur.m(); ++e)
      if (!R.count(e)) {
        nid[e] = nx.add_edge(cur.edges[e].u, cur.edges[e].v);
        nuid.push_back(uid[e]);
      }
    std::vector<int> side_new(h);
    for (int i = 0; i < h; ++i) {
      if (side_edge[i] >= 0) {
        side_new[i] = nid[side_edge[i]];
        H.side_uid.push_back(uid[side_edge[i]]);
        H.side_existing.push_back(uid[side_edge[i]] < m);
      } else {
        side_new[i] = nx.add_edge(F.corners[i], F.corners[(i + 1) % h]);
        nuid.push_back(next_uid);
        H.side_uid.push_back(next_uid++);
        H.side_existing.push_back(false);
      }
    }
    nx.crossing_sides.assign(nx.m(), {});
    for (int e = 0; e < cur.m(); ++e) {
      if (R.count(e) || rerouted.count(e)) continue;
      for (std::size_t j = 0; j < cur.crossings[e].size(); ++j) {
        int x = cur.crossings[e][j];
        if (R.count(x) || rerouted.count(x)) continue;
        nx.crossings[nid[e]].push_back(nid[x]);
        nx.crossing_sides[nid[e]].push_back(cur.crossing_sides[e][j]);
      }
    }
    std::map<int, int> corner_index;
    for (int i = 0; i < h; ++i) corner_index[F.corners[i]] = i;
    nx.rotation.assign(nx.n(), {});
    for (int w = 0; w < cur.n(); ++w)
      for (int e : cur.rotation[w]) {
        auto ci = corner_index.find(w);
        if (ci != corner_index.end() && F.corner_edge.at(w) == e) {
          int i = ci->second;
          nx.rotation[w].push_back(side_new[i]);
          nx.rotation[w].push_back(side_new[(i + h - 1) % h]);
        } else if (!R.count(e) && !rerouted.count(e)) {
          nx.rotation[w].push_back(nid[e]);
        }
      }
    int b = static_cast<int>(B.blocks.size());
    for (int r : H.removed) B.edge_blocks[r].push_back(b);
    B.blocks.push_back(H);
    cur = std::move(nx);
    uid = std::move(nuid);
  }
  // an edge removed earlier still meets later blocks whose defining edges it crosses
  for (int b = 0; b < static_cast<int>(B.blocks.size()); ++b) {
    std::set<int> def(B.blocks[b].defining.begin(), B.blocks[b].defining.end());
    for (int r = 0; r < m; ++r) {
      if (B.edge_blocks[r].empty() || B.edge_blocks[r].front() >= b) continue;
      if (std::find(B.edge_blocks[r].begin(), B.edge_blocks[r].end(), b) != B.edge_blocks[r].end()) continue;
      for (int x : d.crossings[r])
        if (def.count(x)) {
          B.edge_blocks[r].push_back(b);
          break;
        }
    }
  }
  B.reduced = std::move(cur);
  B.reduced_uid = std::move(uid);
  B.planarization = planarize(B.reduced);
  const auto& P = B.planarization;
  B.face_block.assign(P.faces.size(), -1);
  std::map<int, int> by_uid;
  for (int e = 0; e < B.reduced.m(); ++e) by_uid[B.reduced_uid[e]] = e;
  for (int b = 0; b < static_cast<int>(B.blocks.size()); ++b) {
    auto& H = B.blocks[b];
    int e = by_uid.at(H.side_uid[0]);
    int f = B.reduced.edges[e].u == H.corners[0] ? P.face_left(e, 0) : P.face_right(e, 0);
    H.face = f;
    if (B.face_block[f] >= 0) B.warnings.push_back("two blocks claim face " + std::to_string(f));
    B.face_block[f] = b;
    int h = static_cast<int>(H.corners.size());
    if (P.faces[f].size() != h || P.faces[f].originals != h)
      B.warnings.push_back("block " + std::to_string(b) + " is not an empty polygonal face");
  }
  // Q-blocks: components of the remaining faces glued across segments
  {
    const int Fn = static_cast<int>(P.faces.size());
    std::vector<int> comp(Fn, -1);
    for (int f0 = 0; f0 < Fn; ++f0) {
      if (B.face_block[f0] >= 0 || comp[f0] >= 0) continue;
      std::vector<int> stack = {f0};
      comp[f0] = B.q_blocks;
      while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int dd : P.faces[f].darts) {
          int g = P.dart_face[P.twin(dd)];
          if (B.face_block[g] < 0 && comp[g] < 0) comp[g] = B.q_blocks, stack.push_back(g);
        }
      }
      ++B.q_blocks;
    }
  }
  if (!P.biconnected) B.warnings.push_back("reduced planarization is not 2-connected");
  return B;
}

// ------------------------------------------------------------ neighbours

namespace detail {

inline bool is_one_triangle(const Planarization& P, int f) {
  return P.faces[f].size() == 3 && P.faces[f].originals == 1;
}

inline int crossing_crossing_dart(const Planarization& P, int f) {
  for (int d : P.faces[f].darts)
    if (P.is_crossing(P.origin(d)) && P.is_crossing(P.target(d))) return d;
  return -1;
}

}  // namespace detail

struct WedgeResult {
  int face = -1;
  int hops = 0;      // 0-4 faces crossed on the way
  int segment = -1;  // segment between the last hop and the neighbour
};

inline WedgeResult wedge_neighbor(const Planarization& P, int f) {
  if (!detail::is_one_triangle(P, f)) throw InputError("wedge_neighbor needs a 1-3 face");
  int d = detail::crossing_crossing_dart(P, f);
  if (d < 0) throw Error("1-3 face without a crossing-crossing segment");
  WedgeResult w;
  int cross = P.twin(d);
  for (std::size_t guard = 0; guard <= P.faces.size(); ++guard) {
    int g = P.dart_face[cross];
    const auto& F = P.faces[g];
    if (F.size() != 4 || F.originals != 0) {
      w.face = g;
      w.segment = cross >> 1;
      return w;
    }
    int j = static_cast<int>(std::find(F.darts.begin(), F.darts.end(), cross) - F.darts.begin());
    cross = P.twin(F.darts[(j + 2) % 4]);
    ++w.hops;
  }
  throw Error("wedge walk does not terminate");
}

struct SideNeighbors {
  int r_face = -1, s_face = -1;        // side-neighbours towards the tail / head of the crossed edge
  int r_segment = -1, s_segment = -1;  // segments shared with them
  int run_length = 0;                  // consecutive 1-3 faces along the edge, f included
  int run_index = 0;                   // position of f in the run, from the r side
  // each side covers the nearer floor(L/2) faces; the middle one of an odd
  // run goes to whichever neighbour is richer when it is paid
  bool r_pays = true;
  bool middle = false;
  int edge = -1;
};

inline SideNeighbors side_neighbors(const Planarization& P, int f) {
  if (!detail::is_one_triangle(P, f)) throw InputError("side_neighbors needs a 1-3 face");
  int d = detail::crossing_crossing_dart(P, f);
  SideNeighbors S;
  int seg = d >> 1;
  int e = P.segments[seg].edge;
  S.edge = e;
  bool left = (d & 1) == 0;  // f lies left of e
  int base = P.first_segment[e], cnt = P.segment_count(e);
  int pos = seg - base;
  auto face_at = [&](int p) { return P.dart_face[2 * (base + p) + (left ? 0 : 1)]; };
  auto shared = [&](int a, int b) {
    for (int x : P.faces[a].darts)
      if (P.dart_face[P.twin(x)] == b && (x >> 1) != seg) return x >> 1;
    return -1;
  };
  int lo = pos, hi = pos;
  // the first and last segments end at original vertices, so never hold a run
  while (lo - 1 >= 1 && detail::is_one_triangle(P, face_at(lo - 1))) --lo;
  while (hi + 1 <= cnt - 2 && detail::is_one_triangle(P, face_at(hi + 1))) ++hi;
  if (lo - 1 >= 0) {
    S.r_face = face_at(lo - 1);
    S.r_segment = shared(face_at(lo), S.r_face);
  }
  if (hi + 1 < cnt) {
    S.s_face = face_at(hi + 1);
    S.s_segment = shared(face_at(hi), S.s_face);
  }
  S.run_length = hi - lo + 1;
  S.run_index = pos - lo;
  S.middle = S.run_length % 2 == 1 && S.run_index == S.run_length / 2;
  S.r_pays = S.run_index < (S.run_length + 1) / 2;
  return S;
}

// ------------------------------------------------------------ ledger

struct FaceRow {
  int id = -1;
  std::pair<int, int> cls;
  int block = -1;  // H-block index when the face is one
  Rational initial, after_step1, after_step2, after_edges, final_charge;
};

struct EdgeRow {
  int id = -1;  // input edge id
  Rational received;
  std::vector<int> blocks;  // blocks that paid for it
};

struct Transfer {
  int from_face = -1, to_block = -1, side = -1;
  std::string rule;
  Rational amount;
};

struct Violation {
  std::string kind;  // "face", "edge", "assertion"
  int id = -1;
  Rational value;
  std::string detail;
};

struct ChargeLedger {
  std::string ruleset;
  Rational alpha;
  int n = 0, m = 0;
  int blocks = 0, q_blocks = 0;
  std::vector<FaceRow> faces;
  std::vector<EdgeRow> edges;
  std::vector<Transfer> transfers;
  std::vector<Violation> violations;
  std::vector<std::string> warnings;
  Rational total_initial, outer_deduction, residue;
  int wedge_relations = 0, side_relations = 0;

  bool ok() const { return violations.empty() && residue == 0; }
  // (4n - 8 - deduction) / (2 alpha)
  Rational implied_edge_bound() const { return (Rational(4 * n - 8) - outer_deduction) / (2 * alpha); }
};

inline ChargeLedger run_discharge(const Drawing& d, const RuleSet& rs) {
  if (!(rs.alpha > 0 && rs.alpha < rat(1, 2))) throw InputError("alpha must lie in (0, 1/2)");
  if (rs.min_k ? !is_min_k_planar(d, rs.k) : !is_k_planar(d, rs.k))
    throw InputError("drawing is not " + std::string(rs.min_k ? "min-" : "") + std::to_string(rs.k) +
                     "-planar; rule set " + rs.name + " does not apply");
  if (auto s = validate_simplicity(d); !s.ok()) throw InputError("drawing is not simple: " + s.problems.front());
  ChargeLedger L;
  L.ruleset = rs.name;
  L.alpha = rs.alpha;
  L.n = d.n();
  L.m = d.m();
  auto B = decompose_blocks(d, rs.shape, rs.k);
  L.warnings = B.warnings;
  L.blocks = static_cast<int>(B.blocks.size());
  L.q_blocks = B.q_blocks;
  const auto& P = B.planarization;
  const int Fn = static_cast<int>(P.faces.size());
  std::vector<Rational> ch(Fn);
  L.faces.resize(Fn);
  for (int f = 0; f < Fn; ++f) {
    auto& row = L.faces[f];
    row.id = f;
    row.cls = P.faces[f].cls();
    row.block = B.face_block[f];
    ch[f] = P.faces[f].size() + P.faces[f].originals - 4;
    row.initial = ch[f];
    L.total_initial += ch[f];
  }
  if (L.total_initial != 4 * d.n() - 8)
    L.warnings.push_back("initial charge " + to_string(L.total_initial) + " differs from 4n-8");
  std::set<int> wedge_segments, side_segments;
  // step 1
  for (int f = 0; f < Fn; ++f) {
    if (B.face_block[f] >= 0 || !detail::is_one_triangle(P, f)) continue;
    auto w = wedge_neighbor(P, f);
    ch[w.face] -= rs.step1;
    ch[f] += rs.step1;
    wedge_segments.insert(w.segment);
    ++L.wedge_relations;
  }
  for (int f = 0; f < Fn; ++f) L.faces[f].after_step1 = ch[f];
  // step 2
  Rational s2 = rs.step2();
  std::map<std::pair<int, int>, int> side_load;  // (face, segment) -> 1-3 faces served
  struct Middle { int tri, r, s; };
  std::vector<Middle> middles;
  auto pay2 = [&](int payer, int f) {
    if (s2 > 0) {
      ch[payer] -= s2;
      ch[f] += s2;
    }
  };
  for (int f = 0; f < Fn; ++f) {
    if (B.face_block[f] >= 0 || !detail::is_one_triangle(P, f)) continue;
    auto S = side_neighbors(P, f);
    for (auto [g, sg] : {std::make_pair(S.r_face, S.r_segment), std::make_pair(S.s_face, S.s_segment)})
      if (g >= 0) {
        side_segments.insert(sg);
        ++side_load[{g, sg}];
      }
    ++L.side_relations;
    if (S.r_face < 0 || S.s_face < 0) {
      L.violations.push_back({"assertion", f, 0, "1-3 face without two side-neighbours"});
      continue;
    }
    if (S.middle) middles.push_back({f, S.r_face, S.s_face});
    else pay2(S.r_pays ? S.r_face : S.s_face, f);
  }
  // middle faces of odd runs: a b-matching against what each neighbour can
  // still spare after paying its own edges
  if (!middles.empty()) {
    std::map<int, long long> cap;
    for (const auto& mm : middles)
      for (int g : {mm.r, mm.s})
        if (!cap.count(g)) {
          Rational spare = ch[g] - rs.alpha * P.faces[g].originals;
          long long c = 0;
          if (s2 > 0 && spare > 0) {
            Rational q = spare / s2;
            c = static_cast<long long>(num(q) / den(q));
          } else if (s2 == 0) {
            c = static_cast<long long>(middles.size());
          }
          cap[g] = c;
        }
    const int M = static_cast<int>(middles.size());
    std::vector<int> choice(M, -1);
    std::map<int, std::vector<int>> held;
    std::function<bool(int, std::set<int>&)> place = [&](int i, std::set<int>& seen) {
      for (int g : {middles[i].r, middles[i].s}) {
        if (!seen.insert(g).second) continue;
        if (static_cast<long long>(held[g].size()) < cap[g]) {
          held[g].push_back(i);
          choice[i] = g;
          return true;
        }
        for (int& j : held[g]) {
          int jj = j;
          choice[jj] = -1;
          if (place(jj, seen)) {
            j = i;
            choice[i] = g;
            return true;
          }
          choice[jj] = g;
        }
      }
      return false;
    };
    for (int i = 0; i < M; ++i) {
      std::set<int> seen;
      if (!place(i, seen)) choice[i] = middles[i].r;  // nobody can spare it: the nearer side pays and shows up red
    }
    for (int i = 0; i < M; ++i) pay2(choice[i], middles[i].tri);
  }
  // an edge with k crossings carries at most k-1 one-triangles
  const int side_cap = rs.k - 1;
  if (!rs.min_k)
    for (auto& [key, c] : side_load)
      if (c > side_cap)
        L.violations.push_back({"assertion", key.first, c,
                                "side-neighbour to more than " + std::to_string(side_cap) + " 1-3 faces over one segment"});
  for (int s : wedge_segments)
    if (side_segments.count(s))
      L.violations.push_back({"assertion", s, 0, "segment carries both a wedge and a side relation"});
  for (int f = 0; f < Fn; ++f) L.faces[f].after_step2 = ch[f];
  // step 3: every face pays alpha/2 per segment end at an original vertex
  const Rational half = rs.alpha / 2;
  std::vector<Rational> reduced_recv(B.reduced.m());
  std::vector<std::vector<std::pair<int, Rational>>> contrib(B.reduced.m());
  for (int f = 0; f < Fn; ++f)
    for (int dd : P.faces[f].darts) {
      int e = P.parent_edge(dd);
      int ends = (P.is_crossing(P.origin(dd)) ? 0 : 1) + (P.is_crossing(P.target(dd)) ? 0 : 1);
      if (!ends) continue;
      Rational a = half * ends;
      ch[f] -= a;
      reduced_recv[e] += a;
      contrib[e].push_back({f, a});
    }
  L.edges.resize(d.m());
  for (int e = 0; e < d.m(); ++e) L.edges[e].id = e;
  std::map<int, std::vector<int>> added_sides;  // uid -> blocks
  for (int b = 0; b < L.blocks; ++b)
    for (std::size_t i = 0; i < B.blocks[b].side_uid.size(); ++i)
      if (B.blocks[b].side_uid[i] >= B.input_edges) added_sides[B.blocks[b].side_uid[i]].push_back(b);
  for (int e = 0; e < B.reduced.m(); ++e) {
    int o = B.original_of(e);
    if (o >= 0) {
      L.edges[o].received += reduced_recv[e];
      continue;
    }
    // a side missing from the graph: its collections go to the block(s) it bounds
    const auto& owners = added_sides[B.reduced_uid[e]];
    for (auto& [f, a] : contrib[e]) {
      int to = -1;
      if (B.face_block[f] >= 0 &&
          std::find(owners.begin(), owners.end(), B.face_block[f]) != owners.end())
        to = B.face_block[f];
      else
        for (int b : owners)
          if (B.blocks[b].face != f) to = b;
      if (to < 0) {
        L.warnings.push_back("added side without an owning block");
        continue;
      }
      ch[B.blocks[to].face] += a;
      if (B.face_block[f] != to) L.transfers.push_back({f, to, -1, "missing side", a});
    }
  }
  // blocks pay for the edges meeting their interior
  for (int e = 0; e < d.m(); ++e) {
    const auto& bl = B.edge_blocks[e];
    if (bl.empty()) continue;
    Rational each = bl.size() == 1 ? 2 * rs.alpha : rs.alpha;
    for (int b : bl) {
      ch[B.blocks[b].face] -= each;
      L.edges[e].received += each;
      L.edges[e].blocks.push_back(b);
    }
  }
  // outer rule: the outer face keeps alpha per boundary edge, the rest leaves
  if (rs.outer_rule) {
    int outer = -1;
    for (int f = 0; f < Fn && outer < 0; ++f)
      if (B.face_block[f] < 0 && P.faces[f].originals == d.n() && P.faces[f].size() == d.n()) outer = f;
    if (outer < 0) throw InputError("outer rule needs a face carrying every vertex with uncrossed sides");
    L.outer_deduction = Rational(2 * d.n() - 4) - rs.alpha * d.n();
    ch[outer] -= L.outer_deduction;
  }
  for (int f = 0; f < Fn; ++f) L.faces[f].after_edges = ch[f];
  // step 4: Q-faces next to a block in deficit
  if (rs.transfers && L.blocks > 0) {
    std::vector<std::set<int>> face_blocks(Fn), demanding_at(Fn);
    std::map<int, int> by_uid;
    for (int e = 0; e < B.reduced.m(); ++e) by_uid[B.reduced_uid[e]] = e;
    auto across = [&](int b, int i) {
      const auto& H = B.blocks[b];
      int e = by_uid.at(H.side_uid[i]);
      int a = H.corners[i];
      return B.reduced.edges[e].u == a ? P.face_right(e, 0) : P.face_left(e, 0);
    };
    for (int b = 0; b < L.blocks; ++b)
      for (std::size_t i = 0; i < B.blocks[b].corners.size(); ++i) {
        int g = across(b, static_cast<int>(i));
        face_blocks[g].insert(b);
        if (ch[B.blocks[b].face] < 0) demanding_at[g].insert(b);
      }
    std::vector<Rational> base = ch;
    const Rational a = rs.alpha;
    for (int b = 0; b < L.blocks; ++b) {
      const auto& H = B.blocks[b];
      int hf = H.face;
      for (std::size_t i = 0; i < H.corners.size() && ch[hf] < 0; ++i) {
        int g = across(b, static_cast<int>(i));
        if (B.face_block[g] >= 0) continue;
        int t = 0;
        for (int r : H.exits[i])
          if (B.edge_blocks[r].size() == 1) ++t;
        Rational offer = 0;
        std::string rule;
        auto cls = P.faces[g].cls();
        if (P.faces[g].size() >= 4) {
          offer = rmax(base[g], Rational(0)) / static_cast<int>(demanding_at[g].size());
          rule = "even share";
        } else if (cls == std::make_pair(2, 3)) {
          if (t == 1) offer = rat(8, 5) - 5 * a;
          else if (t == 2) offer = 2 * (rat(7, 10) - 2 * a);
          else if (t >= 3) offer = rmin(a, rat(6, 5) - 3 * a);
          rule = "2-3 face, " + std::to_string(t) + " critical";
        } else if (cls == std::make_pair(3, 3)) {
          if (face_blocks[g].size() == 1) offer = 2 - 3 * a, rule = "3-3 face, full";
          else offer = t * (2 - 3 * a) / 5, rule = "3-3 face, per critical edge";
        }
        Rational give = rmin(-ch[hf], offer);
        if (give <= 0) continue;
        ch[g] -= give;
        ch[hf] += give;
        L.transfers.push_back({g, b, static_cast<int>(i), rule, give});
      }
    }
  }
  for (int f = 0; f < Fn; ++f) {
    L.faces[f].final_charge = ch[f];
    if (ch[f] < 0) L.violations.push_back({"face", f, ch[f], "negative final charge"});
  }
  Rational sum = L.outer_deduction;
  for (int f = 0; f < Fn; ++f) sum += ch[f];
  for (const auto& e : L.edges) {
    sum += e.received;
    if (e.received < 2 * rs.alpha) L.violations.push_back({"edge", e.id, e.received, "received less than 2 alpha"});
  }
  L.residue = sum - L.total_initial;
  return L;
}

}  // namespace kplanar

#endif  // KPLANAR_DISCHARGE_HPP_
