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

#ifndef KPLANAR_HBLOCK_HPP_
#define KPLANAR_HBLOCK_HPP_

#include <string>
#include <utility>
#include <vector>

#include "kplanar/chords.hpp"
#include "kplanar/solver.hpp"

namespace kplanar {

// A route through the hexagon: corners v_i sit at position 2i, boundary
// edges u_i at 2i+1 of a 12-cycle.
struct HBlockRoute {
  int a = 0, b = 0;
  long long ub = 1;
  bool fixed = false;  // the three long diagonals
  std::string name() const {
    auto lbl = [](int p) { return std::string(p % 2 ? "u" : "v") + std::to_string(p / 2); };
    return lbl(a) + lbl(b);
  }
  int boundary_passages() const { return (a % 2) + (b % 2); }
};

inline std::vector<HBlockRoute> hblock_routes() {
  std::vector<HBlockRoute> r;
  for (int i = 0; i < 3; ++i) r.push_back({2 * i, 2 * i + 6, 1, true});
  for (int i = 0; i < 6; ++i) r.push_back({2 * i, (2 * i + 4) % 12, 1, false});
  for (int i = 0; i < 6; ++i)
    for (int d = 1; d <= 4; ++d) r.push_back({2 * i, 2 * ((i + d) % 6) + 1, 3, false});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) r.push_back({2 * i + 1, 2 * j + 1, 5, false});
  return r;
}

// Charge an H-block gives back to the face beyond boundary edge u_i when t
// routes end there; y = 1 when that face is a 2-3 face, y = 0 for a 3-3 face.
inline Rational hblock_giveback(const Rational& alpha, int t, int y) {
  if (t == 0) return 0;
  if (y == 0) return Rational(t) * (2 - 3 * alpha) / 5;
  switch (t) {
    case 1: return rat(8, 5) - 5 * alpha;
    case 2: return 2 * (rat(7, 10) - 2 * alpha);
    case 3: return rmin(alpha, rat(6, 5) - 3 * alpha);
    default: return 2 - 3 * alpha;
  }
}

struct HBlockModel {
  Rational alpha;
  std::vector<HBlockRoute> routes;
  opt::BinaryProgram program;
  int route_var(int r) const { return r; }
  std::vector<std::vector<std::vector<int>>> z;  // z[i][t][y]
  std::vector<int> y;
};

inline HBlockModel hblock_model(const Rational& alpha) {
  HBlockModel M;
  M.alpha = alpha;
  M.routes = hblock_routes();
  auto& bp = M.program;
  const int R = static_cast<int>(M.routes.size());
  for (const auto& r : M.routes) bp.add_var("w_" + r.name(), r.fixed ? 1 : 0, r.ub);
  bp.objective_constant = 6 * alpha;
  for (int r = 0; r < R; ++r) bp.objective.push_back({r, 2 * alpha});
  // crossing load of every present route
  for (int r = 0; r < R; ++r) {
    opt::Linear l;
    l.name = "load_" + M.routes[r].name();
    l.rhs = 5 - M.routes[r].boundary_passages();
    for (int q = 0; q < R; ++q)
      if (chords_interleave(12, {M.routes[r].a, M.routes[r].b}, {M.routes[q].a, M.routes[q].b}))
        l.terms.push_back({q, 1});
    bp.add_if(r, l);
  }
  // boundary edges and their givebacks
  M.z.assign(6, {});
  for (int i = 0; i < 6; ++i) {
    int pos = 2 * i + 1;
    opt::Linear at;
    for (int r = 0; r < R; ++r)
      if (M.routes[r].a == pos || M.routes[r].b == pos) at.terms.push_back({r, 1});
    opt::Linear cap = at;
    cap.name = "boundary_u" + std::to_string(i);
    cap.rhs = 5;
    bp.add(cap);
    opt::Linear onehot;
    onehot.name = "case_u" + std::to_string(i);
    onehot.sense = opt::Sense::kEq;
    onehot.rhs = 1;
    opt::Linear ydef;
    ydef.name = "y_u" + std::to_string(i);
    ydef.sense = opt::Sense::kEq;
    int yv = bp.add_var("y_" + std::to_string(i), 0, 1);
    M.y.push_back(yv);
    ydef.terms.push_back({yv, -1});
    M.z[i].assign(6, {});
    for (int t = 0; t <= 5; ++t)
      for (int y = 0; y <= (t == 0 ? 0 : 1); ++y) {
        int zv = bp.add_var("z_" + std::to_string(i) + "_" + std::to_string(t) + "_" + std::to_string(y), 0, 1);
        M.z[i][t].push_back(zv);
        onehot.terms.push_back({zv, 1});
        if (y == 1) ydef.terms.push_back({zv, 1});
        Rational g = hblock_giveback(alpha, t, y);
        if (g != 0) bp.objective.push_back({zv, -g});
        opt::Linear eq = at;
        eq.name = "count_u" + std::to_string(i) + "_" + std::to_string(t);
        eq.sense = opt::Sense::kEq;
        eq.rhs = t;
        bp.add_if(zv, eq);
      }
    bp.add(onehot);
    bp.add(ydef);
  }
  return M;
}

struct HBlockCertificate {
  Rational alpha;
  Rational optimum;
  std::vector<std::pair<HBlockRoute, long long>> witness;  // routes with weight >= 1
  std::vector<int> t, y;                                   // per boundary edge
  std::vector<Rational> giveback;
  long long nodes = 0;
};

inline HBlockCertificate hblock_certificate(const Rational& alpha, const opt::SolveOptions& so = {}) {
  if (alpha <= 0 || alpha >= rat(1, 2)) throw InputError("alpha must lie in (0, 1/2)");
  HBlockModel M = hblock_model(alpha);
  auto s = opt::solve(M.program, so);
  HBlockCertificate c;
  c.alpha = alpha;
  c.optimum = s.optimum;
  c.nodes = s.nodes;
  for (int r = 0; r < static_cast<int>(M.routes.size()); ++r)
    if (s.values[r] > 0) c.witness.emplace_back(M.routes[r], s.values[r]);
  for (int i = 0; i < 6; ++i) {
    int ti = 0;
    for (int r = 0; r < static_cast<int>(M.routes.size()); ++r)
      if (M.routes[r].a == 2 * i + 1 || M.routes[r].b == 2 * i + 1) ti += static_cast<int>(s.values[r]);
    c.t.push_back(ti);
    c.y.push_back(static_cast<int>(s.values[M.y[i]]));
    c.giveback.push_back(hblock_giveback(alpha, ti, c.y.back()));
  }
  return c;
}

}  // namespace kplanar

#endif  // KPLANAR_HBLOCK_HPP_
