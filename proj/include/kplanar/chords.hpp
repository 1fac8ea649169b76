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

#ifndef KPLANAR_CHORDS_HPP_
#define KPLANAR_CHORDS_HPP_

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kplanar/solver.hpp"

namespace kplanar {

// Chords of a convex n-gon: every non-boundary vertex pair, lexicographic.
inline std::vector<std::pair<int, int>> convex_chords(int n) {
  std::vector<std::pair<int, int>> c;
  for (int a = 0; a < n; ++a)
    for (int b = a + 2; b < n; ++b)
      if (!(a == 0 && b == n - 1)) c.emplace_back(a, b);
  return c;
}

// Do chords p and q of a convex n-gon cross (endpoints strictly interleave)?
inline bool chords_interleave(int n, std::pair<int, int> p, std::pair<int, int> q) {
  if (p.first == q.first || p.first == q.second || p.second == q.first || p.second == q.second) return false;
  auto inside = [n](int a, int b, int c) {
    int x = ((c - a) % n + n) % n, y = ((b - a) % n + n) % n;
    return x > 0 && x < y;
  };
  return inside(p.first, p.second, q.first) != inside(p.first, p.second, q.second);
}

// Variable order for the chord model: longer chords first, which lets the
// search settle the constrained middle of the polygon early.
inline std::vector<std::pair<int, int>> chord_search_order(int n) {
  auto c = convex_chords(n);
  auto len = [n](std::pair<int, int> p) { return std::min(p.second - p.first, n - (p.second - p.first)); };
  std::stable_sort(c.begin(), c.end(), [&](auto x, auto y) { return len(x) > len(y); });
  return c;
}

struct ChordSearchOptions {
  std::vector<std::pair<int, int>> forbidden;  // chords that may not be used
  std::vector<std::pair<int, int>> required;   // chords that must be used
  long long node_budget = 4'000'000'000LL;
};

struct ChordSearchResult {
  int count = 0;
  std::vector<std::pair<int, int>> chords;
  long long nodes = 0;
};

// x_c = 1 selects chord c; selected(c) => sum over crossing chords <= k.
inline opt::BinaryProgram convex_chord_model(int n, int k, const ChordSearchOptions& o = {}) {
  opt::BinaryProgram bp;
  auto chords = chord_search_order(n);
  std::set<std::pair<int, int>> forb, req;
  for (auto [a, b] : o.forbidden) forb.insert(std::minmax(a, b));
  for (auto [a, b] : o.required) req.insert(std::minmax(a, b));
  for (auto [a, b] : chords) {
    long long lb = req.count({a, b}) ? 1 : 0, ub = forb.count({a, b}) ? 0 : 1;
    bp.add_var("x_" + std::to_string(a) + "_" + std::to_string(b), lb, ub);
    bp.objective.push_back({static_cast<int>(bp.vars.size()) - 1, 1});
  }
  for (int i = 0; i < static_cast<int>(chords.size()); ++i) {
    opt::Linear l;
    l.name = "load_" + std::to_string(chords[i].first) + "_" + std::to_string(chords[i].second);
    l.sense = opt::Sense::kLe;
    l.rhs = k;
    for (int j = 0; j < static_cast<int>(chords.size()); ++j)
      if (chords_interleave(n, chords[i], chords[j])) l.terms.push_back({j, 1});
    if (!l.terms.empty()) bp.add_if(i, l);
  }
  return bp;
}

inline ChordSearchResult max_convex_chords(int n, int k, const ChordSearchOptions& o = {}) {
  if (n < 3 || n > 14) throw InputError("max_convex_chords supports 3 <= n <= 14");
  if (k < 0) throw InputError("k must be non-negative");
  auto bp = convex_chord_model(n, k, o);
  auto chords = chord_search_order(n);
  ChordSearchResult r;
  if (chords.empty()) return r;
  opt::SolveOptions so;
  so.node_budget = o.node_budget;
  auto s = opt::solve(bp, so);
  r.nodes = s.nodes;
  for (std::size_t i = 0; i < chords.size(); ++i)
    if (s.values[i]) r.chords.push_back(chords[i]);
  std::sort(r.chords.begin(), r.chords.end());
  r.count = static_cast<int>(r.chords.size());
  return r;
}

}  // namespace kplanar

#endif  // KPLANAR_CHORDS_HPP_
