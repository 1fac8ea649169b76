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

#include <gtest/gtest.h>

#include <random>

#include "kplanar/audit.hpp"
#include "kplanar/framed.hpp"
#include "kplanar/geometry.hpp"
#include "kplanar/planarization.hpp"

namespace kplanar {
namespace {

Point pt(long long x, long long y) { return {rat(x), rat(y)}; }

std::vector<std::pair<int, int>> all_chords(int n) {
  std::vector<std::pair<int, int>> c;
  for (int a = 0; a < n; ++a)
    for (int b = a + 2; b < n; ++b)
      if (!(a == 0 && b == n - 1)) c.emplace_back(a, b);
  return c;
}

TEST(Planarize, PlaneTriangle) {
  Planarization p = planarize(from_convex(3, {}));
  EXPECT_EQ(p.num_nodes, 3);
  EXPECT_EQ(p.segments.size(), 3u);
  EXPECT_EQ(p.faces.size(), 2u);
  EXPECT_TRUE(p.biconnected);
}

TEST(Planarize, ConvexK4) {
  Planarization p = planarize(from_convex(4, {{0, 2}, {1, 3}}));
  EXPECT_EQ(p.num_nodes, 5);
  EXPECT_EQ(p.segments.size(), 8u);
  EXPECT_EQ(p.faces.size(), 5u);
  auto c = face_census(p);
  std::map<std::pair<int, int>, int> expect = {{{2, 3}, 4}, {{4, 4}, 1}};
  EXPECT_EQ(c.classes, expect);
  EXPECT_EQ(c.total_charge, 8);
}

TEST(Planarize, TwoCrossingEdgesAlone) {
  Drawing d = from_geometry({pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)}, {{0, 1}, {2, 3}});
  Planarization p = planarize(d);
  EXPECT_EQ(p.num_nodes, 5);
  EXPECT_EQ(p.segments.size(), 4u);
  EXPECT_EQ(p.faces.size(), 1u);
  EXPECT_FALSE(p.biconnected);
  EXPECT_FALSE(face_census(p).biconnected);
}

TEST(Planarize, StackedTriangulationIsAllThreeThree) {
  std::vector<Point> P = {pt(0, 0), pt(12, 0), pt(0, 12), pt(3, 3), pt(5, 1)};
  Drawing d = from_geometry(P, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}, {4, 3}, {4, 0}, {4, 1}});
  auto c = face_census(planarize(d));
  std::map<std::pair<int, int>, int> expect = {{{3, 3}, 6}};
  EXPECT_EQ(c.classes, expect);
  EXPECT_EQ(c.total_charge, 4 * 5 - 8);
}

TEST(Planarize, ThreePairwiseCrossingSegmentsLeaveAZeroThreeFace) {
  std::vector<Point> P = {pt(0, 0), pt(6, 3), pt(0, 3), pt(6, 0), pt(3, -1), pt(2, 5)};
  auto c = face_census(planarize(from_geometry(P, {{0, 1}, {2, 3}, {4, 5}})));
  EXPECT_EQ((c.classes[{0, 3}]), 1);
}

TEST(Planarize, RandomConvexInvariants) {
  std::mt19937 rng(2026);
  for (int it = 0; it < 150; ++it) {
    int n = 3 + static_cast<int>(rng() % 10);
    std::vector<std::pair<int, int>> pick;
    for (auto c : all_chords(n))
      if (rng() % 2) pick.push_back(c);
    Drawing d = from_convex(n, pick, it % 5 == 0);
    Planarization p = planarize(d);
    long long V = p.num_nodes, E = p.segments.size(), F = p.faces.size();
    EXPECT_EQ(V - E + F, 2);
    long long sumV = 0;
    for (const auto& f : p.faces) sumV += f.originals;
    EXPECT_EQ(sumV, 2 * E - 4 * (V - n));
    EXPECT_EQ(face_census(p).total_charge, 4 * n - 8);
    for (int x = n; x < p.num_nodes; ++x) {
      const auto& r = p.node_darts[x];
      ASSERT_EQ(r.size(), 4u);
      EXPECT_EQ(p.parent_edge(r[0]), p.parent_edge(r[2]));
      EXPECT_EQ(p.parent_edge(r[1]), p.parent_edge(r[3]));
      EXPECT_NE(p.parent_edge(r[0]), p.parent_edge(r[1]));
    }
    for (int e = 0; e < d.m(); ++e) EXPECT_EQ(p.segment_count(e), static_cast<int>(d.crossings[e].size()) + 1);
  }
}

TEST(Planarize, RejectsInconsistentCrossings) {
  Drawing d = from_convex(4, {{0, 2}, {1, 3}});
  d.crossings[5].clear();
  d.crossing_sides[5].clear();
  EXPECT_THROW(planarize(d), PlanarizationError);
  Drawing s = from_convex(4, {{0, 2}, {1, 3}});
  s.crossing_sides[5][0] = s.crossing_sides[4][0];
  EXPECT_THROW(planarize(s), PlanarizationError);
  Drawing r = from_convex(4, {{0, 2}, {1, 3}});
  std::swap(r.rotation[0][0], r.rotation[0][1]);
  EXPECT_THROW(planarize(r), PlanarizationError);
}

// cube with an X in every face; the outer face's X is routed around the square
Drawing cube_with_diagonals() {
  std::vector<Point> P = {pt(0, 0), pt(6, 0), pt(6, 6), pt(0, 6), pt(2, 2), pt(4, 2), pt(4, 4), pt(2, 4)};
  std::vector<std::pair<int, int>> E = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4},
                                        {0, 4}, {1, 5}, {2, 6}, {3, 7}, {4, 6}, {5, 7}, {0, 5}, {1, 4},
                                        {1, 6}, {2, 5}, {2, 7}, {3, 6}, {3, 4}, {0, 7}, {0, 2}, {1, 3}};
  std::vector<std::vector<Point>> B(E.size());
  B[22] = {pt(-2, -1), pt(-2, 8)};
  B[23] = {pt(7, -2), pt(-3, -2), pt(-3, 7)};
  return from_geometry(P, E, B);
}

TEST(SkeletonAudit, CubeWithDiagonalsIsPolyhedralFourFramed) {
  Drawing d = cube_with_diagonals();
  EXPECT_TRUE(validate_simplicity(d).ok());
  EXPECT_EQ(crossing_profile(d).total_crossings, 6);
  auto s = skeleton_audit(d);
  EXPECT_EQ(s.edges.size(), 12u);
  EXPECT_TRUE(s.simple);
  EXPECT_TRUE(s.spanning);
  EXPECT_TRUE(s.biconnected);
  EXPECT_TRUE(s.triconnected);
  EXPECT_TRUE(s.dual_simple);
  EXPECT_EQ(s.h, 4);
  EXPECT_TRUE(s.is_h_framed(4));
  EXPECT_TRUE(s.is_polyhedral());
  EXPECT_EQ(s.face_histogram.at(4), 6);
  EXPECT_FALSE(s.outer_lenient);
}

TEST(SkeletonAudit, PathIsNotFramed) {
  Drawing d = from_geometry({pt(0, 0), pt(1, 0), pt(2, 1)}, {{0, 1}, {1, 2}});
  auto s = skeleton_audit(d);
  EXPECT_TRUE(s.spanning);
  EXPECT_FALSE(s.biconnected);
  EXPECT_FALSE(s.is_h_framed(100));
}

TEST(SkeletonAudit, OuterVerdicts) {
  auto k6 = skeleton_audit(from_convex(6, all_chords(6)));
  EXPECT_TRUE(k6.outer_strict);
  EXPECT_TRUE(k6.outer_lenient);
  EXPECT_FALSE(k6.triconnected);
  EXPECT_FALSE(k6.dual_simple);
  auto doubled = skeleton_audit(from_convex(6, all_chords(6), true));
  EXPECT_FALSE(doubled.outer_lenient);
  // a bridge hanging into the outer face: lenient only
  std::vector<Point> P = {pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4), pt(8, 0)};
  Drawing d = from_geometry(P, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {0, 2}, {1, 3}});
  auto b = skeleton_audit(d);
  EXPECT_TRUE(b.outer_lenient);
  EXPECT_FALSE(b.outer_strict);
  EXPECT_FALSE(b.biconnected);
}

}  // namespace
}  // namespace kplanar
