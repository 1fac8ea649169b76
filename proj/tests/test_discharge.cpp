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

#include "kplanar/constructions.hpp"
#include "kplanar/discharge.hpp"
#include "kplanar/framed.hpp"
#include "kplanar/geometry.hpp"

namespace kplanar {
namespace {

const Rational kAlpha = rat(49, 170);

Drawing three_segments() {
  std::vector<Point> pts = {{2, 1}, {1, 2}, {-1, 2}, {-2, 0}, {-1, -2}, {1, -2}};
  return from_geometry(pts, {{0, 3}, {1, 4}, {2, 5}});
}

// Convex n-gon plus chords taken greedily from a shuffled list while every
// chord keeps at most k crossings.
Drawing random_convex(std::mt19937& rng, int n, int k) {
  auto cand = convex_chords(n);
  std::shuffle(cand.begin(), cand.end(), rng);
  std::vector<std::pair<int, int>> kept;
  std::vector<int> load;
  for (auto c : cand) {
    std::vector<int> hit;
    for (int i = 0; i < static_cast<int>(kept.size()); ++i)
      if (chords_interleave(n, c, kept[i])) hit.push_back(i);
    bool ok = static_cast<int>(hit.size()) <= k;
    for (int i : hit) ok = ok && load[i] < k;
    if (!ok) continue;
    for (int i : hit) ++load[i];
    kept.push_back(c);
    load.push_back(static_cast<int>(hit.size()));
  }
  return from_convex(n, kept);
}

TEST(RuleSets, CatalogValues) {
  EXPECT_EQ(five_planar_main().alpha, kAlpha);
  EXPECT_TRUE(five_planar_main().transfers);
  EXPECT_EQ(five_planar_main().step2(), rat(3, 34));
  EXPECT_EQ(k_planar_general(6).alpha, rat(2, 9));
  EXPECT_EQ(k_planar_general(6).step2(), rat(1, 45));
  EXPECT_EQ(k_planar_general(20).step2(), 0);
  EXPECT_EQ(four_planar().alpha, rat(8, 25));
  EXPECT_EQ(min_k(4).alpha, rat(1, 5));
  EXPECT_EQ(min_k(7).alpha, rat(1, 7));
  EXPECT_EQ(min_k(4).shape, BlockShape::kQuadrangular);
  EXPECT_TRUE(outer_five().outer_rule);
  EXPECT_EQ(five_planar_main().beta(), rat(30, 1) - rat(1360, 49));
  EXPECT_THROW(k_planar_general(4), InputError);
}

TEST(RuleSets, ByName) {
  EXPECT_EQ(ruleset_by_name("k_planar_general(7)").k, 7);
  EXPECT_EQ(ruleset_by_name("min_k:5").alpha, rat(1, 5));
  EXPECT_EQ(ruleset_by_name("outer_five").name, "outer_five");
  EXPECT_THROW(ruleset_by_name("six_planar"), InputError);
  EXPECT_THROW(ruleset_by_name("min_k(5"), InputError);
}

TEST(Decomposition, ThreeSegmentsGetSixAddedSides) {
  auto B = decompose_blocks(three_segments(), BlockShape::kHexagonal);
  ASSERT_EQ(B.blocks.size(), 1u);
  const auto& H = B.blocks[0];
  EXPECT_EQ(H.corners.size(), 6u);
  for (bool ex : H.side_existing) EXPECT_FALSE(ex);
  EXPECT_EQ(H.removed, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(B.reduced.m(), 6);
  EXPECT_EQ(B.q_blocks, 1);
  EXPECT_TRUE(B.warnings.empty());
}

TEST(Decomposition, CornersRunCounterClockwise) {
  auto d = three_segments();
  auto B = decompose_blocks(d, BlockShape::kHexagonal);
  const auto& c = B.blocks[0].corners;
  Rational area = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    area += geom::cross(*d.vertices[c[i]].pos, *d.vertices[c[(i + 1) % c.size()]].pos);
  EXPECT_GT(area, 0);
}

TEST(Decomposition, K6KeepsItsBoundary) {
  auto B = decompose_blocks(from_convex(6, convex_chords(6)), BlockShape::kHexagonal);
  ASSERT_EQ(B.blocks.size(), 1u);
  for (bool ex : B.blocks[0].side_existing) EXPECT_TRUE(ex);
  EXPECT_EQ(B.blocks[0].removed.size(), 9u);
  EXPECT_EQ(B.reduced.m(), 6);
}

TEST(Decomposition, QuadrangularUsesTwoEdges) {
  auto B = decompose_blocks(three_segments(), BlockShape::kQuadrangular, 4);
  ASSERT_EQ(B.blocks.size(), 1u);
  EXPECT_EQ(B.blocks[0].corners.size(), 4u);
  EXPECT_EQ(B.blocks[0].defining.size(), 2u);
}

TEST(Decomposition, NoTriangleNoBlock) {
  auto B = decompose_blocks(from_convex(5, {{0, 2}, {1, 3}}), BlockShape::kHexagonal);
  EXPECT_TRUE(B.blocks.empty());
  EXPECT_EQ(B.q_blocks, 1);
}

TEST(Neighbours, WedgeAndSideInPentagon) {
  auto P = planarize(from_convex(5, {{0, 2}, {0, 3}, {1, 4}}));
  int tri = -1;
  for (int f = 0; f < static_cast<int>(P.faces.size()); ++f)
    if (P.faces[f].cls() == std::make_pair(1, 3)) tri = f;
  ASSERT_GE(tri, 0);
  auto w = wedge_neighbor(P, tri);
  EXPECT_EQ(w.hops, 0);
  EXPECT_EQ(P.faces[w.face].cls(), std::make_pair(2, 4));
  auto s = side_neighbors(P, tri);
  EXPECT_EQ(s.run_length, 1);
  EXPECT_TRUE(s.r_pays);
  EXPECT_EQ(P.faces[s.r_face].cls(), std::make_pair(2, 3));
  EXPECT_EQ(P.faces[s.s_face].cls(), std::make_pair(2, 3));
}

TEST(Neighbours, WedgeHopsAcrossEmptyQuadrilateral) {
  auto P = planarize(from_convex(6, {{0, 2}, {0, 3}, {1, 4}, {1, 5}}));
  int seen = 0;
  for (int f = 0; f < static_cast<int>(P.faces.size()); ++f)
    if (P.faces[f].cls() == std::make_pair(1, 3)) {
      auto w = wedge_neighbor(P, f);
      EXPECT_EQ(w.hops, 1);
      EXPECT_EQ(P.faces[w.face].cls(), std::make_pair(2, 4));
      ++seen;
    }
  EXPECT_EQ(seen, 2);
}

TEST(Neighbours, RejectsOtherFaces) {
  auto P = planarize(from_convex(4, convex_chords(4)));
  EXPECT_THROW(wedge_neighbor(P, 0), InputError);
  EXPECT_THROW(side_neighbors(P, 0), InputError);
}

TEST(Discharge, TriangulationFacesEndAtTwoMinusThreeAlpha) {
  auto d = from_geometry({{0, 0}, {4, 0}, {0, 4}, {1, 1}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
  auto L = run_discharge(d, five_planar_main());
  EXPECT_TRUE(L.ok());
  ASSERT_EQ(L.faces.size(), 4u);
  for (const auto& f : L.faces) EXPECT_EQ(f.final_charge, 2 - 3 * kAlpha);
  for (const auto& e : L.edges) EXPECT_EQ(e.received, 2 * kAlpha);
}

TEST(Discharge, K4CrossedTriangles) {
  auto L = run_discharge(from_convex(4, convex_chords(4)), five_planar_main());
  EXPECT_TRUE(L.ok());
  int tri = 0;
  for (const auto& f : L.faces)
    if (f.cls == std::make_pair(2, 3)) {
      EXPECT_EQ(f.final_charge, rat(72, 170));
      ++tri;
    }
  EXPECT_EQ(tri, 4);
}

TEST(Discharge, K6SingleBlockSpendsTwentyFourAlpha) {
  auto L = run_discharge(from_convex(6, convex_chords(6)), five_planar_main());
  EXPECT_TRUE(L.ok());
  ASSERT_EQ(L.blocks, 1);
  for (const auto& f : L.faces)
    if (f.block == 0) {
      EXPECT_EQ(f.initial, 8);
      EXPECT_EQ(f.final_charge, 8 - 24 * kAlpha);
    }
  for (const auto& e : L.edges) EXPECT_EQ(e.received, 2 * kAlpha);
}

TEST(Discharge, ThreeSegmentsBlockIsRefunded) {
  auto L = run_discharge(three_segments(), five_planar_main());
  EXPECT_TRUE(L.ok());
  for (const auto& f : L.faces) {
    if (f.block == 0) EXPECT_EQ(f.final_charge, 8);
    else EXPECT_EQ(f.final_charge, 8 - 6 * kAlpha);
  }
}

// 1-3 face at vertex 0: 1/5 from the wedge, alpha - 1/5 from the 2-3 face
// nearer the tail, then alpha to its two edges.
TEST(Discharge, OneTriangleIsPaidExactly) {
  auto L = run_discharge(from_convex(5, {{0, 2}, {0, 3}, {1, 4}}), five_planar_main());
  EXPECT_TRUE(L.ok());
  EXPECT_EQ(L.wedge_relations, 1);
  int hits = 0;
  for (const auto& f : L.faces) {
    if (f.cls == std::make_pair(1, 3)) {
      EXPECT_EQ(f.after_step1, rat(1, 5));
      EXPECT_EQ(f.after_step2, kAlpha);
      EXPECT_EQ(f.final_charge, 0);
    }
    if (f.cls == std::make_pair(2, 4)) EXPECT_EQ(f.after_step1, rat(9, 5));
    if (f.final_charge == rat(57, 170)) ++hits;
  }
  EXPECT_EQ(hits, 1);
}

TEST(Discharge, RejectsWrongClass) {
  auto d = from_convex(7, convex_chords(7));  // chords with six crossings
  EXPECT_THROW(run_discharge(d, five_planar_main()), InputError);
  EXPECT_NO_THROW(run_discharge(d, k_planar_general(6)));
}

TEST(Discharge, OuterRuleDeduction) {
  auto d = outer_5planar_family(1);
  auto L = run_discharge(d, outer_five());
  EXPECT_TRUE(L.ok());
  EXPECT_EQ(L.outer_deduction, Rational(2 * d.n() - 4) - kAlpha * d.n());
  EXPECT_GE(L.implied_edge_bound(), d.m());
}

TEST(Discharge, ConstructionsAreClean) {
  for (int x = 1; x <= 3; ++x)
    for (const auto& d : {outer_5planar_family(x), dodecagonal_cylinder(x), hex_cylinder(x)}) {
      auto L = run_discharge(d, five_planar_main());
      EXPECT_TRUE(L.ok()) << "x=" << x << " m=" << d.m();
      EXPECT_TRUE(L.warnings.empty());
      EXPECT_LE(Rational(d.m()), L.implied_edge_bound());
    }
}

TEST(Discharge, RandomConvexCorpusConserves) {
  std::mt19937 rng(20261016);
  int blocks = 0, relations = 0;
  for (int it = 0; it < 300; ++it) {
    int n = 6 + static_cast<int>(rng() % 10);
    auto d = random_convex(rng, n, 5);
    for (const auto& rs : {five_planar_main(), outer_five(), k_planar_general(5)}) {
      auto L = run_discharge(d, rs);
      ASSERT_EQ(L.total_initial, 4 * n - 8);
      ASSERT_EQ(L.residue, 0) << rs.name << " seed step " << it;
      ASSERT_TRUE(L.violations.empty()) << rs.name << " " << L.violations.front().detail;
      ASSERT_TRUE(L.warnings.empty());
      blocks += L.blocks;
      relations += L.wedge_relations;
    }
  }
  EXPECT_GT(blocks, 0);
  EXPECT_GT(relations, 0);
}

// Face {8, 9, x} ends two odd runs of 1-3 faces. Charging it both middle
// faces leaves it at -3/25, so the middles have to go elsewhere.
TEST(Discharge, FourPlanarOddRunsShareTheMiddle) {
  auto d = from_convex(10, {{5, 7}, {4, 9}, {7, 9}, {1, 8}, {5, 8}, {0, 3}, {6, 9}, {6, 8}, {0, 8}, {2, 4},
                            {1, 3}, {1, 9}, {1, 5}, {3, 5}, {4, 6}});
  auto P = planarize(d);
  int runs_of_three = 0;
  for (int f = 0; f < static_cast<int>(P.faces.size()); ++f)
    if (P.faces[f].cls() == std::make_pair(1, 3)) runs_of_three += side_neighbors(P, f).run_length == 3;
  EXPECT_GE(runs_of_three, 6);
  auto L = run_discharge(d, four_planar());
  EXPECT_TRUE(L.ok());
  for (const auto& f : L.faces) EXPECT_GE(f.final_charge, 0);
}

TEST(Discharge, MatchingCorpora) {
  struct Case { RuleSet rs; int k; };
  for (const auto& c : {Case{four_planar(), 4}, Case{k_planar_general(6), 6}}) {
    std::mt19937 rng(11);
    for (int it = 0; it < 150; ++it) {
      auto d = random_convex(rng, 6 + static_cast<int>(rng() % 10), c.k);
      auto L = run_discharge(d, c.rs);
      ASSERT_TRUE(L.ok()) << c.rs.name << " step " << it;
    }
  }
}

TEST(Discharge, MinKCorpus) {
  std::mt19937 rng(4);
  for (int it = 0; it < 100; ++it) {
    auto d = random_convex(rng, 6 + static_cast<int>(rng() % 8), 4);
    auto L = run_discharge(d, min_k(4));
    EXPECT_EQ(L.residue, 0);
    EXPECT_TRUE(L.warnings.empty());
  }
}

}  // namespace
}  // namespace kplanar
