// Copyright 2026 The Authors.
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

#include "matred/matred.hpp"
#include "test_support.hpp"

namespace matred {
namespace {

using testing::Rng;

TEST(PartitionMatroidTest, Examples) {
  const KiralyTriple t = MakeKiralyTriple();
  EXPECT_EQ(t.partitions[0].ToVectors(),
            (std::vector<std::vector<int>>{{0, 3}, {1, 4}, {2, 5}}));
  EXPECT_TRUE(OracleEqual(
      PartitionMatroid(PartitionIntoClasses::FromClasses(5, {{0, 1, 2, 3, 4}})),
      UniformMatroid(1, 5)));
  EXPECT_TRUE(OracleEqual(PartitionMatroid(PartitionIntoClasses::FromLabels({0, 1, 2, 3})),
                          FreeMatroid(4)));
  EXPECT_EQ(ColoringNumber(PartitionMatroid(t.partitions[1])).k, 2);
}

TEST(GraphicTest, Examples) {
  const Matroid k4 = GraphicMatroid(CompleteGraph(4));
  EXPECT_FALSE(k4.IsIndependent(ElementSet::Of({0, 1, 3})));  // triangle 012
  EXPECT_TRUE(k4.IsIndependent(ElementSet::Of({0, 1, 2})));   // star at 0
  EXPECT_TRUE(k4.IsIndependent(ElementSet::Of({0, 3, 5})));   // path 0-1-2-3
  EXPECT_EQ(ColoringNumber(GraphicMatroid(CompleteGraph(4))).k, 2);
  EXPECT_EQ(ColoringNumber(GraphicMatroid(CompleteGraph(6))).k, 3);
  Graph loop{2, {{0, 0}}};
  try {
    GraphicMatroid(loop);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSelfLoopPresent);
  }
}

TEST(TransversalTest, Examples) {
  const BipartiteGraph k32(3, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}});
  EXPECT_TRUE(OracleEqual(TransversalMatroid(k32), UniformMatroid(2, 3)));
}

TEST(TransversalTest, DeficiencyRankMatchesOracle) {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const BipartiteGraph g =
        testing::RandomBipartite(rng, testing::Uniform(rng, 2, 5), testing::Uniform(rng, 1, 4), 40);
    const Matroid m = TransversalMatroid(g);
    ForEachSubsetOfRange(m.size(), [&](const ElementSet& x) {
      ASSERT_EQ(TransversalRankByDeficiency(g, x), m.GreedyRank(x));
    });
  }
}

TEST(GammoidTest, Examples) {
  Digraph empty{4, {}};
  EXPECT_TRUE(OracleEqual(GammoidMatroid(empty, ElementSet::Range(4), ElementSet::Range(4)),
                          FreeMatroid(4)));
  Digraph arcs{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}};
  EXPECT_TRUE(OracleEqual(
      GammoidMatroid(arcs, ElementSet::Of({0, 2}), ElementSet::Of({0, 2})), FreeMatroid(2)));
  try {
    Gammoid(empty, ElementSet::Of({0}), ElementSet::Of({7}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kElementOutsideT);
  }
}

TEST(GammoidTest, TightInstanceMatchesLaminarRule) {
  for (int k = 2; k <= 4; ++k) {
    const GammoidInstance g = GammoidTight(k);
    const Matroid gm = GammoidMatroid(g.digraph, g.sources, g.sinks);
    EXPECT_TRUE(OracleEqual(gm, LaminarMatroid(LaminarGammoidTight(k)))) << k;
  }
  const GammoidInstance g = GammoidTight(3);
  const Matroid gm = GammoidMatroid(g.digraph, g.sources, g.sinks);
  EXPECT_EQ(gm.size(), 6);
  EXPECT_EQ(gm.Rank(), 2);
  EXPECT_EQ(ColoringNumber(gm).k, 3);
}

TEST(GammoidTest, RestrictionToSubsetOfSinks) {
  Rng rng(22);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = testing::RandomLooplessGammoid(rng, 8, 6);
    const Matroid full = GammoidMatroid(g.digraph, g.sources, g.sinks);
    ElementSet keep_elements;
    ElementSet keep_vertices;
    const std::vector<int> sinks = g.sinks.ToVector();
    for (int i = 0; i < static_cast<int>(sinks.size()); ++i) {
      if (i % 2 == 0) {
        keep_elements.Insert(i);
        keep_vertices.Insert(sinks[i]);
      }
    }
    EXPECT_TRUE(OracleEqual(Restrict(full, keep_elements),
                            GammoidMatroid(g.digraph, g.sources, keep_vertices)));
    EXPECT_TRUE(AuditAxioms(full));
  }
}

TEST(PavingTest, Examples) {
  const Matroid fano = PavingMatroid(FanoFamily());
  EXPECT_TRUE(AuditAxioms(fano));
  EXPECT_EQ(ColoringNumber(fano).k, 3);
  EXPECT_TRUE(OracleEqual(PavingMatroid(HyperplaneFamily{2, 4, {}}), UniformMatroid(2, 4)));
  HyperplaneFamily bad{3, 5, {ElementSet::Of({0, 1, 2}), ElementSet::Of({0, 1, 3})}};
  try {
    PavingMatroid(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidFamily);
    EXPECT_NE(std::string(e.what()).find("share more than r-2"), std::string::npos);
  }
}

TEST(PavingTest, ColoringNumberFormula) {
  EXPECT_EQ(PavingColoringNumber(FanoFamily()), 3);
  EXPECT_EQ(PavingColoringNumber(MakeProjectivePlane(4).ToHyperplaneFamily()), 7);
  EXPECT_EQ(PavingColoringNumber(HyperplaneFamily{2, 5, {}}), 3);
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const HyperplaneFamily h = testing::RandomHyperplaneFamily(
        rng, testing::Uniform(rng, 2, 4), testing::Uniform(rng, 5, 10));
    const Matroid m = PavingMatroid(h);
    ASSERT_TRUE(AuditAxioms(m));
    ASSERT_EQ(PavingColoringNumber(h), ColoringNumber(m).k);
  }
}

TEST(LaminarTest, Examples) {
  const Matroid rank2 = LaminarMatroid(LaminarRankTwoTight(3));
  EXPECT_EQ(rank2.Rank(), 2);
  EXPECT_EQ(ColoringNumber(rank2).k, 3);
  const Matroid gam = LaminarMatroid(LaminarGammoidTight(3));
  EXPECT_EQ(gam.Rank(), 2);
  EXPECT_EQ(ColoringNumber(gam).k, 3);
  LaminarSpec single{5, {{ElementSet::Range(5), 3}}};
  EXPECT_TRUE(OracleEqual(LaminarMatroid(single), UniformMatroid(3, 5)));
  LaminarSpec crossing{4, {{ElementSet::Of({0, 1}), 1}, {ElementSet::Of({1, 2}), 1}}};
  try {
    LaminarMatroid(crossing);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotLaminar);
  }
}

TEST(ProjectivePlaneTest, Counts) {
  struct Expected {
    int q, points, per_line;
  };
  for (const Expected& e : {Expected{2, 7, 3}, Expected{3, 13, 4}, Expected{4, 21, 5},
                            Expected{5, 31, 6}, Expected{7, 57, 8}, Expected{8, 73, 9}}) {
    const ProjectivePlane p = MakeProjectivePlane(e.q);
    EXPECT_EQ(p.point_count, e.points);
    EXPECT_EQ(static_cast<int>(p.lines.size()), e.points);
    for (const auto& line : p.lines) EXPECT_EQ(line.Count(), e.per_line);
    EXPECT_FALSE(ProjectivePlaneViolation(p).has_value());
  }
  try {
    MakeProjectivePlane(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedOrder);
  }
}

TEST(ProjectivePlaneTest, AxiomsCheckedLiterally) {
  const ProjectivePlane p = MakeProjectivePlane(3);
  for (int a = 0; a < p.point_count; ++a) {
    for (int b = a + 1; b < p.point_count; ++b) {
      int through = 0;
      for (const auto& line : p.lines) through += line.Contains(a) && line.Contains(b);
      ASSERT_EQ(through, 1);
    }
  }
  for (std::size_t i = 0; i < p.lines.size(); ++i) {
    for (std::size_t j = i + 1; j < p.lines.size(); ++j) {
      ASSERT_EQ((p.lines[i] & p.lines[j]).Count(), 1);
    }
  }
  ProjectivePlane broken = p;
  broken.lines.pop_back();
  EXPECT_TRUE(ProjectivePlaneViolation(broken).has_value());
}

TEST(GeneratorTest, CompleteGraphAndKiraly) {
  EXPECT_EQ(CompleteGraph(4).edge_count(), 6);
  const KiralyTriple t = MakeKiralyTriple();
  EXPECT_EQ(t.lists, (std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {1, 2}, {1, 3}, {2, 3}}));
  const ElementSet abc = ElementSet::Of({0, 1, 2});
  const ElementSet def = ElementSet::Of({3, 4, 5});
  for (const Matroid& m : t.matroids) {
    EXPECT_EQ(m.Rank(), 3);
    EXPECT_TRUE(m.IsIndependent(abc));
    EXPECT_TRUE(m.IsIndependent(def));
  }
}

TEST(ZooTest, EveryClassPassesAudit) {
  Rng rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    std::string label;
    const Matroid m = testing::RandomMixedMatroid(rng, 12, &label);
    ASSERT_TRUE(AuditAxioms(m)) << label;
  }
}

}  // namespace
}  // namespace matred
