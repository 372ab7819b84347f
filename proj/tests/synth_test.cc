// Copyright 2026 The Signed Oracle Authors.
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

#include "signed_oracle/synth.h"

#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "signed_oracle/spectral.h"

namespace signed_oracle {
namespace {

// Edge and negative-edge counts between the (cluster, side) blocks.
struct BlockCounts {
  double same_side = 0, same_side_neg = 0;
  double across_sides = 0, across_sides_neg = 0;
  double between = 0, between_neg = 0;
};

BlockCounts Count(const SyntheticGraph& s) {
  BlockCounts c;
  for (const SignedEdge& e : s.graph.Edges()) {
    const bool neg = e.sign < 0;
    if (*s.truth.cluster(e.u) != *s.truth.cluster(e.v)) {
      c.between += 1;
      c.between_neg += neg;
    } else if (s.truth.side(e.u) == s.truth.side(e.v)) {
      c.same_side += 1;
      c.same_side_neg += neg;
    } else {
      c.across_sides += 1;
      c.across_sides_neg += neg;
    }
  }
  return c;
}

void ExpectBinomial(double observed, double trials, double p, double sigmas) {
  const double mean = trials * p;
  const double sd = std::sqrt(trials * p * (1 - p));
  EXPECT_LE(std::fabs(observed - mean), sigmas * sd + 1e-9)
      << "observed " << observed << " expected " << mean;
}

TEST(SbmTest, AllZeroProbabilitiesGiveEmptyGraph) {
  SbmParams p{.n = 50, .k = 3, .p_intra = 0, .p_cross = 0, .q = 0};
  absl::StatusOr<SyntheticGraph> s = GenerateSbm(p);
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->graph.num_vertices(), 50);
  EXPECT_EQ(s->graph.num_edges(), 0);
}

TEST(SbmTest, BalancedCompleteGraph) {
  SbmParams p{.n = 4, .k = 1, .p_intra = 1, .p_cross = 1, .q = 0, .p_sign = 1};
  absl::StatusOr<SyntheticGraph> s = GenerateSbm(p);
  ASSERT_TRUE(s.ok());
  EXPECT_EQ(s->graph.num_edges(), 6);
  EXPECT_EQ(spectral::BetaGraph(s->graph)->beta, Rational(0, 1));
  for (const SignedEdge& e : s->graph.Edges()) {
    EXPECT_EQ(e.sign, s->truth.side(e.u) == s->truth.side(e.v) ? 1 : -1);
  }
}

TEST(SbmTest, GroundTruthPartitionsVertices) {
  SbmParams p{.n = 103, .k = 5};
  SyntheticGraph s = *GenerateSbm(p);
  EXPECT_EQ(s.truth.num_labeled(), 103);
  std::vector<int> sizes(10, 0);
  for (Vertex v = 0; v < 103; ++v) {
    ASSERT_TRUE(s.truth.cluster(v).has_value());
    const int c = *s.truth.cluster(v);
    ASSERT_GE(c, 0);
    ASSERT_LT(c, 5);
    ASSERT_TRUE(s.truth.side(v) == 1 || s.truth.side(v) == 2);
    ++sizes[2 * c + s.truth.side(v) - 1];
  }
  const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
  EXPECT_LE(*hi - *lo, 1);
}

TEST(SbmTest, BlockDensitiesAndSigns) {
  SbmParams p{.n = 600, .k = 3, .seed = 7};
  SyntheticGraph s = *GenerateSbm(p);
  const BlockCounts c = Count(s);
  // 6 sides of 100 vertices.
  const double same_pairs = 6 * 100.0 * 99 / 2;
  const double across_pairs = 3 * 100.0 * 100;
  const double between_pairs = 600.0 * 599 / 2 - same_pairs - across_pairs;
  ExpectBinomial(c.same_side, same_pairs, p.p_intra, 4);
  ExpectBinomial(c.across_sides, across_pairs, p.p_cross, 4);
  ExpectBinomial(c.between, between_pairs, p.q, 4);
  ExpectBinomial(c.same_side_neg, c.same_side, 1 - p.p_sign, 4);
  ExpectBinomial(c.across_sides_neg, c.across_sides, p.p_sign, 4);
  ExpectBinomial(c.between_neg, c.between, 1 - p.q_sign, 4);
}

TEST(SbmTest, OverallDensityWithinThreeSigma) {
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    SbmParams p{.n = 400, .k = 1, .p_intra = 0.1, .p_cross = 0.1, .seed = seed};
    SyntheticGraph s = *GenerateSbm(p);
    ExpectBinomial(static_cast<double>(s.graph.num_edges()), 400.0 * 399 / 2, 0.1, 3);
  }
}

TEST(SbmTest, Deterministic) {
  SbmParams p{.n = 300, .k = 4, .seed = 11};
  SyntheticGraph a = *GenerateSbm(p);
  SyntheticGraph b = *GenerateSbm(p);
  EXPECT_EQ(a.graph.Fingerprint(), b.graph.Fingerprint());
  p.seed = 12;
  EXPECT_NE(GenerateSbm(p)->graph.Fingerprint(), a.graph.Fingerprint());
}

TEST(SbmTest, Validation) {
  EXPECT_FALSE(GenerateSbm({.n = 5, .k = 3}).ok());
  EXPECT_FALSE(GenerateSbm({.n = 10, .k = 0}).ok());
  EXPECT_FALSE(GenerateSbm({.n = 10, .k = 1, .q = 1.5}).ok());
  EXPECT_TRUE(GenerateSbm({.n = 6, .k = 3}).ok());
}

TEST(RandomSignedGraphTest, NoIsolatedVertices) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    SignedGraph g = *RandomSignedGraph(15, 0.05, 0.5, seed);
    for (Vertex v = 0; v < 15; ++v) EXPECT_GT(g.degree(v), 0);
  }
  EXPECT_FALSE(RandomSignedGraph(1, 0.5, 0.5, 1).ok());
}

TEST(ClusterableTest, NoiseFreeBlocksAreBalanced) {
  ClusterableParams p{.k = 3, .block_size = 8, .p_in = 0.7, .seed = 3};
  SyntheticGraph s = *GenerateClusterable(p);
  EXPECT_EQ(s.graph.num_vertices(), 24);
  for (const SignedEdge& e : s.graph.Edges()) {
    ASSERT_EQ(*s.truth.cluster(e.u), *s.truth.cluster(e.v));
    EXPECT_EQ(e.sign, s.truth.side(e.u) == s.truth.side(e.v) ? 1 : -1);
  }
  for (Vertex v = 0; v < 24; ++v) EXPECT_GT(s.graph.degree(v), 0);
}

TEST(ClusterableTest, CrossEdgeCount) {
  ClusterableParams p{.k = 2, .block_size = 10, .p_in = 0.5, .cross_edges = 7};
  SyntheticGraph s = *GenerateClusterable(p);
  int cross = 0;
  for (const SignedEdge& e : s.graph.Edges()) {
    cross += *s.truth.cluster(e.u) != *s.truth.cluster(e.v);
  }
  EXPECT_EQ(cross, 7);
  p.cross_edges = 1000;
  EXPECT_FALSE(GenerateClusterable(p).ok());
}

}  // namespace
}  // namespace signed_oracle
