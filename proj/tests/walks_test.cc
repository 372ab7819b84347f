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

#include "signed_oracle/walks.h"

#include <cmath>
#include <sstream>
#include <vector>

#include "Eigen/Dense"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "signed_oracle/spectral.h"
#include "signed_oracle/synth.h"

namespace signed_oracle {
namespace {

using ::testing::HasSubstr;

SignedGraph Parse(const std::string& text) {
  std::istringstream in(text);
  return *ParseEdgeList(in);
}

WalkParams Params(int steps, int walks, int repetitions = 1, bool absolute = false) {
  WalkParams p;
  p.steps = steps;
  p.walks = walks;
  p.repetitions = repetitions;
  p.absolute = absolute;
  return p;
}

TEST(LazySignedWalkTest, ZeroStepsStaysPut) {
  SignedGraph g = Parse("0 1 -\n1 2 +\n");
  Rng rng(1);
  for (Vertex u = 0; u < 3; ++u) {
    absl::StatusOr<WalkEnd> end = LazySignedWalk(g, u, 0, rng);
    ASSERT_TRUE(end.ok());
    EXPECT_EQ(end->vertex, u);
    EXPECT_EQ(end->sign, 1);
  }
}

TEST(LazySignedWalkTest, IsolatedStartIsAnError) {
  absl::StatusOr<SignedGraph> g = SignedGraph::FromEdges(3, {{0, 1, 1}});
  Rng rng(1);
  EXPECT_THAT(LazySignedWalk(*g, 2, 3, rng).status().message(),
              HasSubstr("isolated vertex"));
}

// Empirical end-point distribution, signed, against the exact row of W^t.
void ExpectMatchesWalkMatrix(const SignedGraph& g, Vertex u, int t) {
  const int kWalks = 100000;
  std::vector<double> signed_freq(g.num_vertices(), 0.0);
  Rng rng(DeriveSeed(42, u, t));
  for (int i = 0; i < kWalks; ++i) {
    WalkEnd end = *LazySignedWalk(g, u, t, rng);
    signed_freq[end.vertex] += end.sign;
  }
  absl::StatusOr<spectral::ExactDiscrepancy> exact =
      spectral::ExactDiscrepancyVector(g, u, t);
  ASSERT_TRUE(exact.ok());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const double sigma = std::sqrt(0.25 / kWalks);
    EXPECT_NEAR(signed_freq[v] / kWalks, exact->p[v], 4 * sigma) << "v=" << v;
  }
}

TEST(LazySignedWalkTest, NegativeEdgeOneStep) {
  SignedGraph g = Parse("0 1 -\n");
  absl::StatusOr<spectral::ExactDiscrepancy> exact =
      spectral::ExactDiscrepancyVector(g, 0, 1);
  ASSERT_TRUE(exact.ok());
  EXPECT_DOUBLE_EQ(exact->p[0], 0.5);
  EXPECT_DOUBLE_EQ(exact->p[1], -0.5);
  ExpectMatchesWalkMatrix(g, 0, 1);
}

TEST(LazySignedWalkTest, PositivePathTwoSteps) {
  SignedGraph g = Parse("0 1 +\n");
  int at_zero = 0;
  Rng rng(5);
  const int kWalks = 100000;
  for (int i = 0; i < kWalks; ++i) {
    WalkEnd end = *LazySignedWalk(g, 0, 2, rng);
    EXPECT_EQ(end.sign, 1);
    at_zero += end.vertex == 0;
  }
  EXPECT_NEAR(at_zero / static_cast<double>(kWalks), 0.5, 4 * std::sqrt(0.25 / kWalks));
  ExpectMatchesWalkMatrix(g, 0, 2);
}

TEST(LazySignedWalkTest, UnsignedEndpointsChiSquare) {
  absl::StatusOr<SignedGraph> g = RandomSignedGraph(15, 0.3, 0.5, 11);
  ASSERT_TRUE(g.ok());
  const SignedGraph positive = g->WithAllPositive();
  const int t = 3;
  const int kWalks = 50000;
  for (Vertex u : {0u, 7u}) {
    std::vector<double> counts(g->num_vertices(), 0.0);
    Rng rng(DeriveSeed(9, u));
    for (int i = 0; i < kWalks; ++i) {
      ++counts[LazySignedWalk(*g, u, t, rng, /*use_signs=*/false)->vertex];
    }
    absl::StatusOr<spectral::ExactDiscrepancy> exact =
        spectral::ExactDiscrepancyVector(positive, u, t);
    ASSERT_TRUE(exact.ok());
    double chi2 = 0.0;
    int df = -1;
    for (Vertex v = 0; v < g->num_vertices(); ++v) {
      const double expected = exact->p[v] * kWalks;
      if (expected < 1e-9) {
        EXPECT_EQ(counts[v], 0.0);
        continue;
      }
      chi2 += (counts[v] - expected) * (counts[v] - expected) / expected;
      ++df;
    }
    // Mean df, standard deviation sqrt(2 df); 5 sigma.
    EXPECT_LT(chi2, df + 5 * std::sqrt(2.0 * df)) << "u=" << u;
  }
}

TEST(WalkVectorTest, SingleZeroStepWalk) {
  SignedGraph g = Parse("0 1 +\n0 2 +\n0 3 -\n0 4 +\n");
  Rng rng(1);
  absl::StatusOr<WalkVector> m = ComputeWalkVector(g, 0, Params(0, 1), rng);
  ASSERT_TRUE(m.ok());
  ASSERT_EQ(m->nnz(), 1);
  EXPECT_EQ(m->entries()[0].vertex, 0);
  EXPECT_DOUBLE_EQ(m->entries()[0].value, 0.5);
}

TEST(WalkVectorTest, NegativeEdgeExpectation) {
  SignedGraph g = Parse("0 1 -\n");
  const int kWalks = 100000;
  const double tolerance = 3 * std::sqrt(0.25 / kWalks);
  Rng rng(8);
  absl::StatusOr<WalkVector> m = ComputeWalkVector(g, 0, Params(1, kWalks), rng);
  ASSERT_TRUE(m.ok());
  EXPECT_NEAR(m->at(0), 0.5, tolerance);
  EXPECT_NEAR(m->at(1), -0.5, tolerance);
  absl::StatusOr<WalkVector> r =
      ComputeWalkVector(g, 0, Params(1, kWalks, 1, /*absolute=*/true), rng);
  ASSERT_TRUE(r.ok());
  EXPECT_NEAR(r->at(0), 0.5, tolerance);
  EXPECT_NEAR(r->at(1), 0.5, tolerance);
}

TEST(WalkVectorTest, UnbiasedAgainstExactDiscrepancy) {
  absl::StatusOr<SignedGraph> g = RandomSignedGraph(40, 0.1, 0.4, 3);
  ASSERT_TRUE(g.ok());
  const int kWalks = 100000;
  for (int t : {1, 3, 5}) {
    for (Vertex u : {0u, 17u, 39u}) {
      Rng rng(DeriveSeed(2, u, t));
      absl::StatusOr<WalkVector> m = ComputeWalkVector(*g, u, Params(t, kWalks), rng);
      ASSERT_TRUE(m.ok());
      spectral::ExactDiscrepancy exact = *spectral::ExactDiscrepancyVector(*g, u, t);
      spectral::ExactDiscrepancy reach =
          *spectral::ExactDiscrepancyVector(g->WithAllPositive(), u, t);
      for (Vertex v = 0; v < g->num_vertices(); ++v) {
        const double scaled = m->at(v) * std::sqrt(static_cast<double>(g->degree(v)));
        // Each walk contributes +-1 or 0, so the variance is at most P(end = v).
        const double sigma = std::sqrt(reach.p[v] / kWalks);
        EXPECT_NEAR(scaled, exact.p[v], 4 * sigma + 1e-12)
            << "t=" << t << " u=" << u << " v=" << v;
      }
    }
  }
}

TEST(WalkVectorTest, InvariantsOnRandomGraphs) {
  absl::StatusOr<SyntheticGraph> sbm = GenerateSbm({.n = 3000, .k = 3, .seed = 4});
  ASSERT_TRUE(sbm.ok());
  const SignedGraph& g = sbm->graph;
  for (int walks : {10, 400, 5000}) {
    for (bool absolute : {false, true}) {
      WalkParams p = Params(3, walks, 1, absolute);
      Rng rng(walks);
      WalkVector m = *ComputeWalkVector(g, 5, p, rng);
      EXPECT_LE(m.nnz(), static_cast<size_t>(walks));
      double mass = 0.0;
      Vertex last = 0;
      for (size_t i = 0; i < m.nnz(); ++i) {
        const auto& e = m.entries()[i];
        if (i > 0) { EXPECT_GT(e.vertex, last); }
        last = e.vertex;
        EXPECT_NE(e.value, 0.0);
        if (absolute) { EXPECT_GT(e.value, 0.0); }
        mass += std::fabs(e.value) * std::sqrt(static_cast<double>(g.degree(e.vertex)));
      }
      EXPECT_LE(mass, 1.0 + 1e-12);
    }
  }
}

TEST(WalkVectorTest, DeterministicUnderSeed) {
  absl::StatusOr<SignedGraph> g = RandomSignedGraph(500, 0.02, 0.3, 1);
  ASSERT_TRUE(g.ok());
  for (int walks : {100, 1000}) {
    Rng a(77), b(77);
    WalkVector x = *ComputeWalkVector(*g, 3, Params(4, walks), a);
    WalkVector y = *ComputeWalkVector(*g, 3, Params(4, walks), b);
    ASSERT_EQ(x.nnz(), y.nnz());
    for (size_t i = 0; i < x.nnz(); ++i) {
      EXPECT_EQ(x.entries()[i].vertex, y.entries()[i].vertex);
      EXPECT_EQ(x.entries()[i].value, y.entries()[i].value);
    }
  }
}

TEST(SparseDotTest, MatchesDenseProduct) {
  Rng rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t n = 2000;
    const size_t na = 1 + rng.Below(trial % 2 == 0 ? 20 : 1000);
    const size_t nb = 1 + rng.Below(1000);
    std::vector<double> da(n, 0.0), db(n, 0.0);
    auto fill = [&](std::vector<double>& dense, size_t count) {
      for (size_t i = 0; i < count; ++i) dense[rng.Below(n)] = rng.Uniform() - 0.5;
      std::vector<WalkVector::Entry> entries;
      for (Vertex v = 0; v < n; ++v) {
        if (dense[v] != 0.0) entries.push_back({v, dense[v]});
      }
      return WalkVector(0, entries);
    };
    WalkVector a = fill(da, na);
    WalkVector b = fill(db, nb);
    double expected = 0.0;
    for (size_t v = 0; v < n; ++v) expected += da[v] * db[v];
    EXPECT_NEAR(SparseDot(a, b), expected, 1e-12);
    EXPECT_NEAR(SparseDot(b, a), expected, 1e-12);
  }
}

TEST(EstDotProdTest, ZeroStepsIsExact) {
  SignedGraph g = Parse("0 1 +\n2 3 -\n");
  Rng rng(1);
  EXPECT_EQ(*EstDotProd(g, 0, 2, Params(0, 10), rng), 0.0);
  EXPECT_EQ(*EstDotProd(g, 0, 0, Params(0, 10), rng), 1.0);
}

TEST(EstDotProdTest, NegativeEdgeCrossProduct) {
  SignedGraph g = Parse("0 1 -\n");
  absl::StatusOr<double> exact = spectral::ExactDot(g, 0, 1, 1);
  ASSERT_TRUE(exact.ok());
  EXPECT_NEAR(*exact, -0.5, 1e-15);
  Rng rng(4);
  absl::StatusOr<double> x = EstDotProd(g, 0, 1, Params(1, 100000, 5), rng);
  ASSERT_TRUE(x.ok());
  EXPECT_NEAR(*x, -0.5, 0.02);
}

TEST(EstDotProdTest, ConcentratesWithMoreWalks) {
  absl::StatusOr<SyntheticGraph> inst =
      GenerateClusterable({.k = 2, .block_size = 150, .p_in = 0.3, .seed = 6});
  ASSERT_TRUE(inst.ok());
  const SignedGraph& g = inst->graph;
  const size_t n = g.num_vertices();
  const int t = 6;
  spectral::ExactDotProducts exact = *spectral::ExactDotProducts::Create(g, t);
  const double tolerance = 1.0 / (20.0 * n * g.max_degree());
  const int walks = static_cast<int>(std::ceil(50 * std::sqrt(static_cast<double>(n))));
  Rng pick(3);
  int close = 0;
  double error_small = 0.0, error_large = 0.0;
  const int kPairs = 60;
  for (int i = 0; i < kPairs; ++i) {
    const Vertex u = static_cast<Vertex>(pick.Below(n));
    const Vertex v = static_cast<Vertex>(pick.Below(n));
    Rng rng(DeriveSeed(8, i));
    const double target = exact.Dot(u, v);
    const double x = *EstDotProd(g, u, v, Params(t, walks, 11), rng);
    close += std::fabs(x - target) <= tolerance;
    error_large += std::fabs(x - target);
    error_small += std::fabs(*EstDotProd(g, u, v, Params(t, walks / 10, 11), rng) - target);
  }
  EXPECT_GE(close, 0.9 * kPairs);
  EXPECT_LT(error_large, error_small);
}

TEST(DeltaDistanceTest, Examples) {
  EXPECT_EQ(DeltaDistance(1, 1, 1, false), 0);
  EXPECT_EQ(DeltaDistance(1, 1, -1, false), 0);
  EXPECT_EQ(DeltaDistance(1, 1, -1, true), 4);
  EXPECT_EQ(DeltaDistance(1, 1, 1, true), 0);
}

TEST(WalkParamsTest, Validation) {
  EXPECT_TRUE(ValidateWalkParams(Params(0, 1)).ok());
  EXPECT_FALSE(ValidateWalkParams(Params(-1, 1)).ok());
  EXPECT_FALSE(ValidateWalkParams(Params(1, 0)).ok());
  EXPECT_FALSE(ValidateWalkParams(Params(1, 1, 2)).ok());
  EXPECT_FALSE(ValidateWalkParams(Params(1, 1, 0)).ok());
}

TEST(WalkParamsTest, TheoreticalValues) {
  EXPECT_EQ(TheoreticalRepetitions(1000), 11);
  EXPECT_EQ(TheoreticalRepetitions(1024), 11);
  EXPECT_EQ(TheoreticalRepetitions(2), 1);
  // 40000 * 4 * 1 * 10 / 1 for d = 2, k = 1, n = 100, alpha = 1.
  EXPECT_EQ(TheoreticalWalkCount(100, 2, 1, 1.0), 1600000);
}

TEST(MedianTest, OddAndEven) {
  EXPECT_EQ(Median({3, 1, 2}), 2);
  EXPECT_EQ(Median({4, 1, 3, 2}), 3);
  EXPECT_EQ(Median({-1}), -1);
}

}  // namespace
}  // namespace signed_oracle
