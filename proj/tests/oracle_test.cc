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

#include "signed_oracle/oracle.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

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

// Two positive 5-cliques on {0..4} and {5..9}, optionally joined by {4, 5}.
SignedGraph TwoCliques(bool bridge) {
  std::string text;
  for (int base : {0, 5}) {
    for (int a = 0; a < 5; ++a) {
      for (int b = a + 1; b < 5; ++b) {
        text += std::to_string(base + a) + " " + std::to_string(base + b) + " +\n";
      }
    }
  }
  if (bridge) text += "4 5 +\n";
  return Parse(text);
}

int Clique(Vertex v) { return v < 5 ? 0 : 1; }

OracleConfig ClusterConfig(int k) {
  OracleConfig c;
  c.k = k;
  c.walk.walks = 400;
  c.walk.steps = 2;
  c.parallel = 1;
  return c;
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          (name + "_" + std::to_string(::getpid()))).string();
}

// Diagonal 1, everything else 0: no two distinct vertices are close.
class FarApart : public DotProductSource {
 public:
  absl::StatusOr<double> Dot(Vertex u, Vertex v, Rng&) const override {
    return u == v ? 1.0 : 0.0;
  }
};

class HugeNorms : public DotProductSource {
 public:
  absl::StatusOr<double> Dot(Vertex, Vertex, Rng&) const override { return 1e12; }
};

TEST(ConfigTest, Validation) {
  OracleConfig c;
  EXPECT_TRUE(ValidateOracleConfig(c).ok());
  c.k = 0;
  EXPECT_FALSE(ValidateOracleConfig(c).ok());
  c = OracleConfig();
  c.median_samples = 4;
  EXPECT_FALSE(ValidateOracleConfig(c).ok());
  c = OracleConfig();
  c.gamma = 0;
  EXPECT_FALSE(ValidateOracleConfig(c).ok());
  c = OracleConfig();
  c.epsilon = 1;
  EXPECT_FALSE(ValidateOracleConfig(c).ok());
  c = OracleConfig();
  c.walk.walks = 0;
  EXPECT_FALSE(ValidateOracleConfig(c).ok());
}

TEST(ConfigTest, DerivedQuantities) {
  OracleConfig c;
  c.k = 3;
  EXPECT_EQ(NumLabels(c), 3);
  c.task = OracleTask::kBicluster;
  EXPECT_EQ(NumLabels(c), 6);
  EXPECT_FALSE(EffectiveWalkParams(c).absolute);
  c.task = OracleTask::kCluster;
  EXPECT_TRUE(EffectiveWalkParams(c).absolute);
  EXPECT_TRUE(EffectiveWalkParams(c).use_signs);
  c.threshold = ThresholdMode::kTheoretical;
  EXPECT_FALSE(EffectiveWalkParams(c).absolute);
  c.mode = OracleMode::kUnsigned;
  EXPECT_FALSE(EffectiveWalkParams(c).use_signs);

  EXPECT_EQ(TheoreticalSampleSize(1, 1.0), 1);
  EXPECT_EQ(TheoreticalSampleSize(2, 1.0), 28);  // ceil(40 ln 2) = ceil(27.73)
  EXPECT_EQ(TheoreticalSampleSize(3, 0.5), 132);  // ceil(120 ln 3) = ceil(131.83)

  const SignedGraph g = TwoCliques(true);  // n = 10, d = 5
  c = OracleConfig();
  c.k = 2;
  EXPECT_DOUBLE_EQ(DistanceThreshold(g, c), 1.0 / 100);
  c.max_degree = 8;
  EXPECT_DOUBLE_EQ(DistanceThreshold(g, c), 1.0 / 160);
  c.gamma = 0.5;
  c.epsilon = 0.1;
  EXPECT_NEAR(NormTestThreshold(g, c), 4000.0 * 4 * 1.0 / (0.5 * 0.1 * 10), 1e-6);
  c.k = 3;
  EXPECT_NEAR(NormTestThreshold(g, c), 4000.0 * 9 * std::log(3.0) / (0.5 * 0.1 * 10),
              1e-6);
}

TEST(ConfigTest, NamesRoundTrip) {
  for (OracleMode m : {OracleMode::kSigned, OracleMode::kUnsigned}) {
    EXPECT_EQ(*ParseMode(ModeName(m)), m);
  }
  for (OracleTask t : {OracleTask::kCluster, OracleTask::kBicluster}) {
    EXPECT_EQ(*ParseTask(TaskName(t)), t);
  }
  for (ThresholdMode t : {ThresholdMode::kTheoretical, ThresholdMode::kPractical}) {
    EXPECT_EQ(*ParseThreshold(ThresholdName(t)), t);
  }
  EXPECT_FALSE(ParseMode("mixed").ok());
}

TEST(SeedsTest, RanksClusterIdsAndSides) {
  GroundTruth truth(8);
  truth.Set(0, 10, 1);
  truth.Set(1, 10, 2);
  truth.Set(2, 10, 1);
  truth.Set(3, 4, 2);
  truth.Set(4, 4, 1);
  std::vector<Representative> all =
      *SeedsFromGroundTruth(truth, OracleTask::kCluster, 0, 1);
  std::map<Vertex, int> label;
  for (const Representative& r : all) label[r.vertex] = r.label;
  EXPECT_EQ(label, (std::map<Vertex, int>{{0, 2}, {1, 2}, {2, 2}, {3, 1}, {4, 1}}));

  all = *SeedsFromGroundTruth(truth, OracleTask::kBicluster, 0, 1);
  label.clear();
  for (const Representative& r : all) label[r.vertex] = r.label;
  EXPECT_EQ(label, (std::map<Vertex, int>{{0, 3}, {1, 4}, {2, 3}, {3, 2}, {4, 1}}));

  std::vector<Representative> one = *SeedsFromGroundTruth(truth, OracleTask::kCluster, 1, 7);
  ASSERT_EQ(one.size(), 2);
  EXPECT_NE(one[0].label, one[1].label);
  EXPECT_FALSE(SeedsFromGroundTruth(GroundTruth(3), OracleTask::kCluster, 1, 1).ok());
}

TEST(BuildSeededTest, TwoRepsAnswerTheirCliques) {
  const SignedGraph g = TwoCliques(true);
  OracleConfig c = ClusterConfig(2);
  OracleState state = *BuildSeeded(g, {{0, 1}, {9, 2}}, c);
  EXPECT_EQ(state.reps.size(), 2);
  EXPECT_EQ(state.vectors.size(), 2);
  EXPECT_EQ(state.graph_vertices, 10);
  EXPECT_EQ(state.graph_fingerprint, g.Fingerprint());
  for (Vertex v = 0; v < 10; ++v) {
    Rng rng(DeriveSeed(3, v));
    QueryAnswer a = *WhichCluster(g, state, v, rng);
    EXPECT_EQ(a.label, Clique(v) + 1) << "vertex " << v;
    EXPECT_FALSE(a.fallback);
    EXPECT_GE(a.margin, 0.0);
    if (v == 0 || v == 9) { EXPECT_GT(a.margin, 0.0); }
  }
}

TEST(BuildSeededTest, Errors) {
  const SignedGraph g = TwoCliques(true);
  OracleConfig c = ClusterConfig(2);
  absl::StatusOr<OracleState> s = BuildSeeded(g, {{0, 1}, {1, 1}}, c);
  ASSERT_FALSE(s.ok());
  EXPECT_EQ(s.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(s.status().message(), HasSubstr("empty label class 2"));

  s = BuildSeeded(g, {{0, 1}, {0, 2}}, c);
  EXPECT_THAT(s.status().message(), HasSubstr("conflicting"));
  EXPECT_EQ(BuildSeeded(g, {{0, 1}, {99, 2}}, c).status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(BuildSeeded(g, {{0, 1}, {5, 3}}, c).ok());

  const SignedGraph isolated = *SignedGraph::FromEdges(3, {{0, 1, 1}});
  EXPECT_EQ(BuildSeeded(isolated, {{0, 1}, {2, 2}}, c).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(BuildSeededTest, DuplicatesCollapse) {
  const SignedGraph g = TwoCliques(true);
  OracleState state = *BuildSeeded(g, {{0, 1}, {0, 1}, {7, 2}}, ClusterConfig(2));
  EXPECT_EQ(state.reps.size(), 2);
}

TEST(BuildSeededTest, ManyRepsFromSbm) {
  SyntheticGraph s = *GenerateSbm({.n = 240, .k = 6, .seed = 3});
  std::vector<Representative> seeds =
      *SeedsFromGroundTruth(s.truth, OracleTask::kCluster, 6, 5);
  ASSERT_EQ(seeds.size(), 36);
  OracleState state = *BuildSeeded(s.graph, seeds, ClusterConfig(6));
  EXPECT_EQ(state.reps.size(), 36);
  EXPECT_EQ(state.vectors.size(), 36);
  for (const RepresentativeVectors& v : state.vectors) {
    EXPECT_EQ(v.first.size(), 1);
    EXPECT_EQ(v.second.size(), 1);
  }
}

TEST(BuildUnseededTest, PracticalRecoversCliques) {
  const SignedGraph g = TwoCliques(false);
  OracleConfig c = ClusterConfig(2);
  c.sample_size = 6;
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    OracleState state = *BuildUnseeded(g, c, seed);
    ASSERT_EQ(state.reps.size(), 6);
    std::map<int, int> label_of_clique;
    for (const Representative& r : state.reps) {
      auto [it, inserted] = label_of_clique.try_emplace(Clique(r.vertex), r.label);
      EXPECT_EQ(it->second, r.label) << "seed " << seed;
    }
    EXPECT_EQ(state.reps[0].label, 1);
    if (label_of_clique.size() == 2) {
      EXPECT_NE(label_of_clique[0], label_of_clique[1]);
      EXPECT_GE(state.h_edges.size(), 4);
    }
  }
}

TEST(BuildUnseededTest, SampleErrors) {
  const SignedGraph g = TwoCliques(false);
  OracleConfig c = ClusterConfig(2);
  c.sample_size = 11;
  EXPECT_EQ(BuildUnseeded(g, c, 1).status().code(), absl::StatusCode::kInvalidArgument);
  c.sample_size = 1;
  EXPECT_EQ(BuildUnseeded(g, c, 1).status().code(), absl::StatusCode::kInvalidArgument);
}

TEST(SingleClusterTest, AlwaysLabelOne) {
  const SignedGraph g = TwoCliques(true);
  OracleState state = *BuildSeeded(g, {{3, 1}}, ClusterConfig(1));
  for (Vertex v = 0; v < 10; ++v) {
    Rng rng(v);
    QueryAnswer a = *WhichCluster(g, state, v, rng);
    EXPECT_EQ(a.label, 1);
    EXPECT_FALSE(a.fallback);
  }
}

TEST(UnsignedModeTest, MatchesSignedOnPositiveCopy) {
  SyntheticGraph s = *GenerateSbm({.n = 120, .k = 3, .seed = 4});
  std::vector<Representative> seeds =
      *SeedsFromGroundTruth(s.truth, OracleTask::kCluster, 3, 2);
  OracleConfig c = ClusterConfig(3);
  c.mode = OracleMode::kUnsigned;
  OracleState unsigned_state = *BuildSeeded(s.graph, seeds, c);
  const SignedGraph positive = s.graph.WithAllPositive();
  c.mode = OracleMode::kSigned;
  OracleState signed_state = *BuildSeeded(positive, seeds, c);
  for (Vertex v = 0; v < 120; v += 7) {
    Rng a(DeriveSeed(9, v));
    Rng b(DeriveSeed(9, v));
    QueryAnswer x = *WhichCluster(s.graph, unsigned_state, v, a);
    QueryAnswer y = *WhichCluster(positive, signed_state, v, b);
    EXPECT_EQ(x.label, y.label);
    EXPECT_EQ(x.margin, y.margin);
  }
}

TEST(BiclusterTest, NegativeEdge) {
  const SignedGraph g = Parse("0 1 -\n");
  OracleConfig c = ClusterConfig(1);
  c.task = OracleTask::kBicluster;
  OracleState state = *BuildSeeded(g, {{0, 1}, {1, 2}}, c);
  for (Vertex v : {0u, 1u}) {
    Rng rng(v + 10);
    EXPECT_EQ(WhichBicluster(g, state, v, rng)->label, static_cast<int>(v) + 1);
  }
  Rng rng(1);
  EXPECT_FALSE(WhichCluster(g, state, 0, rng).ok());
}

TEST(BiclusterTest, BalancedFourCycleSides) {
  const SignedGraph g = Parse("0 1 +\n1 2 -\n2 3 +\n3 0 -\n");
  OracleConfig c = ClusterConfig(1);
  c.task = OracleTask::kBicluster;
  OracleState state = *BuildSeeded(g, {{0, 1}, {2, 2}}, c);
  const int expected[] = {1, 1, 2, 2};
  for (Vertex v = 0; v < 4; ++v) {
    Rng rng(DeriveSeed(5, v));
    EXPECT_EQ(WhichBicluster(g, state, v, rng)->label, expected[v]) << "vertex " << v;
  }
}

TEST(TheoreticalTest, ExactSourceSeparatesComponents) {
  const SignedGraph g = TwoCliques(false);
  const spectral::ExactDotProducts exact = *spectral::ExactDotProducts::Create(g, 60);
  OracleConfig c = ClusterConfig(2);
  c.threshold = ThresholdMode::kTheoretical;
  c.sample_size = 4;
  int built = 0;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    absl::StatusOr<OracleState> state = BuildUnseeded(g, c, seed, &exact);
    if (!state.ok()) {
      // Every sampled vertex fell into one clique.
      EXPECT_TRUE(IsOracleFailure(state.status())) << state.status();
      continue;
    }
    ++built;
    ASSERT_EQ(state->self_dots.size(), 4);
    std::map<int, int> label_of_clique;
    for (const Representative& r : state->reps) {
      auto [it, inserted] = label_of_clique.try_emplace(Clique(r.vertex), r.label);
      EXPECT_EQ(it->second, r.label);
    }
    ASSERT_EQ(label_of_clique.size(), 2);
    for (Vertex v = 0; v < 10; ++v) {
      Rng rng(v);
      QueryAnswer a = *WhichCluster(g, *state, v, rng, &exact);
      EXPECT_EQ(a.label, label_of_clique[Clique(v)]);
      EXPECT_FALSE(a.fallback);
      EXPECT_GE(a.margin, 0.0);
      EXPECT_LE(a.margin, DistanceThreshold(g, c));
    }

    Vertex outsider = 0;
    while (std::any_of(state->reps.begin(), state->reps.end(),
                       [&](const Representative& r) { return r.vertex == outsider; })) {
      ++outsider;
    }
    const FarApart far;
    Rng rng(3);
    QueryAnswer fallback = *WhichCluster(g, *state, outsider, rng, &far);
    EXPECT_TRUE(fallback.fallback);
    EXPECT_GE(fallback.label, 1);
    EXPECT_LE(fallback.label, 2);
  }
  EXPECT_GT(built, 0);
}

TEST(TheoreticalTest, AbortsOnWrongComponentCount) {
  const SignedGraph g = TwoCliques(false);
  const spectral::ExactDotProducts exact = *spectral::ExactDotProducts::Create(g, 60);
  OracleConfig c = ClusterConfig(3);
  c.threshold = ThresholdMode::kTheoretical;
  c.sample_size = 5;
  absl::StatusOr<OracleState> state = BuildUnseeded(g, c, 1, &exact);
  ASSERT_FALSE(state.ok());
  EXPECT_TRUE(IsOracleFailure(state.status()));
  EXPECT_THAT(state.status().message(), HasSubstr("expected 3"));
}

TEST(TheoreticalTest, NormTestAborts) {
  const SignedGraph g = TwoCliques(false);
  OracleConfig c = ClusterConfig(2);
  c.threshold = ThresholdMode::kTheoretical;
  c.sample_size = 4;
  const HugeNorms huge;
  absl::StatusOr<OracleState> state = BuildUnseeded(g, c, 1, &huge);
  ASSERT_FALSE(state.ok());
  EXPECT_TRUE(IsOracleFailure(state.status()));
  EXPECT_THAT(state.status().message(), HasSubstr("norm test"));
}

TEST(QueryTest, DeterministicAndStateless) {
  SyntheticGraph s = *GenerateSbm({.n = 200, .k = 4, .seed = 6});
  OracleState state = *BuildSeeded(
      s.graph, *SeedsFromGroundTruth(s.truth, OracleTask::kCluster, 4, 1), ClusterConfig(4));
  const OracleState copy = state;
  for (Vertex v = 0; v < 200; v += 13) {
    Rng a(DeriveSeed(1, v));
    Rng b(DeriveSeed(1, v));
    QueryAnswer x = *WhichCluster(s.graph, state, v, a);
    QueryAnswer y = *WhichCluster(s.graph, state, v, b);
    EXPECT_EQ(x.label, y.label);
    EXPECT_EQ(x.margin, y.margin);
  }
  EXPECT_EQ(state.reps, copy.reps);
  EXPECT_EQ(state.vectors[0].self_dot, copy.vectors[0].self_dot);
}

TEST(QueryTest, ArgMinIgnoresRepOrder) {
  SyntheticGraph s = *GenerateSbm({.n = 200, .k = 4, .seed = 8});
  OracleState state = *BuildSeeded(
      s.graph, *SeedsFromGroundTruth(s.truth, OracleTask::kCluster, 3, 2), ClusterConfig(4));
  OracleState reversed = state;
  std::reverse(reversed.reps.begin(), reversed.reps.end());
  std::reverse(reversed.vectors.begin(), reversed.vectors.end());
  for (Vertex v = 0; v < 200; v += 3) {
    Rng a(DeriveSeed(2, v));
    Rng b(DeriveSeed(2, v));
    QueryAnswer x = *WhichCluster(s.graph, state, v, a);
    QueryAnswer y = *WhichCluster(s.graph, reversed, v, b);
    EXPECT_EQ(x.label, y.label);
    EXPECT_DOUBLE_EQ(x.margin, y.margin);
  }
}

TEST(QueryTest, Errors) {
  const SignedGraph g = TwoCliques(true);
  OracleState state = *BuildSeeded(g, {{0, 1}, {9, 2}}, ClusterConfig(2));
  Rng rng(1);
  EXPECT_EQ(WhichCluster(g, state, 10, rng).status().code(),
            absl::StatusCode::kInvalidArgument);
  const SignedGraph other = Parse("0 1 +\n");
  EXPECT_EQ(WhichCluster(other, state, 0, rng).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(QueryBatchTest, IndependentOfThreadCount) {
  SyntheticGraph s = *GenerateSbm({.n = 300, .k = 3, .seed = 2});
  OracleConfig c = ClusterConfig(3);
  OracleState state =
      *BuildSeeded(s.graph, *SeedsFromGroundTruth(s.truth, OracleTask::kCluster, 4, 1), c);
  std::vector<Vertex> vertices;
  for (Vertex v = 0; v < 300; v += 2) vertices.push_back(v);
  std::vector<QueryAnswer> serial = *QueryBatch(s.graph, state, vertices, 5);
  state.config.parallel = 4;
  std::vector<QueryAnswer> threaded = *QueryBatch(s.graph, state, vertices, 5);
  ASSERT_EQ(serial.size(), vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    EXPECT_EQ(serial[i].label, threaded[i].label);
    EXPECT_EQ(serial[i].margin, threaded[i].margin);
    Rng rng(DeriveSeed(5, vertices[i]));
    EXPECT_EQ(WhichCluster(s.graph, state, vertices[i], rng)->label, serial[i].label);
  }
}

TEST(SnapshotTest, RoundTrip) {
  SyntheticGraph s = *GenerateSbm({.n = 150, .k = 3, .seed = 9});
  OracleConfig c = ClusterConfig(3);
  c.walk.repetitions = 3;
  c.walk.seed = 77;
  OracleState state = *BuildUnseeded(s.graph, c, 4);
  state.graph_path = "/data/some graph.edges";
  const std::string path = TempPath("snapshot_roundtrip");
  ASSERT_TRUE(SaveSnapshot(state, path).ok());
  absl::StatusOr<OracleState> loaded = LoadSnapshot(path);
  ASSERT_TRUE(loaded.ok()) << loaded.status();
  EXPECT_EQ(loaded->reps, state.reps);
  EXPECT_EQ(loaded->h_edges, state.h_edges);
  EXPECT_EQ(loaded->graph_path, state.graph_path);
  EXPECT_EQ(loaded->graph_fingerprint, state.graph_fingerprint);
  EXPECT_EQ(loaded->config.walk.seed, 77);
  EXPECT_EQ(loaded->config.walk.repetitions, 3);
  ASSERT_EQ(loaded->vectors.size(), state.vectors.size());
  for (size_t i = 0; i < state.vectors.size(); ++i) {
    EXPECT_EQ(loaded->vectors[i].self_dot, state.vectors[i].self_dot);
    ASSERT_EQ(loaded->vectors[i].first.size(), 3);
    for (size_t r = 0; r < 3; ++r) {
      const auto& a = state.vectors[i].first[r].entries();
      const auto& b = loaded->vectors[i].first[r].entries();
      ASSERT_EQ(a.size(), b.size());
      for (size_t e = 0; e < a.size(); ++e) {
        EXPECT_EQ(a[e].vertex, b[e].vertex);
        EXPECT_EQ(a[e].value, b[e].value);
      }
    }
  }
  EXPECT_TRUE(CheckSnapshotGraph(*loaded, s.graph).ok());
  EXPECT_EQ(CheckSnapshotGraph(*loaded, s.graph.WithAllPositive()).code(),
            absl::StatusCode::kFailedPrecondition);

  std::vector<Vertex> all(150);
  for (Vertex v = 0; v < 150; ++v) all[v] = v;
  std::vector<QueryAnswer> before = *QueryBatch(s.graph, state, all, 1);
  std::vector<QueryAnswer> after = *QueryBatch(s.graph, *loaded, all, 1);
  for (Vertex v = 0; v < 150; ++v) {
    EXPECT_EQ(before[v].label, after[v].label);
    EXPECT_EQ(before[v].margin, after[v].margin);
  }
  std::remove(path.c_str());
}

TEST(SnapshotTest, TheoreticalRoundTrip) {
  const SignedGraph g = TwoCliques(true);
  OracleConfig c = ClusterConfig(2);
  c.threshold = ThresholdMode::kTheoretical;
  OracleState state = *BuildSeeded(g, {{0, 1}, {9, 2}}, c);
  const std::string path = TempPath("snapshot_theory");
  ASSERT_TRUE(SaveSnapshot(state, path).ok());
  OracleState loaded = *LoadSnapshot(path);
  EXPECT_EQ(loaded.self_dots, state.self_dots);
  EXPECT_EQ(loaded.config.threshold, ThresholdMode::kTheoretical);
  std::remove(path.c_str());
}

TEST(SnapshotTest, Errors) {
  EXPECT_EQ(LoadSnapshot("/nonexistent/oracle.snap").status().code(),
            absl::StatusCode::kNotFound);

  const SignedGraph g = TwoCliques(true);
  OracleState state = *BuildSeeded(g, {{0, 1}, {9, 2}}, ClusterConfig(2));
  const std::string path = TempPath("snapshot_errors");
  ASSERT_TRUE(SaveSnapshot(state, path).ok());
  std::string text;
  {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  ASSERT_EQ(text.rfind("signed-oracle-snapshot 1\n", 0), 0);

  std::ofstream(path) << "signed-oracle-snapshot 2\n" << text.substr(text.find('\n') + 1);
  absl::StatusOr<OracleState> loaded = LoadSnapshot(path);
  EXPECT_EQ(loaded.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_THAT(loaded.status().message(), HasSubstr("version"));

  std::ofstream(path) << text.substr(0, text.size() / 2);
  EXPECT_EQ(LoadSnapshot(path).status().code(), absl::StatusCode::kDataLoss);
  std::remove(path.c_str());
}

TEST(TuneTest, SinglePointGrid) {
  SyntheticGraph s = *GenerateSbm({.n = 120, .k = 2, .seed = 1});
  WalkParams p;
  p.walks = 50;
  TuneResult r = *TuneParameters(s.graph, s.truth, {p}, ClusterConfig(2));
  EXPECT_EQ(r.best_index, 0);
  EXPECT_EQ(r.best.walks, 50);
  ASSERT_EQ(r.correct.size(), 1);
  EXPECT_GT(r.correct[0], 0);
}

TEST(TuneTest, MoreWalksWin) {
  SyntheticGraph s = *GenerateSbm({.n = 300, .k = 3, .seed = 2});
  WalkParams few;
  few.walks = 10;
  WalkParams many;
  many.walks = 400;
  TuneResult r = *TuneParameters(s.graph, s.truth, {few, many}, ClusterConfig(3));
  EXPECT_GT(r.correct[1], r.correct[0]);
  EXPECT_EQ(r.best_index, 1);
  EXPECT_EQ(r.best.walks, 400);
}

TEST(TuneTest, TiesPreferCheaperPoint) {
  const SignedGraph g = TwoCliques(true);
  GroundTruth truth(10);
  for (Vertex v = 0; v < 10; ++v) truth.Set(v, Clique(v));
  WalkParams expensive;
  expensive.walks = 400;
  expensive.steps = 3;
  WalkParams cheap;
  cheap.walks = 400;
  cheap.steps = 2;
  TuneResult r = *TuneParameters(g, truth, {expensive, cheap}, ClusterConfig(2),
                                 {.seeds_per_class = 1, .seed = 3});
  if (r.correct[0] == r.correct[1]) { EXPECT_EQ(r.best_index, 1); }
  EXPECT_FALSE(TuneParameters(g, truth, {}, ClusterConfig(2)).ok());
}

TEST(TuneTest, Unseeded) {
  const SignedGraph g = TwoCliques(false);
  GroundTruth truth(10);
  for (Vertex v = 0; v < 10; ++v) truth.Set(v, Clique(v));
  OracleConfig c = ClusterConfig(2);
  c.sample_size = 6;
  TuneResult r = *TuneParameters(g, truth, {WalkParams()}, c, {.seeds_per_class = 0});
  EXPECT_GE(r.correct[0], 5);
  EXPECT_LE(r.correct[0], 10);
}

}  // namespace
}  // namespace signed_oracle
