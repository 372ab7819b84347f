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

#ifndef SIGNED_ORACLE_EVAL_H_
#define SIGNED_ORACLE_EVAL_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "signed_oracle/graph.h"
#include "signed_oracle/oracle.h"
#include "signed_oracle/synth.h"

namespace signed_oracle {

// Output labels of an oracle run, 1..num_classes; 0 marks an unanswered
// vertex.
struct ClusterAssignment {
  std::vector<int> labels;
  int num_classes = 0;
};

struct AccuracyResult {
  double accuracy = 0.0;
  // Output class (1-based) matched to each ground-truth class, in the order
  // of GroundTruth::ClusterIds (flattened to 2 * rank + side - 1 for
  // biclusters).
  std::vector<int> matching;
  int64_t correct = 0;
  int64_t m = 0;  // labelled vertices
};

// Fraction of labelled vertices whose output class is the one matched to
// their ground-truth class, under the best injective matching. Unanswered
// vertices count as wrong. In bicluster task every (cluster, side) pair is
// its own class. Vertices without ground truth are ignored.
absl::StatusOr<AccuracyResult> Accuracy(const GroundTruth& truth,
                                        const ClusterAssignment& out,
                                        OracleTask task);

enum class BuildKind { kSeeded, kUnseeded };
std::string BuildKindName(BuildKind kind);
absl::StatusOr<BuildKind> ParseBuildKind(const std::string& name);

struct EvalRun {
  AccuracyResult accuracy;
  int64_t fallbacks = 0;
  // Labelled vertices that are isolated and cannot be queried; they get a
  // uniformly random label.
  int64_t unqueried = 0;
  double build_seconds = 0.0;
  double query_seconds = 0.0;  // mean per query
  size_t reps = 0;
};

// Builds an oracle on `g` and scores it on every labelled vertex. Seeded
// builds take `seeds_per_class` seeds per class from `truth`.
absl::StatusOr<EvalRun> EvaluateOracle(const SignedGraph& g, const GroundTruth& truth,
                                       const OracleConfig& config, BuildKind kind,
                                       int seeds_per_class, uint64_t seed);

enum class SweepVariable { kNone, kN, kK, kSteps, kWalks };
std::string SweepName(SweepVariable variable);
absl::StatusOr<SweepVariable> ParseSweep(const std::string& name);

// One parameter sweep over synthetic block-model graphs. Every run of every
// point draws a fresh graph that all modes, tasks and build kinds share.
struct ExperimentSpec {
  SbmParams sbm;
  SweepVariable sweep = SweepVariable::kNone;
  std::vector<int64_t> values;
  int runs = 5;
  std::vector<OracleMode> modes = {OracleMode::kSigned};
  std::vector<OracleTask> tasks = {OracleTask::kCluster};
  std::vector<BuildKind> builds = {BuildKind::kSeeded};
  ThresholdMode threshold = ThresholdMode::kPractical;
  int steps = 2;
  // Walk counts; a walks sweep overrides both.
  int cluster_walks = 400;
  int bicluster_walks = 600;
  int repetitions = 1;
  int cluster_seeds = 6;    // per cluster
  int bicluster_seeds = 3;  // per side
  int sample_size = 0;      // unseeded; 0 uses the oracle default
  int parallel = 8;
  uint64_t seed = 1;
};

absl::Status ValidateExperimentSpec(const ExperimentSpec& spec);

struct ExperimentRow {
  SweepVariable sweep;
  int64_t value;
  int run;
  OracleMode mode;
  OracleTask task;
  BuildKind build;
  size_t n;
  int k;
  int steps;
  int walks;
  EvalRun result;
};

struct ExperimentSummary {
  SweepVariable sweep;
  int64_t value;
  OracleMode mode;
  OracleTask task;
  BuildKind build;
  int runs;
  double mean_accuracy;
  // Sample standard deviation; 0 with a single run.
  double std_accuracy;
  double mean_query_seconds;
};

struct ExperimentReport {
  std::vector<ExperimentRow> rows;
  std::vector<ExperimentSummary> summaries;
};

absl::StatusOr<ExperimentReport> RunSyntheticExperiment(const ExperimentSpec& spec);

// CSV with one row per (point, run, mode, task, build). The first column is
// the schema version.
inline constexpr int kCsvSchemaVersion = 1;
void WriteExperimentCsv(const ExperimentReport& report, std::ostream& out);
void WriteSummaryCsv(const ExperimentReport& report, std::ostream& out);

}  // namespace signed_oracle

#endif  // SIGNED_ORACLE_EVAL_H_
