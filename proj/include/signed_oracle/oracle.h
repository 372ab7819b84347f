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

#ifndef SIGNED_ORACLE_ORACLE_H_
#define SIGNED_ORACLE_ORACLE_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "signed_oracle/graph.h"
#include "signed_oracle/rng.h"
#include "signed_oracle/walks.h"

namespace signed_oracle {

enum class OracleMode { kSigned, kUnsigned };
enum class OracleTask { kCluster, kBicluster };
// kTheoretical applies the fixed 1/(2dn) distance threshold; kPractical
// merges by increasing distance at build time and answers by arg-min.
enum class ThresholdMode { kTheoretical, kPractical };

struct OracleConfig {
  int k = 1;
  OracleMode mode = OracleMode::kSigned;
  OracleTask task = OracleTask::kCluster;
  ThresholdMode threshold = ThresholdMode::kPractical;
  // `absolute` and `use_signs` are overridden from mode, task and threshold;
  // see EffectiveWalkParams.
  WalkParams walk;
  // Unseeded sample size s. 0 picks 3k (cluster) or 6k (bicluster) in
  // practical mode and TheoreticalSampleSize in theoretical mode.
  int sample_size = 0;
  // Independent distance samples whose median orders the merges of an
  // unseeded practical build.
  int median_samples = 5;
  // d in the 1/(2dn) threshold; 0 uses the graph's maximum degree.
  uint32_t max_degree = 0;
  double gamma = 1.0;
  double epsilon = 0.1;
  // Concurrent queries in QueryBatch.
  int parallel = 8;
};

absl::Status ValidateOracleConfig(const OracleConfig& config);

// Number of label classes: k for clustering, 2k for biclustering.
int NumLabels(const OracleConfig& config);

// Walk parameters as the oracle uses them: absolute-valued vectors only for
// practical clustering, edge signs only in signed mode.
WalkParams EffectiveWalkParams(const OracleConfig& config);

// ceil(20 k ln k / gamma), at least k.
int TheoreticalSampleSize(int k, double gamma);
// 1/(2dn).
double DistanceThreshold(const SignedGraph& g, const OracleConfig& config);
// Abort level of the norm test, 4000 k^2 ln(k) / (gamma eps n), with ln(k)
// floored at 1 so that k = 1 does not reject every vertex.
double NormTestThreshold(const SignedGraph& g, const OracleConfig& config);

struct Representative {
  Vertex vertex;
  int label;  // 1-based

  friend bool operator==(const Representative&, const Representative&) = default;
};

// Walk vectors of one representative, reused by every query. Pair r is drawn
// from independent streams; `self_dot` is the median of <first[r], second[r]>.
struct RepresentativeVectors {
  std::vector<WalkVector> first;
  std::vector<WalkVector> second;
  double self_dot = 0.0;
};

// Output of preprocessing. Immutable once built; queries only read it.
struct OracleState {
  OracleConfig config;
  std::vector<Representative> reps;
  // Practical mode only, parallel to `reps`.
  std::vector<RepresentativeVectors> vectors;
  // Theoretical mode: X_uu of every rep from the norm test.
  std::vector<double> self_dots;
  // Auxiliary-graph edges inserted during unseeded preprocessing, as indices
  // into `reps`.
  std::vector<std::pair<int, int>> h_edges;
  // Identity of the graph the state was built on.
  size_t graph_vertices = 0;
  uint64_t graph_fingerprint = 0;
  std::string graph_path;
};

struct QueryAnswer {
  int label = 0;
  // Practical mode: smallest distance to a rep of another label minus the
  // best distance (0 with a single label). Theoretical mode: threshold minus
  // the accepted distance.
  double margin = 0.0;
  // True iff no rep was within the threshold and the label was drawn at
  // random (theoretical mode only).
  bool fallback = false;
};

// Oracle-level failure (an aborted build) as opposed to bad input.
inline bool IsOracleFailure(const absl::Status& status) {
  return status.code() == absl::StatusCode::kAborted;
}

// Labels from ground truth. Cluster ids are ranked ascending to labels
// 1..k; in bicluster task the label is 2 * rank + side. `per_class` seeds
// are drawn uniformly without replacement from every class (all of them when
// a class is smaller); per_class <= 0 takes every labelled vertex.
absl::StatusOr<std::vector<Representative>> SeedsFromGroundTruth(
    const GroundTruth& truth, OracleTask task, int per_class, uint64_t seed);

// Uses `seeds` verbatim as the representative set. Practical mode caches
// their walk vectors.
absl::StatusOr<OracleState> BuildSeeded(const SignedGraph& g,
                                        const std::vector<Representative>& seeds,
                                        const OracleConfig& config);

// Samples representatives and clusters them. `source` replaces the walk
// estimator in theoretical mode (nullptr: walks).
absl::StatusOr<OracleState> BuildUnseeded(const SignedGraph& g,
                                          const OracleConfig& config, uint64_t seed,
                                          const DotProductSource* source = nullptr);

absl::StatusOr<QueryAnswer> WhichCluster(const SignedGraph& g,
                                         const OracleState& state, Vertex v,
                                         Rng& rng,
                                         const DotProductSource* source = nullptr);

// Same flow for a state built with OracleTask::kBicluster.
absl::StatusOr<QueryAnswer> WhichBicluster(const SignedGraph& g,
                                           const OracleState& state, Vertex v,
                                           Rng& rng,
                                           const DotProductSource* source = nullptr);

// Answers every vertex with its own stream DeriveSeed(seed, v), running up
// to state.config.parallel queries at once. Output order matches `vertices`
// and does not depend on scheduling.
absl::StatusOr<std::vector<QueryAnswer>> QueryBatch(const SignedGraph& g,
                                                    const OracleState& state,
                                                    const std::vector<Vertex>& vertices,
                                                    uint64_t seed);

struct TuneOptions {
  // Seeded builds draw this many seeds per class from the labelled set and
  // validate on the remaining labelled vertices. 0 means unseeded builds,
  // validated on all labelled vertices up to label permutation.
  int seeds_per_class = 6;
  uint64_t seed = 1;
};

struct TuneResult {
  WalkParams best;
  size_t best_index = 0;
  std::vector<int64_t> correct;  // per grid point
};

// Builds one oracle per grid point and keeps the one with the most correct
// answers; ties go to fewer total walk steps (R * t), then to grid order.
absl::StatusOr<TuneResult> TuneParameters(const SignedGraph& g,
                                          const GroundTruth& labeled,
                                          const std::vector<WalkParams>& grid,
                                          const OracleConfig& config,
                                          const TuneOptions& options = {});

// Versioned text snapshot of an OracleState.
inline constexpr int kSnapshotVersion = 1;
absl::Status SaveSnapshot(const OracleState& state, const std::string& path);
absl::StatusOr<OracleState> LoadSnapshot(const std::string& path);
// Verifies that `g` is the graph the state was built on.
absl::Status CheckSnapshotGraph(const OracleState& state, const SignedGraph& g);

std::string ModeName(OracleMode mode);
std::string TaskName(OracleTask task);
std::string ThresholdName(ThresholdMode mode);
absl::StatusOr<OracleMode> ParseMode(const std::string& name);
absl::StatusOr<OracleTask> ParseTask(const std::string& name);
absl::StatusOr<ThresholdMode> ParseThreshold(const std::string& name);

}  // namespace signed_oracle

#endif  // SIGNED_ORACLE_ORACLE_H_
