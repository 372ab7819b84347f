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

#ifndef SIGNED_ORACLE_SYNTH_H_
#define SIGNED_ORACLE_SYNTH_H_

#include <cstddef>
#include <cstdint>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "signed_oracle/graph.h"

namespace signed_oracle {

// Signed stochastic block model with k polarized clusters, each split into
// two opposing sides. Vertices are laid out cluster by cluster, side 1
// before side 2; clusters and sides are as equal-sized as possible.
struct SbmParams {
  size_t n = 2000;
  int k = 6;
  double p_intra = 0.8;  // edge probability inside one side
  double p_cross = 0.4;  // between the two sides of one cluster
  double q = 0.05;       // between clusters
  double p_sign = 0.8;   // P(+) inside a side, P(-) across sides
  double q_sign = 0.9;   // P(+) between clusters
  uint64_t seed = 1;
};

struct SyntheticGraph {
  SignedGraph graph;
  GroundTruth truth;  // cluster in [0, k), side in {1, 2}
};

absl::Status ValidateSbmParams(const SbmParams& params);
absl::StatusOr<SyntheticGraph> GenerateSbm(const SbmParams& params);

// Erdos-Renyi signed graph without isolated vertices: every pair is an edge
// with probability `edge_prob`, negative with probability `negative_prob`;
// vertices left isolated get one extra edge to a uniform partner.
absl::StatusOr<SignedGraph> RandomSignedGraph(size_t n, double edge_prob,
                                              double negative_prob,
                                              uint64_t seed);

// k dense, nearly balanced blocks joined by a handful of random edges. Inside
// a block, edges appear with probability `p_in` and carry the balanced sign
// (+ within a side, - across) flipped with probability `sign_noise`.
struct ClusterableParams {
  int k = 2;
  size_t block_size = 20;
  double p_in = 0.6;
  double sign_noise = 0.0;
  size_t cross_edges = 0;
  uint64_t seed = 1;
};

absl::StatusOr<SyntheticGraph> GenerateClusterable(const ClusterableParams& params);

}  // namespace signed_oracle

#endif  // SIGNED_ORACLE_SYNTH_H_
