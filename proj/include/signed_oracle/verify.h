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

#ifndef SIGNED_ORACLE_VERIFY_H_
#define SIGNED_ORACLE_VERIFY_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "signed_oracle/graph.h"
#include "signed_oracle/synth.h"

namespace signed_oracle {

// Numeric checks of the spectral structure behind the oracle, run on
// generated instances with exact enumeration and dense eigensolvers.
enum class VerifySuite { kCheeger, kEigengap, kTwoCenters, kDeltaSeparation, kBetaInner };

std::string SuiteName(VerifySuite suite);
absl::StatusOr<VerifySuite> ParseSuite(const std::string& name);

struct VerifyOptions {
  // Number of generated cases; 0 picks the suite default (cheeger 200,
  // eigengap 10, two-centers 3, delta-separation 2, beta-inner 100).
  int fuzz = 0;
  uint64_t seed = 1;
};

struct VerifyCase {
  std::string name;
  bool pass = false;
  // Space separated key=value pairs.
  std::string detail;
};

struct VerifyReport {
  VerifySuite suite;
  std::vector<VerifyCase> cases;

  int failures() const;
  bool passed() const { return failures() == 0; }
};

absl::StatusOr<VerifyReport> RunVerifySuite(VerifySuite suite,
                                            const VerifyOptions& options);

// `case <name> pass|fail <detail>` per case, then
// `summary <suite> cases=N failures=F`.
void WriteVerifyReport(const VerifyReport& report, std::ostream& out);

// Fraction of pairs meeting the separation thresholds of one instance:
// exact Delta <= 1/(4nd) inside a cluster and >= 1/vol(G) across clusters.
struct SeparationStats {
  int steps = 0;
  double within_threshold = 0;
  double across_threshold = 0;
  double within_fraction = 0;
  double across_fraction = 0;
};

absl::StatusOr<SeparationStats> DeltaSeparation(const SyntheticGraph& instance, int steps);

// lambda_k and lambda_{k+1} against the exact outer ratios of the clusters.
struct EigenGapStats {
  double lambda_k = 0;
  double lambda_next = 0;
  double beta_out = 0;  // max_i beta_G(U_i)
  // Fraction of vertices with ||p_u^t D^{-1/2}||^2 <= 2k/(alpha n).
  double norm_fraction = 0;
};

absl::StatusOr<EigenGapStats> EigenGap(const SyntheticGraph& instance, int k, int steps,
                                       double alpha);

// The graph induced by `set`, vertices renumbered in the order of `set`.
absl::StatusOr<SignedGraph> InducedSubgraph(const SignedGraph& g,
                                            const std::vector<Vertex>& set);

}  // namespace signed_oracle

#endif  // SIGNED_ORACLE_VERIFY_H_
