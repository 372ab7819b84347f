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

#include <map>
#include <vector>

#include "absl/strings/str_cat.h"
#include "signed_oracle/assignment.h"
#include "signed_oracle/eval.h"

namespace signed_oracle {

absl::StatusOr<AccuracyResult> Accuracy(const GroundTruth& truth,
                                        const ClusterAssignment& out,
                                        OracleTask task) {
  if (truth.empty()) return absl::InvalidArgumentError("ground truth is empty");
  if (out.labels.size() != truth.num_vertices()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "assignment covers ", out.labels.size(), " vertices, ground truth ",
        truth.num_vertices()));
  }
  const bool bicluster = task == OracleTask::kBicluster;
  if (bicluster && !truth.HasSides()) {
    return absl::InvalidArgumentError("bicluster accuracy needs side labels");
  }
  const std::vector<int> ids = truth.ClusterIds();
  std::map<int, int> rank;
  for (size_t i = 0; i < ids.size(); ++i) rank[ids[i]] = static_cast<int>(i);
  const int classes = static_cast<int>(ids.size()) * (bicluster ? 2 : 1);
  if (classes > out.num_classes) {
    return absl::InvalidArgumentError(
        absl::StrCat("ground truth has ", classes, " classes but the output only ",
                     out.num_classes));
  }

  std::vector<std::vector<int64_t>> overlap(classes,
                                            std::vector<int64_t>(out.num_classes, 0));
  AccuracyResult result;
  for (Vertex v : truth.LabeledVertices()) {
    const int label = out.labels[v];
    ++result.m;
    if (label == 0) continue;
    if (label < 1 || label > out.num_classes) {
      return absl::InvalidArgumentError(
          absl::StrCat("vertex ", v, " has no valid output label"));
    }
    int row = rank[*truth.cluster(v)];
    if (bicluster) row = 2 * row + truth.side(v) - 1;
    ++overlap[row][label - 1];
  }
  const std::vector<int> match = MaxWeightAssignment(overlap);
  for (int r = 0; r < classes; ++r) {
    result.matching.push_back(match[r] + 1);
    result.correct += overlap[r][match[r]];
  }
  result.accuracy = static_cast<double>(result.correct) / static_cast<double>(result.m);
  return result;
}

}  // namespace signed_oracle
