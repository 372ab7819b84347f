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

#ifndef SIGNED_ORACLE_WALKS_H_
#define SIGNED_ORACLE_WALKS_H_

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "signed_oracle/graph.h"
#include "signed_oracle/rng.h"

namespace signed_oracle {

// Parameters of the walk-based dot-product estimator.
struct WalkParams {
  int steps = 2;          // walk length t
  int walks = 400;        // walks per vector R
  int repetitions = 1;    // h, the estimator takes the median of h products
  uint64_t seed = 1;
  // Take entrywise absolute values of the walk vector (clustering oracle).
  // The biclustering oracle keeps the signed entries.
  bool absolute = true;
  // When false every edge is treated as positive (unsigned oracle).
  bool use_signs = true;
};

absl::Status ValidateWalkParams(const WalkParams& params);

// Theoretical walk count 40000 d^2 k^1.5 sqrt(n) / alpha^1.5, rounded up.
int64_t TheoreticalWalkCount(size_t n, uint32_t max_degree, int k, double alpha);
// ceil(log2 n), bumped to the next odd number.
int TheoreticalRepetitions(size_t n);

struct WalkEnd {
  Vertex vertex;
  int8_t sign;
};

// One lazy signed random walk of `steps` steps from u: each step stays put
// with probability 1/2, otherwise moves to a uniform neighbor and multiplies
// the running sign by the edge sign. The coin is drawn before the neighbor
// index.
absl::StatusOr<WalkEnd> LazySignedWalk(const SignedGraph& g, Vertex u,
                                       int steps, Rng& rng,
                                       bool use_signs = true);

// Sparse degree-corrected end-point histogram of R walks:
//   m_u(v) = (#walks ending at v with sign + minus #with sign -) / (R sqrt(d(v)))
// optionally with absolute values taken. Entries are sorted by vertex and
// cancelled (zero) entries are dropped.
class WalkVector {
 public:
  struct Entry {
    Vertex vertex;
    double value;
  };

  WalkVector() = default;
  WalkVector(Vertex source, std::vector<Entry> entries)
      : source_(source), entries_(std::move(entries)) {}

  Vertex source() const { return source_; }
  const std::vector<Entry>& entries() const { return entries_; }
  size_t nnz() const { return entries_.size(); }
  // Value at v, 0 when absent.
  double at(Vertex v) const;

 private:
  Vertex source_ = 0;
  std::vector<Entry> entries_;
};

absl::StatusOr<WalkVector> ComputeWalkVector(const SignedGraph& g, Vertex u,
                                             const WalkParams& params, Rng& rng);

// <a, b>, accumulated in long double. Iterates the shorter vector and
// searches the longer when their sizes differ a lot, merges otherwise.
double SparseDot(const WalkVector& a, const WalkVector& b);

// Median of h independent products <m_u, m_v>, each from freshly drawn walk
// vectors. Estimates <p_u^t D^{-1/2}, p_v^t D^{-1/2}>.
absl::StatusOr<double> EstDotProd(const SignedGraph& g, Vertex u, Vertex v,
                                  const WalkParams& params, Rng& rng);

// Distance estimate from three dot products. Clustering mode takes
// min{Xuu + Xvv - 2Xuv, Xuu + Xvv + 2Xuv}; bicluster mode only the first.
// The result may be negative under estimation noise.
double DeltaDistance(double xuu, double xvv, double xuv, bool bicluster_mode);

// Median of a non-empty sample (upper median for even sizes).
double Median(std::vector<double> values);

// Supplies the dot products X_uv used by the threshold decision rules. The
// default implementation runs EstDotProd; tests substitute exact values.
class DotProductSource {
 public:
  virtual ~DotProductSource() = default;
  virtual absl::StatusOr<double> Dot(Vertex u, Vertex v, Rng& rng) const = 0;
};

class WalkDotProductSource : public DotProductSource {
 public:
  WalkDotProductSource(const SignedGraph& g, WalkParams params)
      : graph_(g), params_(params) {}
  absl::StatusOr<double> Dot(Vertex u, Vertex v, Rng& rng) const override {
    return EstDotProd(graph_, u, v, params_, rng);
  }

 private:
  const SignedGraph& graph_;
  WalkParams params_;
};

}  // namespace signed_oracle

#endif  // SIGNED_ORACLE_WALKS_H_
