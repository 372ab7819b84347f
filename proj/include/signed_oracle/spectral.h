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

#ifndef SIGNED_ORACLE_SPECTRAL_H_
#define SIGNED_ORACLE_SPECTRAL_H_

#include <cstddef>
#include <vector>

#include "Eigen/Dense"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "signed_oracle/graph.h"
#include "signed_oracle/rational.h"
#include "signed_oracle/walks.h"

// Exact dense computations for small graphs. Everything here is a reference
// for the sampling-based code and fails loudly instead of approximating when
// an instance is too large.
namespace signed_oracle::spectral {

inline constexpr size_t kMaxDenseVertices = 5000;
inline constexpr size_t kMaxSetEnumeration = 22;
inline constexpr size_t kMaxGraphEnumeration = 14;
inline constexpr size_t kMaxKWayVertices = 10;
inline constexpr int kMaxKWayClusters = 3;
inline constexpr double kEigenTolerance = 1e-9;

// Fails with OutOfRange above kMaxDenseVertices and with FailedPrecondition
// when some vertex is isolated (D^{-1/2} is undefined there).
absl::Status CheckDense(const SignedGraph& g);

// W = (I + D^{-1} A^sigma) / 2.
absl::StatusOr<Eigen::MatrixXd> WalkMatrix(const SignedGraph& g);

// p_u^t = 1_u W^t: probability of ending at v with sign + minus with sign -.
struct ExactDiscrepancy {
  Eigen::VectorXd p;
};

absl::StatusOr<ExactDiscrepancy> ExactDiscrepancyVector(const SignedGraph& g,
                                                        Vertex u, int t);

// p_u^t D^{-1/2}.
absl::StatusOr<Eigen::VectorXd> DegreeCorrectedDiscrepancy(const SignedGraph& g,
                                                           Vertex u, int t);

// <p_u^t D^{-1/2}, p_v^t D^{-1/2}>.
absl::StatusOr<double> ExactDot(const SignedGraph& g, Vertex u, Vertex v, int t);

// min{||p_u D^{-1/2} - p_v D^{-1/2}||^2, ||p_u D^{-1/2} + p_v D^{-1/2}||^2}.
absl::StatusOr<double> ExactDelta(const SignedGraph& g, Vertex u, Vertex v,
                                  int t);

// All degree-corrected discrepancy vectors of one graph, one row per start
// vertex. Doubles as a noise-free DotProductSource for the oracle's decision
// rules.
class ExactDotProducts : public DotProductSource {
 public:
  static absl::StatusOr<ExactDotProducts> Create(const SignedGraph& g, int t);

  double Dot(Vertex u, Vertex v) const { return rows_.row(u).dot(rows_.row(v)); }
  double Delta(Vertex u, Vertex v) const;
  double SquaredNorm(Vertex u) const { return rows_.row(u).squaredNorm(); }
  const Eigen::MatrixXd& rows() const { return rows_; }
  int steps() const { return steps_; }

  absl::StatusOr<double> Dot(Vertex u, Vertex v, Rng&) const override {
    return Dot(u, v);
  }

 private:
  ExactDotProducts(Eigen::MatrixXd rows, int steps)
      : rows_(std::move(rows)), steps_(steps) {}

  Eigen::MatrixXd rows_;
  int steps_;
};

// Eigen-decomposition of the signed normalized Laplacian
// I - D^{-1/2} A^sigma D^{-1/2}. Column i of `eigenvectors` is v_i,
// column i of `degree_corrected` is D^{-1/2} v_i. Eigenvalues ascend.
struct SpectralSummary {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  Eigen::MatrixXd degree_corrected;
};

absl::StatusOr<Eigen::MatrixXd> NormalizedLaplacian(const SignedGraph& g);
absl::StatusOr<SpectralSummary> Spectrum(const SignedGraph& g);

enum class BetaVariant { kSet, kGraph, kInner, kKWay };

struct BetaReport {
  Rational beta;
  // Witness of the minimum. For kKWay, `parts` holds all k witnesses and
  // `witness` the one attaining the maximum.
  SubBipartition witness;
  std::vector<SubBipartition> parts;
  BetaVariant variant = BetaVariant::kSet;
};

// beta_G(U): minimum of beta_G(V1, V2) over all partitions of U, by
// enumeration of 2^(|U|-1) splits. |U| <= kMaxSetEnumeration.
absl::StatusOr<BetaReport> BetaMinOverSet(const SignedGraph& g,
                                          const std::vector<Vertex>& set);

// beta(G): minimum over all sub-bipartitions. n <= kMaxGraphEnumeration.
absl::StatusOr<BetaReport> BetaGraph(const SignedGraph& g);

// Minimum of beta_G(U) over U with vol(U) <= vol(G)/2.
// n <= kMaxGraphEnumeration.
absl::StatusOr<BetaReport> BetaInner(const SignedGraph& g);

// k-way ratio: minimum over k disjoint non-empty sets of the largest
// beta_G(U_i). n <= kMaxKWayVertices, k <= kMaxKWayClusters.
absl::StatusOr<BetaReport> BetaK(const SignedGraph& g, int k);

// mu_U: sum of degrees inside the induced subgraph G[U].
int64_t InducedVolume(const SignedGraph& g, const std::vector<Vertex>& set);

// The constant-free side of the higher-order signed Cheeger inequality,
// lambda_k / 2 <= beta_k(G), checked exactly. The upper side carries an
// unknown constant, so only the ratio beta_k / (k^3 sqrt(lambda_k)) is
// reported.
struct CheegerReport {
  int k = 0;
  double lambda_k = 0;
  Rational beta_k;
  bool lower_holds = false;
  double upper_ratio = 0;
};

absl::StatusOr<CheegerReport> CheckCheeger(const SignedGraph& g, int k);

// For each of the first k degree-corrected eigenvectors, fits the center c_i
// minimising sum_u (v'_i(u) - c_i x_u / sqrt(mu_U))^2 over U, where x_u is
// +1 on V1 and -1 on V2, and reports how far each vertex lies from its
// center.
struct TwoCentersReport {
  double mu = 0;
  std::vector<double> centers;
  // deviations[i][j]: |v'_i(u_j) - c_i x_j / sqrt(mu)| for the j-th vertex of
  // V1 followed by V2.
  std::vector<std::vector<double>> deviations;
  std::vector<double> fraction_within;
  // Fraction of vertices whose entry has the sign of c_i x_u.
  std::vector<double> sign_agreement;
};

absl::StatusOr<TwoCentersReport> CheckTwoCenters(const SignedGraph& g,
                                                 const SpectralSummary& spectrum,
                                                 const SubBipartition& split,
                                                 int k, double deviation_bound);

}  // namespace signed_oracle::spectral

#endif  // SIGNED_ORACLE_SPECTRAL_H_
