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

#include "signed_oracle/spectral.h"

#include <cmath>

#include "absl/strings/str_cat.h"

namespace signed_oracle::spectral {
namespace {

// p <- p W, using the adjacency lists.
Eigen::VectorXd StepForward(const SignedGraph& g, const Eigen::VectorXd& p) {
  Eigen::VectorXd next = 0.5 * p;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (p[u] == 0.0) continue;
    const double share = p[u] / (2.0 * g.degree(u));
    for (const Neighbor& nb : g.neighbors(u)) next[nb.vertex] += nb.sign * share;
  }
  return next;
}

absl::Status CheckVertex(const SignedGraph& g, Vertex u) {
  if (u >= g.num_vertices()) {
    return absl::InvalidArgumentError(absl::StrCat("vertex ", u, " out of range"));
  }
  return absl::OkStatus();
}

Eigen::VectorXd InverseSqrtDegrees(const SignedGraph& g) {
  Eigen::VectorXd s(g.num_vertices());
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    s[u] = 1.0 / std::sqrt(static_cast<double>(g.degree(u)));
  }
  return s;
}

}  // namespace

absl::Status CheckDense(const SignedGraph& g) {
  if (g.num_vertices() > kMaxDenseVertices) {
    return absl::OutOfRangeError(absl::StrCat(
        "dense computation limited to ", kMaxDenseVertices, " vertices, got ",
        g.num_vertices()));
  }
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (g.degree(u) == 0) {
      return absl::FailedPreconditionError(absl::StrCat("isolated vertex ", u));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<Eigen::MatrixXd> WalkMatrix(const SignedGraph& g) {
  if (absl::Status s = CheckDense(g); !s.ok()) return s;
  const size_t n = g.num_vertices();
  Eigen::MatrixXd w = 0.5 * Eigen::MatrixXd::Identity(n, n);
  for (Vertex u = 0; u < n; ++u) {
    for (const Neighbor& nb : g.neighbors(u)) {
      w(u, nb.vertex) += nb.sign / (2.0 * g.degree(u));
    }
  }
  return w;
}

absl::StatusOr<ExactDiscrepancy> ExactDiscrepancyVector(const SignedGraph& g,
                                                        Vertex u, int t) {
  if (absl::Status s = CheckDense(g); !s.ok()) return s;
  if (absl::Status s = CheckVertex(g, u); !s.ok()) return s;
  if (t < 0) return absl::InvalidArgumentError("t must be >= 0");
  Eigen::VectorXd p = Eigen::VectorXd::Zero(g.num_vertices());
  p[u] = 1.0;
  for (int step = 0; step < t; ++step) p = StepForward(g, p);
  return ExactDiscrepancy{std::move(p)};
}

absl::StatusOr<Eigen::VectorXd> DegreeCorrectedDiscrepancy(const SignedGraph& g,
                                                           Vertex u, int t) {
  absl::StatusOr<ExactDiscrepancy> d = ExactDiscrepancyVector(g, u, t);
  if (!d.ok()) return d.status();
  return d->p.cwiseProduct(InverseSqrtDegrees(g));
}

absl::StatusOr<double> ExactDot(const SignedGraph& g, Vertex u, Vertex v, int t) {
  absl::StatusOr<Eigen::VectorXd> a = DegreeCorrectedDiscrepancy(g, u, t);
  if (!a.ok()) return a.status();
  absl::StatusOr<Eigen::VectorXd> b = DegreeCorrectedDiscrepancy(g, v, t);
  if (!b.ok()) return b.status();
  return a->dot(*b);
}

absl::StatusOr<double> ExactDelta(const SignedGraph& g, Vertex u, Vertex v,
                                  int t) {
  absl::StatusOr<Eigen::VectorXd> a = DegreeCorrectedDiscrepancy(g, u, t);
  if (!a.ok()) return a.status();
  absl::StatusOr<Eigen::VectorXd> b = DegreeCorrectedDiscrepancy(g, v, t);
  if (!b.ok()) return b.status();
  return std::min((*a - *b).squaredNorm(), (*a + *b).squaredNorm());
}

absl::StatusOr<ExactDotProducts> ExactDotProducts::Create(const SignedGraph& g,
                                                          int t) {
  if (absl::Status s = CheckDense(g); !s.ok()) return s;
  if (t < 0) return absl::InvalidArgumentError("t must be >= 0");
  const size_t n = g.num_vertices();
  // Row i holds p_i^t; every step right-multiplies by W.
  Eigen::MatrixXd rows = Eigen::MatrixXd::Identity(n, n);
  for (int step = 0; step < t; ++step) {
    Eigen::MatrixXd next = 0.5 * rows;
    for (Vertex u = 0; u < n; ++u) {
      const double scale = 1.0 / (2.0 * g.degree(u));
      for (const Neighbor& nb : g.neighbors(u)) {
        next.col(nb.vertex) += (nb.sign * scale) * rows.col(u);
      }
    }
    rows = std::move(next);
  }
  const Eigen::VectorXd inv_sqrt = InverseSqrtDegrees(g);
  rows = rows * inv_sqrt.asDiagonal();
  return ExactDotProducts(std::move(rows), t);
}

double ExactDotProducts::Delta(Vertex u, Vertex v) const {
  return std::min((rows_.row(u) - rows_.row(v)).squaredNorm(),
                  (rows_.row(u) + rows_.row(v)).squaredNorm());
}

absl::StatusOr<Eigen::MatrixXd> NormalizedLaplacian(const SignedGraph& g) {
  if (absl::Status s = CheckDense(g); !s.ok()) return s;
  const size_t n = g.num_vertices();
  Eigen::MatrixXd l = Eigen::MatrixXd::Identity(n, n);
  for (Vertex u = 0; u < n; ++u) {
    for (const Neighbor& nb : g.neighbors(u)) {
      l(u, nb.vertex) -=
          nb.sign / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(nb.vertex));
    }
  }
  return l;
}

absl::StatusOr<SpectralSummary> Spectrum(const SignedGraph& g) {
  absl::StatusOr<Eigen::MatrixXd> l = NormalizedLaplacian(g);
  if (!l.ok()) return l.status();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(*l);
  if (solver.info() != Eigen::Success) {
    return absl::InternalError("eigendecomposition did not converge");
  }
  SpectralSummary summary;
  summary.eigenvalues = solver.eigenvalues();
  summary.eigenvectors = solver.eigenvectors();
  summary.degree_corrected =
      InverseSqrtDegrees(g).asDiagonal() * summary.eigenvectors;
  return summary;
}

absl::StatusOr<CheegerReport> CheckCheeger(const SignedGraph& g, int k) {
  absl::StatusOr<SpectralSummary> spectrum = Spectrum(g);
  if (!spectrum.ok()) return spectrum.status();
  if (k < 1 || static_cast<size_t>(k) > g.num_vertices()) {
    return absl::InvalidArgumentError(absl::StrCat("k=", k, " out of range"));
  }
  absl::StatusOr<BetaReport> beta = BetaK(g, k);
  if (!beta.ok()) return beta.status();
  CheegerReport report;
  report.k = k;
  report.lambda_k = std::max(0.0, spectrum->eigenvalues[k - 1]);
  report.beta_k = beta->beta;
  report.lower_holds =
      report.lambda_k / 2.0 <= report.beta_k.ToDouble() + kEigenTolerance;
  report.upper_ratio =
      report.lambda_k > kEigenTolerance
          ? report.beta_k.ToDouble() / (std::pow(k, 3) * std::sqrt(report.lambda_k))
          : 0.0;
  return report;
}

absl::StatusOr<TwoCentersReport> CheckTwoCenters(const SignedGraph& g,
                                                 const SpectralSummary& spectrum,
                                                 const SubBipartition& split,
                                                 int k, double deviation_bound) {
  if (absl::Status s = ValidateSubBipartition(g, split); !s.ok()) return s;
  if (k < 1 || k > spectrum.degree_corrected.cols()) {
    return absl::InvalidArgumentError(absl::StrCat("k=", k, " out of range"));
  }
  std::vector<Vertex> members = split.first;
  members.insert(members.end(), split.second.begin(), split.second.end());
  std::vector<double> sides(members.size(), -1.0);
  std::fill(sides.begin(), sides.begin() + split.first.size(), 1.0);

  TwoCentersReport report;
  report.mu = static_cast<double>(InducedVolume(g, members));
  if (report.mu <= 0) {
    return absl::FailedPreconditionError("induced subgraph has no edges");
  }
  const double inv_sqrt_mu = 1.0 / std::sqrt(report.mu);
  const double m = static_cast<double>(members.size());
  for (int i = 0; i < k; ++i) {
    const auto column = spectrum.degree_corrected.col(i);
    double projection = 0.0;
    for (size_t j = 0; j < members.size(); ++j) {
      projection += sides[j] * column[members[j]];
    }
    // Least squares: c = sqrt(mu) * sum_u x_u v'(u) / |U|.
    const double center = projection / (m * inv_sqrt_mu);
    std::vector<double> deviations(members.size());
    size_t within = 0, agree = 0;
    for (size_t j = 0; j < members.size(); ++j) {
      const double target = center * sides[j] * inv_sqrt_mu;
      const double entry = column[members[j]];
      deviations[j] = std::fabs(entry - target);
      if (deviations[j] <= deviation_bound) ++within;
      if (target != 0.0 && std::signbit(entry) == std::signbit(target)) ++agree;
    }
    report.centers.push_back(center);
    report.deviations.push_back(std::move(deviations));
    report.fraction_within.push_back(within / m);
    report.sign_agreement.push_back(agree / m);
  }
  return report;
}

}  // namespace signed_oracle::spectral
