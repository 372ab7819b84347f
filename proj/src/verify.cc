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

#include "signed_oracle/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/str_cat.h"
#include "signed_oracle/rng.h"
#include "signed_oracle/spectral.h"

namespace signed_oracle {
namespace {

namespace sp = spectral;

std::string Num(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

int StepsFor(size_t n) {
  return static_cast<int>(std::ceil(4.0 * std::log(static_cast<double>(n))));
}

// Clusters of a ground truth as vertex lists, ordered by cluster id.
std::vector<std::vector<Vertex>> ClusterSets(const GroundTruth& truth) {
  const std::vector<int> ids = truth.ClusterIds();
  std::vector<std::vector<Vertex>> sets(ids.size());
  for (Vertex v : truth.LabeledVertices()) {
    const auto it = std::lower_bound(ids.begin(), ids.end(), *truth.cluster(v));
    sets[it - ids.begin()].push_back(v);
  }
  return sets;
}

double Percentile(std::vector<double> values, double q) {
  std::sort(values.begin(), values.end());
  const size_t index = static_cast<size_t>(std::ceil(q * values.size()));
  return values[std::min(values.size() - 1, index == 0 ? 0 : index - 1)];
}

absl::StatusOr<std::vector<VerifyCase>> CheegerCases(int count, uint64_t seed) {
  std::vector<VerifyCase> cases;
  for (int i = 0; i < count; ++i) {
    Rng rng(DeriveSeed(seed, i));
    const size_t n = 2 + rng.Below(7);
    const int k = 1 + static_cast<int>(rng.Below(2));
    const double edge_prob = 0.2 + 0.7 * rng.Uniform();
    const double negative_prob = rng.Uniform();
    absl::StatusOr<SignedGraph> g = RandomSignedGraph(n, edge_prob, negative_prob, rng.Next());
    if (!g.ok()) return g.status();
    absl::StatusOr<sp::CheegerReport> report = sp::CheckCheeger(*g, k);
    if (!report.ok()) return report.status();
    cases.push_back({absl::StrCat("cheeger/", i), report->lower_holds,
                     absl::StrCat("n=", n, " m=", g->num_edges(), " k=", k,
                                  " lambda_k=", Num(report->lambda_k),
                                  " beta_k=", report->beta_k.ToString(),
                                  " upper_ratio=", Num(report->upper_ratio))});
  }
  return cases;
}

ClusterableParams GapParams(int i, uint64_t seed) {
  ClusterableParams params;
  params.k = 2 + i % 2;
  params.block_size = 20;
  params.p_in = 0.7;
  params.sign_noise = 0.02;
  params.cross_edges = 2;
  params.seed = DeriveSeed(seed, i);
  return params;
}

absl::StatusOr<std::vector<VerifyCase>> EigengapCases(int count, uint64_t seed) {
  std::vector<VerifyCase> cases;
  for (int i = 0; i < count; ++i) {
    const ClusterableParams params = GapParams(i, seed);
    absl::StatusOr<SyntheticGraph> instance = GenerateClusterable(params);
    if (!instance.ok()) return instance.status();
    const size_t n = instance->graph.num_vertices();
    absl::StatusOr<EigenGapStats> stats =
        EigenGap(*instance, params.k, StepsFor(n), 0.1);
    if (!stats.ok()) return stats.status();
    const bool upper = stats->lambda_k <= 2.0 * stats->beta_out + sp::kEigenTolerance;
    const bool gap = stats->lambda_next >= 2.0 * stats->lambda_k;
    const bool norm = stats->norm_fraction >= 0.9;
    cases.push_back({absl::StrCat("eigengap/", i), upper && gap && norm,
                     absl::StrCat("n=", n, " k=", params.k,
                                  " lambda_k=", Num(stats->lambda_k),
                                  " lambda_k+1=", Num(stats->lambda_next),
                                  " beta_out=", Num(stats->beta_out),
                                  " norm_fraction=", Num(stats->norm_fraction))});
  }
  return cases;
}

absl::StatusOr<std::vector<VerifyCase>> TwoCenterCases(int count, uint64_t seed) {
  std::vector<VerifyCase> cases;
  for (int i = 0; i < count; ++i) {
    SbmParams params;
    params.n = 200;
    params.k = 2;
    params.seed = DeriveSeed(seed, i);
    absl::StatusOr<SyntheticGraph> instance = GenerateSbm(params);
    if (!instance.ok()) return instance.status();
    absl::StatusOr<sp::SpectralSummary> spectrum = sp::Spectrum(instance->graph);
    if (!spectrum.ok()) return spectrum.status();
    const GroundTruth& truth = instance->truth;
    for (const std::vector<Vertex>& cluster : ClusterSets(truth)) {
      SubBipartition split;
      for (Vertex v : cluster) (truth.side(v) == 1 ? split.first : split.second).push_back(v);
      absl::StatusOr<sp::TwoCentersReport> report = sp::CheckTwoCenters(
          instance->graph, *spectrum, split, params.k,
          std::numeric_limits<double>::infinity());
      if (!report.ok()) return report.status();
      std::vector<double> all;
      for (const auto& d : report->deviations) all.insert(all.end(), d.begin(), d.end());
      const double bound = Percentile(all, 0.95);
      size_t within = 0;
      for (double d : all) within += d <= bound;
      const double fraction = static_cast<double>(within) / all.size();
      const double agreement =
          *std::max_element(report->sign_agreement.begin(), report->sign_agreement.end());
      cases.push_back({absl::StrCat("two-centers/", i, "/", *truth.cluster(cluster[0])),
                       fraction >= 0.9 && agreement >= 0.9,
                       absl::StrCat("n=", params.n, " k=", params.k,
                                    " bound=", Num(bound), " within=", Num(fraction),
                                    " sign_agreement=", Num(agreement))});
    }
  }
  return cases;
}

ClusterableParams SeparationParams(int i, uint64_t seed) {
  ClusterableParams params;
  params.k = 2;
  params.block_size = 100;
  params.p_in = 0.3;
  params.sign_noise = 0.0;
  // Even cases are exactly balanced and disconnected, odd ones have a sparse cut.
  params.cross_edges = i % 2 == 0 ? 0 : 4;
  params.seed = DeriveSeed(seed, i);
  return params;
}

absl::StatusOr<std::vector<VerifyCase>> SeparationCases(int count, uint64_t seed) {
  std::vector<VerifyCase> cases;
  for (int i = 0; i < count; ++i) {
    const ClusterableParams params = SeparationParams(i, seed);
    absl::StatusOr<SyntheticGraph> instance = GenerateClusterable(params);
    if (!instance.ok()) return instance.status();
    const size_t n = instance->graph.num_vertices();
    absl::StatusOr<SeparationStats> stats = DeltaSeparation(*instance, StepsFor(n));
    if (!stats.ok()) return stats.status();
    cases.push_back({absl::StrCat("delta-separation/", i),
                     stats->within_fraction >= 0.95 && stats->across_fraction >= 0.95,
                     absl::StrCat("n=", n, " cross_edges=", params.cross_edges,
                                  " t=", stats->steps,
                                  " within_threshold=", Num(stats->within_threshold),
                                  " within_fraction=", Num(stats->within_fraction),
                                  " across_threshold=", Num(stats->across_threshold),
                                  " across_fraction=", Num(stats->across_fraction))});
  }
  return cases;
}

absl::StatusOr<std::vector<VerifyCase>> BetaInnerCases(int count, uint64_t seed) {
  std::vector<VerifyCase> cases;
  for (int i = 0; i < count; ++i) {
    Rng rng(DeriveSeed(seed, i));
    const size_t n = 2 + rng.Below(9);
    const double edge_prob = 0.2 + 0.7 * rng.Uniform();
    absl::StatusOr<SignedGraph> g =
        RandomSignedGraph(n, edge_prob, rng.Uniform(), rng.Next());
    if (!g.ok()) return g.status();
    absl::StatusOr<sp::BetaReport> inner = sp::BetaInner(*g);
    if (!inner.ok()) return inner.status();
    absl::StatusOr<sp::BetaReport> two = sp::BetaK(*g, 2);
    if (!two.ok()) return two.status();

    // A random U whose induced subgraph has at least one edge.
    std::vector<Vertex> set;
    SignedGraph induced;
    for (int attempt = 0;; ++attempt) {
      set.clear();
      for (Vertex v = 0; v < n; ++v) {
        if (rng.Coin()) set.push_back(v);
      }
      if (attempt >= 100) {
        set.clear();
        for (Vertex v = 0; v < n; ++v) set.push_back(v);
      }
      if (set.size() < 2) continue;
      absl::StatusOr<SignedGraph> sub = InducedSubgraph(*g, set);
      if (!sub.ok()) return sub.status();
      if (sub->num_edges() > 0) {
        induced = *std::move(sub);
        break;
      }
    }
    absl::StatusOr<sp::BetaReport> local = sp::BetaGraph(induced);
    if (!local.ok()) return local.status();
    absl::StatusOr<sp::BetaReport> outer = sp::BetaMinOverSet(*g, set);
    if (!outer.ok()) return outer.status();
    cases.push_back({absl::StrCat("beta-inner/", i),
                     inner->beta <= two->beta && local->beta <= outer->beta,
                     absl::StrCat("n=", n, " m=", g->num_edges(),
                                  " beta_inner=", inner->beta.ToString(),
                                  " beta_2=", two->beta.ToString(), " |U|=", set.size(),
                                  " beta_G[U]=", local->beta.ToString(),
                                  " beta_G(U)=", outer->beta.ToString())});
  }
  return cases;
}

}  // namespace

std::string SuiteName(VerifySuite suite) {
  switch (suite) {
    case VerifySuite::kCheeger:
      return "cheeger";
    case VerifySuite::kEigengap:
      return "eigengap";
    case VerifySuite::kTwoCenters:
      return "two-centers";
    case VerifySuite::kDeltaSeparation:
      return "delta-separation";
    case VerifySuite::kBetaInner:
      return "beta-inner";
  }
  return "";
}

absl::StatusOr<VerifySuite> ParseSuite(const std::string& name) {
  for (VerifySuite s : {VerifySuite::kCheeger, VerifySuite::kEigengap,
                        VerifySuite::kTwoCenters, VerifySuite::kDeltaSeparation,
                        VerifySuite::kBetaInner}) {
    if (SuiteName(s) == name) return s;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown suite '", name, "'"));
}

int VerifyReport::failures() const {
  int failed = 0;
  for (const VerifyCase& c : cases) failed += !c.pass;
  return failed;
}

absl::StatusOr<SignedGraph> InducedSubgraph(const SignedGraph& g,
                                            const std::vector<Vertex>& set) {
  absl::flat_hash_map<Vertex, Vertex> local;
  for (Vertex v : set) {
    if (v >= g.num_vertices()) {
      return absl::InvalidArgumentError(absl::StrCat("vertex ", v, " out of range"));
    }
    if (!local.try_emplace(v, static_cast<Vertex>(local.size())).second) {
      return absl::InvalidArgumentError(absl::StrCat("duplicate vertex ", v));
    }
  }
  std::vector<SignedEdge> edges;
  for (Vertex v : set) {
    for (const Neighbor& nb : g.neighbors(v)) {
      const auto it = local.find(nb.vertex);
      if (it != local.end() && v < nb.vertex) {
        edges.push_back({local[v], it->second, nb.sign});
      }
    }
  }
  return SignedGraph::FromEdges(set.size(), edges);
}

absl::StatusOr<SeparationStats> DeltaSeparation(const SyntheticGraph& instance,
                                                int steps) {
  const SignedGraph& g = instance.graph;
  absl::StatusOr<sp::ExactDotProducts> exact = sp::ExactDotProducts::Create(g, steps);
  if (!exact.ok()) return exact.status();
  SeparationStats stats;
  stats.steps = steps;
  stats.within_threshold =
      1.0 / (4.0 * static_cast<double>(g.num_vertices()) * g.max_degree());
  stats.across_threshold = 1.0 / static_cast<double>(g.volume());
  int64_t within = 0, within_ok = 0, across = 0, across_ok = 0;
  const std::vector<Vertex> labeled = instance.truth.LabeledVertices();
  for (size_t a = 0; a < labeled.size(); ++a) {
    for (size_t b = a + 1; b < labeled.size(); ++b) {
      const Vertex u = labeled[a], v = labeled[b];
      const double delta = exact->Delta(u, v);
      if (instance.truth.cluster(u) == instance.truth.cluster(v)) {
        ++within;
        within_ok += delta <= stats.within_threshold;
      } else {
        ++across;
        across_ok += delta >= stats.across_threshold;
      }
    }
  }
  stats.within_fraction = within > 0 ? static_cast<double>(within_ok) / within : 1.0;
  stats.across_fraction = across > 0 ? static_cast<double>(across_ok) / across : 1.0;
  return stats;
}

absl::StatusOr<EigenGapStats> EigenGap(const SyntheticGraph& instance, int k, int steps,
                                       double alpha) {
  const SignedGraph& g = instance.graph;
  if (k < 1 || static_cast<size_t>(k) >= g.num_vertices()) {
    return absl::InvalidArgumentError(absl::StrCat("k=", k, " out of range"));
  }
  absl::StatusOr<sp::SpectralSummary> spectrum = sp::Spectrum(g);
  if (!spectrum.ok()) return spectrum.status();
  EigenGapStats stats;
  stats.lambda_k = spectrum->eigenvalues[k - 1];
  stats.lambda_next = spectrum->eigenvalues[k];
  for (const std::vector<Vertex>& cluster : ClusterSets(instance.truth)) {
    absl::StatusOr<sp::BetaReport> beta = sp::BetaMinOverSet(g, cluster);
    if (!beta.ok()) return beta.status();
    stats.beta_out = std::max(stats.beta_out, beta->beta.ToDouble());
  }
  absl::StatusOr<sp::ExactDotProducts> exact = sp::ExactDotProducts::Create(g, steps);
  if (!exact.ok()) return exact.status();
  const double n = static_cast<double>(g.num_vertices());
  const double bound = 2.0 * k / (alpha * n);
  int64_t small = 0;
  for (Vertex u = 0; u < g.num_vertices(); ++u) small += exact->SquaredNorm(u) <= bound;
  stats.norm_fraction = static_cast<double>(small) / n;
  return stats;
}

absl::StatusOr<VerifyReport> RunVerifySuite(VerifySuite suite,
                                            const VerifyOptions& options) {
  if (options.fuzz < 0) return absl::InvalidArgumentError("fuzz must be >= 0");
  VerifyReport report{suite, {}};
  absl::StatusOr<std::vector<VerifyCase>> cases;
  const auto count = [&](int fallback) { return options.fuzz > 0 ? options.fuzz : fallback; };
  switch (suite) {
    case VerifySuite::kCheeger:
      cases = CheegerCases(count(200), options.seed);
      break;
    case VerifySuite::kEigengap:
      cases = EigengapCases(count(10), options.seed);
      break;
    case VerifySuite::kTwoCenters:
      cases = TwoCenterCases(count(3), options.seed);
      break;
    case VerifySuite::kDeltaSeparation:
      cases = SeparationCases(count(2), options.seed);
      break;
    case VerifySuite::kBetaInner:
      cases = BetaInnerCases(count(100), options.seed);
      break;
  }
  if (!cases.ok()) return cases.status();
  report.cases = *std::move(cases);
  return report;
}

void WriteVerifyReport(const VerifyReport& report, std::ostream& out) {
  for (const VerifyCase& c : report.cases) {
    out << "case " << c.name << ' ' << (c.pass ? "pass" : "fail") << ' ' << c.detail
        << '\n';
  }
  out << "summary " << SuiteName(report.suite) << " cases=" << report.cases.size()
      << " failures=" << report.failures() << '\n';
}

}  // namespace signed_oracle
