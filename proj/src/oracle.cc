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
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/str_cat.h"
#include "signed_oracle/assignment.h"

namespace signed_oracle {
namespace {

// Stream tags for DeriveSeed.
constexpr uint64_t kSampleStream = 0x53414d50;     // sampling S
constexpr uint64_t kRepStream = 0x52455053;        // cached rep vectors
constexpr uint64_t kTheoryStream = 0x54484552;     // theoretical estimator
constexpr uint64_t kSeedPickStream = 0x5345454b;   // SeedsFromGroundTruth

class UnionFind {
 public:
  explicit UnionFind(size_t n) : parent_(n), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  size_t Find(size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Union(size_t a, size_t b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    --components_;
    return true;
  }
  size_t components() const { return components_; }

 private:
  std::vector<size_t> parent_;
  size_t components_;
};

absl::Status CheckVertex(const SignedGraph& g, Vertex v) {
  if (v >= g.num_vertices()) {
    return absl::InvalidArgumentError(absl::StrCat("unknown vertex ", v));
  }
  if (g.degree(v) == 0) {
    return absl::FailedPreconditionError(absl::StrCat("isolated vertex ", v));
  }
  return absl::OkStatus();
}

absl::StatusOr<RepresentativeVectors> DrawVectors(const SignedGraph& g, Vertex v,
                                                  const WalkParams& params,
                                                  Rng& rng) {
  RepresentativeVectors out;
  std::vector<double> products;
  for (int r = 0; r < params.repetitions; ++r) {
    absl::StatusOr<WalkVector> a = ComputeWalkVector(g, v, params, rng);
    if (!a.ok()) return a.status();
    absl::StatusOr<WalkVector> b = ComputeWalkVector(g, v, params, rng);
    if (!b.ok()) return b.status();
    products.push_back(SparseDot(*a, *b));
    out.first.push_back(*std::move(a));
    out.second.push_back(*std::move(b));
  }
  out.self_dot = Median(std::move(products));
  return out;
}

double CrossDot(const RepresentativeVectors& x, const RepresentativeVectors& y) {
  std::vector<double> products;
  products.reserve(x.first.size());
  for (size_t r = 0; r < x.first.size(); ++r) {
    products.push_back(SparseDot(x.first[r], y.first[r]));
  }
  return Median(std::move(products));
}

bool IsBicluster(const OracleConfig& config) {
  return config.task == OracleTask::kBicluster;
}

// Labels induced by the ground truth; 0 for unlabelled vertices.
absl::StatusOr<std::vector<int>> TruthLabels(const GroundTruth& truth,
                                             OracleTask task) {
  const std::vector<int> ids = truth.ClusterIds();
  std::map<int, int> rank;
  for (size_t i = 0; i < ids.size(); ++i) rank[ids[i]] = static_cast<int>(i);
  std::vector<int> labels(truth.num_vertices(), 0);
  for (Vertex v : truth.LabeledVertices()) {
    const int r = rank[*truth.cluster(v)];
    if (task == OracleTask::kBicluster) {
      if (truth.side(v) == 0) {
        return absl::InvalidArgumentError(
            absl::StrCat("bicluster task needs a side label for vertex ", v));
      }
      labels[v] = 2 * r + truth.side(v);
    } else {
      labels[v] = r + 1;
    }
  }
  return labels;
}

absl::StatusOr<std::vector<Vertex>> SampleVertices(const SignedGraph& g, int s,
                                                   uint64_t seed) {
  const size_t n = g.num_vertices();
  if (static_cast<size_t>(s) > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("sample size ", s, " exceeds vertex count ", n));
  }
  Rng rng(DeriveSeed(seed, kSampleStream));
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Vertex> sample;
    absl::flat_hash_set<Vertex> seen;
    bool ok = true;
    for (int i = 0; i < s; ++i) {
      const Vertex v = static_cast<Vertex>(rng.Below(n));
      if (g.degree(v) == 0 || !seen.insert(v).second) ok = false;
      sample.push_back(v);
    }
    if (ok) return sample;
  }
  return absl::FailedPreconditionError(absl::StrCat(
      "could not sample ", s, " distinct non-isolated vertices in 100 attempts"));
}

// Labels components of `uf` over reps 0..s-1 by first appearance.
std::vector<Representative> LabelComponents(const std::vector<Vertex>& sample,
                                            UnionFind& uf) {
  std::map<size_t, int> label_of_root;
  std::vector<Representative> reps;
  for (size_t i = 0; i < sample.size(); ++i) {
    auto [it, inserted] = label_of_root.try_emplace(
        uf.Find(i), static_cast<int>(label_of_root.size()) + 1);
    reps.push_back({sample[i], it->second});
  }
  return reps;
}

OracleState EmptyState(const SignedGraph& g, const OracleConfig& config) {
  OracleState state;
  state.config = config;
  state.graph_vertices = g.num_vertices();
  state.graph_fingerprint = g.Fingerprint();
  return state;
}

absl::StatusOr<OracleState> BuildUnseededTheoretical(
    const SignedGraph& g, const OracleConfig& config,
    const std::vector<Vertex>& sample, const DotProductSource& source) {
  Rng rng(DeriveSeed(config.walk.seed, kTheoryStream));
  const double norm_limit = NormTestThreshold(g, config);
  std::vector<double> self(sample.size());
  for (size_t i = 0; i < sample.size(); ++i) {
    absl::StatusOr<double> x = source.Dot(sample[i], sample[i], rng);
    if (!x.ok()) return x.status();
    if (*x >= norm_limit) {
      return absl::AbortedError(absl::StrCat("norm test failed at vertex ",
                                             sample[i], ": X_vv=", *x,
                                             " >= ", norm_limit));
    }
    self[i] = *x;
  }
  const double threshold = DistanceThreshold(g, config);
  OracleState state = EmptyState(g, config);
  UnionFind uf(sample.size());
  for (size_t i = 0; i < sample.size(); ++i) {
    for (size_t j = i + 1; j < sample.size(); ++j) {
      absl::StatusOr<double> x = source.Dot(sample[i], sample[j], rng);
      if (!x.ok()) return x.status();
      if (DeltaDistance(self[i], self[j], *x, IsBicluster(config)) <= threshold) {
        state.h_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        uf.Union(i, j);
      }
    }
  }
  const size_t wanted = static_cast<size_t>(NumLabels(config));
  if (uf.components() != wanted) {
    return absl::AbortedError(absl::StrCat("auxiliary graph has ", uf.components(),
                                           " connected components, expected ",
                                           wanted));
  }
  state.reps = LabelComponents(sample, uf);
  state.self_dots = std::move(self);
  return state;
}

absl::StatusOr<OracleState> BuildUnseededPractical(const SignedGraph& g,
                                                   const OracleConfig& config,
                                                   const std::vector<Vertex>& sample) {
  const WalkParams params = EffectiveWalkParams(config);
  const size_t s = sample.size();
  const int samples = config.median_samples;
  std::vector<std::vector<RepresentativeVectors>> drawn(samples);
  for (int m = 0; m < samples; ++m) {
    for (size_t i = 0; i < s; ++i) {
      Rng rng(DeriveSeed(params.seed, kRepStream + m, i));
      absl::StatusOr<RepresentativeVectors> vec = DrawVectors(g, sample[i], params, rng);
      if (!vec.ok()) return vec.status();
      drawn[m].push_back(*std::move(vec));
    }
  }

  struct Pair {
    double delta;
    int i;
    int j;
  };
  std::vector<Pair> pairs;
  pairs.reserve(s * (s - 1) / 2);
  std::vector<double> deltas(samples);
  for (size_t i = 0; i < s; ++i) {
    for (size_t j = i + 1; j < s; ++j) {
      for (int m = 0; m < samples; ++m) {
        deltas[m] = DeltaDistance(drawn[m][i].self_dot, drawn[m][j].self_dot,
                                  CrossDot(drawn[m][i], drawn[m][j]),
                                  IsBicluster(config));
      }
      pairs.push_back({Median(deltas), static_cast<int>(i), static_cast<int>(j)});
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    if (a.delta != b.delta) return a.delta < b.delta;
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });

  OracleState state = EmptyState(g, config);
  const size_t wanted = static_cast<size_t>(NumLabels(config));
  UnionFind uf(s);
  for (const Pair& p : pairs) {
    if (uf.components() <= wanted) break;
    state.h_edges.emplace_back(p.i, p.j);
    uf.Union(p.i, p.j);
  }
  state.reps = LabelComponents(sample, uf);
  state.vectors = std::move(drawn[0]);
  return state;
}

absl::StatusOr<QueryAnswer> Answer(const SignedGraph& g, const OracleState& state,
                                   Vertex v, Rng& rng,
                                   const DotProductSource* source) {
  if (state.graph_vertices != g.num_vertices()) {
    return absl::FailedPreconditionError("oracle was built on a different graph");
  }
  if (absl::Status s = CheckVertex(g, v); !s.ok()) return s;
  const OracleConfig& config = state.config;
  const int labels = NumLabels(config);
  if (labels == 1) return QueryAnswer{1, 0.0, false};
  const bool bicluster = IsBicluster(config);

  if (config.threshold == ThresholdMode::kTheoretical) {
    const WalkDotProductSource walk_source(g, EffectiveWalkParams(config));
    const DotProductSource& dots = source != nullptr ? *source : walk_source;
    const double threshold = DistanceThreshold(g, config);
    absl::StatusOr<double> xvv = dots.Dot(v, v, rng);
    if (!xvv.ok()) return xvv.status();
    for (size_t i = 0; i < state.reps.size(); ++i) {
      absl::StatusOr<double> xuv = dots.Dot(state.reps[i].vertex, v, rng);
      if (!xuv.ok()) return xuv.status();
      const double delta = DeltaDistance(state.self_dots[i], *xvv, *xuv, bicluster);
      if (delta <= threshold) {
        return QueryAnswer{state.reps[i].label, threshold - delta, false};
      }
    }
    return QueryAnswer{1 + static_cast<int>(rng.Below(labels)), 0.0, true};
  }

  absl::StatusOr<RepresentativeVectors> query =
      DrawVectors(g, v, EffectiveWalkParams(config), rng);
  if (!query.ok()) return query.status();
  // Best distance per label, and the arg-min rep overall.
  std::vector<double> best_by_label(labels + 1, std::numeric_limits<double>::infinity());
  size_t best = 0;
  double best_delta = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < state.reps.size(); ++i) {
    const double delta =
        DeltaDistance(state.vectors[i].self_dot, query->self_dot,
                      CrossDot(state.vectors[i], *query), bicluster);
    if (delta < best_delta) {
      best_delta = delta;
      best = i;
    }
    double& slot = best_by_label[state.reps[i].label];
    slot = std::min(slot, delta);
  }
  const int label = state.reps[best].label;
  double runner_up = std::numeric_limits<double>::infinity();
  for (int l = 1; l <= labels; ++l) {
    if (l != label) runner_up = std::min(runner_up, best_by_label[l]);
  }
  const double margin = std::isfinite(runner_up) ? runner_up - best_delta : 0.0;
  return QueryAnswer{label, margin, false};
}

}  // namespace

absl::Status ValidateOracleConfig(const OracleConfig& config) {
  if (config.k < 1) return absl::InvalidArgumentError("k must be >= 1");
  if (absl::Status s = ValidateWalkParams(config.walk); !s.ok()) return s;
  if (config.sample_size < 0) return absl::InvalidArgumentError("sample size must be >= 0");
  if (config.median_samples < 1 || config.median_samples % 2 == 0) {
    return absl::InvalidArgumentError("median samples must be odd and >= 1");
  }
  if (config.gamma <= 0 || config.gamma > 1) {
    return absl::InvalidArgumentError("gamma must lie in (0, 1]");
  }
  if (config.epsilon <= 0 || config.epsilon >= 1) {
    return absl::InvalidArgumentError("epsilon must lie in (0, 1)");
  }
  if (config.parallel < 1) return absl::InvalidArgumentError("parallel must be >= 1");
  return absl::OkStatus();
}

int NumLabels(const OracleConfig& config) {
  return IsBicluster(config) ? 2 * config.k : config.k;
}

WalkParams EffectiveWalkParams(const OracleConfig& config) {
  WalkParams params = config.walk;
  params.absolute = config.task == OracleTask::kCluster &&
                    config.threshold == ThresholdMode::kPractical;
  params.use_signs = config.mode == OracleMode::kSigned;
  return params;
}

int TheoreticalSampleSize(int k, double gamma) {
  const double s = std::ceil(20.0 * k * std::log(static_cast<double>(k)) / gamma);
  return std::max(k, static_cast<int>(s));
}

double DistanceThreshold(const SignedGraph& g, const OracleConfig& config) {
  const double d = config.max_degree > 0 ? config.max_degree : g.max_degree();
  return 1.0 / (2.0 * d * static_cast<double>(g.num_vertices()));
}

double NormTestThreshold(const SignedGraph& g, const OracleConfig& config) {
  const double k = config.k;
  const double log_k = std::max(1.0, std::log(k));
  return 4000.0 * k * k * log_k /
         (config.gamma * config.epsilon * static_cast<double>(g.num_vertices()));
}

absl::StatusOr<std::vector<Representative>> SeedsFromGroundTruth(
    const GroundTruth& truth, OracleTask task, int per_class, uint64_t seed) {
  absl::StatusOr<std::vector<int>> labels = TruthLabels(truth, task);
  if (!labels.ok()) return labels.status();
  std::map<int, std::vector<Vertex>> by_label;
  for (Vertex v = 0; v < labels->size(); ++v) {
    if ((*labels)[v] > 0) by_label[(*labels)[v]].push_back(v);
  }
  if (by_label.empty()) return absl::InvalidArgumentError("ground truth is empty");
  Rng rng(DeriveSeed(seed, kSeedPickStream));
  std::vector<Representative> seeds;
  for (auto& [label, members] : by_label) {
    size_t take = members.size();
    if (per_class > 0) take = std::min<size_t>(take, per_class);
    // Partial Fisher-Yates.
    for (size_t i = 0; i < take; ++i) {
      std::swap(members[i], members[i + rng.Below(members.size() - i)]);
      seeds.push_back({members[i], label});
    }
  }
  return seeds;
}

absl::StatusOr<OracleState> BuildSeeded(const SignedGraph& g,
                                        const std::vector<Representative>& seeds,
                                        const OracleConfig& config) {
  if (absl::Status s = ValidateOracleConfig(config); !s.ok()) return s;
  const int labels = NumLabels(config);
  std::map<Vertex, int> label_of;
  std::vector<bool> present(labels + 1, false);
  std::vector<Representative> reps;
  for (const Representative& r : seeds) {
    if (absl::Status s = CheckVertex(g, r.vertex); !s.ok()) return s;
    if (r.label < 1 || r.label > labels) {
      return absl::InvalidArgumentError(absl::StrCat(
          "seed label ", r.label, " of vertex ", r.vertex, " outside 1..", labels));
    }
    auto [it, inserted] = label_of.try_emplace(r.vertex, r.label);
    if (!inserted) {
      if (it->second != r.label) {
        return absl::InvalidArgumentError(
            absl::StrCat("vertex ", r.vertex, " seeded with conflicting labels ",
                         it->second, " and ", r.label));
      }
      continue;
    }
    present[r.label] = true;
    reps.push_back(r);
  }
  for (int l = 1; l <= labels; ++l) {
    if (!present[l]) {
      return absl::InvalidArgumentError(absl::StrCat("empty label class ", l));
    }
  }

  OracleState state = EmptyState(g, config);
  state.reps = std::move(reps);
  const WalkParams params = EffectiveWalkParams(config);
  if (config.threshold == ThresholdMode::kPractical) {
    for (size_t i = 0; i < state.reps.size(); ++i) {
      Rng rng(DeriveSeed(params.seed, kRepStream, i));
      absl::StatusOr<RepresentativeVectors> vec =
          DrawVectors(g, state.reps[i].vertex, params, rng);
      if (!vec.ok()) return vec.status();
      state.vectors.push_back(*std::move(vec));
    }
  } else {
    Rng rng(DeriveSeed(params.seed, kTheoryStream));
    for (const Representative& r : state.reps) {
      absl::StatusOr<double> x = EstDotProd(g, r.vertex, r.vertex, params, rng);
      if (!x.ok()) return x.status();
      state.self_dots.push_back(*x);
    }
  }
  return state;
}

absl::StatusOr<OracleState> BuildUnseeded(const SignedGraph& g,
                                          const OracleConfig& config, uint64_t seed,
                                          const DotProductSource* source) {
  if (absl::Status s = ValidateOracleConfig(config); !s.ok()) return s;
  if (g.num_vertices() == 0) return absl::InvalidArgumentError("empty graph");
  const bool theoretical = config.threshold == ThresholdMode::kTheoretical;
  int s = config.sample_size;
  if (s == 0) {
    s = theoretical ? TheoreticalSampleSize(config.k, config.gamma)
                    : (IsBicluster(config) ? 6 : 3) * config.k;
  }
  if (s < NumLabels(config)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "sample size ", s, " is smaller than the number of labels ", NumLabels(config)));
  }
  absl::StatusOr<std::vector<Vertex>> sample = SampleVertices(g, s, seed);
  if (!sample.ok()) return sample.status();
  if (!theoretical) return BuildUnseededPractical(g, config, *sample);
  const WalkDotProductSource walk_source(g, EffectiveWalkParams(config));
  return BuildUnseededTheoretical(g, config, *sample,
                                  source != nullptr ? *source : walk_source);
}

absl::StatusOr<QueryAnswer> WhichCluster(const SignedGraph& g,
                                         const OracleState& state, Vertex v,
                                         Rng& rng, const DotProductSource* source) {
  if (state.config.task != OracleTask::kCluster) {
    return absl::InvalidArgumentError("oracle was built for biclustering");
  }
  return Answer(g, state, v, rng, source);
}

absl::StatusOr<QueryAnswer> WhichBicluster(const SignedGraph& g,
                                           const OracleState& state, Vertex v,
                                           Rng& rng, const DotProductSource* source) {
  if (state.config.task != OracleTask::kBicluster) {
    return absl::InvalidArgumentError("oracle was built for clustering");
  }
  return Answer(g, state, v, rng, source);
}

absl::StatusOr<std::vector<QueryAnswer>> QueryBatch(const SignedGraph& g,
                                                    const OracleState& state,
                                                    const std::vector<Vertex>& vertices,
                                                    uint64_t seed) {
  std::vector<std::optional<absl::StatusOr<QueryAnswer>>> results(vertices.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < vertices.size(); i = next++) {
      Rng rng(DeriveSeed(seed, vertices[i]));
      results[i] = Answer(g, state, vertices[i], rng, nullptr);
    }
  };
  const size_t threads = std::min<size_t>(std::max(1, state.config.parallel),
                                          vertices.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  std::vector<QueryAnswer> answers;
  answers.reserve(vertices.size());
  for (auto& r : results) {
    if (!r->ok()) return r->status();
    answers.push_back(**r);
  }
  return answers;
}

absl::StatusOr<TuneResult> TuneParameters(const SignedGraph& g,
                                          const GroundTruth& labeled,
                                          const std::vector<WalkParams>& grid,
                                          const OracleConfig& config,
                                          const TuneOptions& options) {
  if (grid.empty()) return absl::InvalidArgumentError("empty parameter grid");
  if (labeled.empty()) return absl::InvalidArgumentError("no labelled vertices");
  absl::StatusOr<std::vector<int>> truth = TruthLabels(labeled, config.task);
  if (!truth.ok()) return truth.status();

  const bool seeded = options.seeds_per_class > 0;
  std::vector<Representative> seeds;
  std::vector<Vertex> validation;
  if (seeded) {
    absl::StatusOr<std::vector<Representative>> picked = SeedsFromGroundTruth(
        labeled, config.task, options.seeds_per_class, options.seed);
    if (!picked.ok()) return picked.status();
    seeds = *std::move(picked);
    absl::flat_hash_set<Vertex> seed_set;
    for (const Representative& r : seeds) seed_set.insert(r.vertex);
    for (Vertex v : labeled.LabeledVertices()) {
      if (!seed_set.contains(v)) validation.push_back(v);
    }
  }
  if (validation.empty()) validation = labeled.LabeledVertices();

  TuneResult result;
  for (size_t p = 0; p < grid.size(); ++p) {
    OracleConfig point = config;
    point.walk.steps = grid[p].steps;
    point.walk.walks = grid[p].walks;
    point.walk.repetitions = grid[p].repetitions;
    absl::StatusOr<OracleState> state =
        seeded ? BuildSeeded(g, seeds, point) : BuildUnseeded(g, point, options.seed);
    if (!state.ok()) return state.status();
    absl::StatusOr<std::vector<QueryAnswer>> answers =
        QueryBatch(g, *state, validation, options.seed);
    if (!answers.ok()) return answers.status();

    int64_t correct = 0;
    if (seeded) {
      for (size_t i = 0; i < validation.size(); ++i) {
        correct += (*answers)[i].label == (*truth)[validation[i]];
      }
    } else {
      int truth_classes = 0;
      for (Vertex v : validation) truth_classes = std::max(truth_classes, (*truth)[v]);
      const int out_classes = NumLabels(point);
      const bool transpose = truth_classes > out_classes;
      const int rows = transpose ? out_classes : truth_classes;
      const int cols = transpose ? truth_classes : out_classes;
      std::vector<std::vector<int64_t>> overlap(rows, std::vector<int64_t>(cols, 0));
      for (size_t i = 0; i < validation.size(); ++i) {
        const int a = (*truth)[validation[i]] - 1;
        const int b = (*answers)[i].label - 1;
        ++(transpose ? overlap[b][a] : overlap[a][b]);
      }
      const std::vector<int> match = MaxWeightAssignment(overlap);
      for (int r = 0; r < rows; ++r) correct += overlap[r][match[r]];
    }
    result.correct.push_back(correct);

    const auto cost = [&](size_t i) {
      return static_cast<int64_t>(grid[i].walks) * grid[i].steps;
    };
    if (p == 0 || correct > result.correct[result.best_index] ||
        (correct == result.correct[result.best_index] &&
         cost(p) < cost(result.best_index))) {
      result.best_index = p;
    }
  }
  result.best = grid[result.best_index];
  result.best.seed = config.walk.seed;
  return result;
}

std::string ModeName(OracleMode mode) {
  return mode == OracleMode::kSigned ? "signed" : "unsigned";
}
std::string TaskName(OracleTask task) {
  return task == OracleTask::kCluster ? "cluster" : "bicluster";
}
std::string ThresholdName(ThresholdMode mode) {
  return mode == ThresholdMode::kPractical ? "practical" : "theoretical";
}

absl::StatusOr<OracleMode> ParseMode(const std::string& name) {
  if (name == "signed") return OracleMode::kSigned;
  if (name == "unsigned") return OracleMode::kUnsigned;
  return absl::InvalidArgumentError(absl::StrCat("unknown mode '", name, "'"));
}
absl::StatusOr<OracleTask> ParseTask(const std::string& name) {
  if (name == "cluster") return OracleTask::kCluster;
  if (name == "bicluster") return OracleTask::kBicluster;
  return absl::InvalidArgumentError(absl::StrCat("unknown task '", name, "'"));
}
absl::StatusOr<ThresholdMode> ParseThreshold(const std::string& name) {
  if (name == "practical") return ThresholdMode::kPractical;
  if (name == "theoretical") return ThresholdMode::kTheoretical;
  return absl::InvalidArgumentError(absl::StrCat("unknown threshold mode '", name, "'"));
}

}  // namespace signed_oracle
