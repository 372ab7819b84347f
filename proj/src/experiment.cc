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

#include <chrono>
#include <cmath>
#include <iomanip>
#include <vector>

#include "absl/strings/str_cat.h"
#include "signed_oracle/eval.h"
#include "signed_oracle/rng.h"

namespace signed_oracle {
namespace {

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string BuildKindName(BuildKind kind) {
  return kind == BuildKind::kSeeded ? "seeded" : "unseeded";
}

absl::StatusOr<BuildKind> ParseBuildKind(const std::string& name) {
  if (name == "seeded") return BuildKind::kSeeded;
  if (name == "unseeded") return BuildKind::kUnseeded;
  return absl::InvalidArgumentError(absl::StrCat("unknown build kind '", name, "'"));
}

std::string SweepName(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::kNone:
      return "none";
    case SweepVariable::kN:
      return "n";
    case SweepVariable::kK:
      return "k";
    case SweepVariable::kSteps:
      return "steps";
    case SweepVariable::kWalks:
      return "walks";
  }
  return "none";
}

absl::StatusOr<SweepVariable> ParseSweep(const std::string& name) {
  for (SweepVariable v : {SweepVariable::kNone, SweepVariable::kN, SweepVariable::kK,
                          SweepVariable::kSteps, SweepVariable::kWalks}) {
    if (SweepName(v) == name) return v;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown sweep variable '", name, "'"));
}

absl::StatusOr<EvalRun> EvaluateOracle(const SignedGraph& g, const GroundTruth& truth,
                                       const OracleConfig& config, BuildKind kind,
                                       int seeds_per_class, uint64_t seed) {
  if (truth.num_vertices() != g.num_vertices()) {
    return absl::InvalidArgumentError("ground truth and graph sizes differ");
  }
  if (truth.empty()) return absl::InvalidArgumentError("ground truth is empty");
  std::vector<Vertex> queryable;
  std::vector<Vertex> isolated;
  for (Vertex v : truth.LabeledVertices()) {
    (g.degree(v) > 0 ? queryable : isolated).push_back(v);
  }

  EvalRun run;
  const auto build_start = std::chrono::steady_clock::now();
  absl::StatusOr<OracleState> state;
  if (kind == BuildKind::kSeeded) {
    absl::StatusOr<std::vector<Representative>> seeds =
        SeedsFromGroundTruth(truth, config.task, seeds_per_class, DeriveSeed(seed, 1));
    if (!seeds.ok()) return seeds.status();
    state = BuildSeeded(g, *seeds, config);
  } else {
    state = BuildUnseeded(g, config, DeriveSeed(seed, 2));
  }
  if (!state.ok()) return state.status();
  run.build_seconds = SecondsSince(build_start);
  run.reps = state->reps.size();

  ClusterAssignment out;
  out.num_classes = NumLabels(config);
  out.labels.assign(g.num_vertices(), 0);
  const auto query_start = std::chrono::steady_clock::now();
  absl::StatusOr<std::vector<QueryAnswer>> answers =
      QueryBatch(g, *state, queryable, DeriveSeed(seed, 3));
  if (!answers.ok()) return answers.status();
  if (!queryable.empty()) {
    run.query_seconds = SecondsSince(query_start) / static_cast<double>(queryable.size());
  }
  for (size_t i = 0; i < queryable.size(); ++i) {
    out.labels[queryable[i]] = (*answers)[i].label;
    run.fallbacks += (*answers)[i].fallback;
  }
  Rng rng(DeriveSeed(seed, 4));
  for (Vertex v : isolated) {
    out.labels[v] = 1 + static_cast<int>(rng.Below(out.num_classes));
  }
  run.unqueried = static_cast<int64_t>(isolated.size());

  absl::StatusOr<AccuracyResult> accuracy = Accuracy(truth, out, config.task);
  if (!accuracy.ok()) return accuracy.status();
  run.accuracy = *std::move(accuracy);
  return run;
}

absl::Status ValidateExperimentSpec(const ExperimentSpec& spec) {
  if (spec.runs < 1) return absl::InvalidArgumentError("runs must be >= 1");
  if (spec.sweep == SweepVariable::kNone && !spec.values.empty()) {
    return absl::InvalidArgumentError("values given without a sweep variable");
  }
  if (spec.sweep != SweepVariable::kNone && spec.values.empty()) {
    return absl::InvalidArgumentError("sweep needs at least one value");
  }
  for (int64_t v : spec.values) {
    if (v < 1) return absl::InvalidArgumentError(absl::StrCat("bad sweep value ", v));
  }
  if (spec.modes.empty() || spec.tasks.empty() || spec.builds.empty()) {
    return absl::InvalidArgumentError("modes, tasks and builds must be non-empty");
  }
  if (spec.cluster_seeds < 1 || spec.bicluster_seeds < 1) {
    return absl::InvalidArgumentError("seed counts must be >= 1");
  }
  return ValidateSbmParams(spec.sbm);
}

absl::StatusOr<ExperimentReport> RunSyntheticExperiment(const ExperimentSpec& spec) {
  if (absl::Status s = ValidateExperimentSpec(spec); !s.ok()) return s;
  const std::vector<int64_t> values =
      spec.sweep == SweepVariable::kNone ? std::vector<int64_t>{0} : spec.values;

  ExperimentReport report;
  for (size_t p = 0; p < values.size(); ++p) {
    SbmParams sbm = spec.sbm;
    int steps = spec.steps;
    int cluster_walks = spec.cluster_walks;
    int bicluster_walks = spec.bicluster_walks;
    switch (spec.sweep) {
      case SweepVariable::kNone:
        break;
      case SweepVariable::kN:
        sbm.n = static_cast<size_t>(values[p]);
        break;
      case SweepVariable::kK:
        sbm.k = static_cast<int>(values[p]);
        break;
      case SweepVariable::kSteps:
        steps = static_cast<int>(values[p]);
        break;
      case SweepVariable::kWalks:
        cluster_walks = bicluster_walks = static_cast<int>(values[p]);
        break;
    }
    const size_t first_row = report.rows.size();
    for (int run = 0; run < spec.runs; ++run) {
      const uint64_t run_seed = DeriveSeed(spec.seed, p, run);
      sbm.seed = run_seed;
      absl::StatusOr<SyntheticGraph> instance = GenerateSbm(sbm);
      if (!instance.ok()) return instance.status();
      for (OracleTask task : spec.tasks) {
        for (OracleMode mode : spec.modes) {
          for (BuildKind build : spec.builds) {
            const bool bicluster = task == OracleTask::kBicluster;
            OracleConfig config;
            config.k = sbm.k;
            config.mode = mode;
            config.task = task;
            config.threshold = spec.threshold;
            config.walk.steps = steps;
            config.walk.walks = bicluster ? bicluster_walks : cluster_walks;
            config.walk.repetitions = spec.repetitions;
            config.walk.seed = DeriveSeed(run_seed, 1);
            config.sample_size = spec.sample_size;
            config.parallel = spec.parallel;
            absl::StatusOr<EvalRun> result = EvaluateOracle(
                instance->graph, instance->truth, config, build,
                bicluster ? spec.bicluster_seeds : spec.cluster_seeds,
                DeriveSeed(run_seed, 2));
            if (!result.ok()) return result.status();
            report.rows.push_back({spec.sweep, values[p], run, mode, task, build, sbm.n,
                                   sbm.k, steps, config.walk.walks, *std::move(result)});
          }
        }
      }
    }

    // Per-point summaries, in the order configurations first appear.
    for (size_t i = first_row; i < report.rows.size(); ++i) {
      const ExperimentRow& head = report.rows[i];
      if (head.run != 0) continue;
      std::vector<double> acc;
      double query = 0.0;
      for (size_t j = first_row; j < report.rows.size(); ++j) {
        const ExperimentRow& r = report.rows[j];
        if (r.mode == head.mode && r.task == head.task && r.build == head.build) {
          acc.push_back(r.result.accuracy.accuracy);
          query += r.result.query_seconds;
        }
      }
      double mean = 0.0;
      for (double a : acc) mean += a;
      mean /= static_cast<double>(acc.size());
      double var = 0.0;
      for (double a : acc) var += (a - mean) * (a - mean);
      const double std_dev =
          acc.size() >= 2 ? std::sqrt(var / static_cast<double>(acc.size() - 1)) : 0.0;
      report.summaries.push_back({spec.sweep, values[p], head.mode, head.task,
                                  head.build, static_cast<int>(acc.size()), mean,
                                  std_dev, query / static_cast<double>(acc.size())});
    }
  }
  return report;
}

void WriteExperimentCsv(const ExperimentReport& report, std::ostream& out) {
  out << "schema_version,sweep,value,run,mode,task,build,n,k,steps,walks,accuracy,"
         "correct,labeled,fallbacks,reps,build_seconds,query_seconds\n";
  out << std::setprecision(6);
  for (const ExperimentRow& r : report.rows) {
    out << kCsvSchemaVersion << ',' << SweepName(r.sweep) << ',' << r.value << ','
        << r.run << ',' << ModeName(r.mode) << ',' << TaskName(r.task) << ','
        << BuildKindName(r.build) << ',' << r.n << ',' << r.k << ',' << r.steps << ','
        << r.walks << ',' << r.result.accuracy.accuracy << ','
        << r.result.accuracy.correct << ',' << r.result.accuracy.m << ','
        << r.result.fallbacks << ',' << r.result.reps << ',' << r.result.build_seconds
        << ',' << r.result.query_seconds << '\n';
  }
}

void WriteSummaryCsv(const ExperimentReport& report, std::ostream& out) {
  out << "schema_version,sweep,value,mode,task,build,runs,mean_accuracy,"
         "std_accuracy,mean_query_seconds\n";
  out << std::setprecision(6);
  for (const ExperimentSummary& s : report.summaries) {
    out << kCsvSchemaVersion << ',' << SweepName(s.sweep) << ',' << s.value << ','
        << ModeName(s.mode) << ',' << TaskName(s.task) << ',' << BuildKindName(s.build)
        << ',' << s.runs << ',' << s.mean_accuracy << ',' << s.std_accuracy << ','
        << s.mean_query_seconds << '\n';
  }
}

}  // namespace signed_oracle
