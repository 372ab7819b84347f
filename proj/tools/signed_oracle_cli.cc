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

// Command-line front end: gen, build, query, eval and verify.

#include <charconv>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "signed_oracle/eval.h"
#include "signed_oracle/graph.h"
#include "signed_oracle/oracle.h"
#include "signed_oracle/synth.h"
#include "signed_oracle/verify.h"

namespace signed_oracle {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitOracleFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int ExitCode(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return kExitOk;
    case absl::StatusCode::kAborted:
      return kExitOracleFail;
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kOutOfRange:
    case absl::StatusCode::kFailedPrecondition:
      return kExitUsage;
    default:
      return kExitIo;
  }
}

int Report(const absl::Status& status) {
  if (status.ok()) return kExitOk;
  if (IsOracleFailure(status)) {
    std::cerr << "oracle build failed: " << status.message() << "\n";
  } else {
    std::cerr << "error: " << status.message() << "\n";
  }
  return ExitCode(status);
}

std::string FormatDouble(double x) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, result.ptr);
}

template <typename T>
absl::StatusOr<std::vector<T>> ParseList(const std::string& text, const std::string& what) {
  std::vector<T> out;
  for (absl::string_view token : absl::StrSplit(text, ',', absl::SkipWhitespace())) {
    T value;
    if (!absl::SimpleAtoi(token, &value)) {
      return absl::InvalidArgumentError(absl::StrCat("bad ", what, " '", token, "'"));
    }
    out.push_back(value);
  }
  if (out.empty()) return absl::InvalidArgumentError(absl::StrCat("empty ", what, " list"));
  return out;
}

template <typename T, typename F>
absl::StatusOr<std::vector<T>> ParseNames(const std::string& text, F parse) {
  std::vector<T> out;
  for (absl::string_view token : absl::StrSplit(text, ',', absl::SkipWhitespace())) {
    absl::StatusOr<T> value = parse(std::string(token));
    if (!value.ok()) return value.status();
    out.push_back(*value);
  }
  if (out.empty()) return absl::InvalidArgumentError(absl::StrCat("empty list '", text, "'"));
  return out;
}

absl::Status WriteFile(const std::filesystem::path& path,
                       const std::function<void(std::ostream&)>& write) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot write ", path.string()));
  write(out);
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("failed writing ", path.string()));
  return absl::OkStatus();
}

// ---- gen

struct GenFlags {
  SbmParams sbm;
  std::string out_dir = ".";
};

absl::Status RunGen(const GenFlags& flags) {
  absl::StatusOr<SyntheticGraph> instance = GenerateSbm(flags.sbm);
  if (!instance.ok()) return instance.status();
  const std::filesystem::path dir(flags.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return absl::NotFoundError(absl::StrCat("cannot create ", flags.out_dir));
  if (absl::Status s = WriteFile(dir / "graph.edges",
                                 [&](std::ostream& o) { WriteEdgeList(o, instance->graph); });
      !s.ok()) {
    return s;
  }
  return WriteFile(dir / "graph.labels",
                   [&](std::ostream& o) { WriteGroundTruth(o, instance->truth); });
}

// ---- build

struct BuildFlags {
  std::string graph;
  std::string mode = "signed";
  std::string task = "cluster";
  std::string threshold = "practical";
  std::string seeds;
  bool unseeded = false;
  int seeds_per_class = 0;
  int k = 0;
  int s = 0;
  int walks = 400;
  int steps = 2;
  int reps = 1;
  int median_samples = 5;
  uint32_t max_degree = 0;
  double gamma = 1.0;
  double epsilon = 0.1;
  uint64_t seed = 1;
  std::string out = "oracle.snapshot";
};

absl::Status RunBuild(const BuildFlags& flags) {
  OracleConfig config;
  absl::StatusOr<OracleMode> mode = ParseMode(flags.mode);
  if (!mode.ok()) return mode.status();
  absl::StatusOr<OracleTask> task = ParseTask(flags.task);
  if (!task.ok()) return task.status();
  absl::StatusOr<ThresholdMode> threshold = ParseThreshold(flags.threshold);
  if (!threshold.ok()) return threshold.status();
  config.mode = *mode;
  config.task = *task;
  config.threshold = *threshold;
  config.k = flags.k;
  config.sample_size = flags.s;
  config.walk.walks = flags.walks;
  config.walk.steps = flags.steps;
  config.walk.repetitions = flags.reps;
  config.walk.seed = flags.seed;
  config.median_samples = flags.median_samples;
  config.max_degree = flags.max_degree;
  config.gamma = flags.gamma;
  config.epsilon = flags.epsilon;
  if (flags.unseeded && flags.k < 1) {
    return absl::InvalidArgumentError("--unseeded needs --k >= 1");
  }
  if (flags.k >= 1) {
    if (absl::Status s = ValidateOracleConfig(config); !s.ok()) return s;
  }

  absl::StatusOr<SignedGraph> g = LoadEdgeList(flags.graph);
  if (!g.ok()) return g.status();
  absl::StatusOr<OracleState> state;
  if (flags.unseeded) {
    state = BuildUnseeded(*g, config, flags.seed);
  } else {
    absl::StatusOr<GroundTruth> truth = LoadGroundTruth(flags.seeds, g->num_vertices());
    if (!truth.ok()) return truth.status();
    if (config.k == 0) config.k = static_cast<int>(truth->ClusterIds().size());
    absl::StatusOr<std::vector<Representative>> seeds =
        SeedsFromGroundTruth(*truth, config.task, flags.seeds_per_class, flags.seed);
    if (!seeds.ok()) return seeds.status();
    state = BuildSeeded(*g, *seeds, config);
  }
  if (!state.ok()) return state.status();
  std::error_code ec;
  const std::filesystem::path absolute = std::filesystem::absolute(flags.graph, ec);
  state->graph_path = ec ? flags.graph : absolute.lexically_normal().string();
  if (absl::Status s = SaveSnapshot(*state, flags.out); !s.ok()) return s;
  std::cerr << "built " << TaskName(config.task) << " oracle with " << state->reps.size()
            << " representatives and " << NumLabels(config) << " labels\n";
  return absl::OkStatus();
}

// ---- query

struct QueryFlags {
  std::string oracle;
  std::string graph;
  std::string vertices;
  bool all = false;
  int parallel = 8;
  uint64_t seed = 1;
};

absl::Status RunQuery(const QueryFlags& flags) {
  if (flags.parallel < 1) return absl::InvalidArgumentError("--parallel must be >= 1");
  std::vector<Vertex> vertices;
  if (!flags.all) {
    absl::StatusOr<std::vector<Vertex>> list = ParseList<Vertex>(flags.vertices, "vertex");
    if (!list.ok()) return list.status();
    vertices = *std::move(list);
  }
  absl::StatusOr<OracleState> state = LoadSnapshot(flags.oracle);
  if (!state.ok()) return state.status();
  state->config.parallel = flags.parallel;
  const std::string graph_path = flags.graph.empty() ? state->graph_path : flags.graph;
  absl::StatusOr<SignedGraph> g = LoadEdgeList(graph_path);
  if (!g.ok()) return g.status();
  if (absl::Status s = CheckSnapshotGraph(*state, *g); !s.ok()) return s;
  if (flags.all) {
    for (Vertex v = 0; v < g->num_vertices(); ++v) {
      if (g->degree(v) > 0) vertices.push_back(v);
    }
  }
  absl::StatusOr<std::vector<QueryAnswer>> answers =
      QueryBatch(*g, *state, vertices, flags.seed);
  if (!answers.ok()) return answers.status();
  std::string out;
  for (size_t i = 0; i < vertices.size(); ++i) {
    const QueryAnswer& a = (*answers)[i];
    absl::StrAppend(&out, vertices[i], " ", a.label, " ", FormatDouble(a.margin), " ",
                    a.fallback ? 1 : 0, "\n");
  }
  std::cout << out << std::flush;
  return absl::OkStatus();
}

// ---- eval

struct EvalFlags {
  GenFlags gen;
  std::string sweep = "none";
  std::optional<std::string> values;
  int runs = 5;
  std::string modes = "signed";
  std::string tasks = "cluster";
  std::string builds = "seeded";
  std::string threshold = "practical";
  int steps = 2;
  int cluster_walks = 400;
  int bicluster_walks = 600;
  int reps = 1;
  int cluster_seeds = 6;
  int bicluster_seeds = 3;
  int s = 0;
  int parallel = 8;
  uint64_t seed = 1;
  std::string graph;
  std::string labels;
  std::string out;
  std::string summary;
};

absl::Status RunEvalOnData(const EvalFlags& flags, const ExperimentSpec& spec) {
  absl::StatusOr<SignedGraph> g = LoadEdgeList(flags.graph);
  if (!g.ok()) return g.status();
  absl::StatusOr<GroundTruth> truth = LoadGroundTruth(flags.labels, g->num_vertices());
  if (!truth.ok()) return truth.status();
  const int k = static_cast<int>(truth->ClusterIds().size());
  ExperimentReport report;
  for (int run = 0; run < spec.runs; ++run) {
    const uint64_t run_seed = DeriveSeed(spec.seed, 0, run);
    for (OracleTask task : spec.tasks) {
      for (OracleMode mode : spec.modes) {
        for (BuildKind build : spec.builds) {
          const bool bicluster = task == OracleTask::kBicluster;
          OracleConfig config;
          config.k = k;
          config.mode = mode;
          config.task = task;
          config.threshold = spec.threshold;
          config.walk.steps = spec.steps;
          config.walk.walks = bicluster ? spec.bicluster_walks : spec.cluster_walks;
          config.walk.repetitions = spec.repetitions;
          config.walk.seed = DeriveSeed(run_seed, 1);
          config.sample_size = spec.sample_size;
          config.parallel = spec.parallel;
          absl::StatusOr<EvalRun> result = EvaluateOracle(
              *g, *truth, config, build,
              bicluster ? spec.bicluster_seeds : spec.cluster_seeds, DeriveSeed(run_seed, 2));
          if (!result.ok()) return result.status();
          report.rows.push_back({SweepVariable::kNone, 0, run, mode, task, build,
                                 g->num_vertices(), k, spec.steps, config.walk.walks,
                                 *std::move(result)});
        }
      }
    }
  }
  if (flags.out.empty()) {
    WriteExperimentCsv(report, std::cout);
    return absl::OkStatus();
  }
  return WriteFile(flags.out, [&](std::ostream& o) { WriteExperimentCsv(report, o); });
}

absl::Status RunEval(const EvalFlags& flags) {
  ExperimentSpec spec;
  spec.sbm = flags.gen.sbm;
  absl::StatusOr<SweepVariable> sweep = ParseSweep(flags.sweep);
  if (!sweep.ok()) return sweep.status();
  spec.sweep = *sweep;
  if (spec.sweep != SweepVariable::kNone) {
    if (!flags.values && spec.sweep == SweepVariable::kWalks) {
      spec.values = {50, 100, 200, 400};
    } else {
      absl::StatusOr<std::vector<int64_t>> values =
          ParseList<int64_t>(flags.values.value_or(""), "value");
      if (!values.ok()) return values.status();
      spec.values = *std::move(values);
    }
  } else if (flags.values) {
    return absl::InvalidArgumentError("--values needs --sweep");
  }
  spec.runs = flags.runs;
  absl::StatusOr<std::vector<OracleMode>> modes =
      ParseNames<OracleMode>(flags.modes, ParseMode);
  if (!modes.ok()) return modes.status();
  absl::StatusOr<std::vector<OracleTask>> tasks =
      ParseNames<OracleTask>(flags.tasks, ParseTask);
  if (!tasks.ok()) return tasks.status();
  absl::StatusOr<std::vector<BuildKind>> builds =
      ParseNames<BuildKind>(flags.builds, ParseBuildKind);
  if (!builds.ok()) return builds.status();
  absl::StatusOr<ThresholdMode> threshold = ParseThreshold(flags.threshold);
  if (!threshold.ok()) return threshold.status();
  spec.modes = *modes;
  spec.tasks = *tasks;
  spec.builds = *builds;
  spec.threshold = *threshold;
  spec.steps = flags.steps;
  spec.cluster_walks = flags.cluster_walks;
  spec.bicluster_walks = flags.bicluster_walks;
  spec.repetitions = flags.reps;
  spec.cluster_seeds = flags.cluster_seeds;
  spec.bicluster_seeds = flags.bicluster_seeds;
  spec.sample_size = flags.s;
  spec.parallel = flags.parallel;
  spec.seed = flags.seed;
  if (absl::Status s = ValidateExperimentSpec(spec); !s.ok()) return s;

  if (!flags.graph.empty() || !flags.labels.empty()) {
    if (flags.graph.empty() || flags.labels.empty()) {
      return absl::InvalidArgumentError("--graph and --labels go together");
    }
    if (spec.sweep != SweepVariable::kNone) {
      return absl::InvalidArgumentError("sweeps apply to synthetic graphs only");
    }
    return RunEvalOnData(flags, spec);
  }

  absl::StatusOr<ExperimentReport> report = RunSyntheticExperiment(spec);
  if (!report.ok()) return report.status();
  if (flags.out.empty()) {
    WriteExperimentCsv(*report, std::cout);
  } else if (absl::Status s = WriteFile(
                 flags.out, [&](std::ostream& o) { WriteExperimentCsv(*report, o); });
             !s.ok()) {
    return s;
  }
  if (!flags.summary.empty()) {
    return WriteFile(flags.summary, [&](std::ostream& o) { WriteSummaryCsv(*report, o); });
  }
  return absl::OkStatus();
}

// ---- verify

struct VerifyFlags {
  std::string suite;
  int fuzz = 0;
  uint64_t seed = 1;
};

int RunVerify(const VerifyFlags& flags) {
  absl::StatusOr<VerifySuite> suite = ParseSuite(flags.suite);
  if (!suite.ok()) return Report(suite.status());
  absl::StatusOr<VerifyReport> report = RunVerifySuite(*suite, {flags.fuzz, flags.seed});
  if (!report.ok()) return Report(report.status());
  WriteVerifyReport(*report, std::cout);
  return report->passed() ? kExitOk : kExitOracleFail;
}

void AddSbmFlags(CLI::App* cmd, GenFlags& flags) {
  cmd->add_option("--n", flags.sbm.n, "Number of vertices")->capture_default_str();
  cmd->add_option("--k", flags.sbm.k, "Number of clusters")->capture_default_str();
  cmd->add_option("--p-intra", flags.sbm.p_intra, "Edge probability inside a side")
      ->capture_default_str();
  cmd->add_option("--p-cross", flags.sbm.p_cross,
                  "Edge probability between the sides of a cluster")
      ->capture_default_str();
  cmd->add_option("--q", flags.sbm.q, "Edge probability between clusters")
      ->capture_default_str();
  cmd->add_option("--p-sign", flags.sbm.p_sign, "Probability of the balanced sign")
      ->capture_default_str();
  cmd->add_option("--q-sign", flags.sbm.q_sign,
                  "Probability of + between clusters")
      ->capture_default_str();
}

int Main(int argc, char** argv) {
  CLI::App app("Sublinear clustering oracles for signed graphs.", "signed_oracle");
  app.set_config("--config", "", "key=value file overlaying the flags");
  app.require_subcommand(1);

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a signed block-model graph");
  AddSbmFlags(gen_cmd, gen);
  gen_cmd->add_option("--seed", gen.sbm.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--out-dir", gen.out_dir, "Directory for graph.edges and graph.labels")
      ->capture_default_str();

  BuildFlags build;
  CLI::App* build_cmd = app.add_subcommand("build", "Build an oracle snapshot");
  build_cmd->add_option("--graph", build.graph, "Edge list")->required();
  build_cmd->add_option("--mode", build.mode, "signed|unsigned")
      ->check(CLI::IsMember({"signed", "unsigned"}))
      ->capture_default_str();
  build_cmd->add_option("--task", build.task, "cluster|bicluster")
      ->check(CLI::IsMember({"cluster", "bicluster"}))
      ->capture_default_str();
  CLI::Option* seeds_opt =
      build_cmd->add_option("--seeds", build.seeds, "Seed labels (`v cluster [side]`)");
  CLI::Option* unseeded_opt =
      build_cmd->add_flag("--unseeded", build.unseeded, "Sample representatives");
  seeds_opt->excludes(unseeded_opt);
  build_cmd->add_option("--seeds-per-class", build.seeds_per_class,
                        "Use this many seeds per class (0: all)")
      ->capture_default_str();
  build_cmd->add_option("--k", build.k, "Number of clusters");
  build_cmd->add_option("--s", build.s, "Sample size for unseeded builds (0: default)");
  build_cmd->add_option("--walks", build.walks, "Walks per vector R")->capture_default_str();
  build_cmd->add_option("--steps", build.steps, "Walk length t")->capture_default_str();
  build_cmd->add_option("--reps", build.reps, "Repetitions h (odd)")->capture_default_str();
  build_cmd->add_option("--threshold", build.threshold, "theoretical|practical")
      ->check(CLI::IsMember({"theoretical", "practical"}))
      ->capture_default_str();
  build_cmd->add_option("--median-samples", build.median_samples,
                        "Distance samples per pair in unseeded practical builds")
      ->capture_default_str();
  build_cmd->add_option("--max-degree", build.max_degree,
                        "d in the theoretical threshold (0: graph maximum)");
  build_cmd->add_option("--gamma", build.gamma)->capture_default_str();
  build_cmd->add_option("--epsilon", build.epsilon)->capture_default_str();
  build_cmd->add_option("--seed", build.seed, "Random seed")->capture_default_str();
  build_cmd->add_option("--out", build.out, "Snapshot path")->capture_default_str();

  QueryFlags query;
  CLI::App* query_cmd = app.add_subcommand("query", "Answer membership queries");
  query_cmd->add_option("--oracle", query.oracle, "Snapshot path")->required();
  query_cmd->add_option("--graph", query.graph, "Edge list (default: the one built on)");
  CLI::Option* vertices_opt =
      query_cmd->add_option("--vertices", query.vertices, "Comma separated vertex ids");
  CLI::Option* all_opt = query_cmd->add_flag("--all", query.all, "Query every vertex");
  vertices_opt->excludes(all_opt);
  query_cmd->add_option("--parallel", query.parallel, "Concurrent queries")
      ->capture_default_str();
  query_cmd->add_option("--seed", query.seed, "Random seed")->capture_default_str();

  EvalFlags eval;
  CLI::App* eval_cmd = app.add_subcommand("eval", "Run accuracy experiments");
  AddSbmFlags(eval_cmd, eval.gen);
  eval_cmd->add_option("--sweep", eval.sweep, "none|n|k|steps|walks")
      ->check(CLI::IsMember({"none", "n", "k", "steps", "walks"}))
      ->capture_default_str();
  eval_cmd->add_option("--values", eval.values,
                       "Comma separated sweep values (walks default: 50,100,200,400)");
  eval_cmd->add_option("--runs", eval.runs, "Graphs per point")->capture_default_str();
  eval_cmd->add_option("--modes", eval.modes, "signed,unsigned")->capture_default_str();
  eval_cmd->add_option("--tasks", eval.tasks, "cluster,bicluster")->capture_default_str();
  eval_cmd->add_option("--builds", eval.builds, "seeded,unseeded")->capture_default_str();
  eval_cmd->add_option("--threshold", eval.threshold, "theoretical|practical")
      ->check(CLI::IsMember({"theoretical", "practical"}))
      ->capture_default_str();
  eval_cmd->add_option("--steps", eval.steps, "Walk length t")->capture_default_str();
  eval_cmd->add_option("--walks", eval.cluster_walks, "Walks R for clustering")
      ->capture_default_str();
  eval_cmd->add_option("--bicluster-walks", eval.bicluster_walks,
                       "Walks R for biclustering")
      ->capture_default_str();
  eval_cmd->add_option("--reps", eval.reps, "Repetitions h (odd)")->capture_default_str();
  eval_cmd->add_option("--cluster-seeds", eval.cluster_seeds, "Seeds per cluster")
      ->capture_default_str();
  eval_cmd->add_option("--bicluster-seeds", eval.bicluster_seeds, "Seeds per side")
      ->capture_default_str();
  eval_cmd->add_option("--s", eval.s, "Unseeded sample size (0: default)");
  eval_cmd->add_option("--parallel", eval.parallel, "Concurrent queries")
      ->capture_default_str();
  eval_cmd->add_option("--seed", eval.seed, "Random seed")->capture_default_str();
  eval_cmd->add_option("--graph", eval.graph, "Evaluate on this edge list instead");
  eval_cmd->add_option("--labels", eval.labels, "Ground truth for --graph");
  eval_cmd->add_option("--out", eval.out, "CSV path (default: stdout)");
  eval_cmd->add_option("--summary", eval.summary, "Per-point summary CSV path");

  VerifyFlags verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check spectral properties");
  verify_cmd->add_option("--suite", verify.suite, "Suite to run")
      ->required()
      ->check(CLI::IsMember(
          {"cheeger", "eigengap", "two-centers", "delta-separation", "beta-inner"}));
  verify_cmd->add_option("--fuzz", verify.fuzz, "Number of cases (0: suite default)")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*gen_cmd) return Report(RunGen(gen));
  if (*build_cmd) {
    if (build.seeds.empty() && !build.unseeded) {
      return Report(absl::InvalidArgumentError("build needs --seeds FILE or --unseeded"));
    }
    return Report(RunBuild(build));
  }
  if (*query_cmd) {
    if (query.vertices.empty() && !query.all) {
      return Report(absl::InvalidArgumentError("query needs --vertices LIST or --all"));
    }
    return Report(RunQuery(query));
  }
  if (*eval_cmd) return Report(RunEval(eval));
  if (*verify_cmd) return RunVerify(verify);
  return kExitUsage;
}

}  // namespace
}  // namespace signed_oracle

int main(int argc, char** argv) { return signed_oracle::Main(argc, argv); }
