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

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "signed_oracle/oracle.h"

namespace signed_oracle {
namespace {

constexpr absl::string_view kMagic = "signed-oracle-snapshot";

std::string FormatDouble(double x) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, result.ptr);
}

void WriteVector(std::ostream& out, const WalkVector& vec) {
  out << vec.source() << ' ' << vec.nnz();
  for (const WalkVector::Entry& e : vec.entries()) {
    out << ' ' << e.vertex << ':' << FormatDouble(e.value);
  }
  out << '\n';
}

// Line reader over the snapshot body with positioned errors.
class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  absl::Status Error(absl::string_view what) const {
    return absl::DataLossError(absl::StrCat("snapshot line ", line_, ": ", what));
  }

  // Next line split on spaces.
  absl::StatusOr<std::vector<absl::string_view>> Tokens() {
    if (!std::getline(in_, current_)) return Error("unexpected end of file");
    ++line_;
    return std::vector<absl::string_view>(
        absl::StrSplit(current_, ' ', absl::SkipEmpty()));
  }

  // Reads "key value" and returns the value, which may contain spaces.
  absl::StatusOr<std::string> Field(absl::string_view key) {
    if (!std::getline(in_, current_)) return Error("unexpected end of file");
    ++line_;
    absl::string_view line = current_;
    if (line.substr(0, key.size()) != key ||
        (line.size() > key.size() && line[key.size()] != ' ')) {
      return Error(absl::StrCat("expected '", key, "'"));
    }
    line.remove_prefix(std::min(line.size(), key.size() + 1));
    return std::string(line);
  }

  template <typename T>
  absl::StatusOr<T> Number(absl::string_view key) {
    absl::StatusOr<std::string> text = Field(key);
    if (!text.ok()) return text.status();
    return Parse<T>(*text);
  }

  template <typename T>
  absl::StatusOr<T> Parse(absl::string_view text) const {
    T value{};
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc() || result.ptr != text.data() + text.size()) {
      return Error(absl::StrCat("bad number '", text, "'"));
    }
    return value;
  }

 private:
  std::istream& in_;
  std::string current_;
  int line_ = 1;  // the header line
};

#define SO_ASSIGN(lhs, expr)          \
  do {                                \
    auto _value = (expr);             \
    if (!_value.ok()) return _value.status(); \
    lhs = *std::move(_value);         \
  } while (0)

absl::StatusOr<WalkVector> ReadVector(Reader& reader) {
  std::vector<absl::string_view> tokens;
  SO_ASSIGN(tokens, reader.Tokens());
  if (tokens.size() < 2) return reader.Error("truncated walk vector");
  Vertex source;
  size_t nnz;
  SO_ASSIGN(source, reader.Parse<Vertex>(tokens[0]));
  SO_ASSIGN(nnz, reader.Parse<size_t>(tokens[1]));
  if (tokens.size() != nnz + 2) return reader.Error("walk vector length mismatch");
  std::vector<WalkVector::Entry> entries(nnz);
  for (size_t i = 0; i < nnz; ++i) {
    const absl::string_view token = tokens[i + 2];
    const size_t colon = token.find(':');
    if (colon == absl::string_view::npos) return reader.Error("bad vector entry");
    SO_ASSIGN(entries[i].vertex, reader.Parse<Vertex>(token.substr(0, colon)));
    SO_ASSIGN(entries[i].value, reader.Parse<double>(token.substr(colon + 1)));
  }
  return WalkVector(source, std::move(entries));
}

}  // namespace

absl::Status SaveSnapshot(const OracleState& state, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot write ", path));
  const OracleConfig& c = state.config;
  out << kMagic << ' ' << kSnapshotVersion << '\n'
      << "k " << c.k << '\n'
      << "mode " << ModeName(c.mode) << '\n'
      << "task " << TaskName(c.task) << '\n'
      << "threshold " << ThresholdName(c.threshold) << '\n'
      << "steps " << c.walk.steps << '\n'
      << "walks " << c.walk.walks << '\n'
      << "repetitions " << c.walk.repetitions << '\n'
      << "seed " << c.walk.seed << '\n'
      << "sample_size " << c.sample_size << '\n'
      << "median_samples " << c.median_samples << '\n'
      << "max_degree " << c.max_degree << '\n'
      << "gamma " << FormatDouble(c.gamma) << '\n'
      << "epsilon " << FormatDouble(c.epsilon) << '\n'
      << "parallel " << c.parallel << '\n'
      << "graph_vertices " << state.graph_vertices << '\n'
      << "graph_fingerprint " << state.graph_fingerprint << '\n'
      << "graph_path " << state.graph_path << '\n';
  out << "reps " << state.reps.size() << '\n';
  for (const Representative& r : state.reps) out << r.vertex << ' ' << r.label << '\n';
  out << "self_dots " << state.self_dots.size() << '\n';
  for (double x : state.self_dots) out << FormatDouble(x) << '\n';
  out << "h_edges " << state.h_edges.size() << '\n';
  for (const auto& [i, j] : state.h_edges) out << i << ' ' << j << '\n';
  out << "vectors " << state.vectors.size() << '\n';
  for (const RepresentativeVectors& v : state.vectors) {
    out << "pairs " << v.first.size() << ' ' << FormatDouble(v.self_dot) << '\n';
    for (size_t r = 0; r < v.first.size(); ++r) {
      WriteVector(out, v.first[r]);
      WriteVector(out, v.second[r]);
    }
  }
  out << "end\n";
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("failed writing ", path));
  return absl::OkStatus();
}

absl::StatusOr<OracleState> LoadSnapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::string header;
  std::getline(in, header);
  const std::vector<absl::string_view> magic = absl::StrSplit(header, ' ');
  int version = 0;
  if (magic.size() != 2 || magic[0] != kMagic || !absl::SimpleAtoi(magic[1], &version)) {
    return absl::InvalidArgumentError(absl::StrCat(path, " is not an oracle snapshot"));
  }
  if (version != kSnapshotVersion) {
    return absl::InvalidArgumentError(absl::StrCat("snapshot version ", version,
                                                   " is not supported (expected ",
                                                   kSnapshotVersion, ")"));
  }

  Reader reader(in);
  OracleState state;
  OracleConfig& c = state.config;
  std::string text;
  SO_ASSIGN(c.k, reader.Number<int>("k"));
  SO_ASSIGN(text, reader.Field("mode"));
  SO_ASSIGN(c.mode, ParseMode(text));
  SO_ASSIGN(text, reader.Field("task"));
  SO_ASSIGN(c.task, ParseTask(text));
  SO_ASSIGN(text, reader.Field("threshold"));
  SO_ASSIGN(c.threshold, ParseThreshold(text));
  SO_ASSIGN(c.walk.steps, reader.Number<int>("steps"));
  SO_ASSIGN(c.walk.walks, reader.Number<int>("walks"));
  SO_ASSIGN(c.walk.repetitions, reader.Number<int>("repetitions"));
  SO_ASSIGN(c.walk.seed, reader.Number<uint64_t>("seed"));
  SO_ASSIGN(c.sample_size, reader.Number<int>("sample_size"));
  SO_ASSIGN(c.median_samples, reader.Number<int>("median_samples"));
  SO_ASSIGN(c.max_degree, reader.Number<uint32_t>("max_degree"));
  SO_ASSIGN(c.gamma, reader.Number<double>("gamma"));
  SO_ASSIGN(c.epsilon, reader.Number<double>("epsilon"));
  SO_ASSIGN(c.parallel, reader.Number<int>("parallel"));
  if (absl::Status s = ValidateOracleConfig(c); !s.ok()) {
    return absl::DataLossError(absl::StrCat("snapshot config: ", s.message()));
  }
  SO_ASSIGN(state.graph_vertices, reader.Number<size_t>("graph_vertices"));
  SO_ASSIGN(state.graph_fingerprint, reader.Number<uint64_t>("graph_fingerprint"));
  SO_ASSIGN(state.graph_path, reader.Field("graph_path"));

  size_t count;
  std::vector<absl::string_view> tokens;
  SO_ASSIGN(count, reader.Number<size_t>("reps"));
  const int labels = NumLabels(c);
  for (size_t i = 0; i < count; ++i) {
    SO_ASSIGN(tokens, reader.Tokens());
    if (tokens.size() != 2) return reader.Error("expected 'vertex label'");
    Representative r;
    SO_ASSIGN(r.vertex, reader.Parse<Vertex>(tokens[0]));
    SO_ASSIGN(r.label, reader.Parse<int>(tokens[1]));
    if (r.vertex >= state.graph_vertices || r.label < 1 || r.label > labels) {
      return reader.Error("representative out of range");
    }
    state.reps.push_back(r);
  }
  SO_ASSIGN(count, reader.Number<size_t>("self_dots"));
  for (size_t i = 0; i < count; ++i) {
    SO_ASSIGN(tokens, reader.Tokens());
    if (tokens.size() != 1) return reader.Error("expected one value");
    double x;
    SO_ASSIGN(x, reader.Parse<double>(tokens[0]));
    state.self_dots.push_back(x);
  }
  SO_ASSIGN(count, reader.Number<size_t>("h_edges"));
  for (size_t e = 0; e < count; ++e) {
    SO_ASSIGN(tokens, reader.Tokens());
    if (tokens.size() != 2) return reader.Error("expected 'i j'");
    int i, j;
    SO_ASSIGN(i, reader.Parse<int>(tokens[0]));
    SO_ASSIGN(j, reader.Parse<int>(tokens[1]));
    state.h_edges.emplace_back(i, j);
  }
  SO_ASSIGN(count, reader.Number<size_t>("vectors"));
  for (size_t i = 0; i < count; ++i) {
    SO_ASSIGN(tokens, reader.Tokens());
    if (tokens.size() != 3 || tokens[0] != "pairs") return reader.Error("expected 'pairs'");
    size_t pairs;
    RepresentativeVectors v;
    SO_ASSIGN(pairs, reader.Parse<size_t>(tokens[1]));
    SO_ASSIGN(v.self_dot, reader.Parse<double>(tokens[2]));
    for (size_t r = 0; r < pairs; ++r) {
      WalkVector a, b;
      SO_ASSIGN(a, ReadVector(reader));
      SO_ASSIGN(b, ReadVector(reader));
      v.first.push_back(std::move(a));
      v.second.push_back(std::move(b));
    }
    state.vectors.push_back(std::move(v));
  }
  SO_ASSIGN(tokens, reader.Tokens());
  if (tokens.size() != 1 || tokens[0] != "end") return reader.Error("expected 'end'");

  const bool practical = c.threshold == ThresholdMode::kPractical;
  if ((practical && state.vectors.size() != state.reps.size()) ||
      (!practical && state.self_dots.size() != state.reps.size())) {
    return absl::DataLossError("snapshot representative data is incomplete");
  }
  return state;
}

absl::Status CheckSnapshotGraph(const OracleState& state, const SignedGraph& g) {
  if (state.graph_vertices != g.num_vertices() ||
      state.graph_fingerprint != g.Fingerprint()) {
    return absl::FailedPreconditionError(
        "graph does not match the one the oracle was built on");
  }
  return absl::OkStatus();
}

}  // namespace signed_oracle
