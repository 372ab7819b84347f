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

#include "signed_oracle/graph.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "absl/strings/strip.h"

namespace signed_oracle {
namespace {

uint64_t PairKey(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(a) << 32) | b;
}

std::string PairString(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return absl::StrCat("(", a, ",", b, ")");
}

std::optional<int8_t> ParseSign(absl::string_view token) {
  if (token == "+" || token == "+1" || token == "1") return 1;
  if (token == "-" || token == "-1") return -1;
  return std::nullopt;
}

// Splits a line into whitespace-separated tokens after removing comments and
// a trailing carriage return.
std::vector<absl::string_view> Tokenize(absl::string_view line) {
  if (const size_t hash = line.find('#'); hash != absl::string_view::npos) {
    line = line.substr(0, hash);
  }
  absl::ConsumeSuffix(&line, "\r");
  return absl::StrSplit(line, absl::ByAnyChar(" \t\r"), absl::SkipEmpty());
}

}  // namespace

absl::StatusOr<SignedGraph> SignedGraph::FromEdges(
    size_t n, std::vector<SignedEdge> edges) {
  if (n > std::numeric_limits<Vertex>::max()) {
    return absl::InvalidArgumentError("too many vertices");
  }
  std::vector<SignedEdge> arcs;
  arcs.reserve(2 * edges.size());
  for (const SignedEdge& e : edges) {
    if (e.u >= n || e.v >= n) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", PairString(e.u, e.v), " out of range for n=", n));
    }
    if (e.u == e.v) {
      return absl::InvalidArgumentError(absl::StrCat("self-loop at vertex ", e.u));
    }
    if (e.sign != 1 && e.sign != -1) {
      return absl::InvalidArgumentError(
          absl::StrCat("invalid sign ", static_cast<int>(e.sign), " on pair ",
                       PairString(e.u, e.v)));
    }
    arcs.push_back(e);
    arcs.push_back({e.v, e.u, e.sign});
  }
  edges.clear();
  edges.shrink_to_fit();
  std::sort(arcs.begin(), arcs.end(), [](const SignedEdge& a, const SignedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  SignedGraph g;
  g.offsets_.assign(n + 1, 0);
  g.adjacency_.reserve(arcs.size());
  for (size_t i = 0; i < arcs.size(); ++i) {
    const SignedEdge& a = arcs[i];
    if (i > 0 && arcs[i - 1].u == a.u && arcs[i - 1].v == a.v) {
      if (arcs[i - 1].sign != a.sign) {
        return absl::InvalidArgumentError(
            absl::StrCat("conflicting sign for pair ", PairString(a.u, a.v)));
      }
      continue;
    }
    g.adjacency_.push_back({a.v, a.sign});
    ++g.offsets_[a.u + 1];
  }
  for (size_t u = 0; u < n; ++u) {
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[u + 1]);
    g.offsets_[u + 1] += g.offsets_[u];
  }
  return g;
}

int SignedGraph::EdgeSign(Vertex u, Vertex v) const {
  const auto adj = neighbors(u);
  auto it = std::lower_bound(
      adj.begin(), adj.end(), v,
      [](const Neighbor& nb, Vertex x) { return nb.vertex < x; });
  if (it == adj.end() || it->vertex != v) return 0;
  return it->sign;
}

std::vector<SignedEdge> SignedGraph::Edges() const {
  std::vector<SignedEdge> edges;
  edges.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (const Neighbor& nb : neighbors(u)) {
      if (u < nb.vertex) edges.push_back({u, nb.vertex, nb.sign});
    }
  }
  return edges;
}

SignedGraph SignedGraph::WithAllPositive() const {
  SignedGraph copy = *this;
  for (Neighbor& nb : copy.adjacency_) nb.sign = 1;
  return copy;
}

uint64_t SignedGraph::Fingerprint() const {
  uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  };
  mix(num_vertices());
  for (uint32_t off : offsets_) mix(off);
  for (const Neighbor& nb : adjacency_) {
    mix((static_cast<uint64_t>(nb.vertex) << 1) | (nb.sign < 0 ? 1 : 0));
  }
  return h;
}

absl::Status ValidateSubBipartition(const SignedGraph& g,
                                    const SubBipartition& bp) {
  if (bp.first.empty() && bp.second.empty()) {
    return absl::InvalidArgumentError("sub-bipartition has an empty union");
  }
  std::set<Vertex> seen;
  for (const auto* part : {&bp.first, &bp.second}) {
    for (Vertex v : *part) {
      if (v >= g.num_vertices()) {
        return absl::InvalidArgumentError(
            absl::StrCat("vertex ", v, " out of range"));
      }
      if (!seen.insert(v).second) {
        return absl::InvalidArgumentError(
            absl::StrCat("vertex ", v, " appears twice in sub-bipartition"));
      }
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<BipartitenessCounts> CountBipartiteness(
    const SignedGraph& g, const SubBipartition& bp) {
  if (absl::Status s = ValidateSubBipartition(g, bp); !s.ok()) return s;
  // 0 = outside, 1 = V1, 2 = V2.
  absl::flat_hash_map<Vertex, int> side;
  for (Vertex v : bp.first) side[v] = 1;
  for (Vertex v : bp.second) side[v] = 2;

  BipartitenessCounts counts;
  for (const auto& [u, su] : side) {
    counts.volume += g.degree(u);
    for (const Neighbor& nb : g.neighbors(u)) {
      auto it = side.find(nb.vertex);
      if (it == side.end()) {
        counts.violating += 1;
      } else if (it->second == su) {
        // Each internal negative edge is visited from both ends, which yields
        // the doubled count.
        if (nb.sign < 0) counts.violating += 1;
      } else if (nb.sign > 0) {
        // Visited from both ends: 2|E+(V1,V2)|.
        counts.violating += 1;
      }
    }
  }
  return counts;
}

absl::StatusOr<Rational> SignedBipartitenessRatio(const SignedGraph& g,
                                                  const SubBipartition& bp) {
  absl::StatusOr<BipartitenessCounts> counts = CountBipartiteness(g, bp);
  if (!counts.ok()) return counts.status();
  if (counts->volume == 0) {
    return absl::InvalidArgumentError("sub-bipartition has zero volume");
  }
  return Rational(counts->violating, counts->volume);
}

std::vector<Vertex> GroundTruth::LabeledVertices() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < cluster_.size(); ++v) {
    if (cluster_[v] >= 0) out.push_back(v);
  }
  return out;
}

size_t GroundTruth::num_labeled() const {
  return std::count_if(cluster_.begin(), cluster_.end(),
                       [](int32_t c) { return c >= 0; });
}

std::vector<int> GroundTruth::ClusterIds() const {
  std::set<int> ids;
  for (int32_t c : cluster_) {
    if (c >= 0) ids.insert(c);
  }
  return {ids.begin(), ids.end()};
}

bool GroundTruth::HasSides() const {
  for (size_t v = 0; v < cluster_.size(); ++v) {
    if (cluster_[v] >= 0 && side_[v] == 0) return false;
  }
  return num_labeled() > 0;
}

absl::StatusOr<SignedGraph> ParseEdgeList(std::istream& in,
                                          const EdgeListOptions& options) {
  std::vector<SignedEdge> edges;
  absl::flat_hash_map<uint64_t, std::pair<int8_t, size_t>> first_seen;
  absl::flat_hash_map<std::string, Vertex> ids;
  std::vector<std::string> names;
  size_t n = 0;

  auto resolve = [&](absl::string_view token, size_t line_no) -> absl::StatusOr<Vertex> {
    if (options.string_ids) {
      auto [it, inserted] = ids.try_emplace(std::string(token), names.size());
      if (inserted) names.emplace_back(token);
      return it->second;
    }
    uint64_t id = 0;
    if (!absl::SimpleAtoi(token, &id) || id >= std::numeric_limits<Vertex>::max()) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": invalid vertex id '", token, "'"));
    }
    return static_cast<Vertex>(id);
  };

  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<absl::string_view> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      return absl::InvalidArgumentError(absl::StrCat(
          "line ", line_no, ": expected 'u v sign', got ", tokens.size(), " fields"));
    }
    absl::StatusOr<Vertex> u = resolve(tokens[0], line_no);
    if (!u.ok()) return u.status();
    absl::StatusOr<Vertex> v = resolve(tokens[1], line_no);
    if (!v.ok()) return v.status();
    const std::optional<int8_t> sign = ParseSign(tokens[2]);
    if (!sign) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": invalid sign '", tokens[2], "'"));
    }
    if (*u == *v) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": self-loop at vertex ", *u));
    }
    auto [it, inserted] = first_seen.try_emplace(PairKey(*u, *v), *sign, line_no);
    if (!inserted) {
      if (it->second.first != *sign) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line_no, ": conflicting sign for pair ", PairString(*u, *v),
            " (first seen on line ", it->second.second, ")"));
      }
      continue;
    }
    n = std::max<size_t>(n, std::max(*u, *v) + 1);
    edges.push_back({*u, *v, *sign});
  }
  if (options.string_ids) n = names.size();
  absl::StatusOr<SignedGraph> g = SignedGraph::FromEdges(n, std::move(edges));
  if (g.ok() && options.string_ids) g->set_names(std::move(names));
  return g;
}

absl::StatusOr<SignedGraph> LoadEdgeList(const std::string& path,
                                         const EdgeListOptions& options) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  return ParseEdgeList(in, options);
}

void WriteEdgeList(std::ostream& out, const SignedGraph& g) {
  for (const SignedEdge& e : g.Edges()) {
    out << e.u << ' ' << e.v << ' ' << (e.sign > 0 ? '+' : '-') << '\n';
  }
}

absl::StatusOr<GroundTruth> ParseGroundTruth(std::istream& in, size_t n) {
  GroundTruth gt(n);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<absl::string_view> tokens = Tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2 && tokens.size() != 3) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": expected 'v cluster [side]'"));
    }
    uint64_t v = 0;
    int cluster = 0;
    if (!absl::SimpleAtoi(tokens[0], &v) || !absl::SimpleAtoi(tokens[1], &cluster) ||
        cluster < 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": malformed label line"));
    }
    if (v >= n) {
      return absl::InvalidArgumentError(
          absl::StrCat("line ", line_no, ": vertex ", v, " out of range"));
    }
    int side = 0;
    if (tokens.size() == 3) {
      if (!absl::SimpleAtoi(tokens[2], &side) || (side != 1 && side != 2)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "line ", line_no, ": side must be 1 or 2, got '", tokens[2], "'"));
      }
    }
    gt.Set(static_cast<Vertex>(v), cluster, side);
  }
  return gt;
}

absl::StatusOr<GroundTruth> LoadGroundTruth(const std::string& path, size_t n) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  return ParseGroundTruth(in, n);
}

void WriteGroundTruth(std::ostream& out, const GroundTruth& gt) {
  for (Vertex v : gt.LabeledVertices()) {
    out << v << ' ' << *gt.cluster(v);
    if (gt.side(v) != 0) out << ' ' << gt.side(v);
    out << '\n';
  }
}

}  // namespace signed_oracle
