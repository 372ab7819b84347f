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

#ifndef SIGNED_ORACLE_GRAPH_H_
#define SIGNED_ORACLE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "signed_oracle/rational.h"

namespace signed_oracle {

using Vertex = uint32_t;

// One adjacency-list entry. `sign` is +1 or -1.
struct Neighbor {
  Vertex vertex;
  int8_t sign;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

struct SignedEdge {
  Vertex u;
  Vertex v;
  int8_t sign;
};

// Undirected, unweighted graph with a sign on every edge, stored as a
// compressed adjacency list so that the i-th neighbor of a vertex is a
// constant-time lookup. Immutable after construction.
//
// Degrees ignore signs. Adjacency lists are sorted by neighbor id.
class SignedGraph {
 public:
  SignedGraph() = default;

  // Builds a graph on `n` vertices. Edges may be given in either or both
  // directions; consistent duplicates collapse into one edge. Fails on
  // self-loops, out-of-range endpoints, invalid signs and on a pair that is
  // given with both signs.
  static absl::StatusOr<SignedGraph> FromEdges(size_t n,
                                               std::vector<SignedEdge> edges);

  size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  size_t num_edges() const { return adjacency_.size() / 2; }
  uint32_t degree(Vertex u) const { return offsets_[u + 1] - offsets_[u]; }
  uint32_t max_degree() const { return max_degree_; }
  // Sum of all degrees, 2|E|.
  uint64_t volume() const { return adjacency_.size(); }

  // The i-th adjacency entry of u, or nullopt when i >= degree(u).
  std::optional<Neighbor> neighbor(Vertex u, size_t i) const {
    if (i >= degree(u)) return std::nullopt;
    return adjacency_[offsets_[u] + i];
  }
  // Unchecked variant for hot loops.
  const Neighbor& neighbor_at(Vertex u, size_t i) const {
    return adjacency_[offsets_[u] + i];
  }
  std::span<const Neighbor> neighbors(Vertex u) const {
    return {adjacency_.data() + offsets_[u], degree(u)};
  }

  // Sign of edge {u, v}, or 0 when absent. O(log d).
  int EdgeSign(Vertex u, Vertex v) const;

  // Every edge once, with u < v, in lexicographic order.
  std::vector<SignedEdge> Edges() const;

  // Copy with every sign replaced by +1.
  SignedGraph WithAllPositive() const;

  // Order-sensitive 64-bit hash of the edge set; identifies the graph an
  // oracle snapshot was built on.
  uint64_t Fingerprint() const;

  // External names for vertices when the graph was loaded with string ids;
  // empty otherwise.
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names) { names_ = std::move(names); }

 private:
  std::vector<uint32_t> offsets_;
  std::vector<Neighbor> adjacency_;
  uint32_t max_degree_ = 0;
  std::vector<std::string> names_;
};

// A pair of disjoint vertex sets (V1, V2) whose union is non-empty.
struct SubBipartition {
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

absl::Status ValidateSubBipartition(const SignedGraph& g,
                                    const SubBipartition& bp);

// Numerator and denominator of the signed bipartiteness ratio:
//   e = 2|E+(V1,V2)| + |E-(V1)| + |E-(V2)| + |E(V1 u V2, rest)|
// where |E-(Vi)| counts every negative edge inside Vi twice, and
//   vol = sum of degrees over V1 u V2.
struct BipartitenessCounts {
  int64_t violating = 0;
  int64_t volume = 0;
};

absl::StatusOr<BipartitenessCounts> CountBipartiteness(
    const SignedGraph& g, const SubBipartition& bp);

// beta_G(V1, V2) as an exact fraction. Fails when the union is empty or has
// zero volume.
absl::StatusOr<Rational> SignedBipartitenessRatio(const SignedGraph& g,
                                                  const SubBipartition& bp);

// Partial ground-truth labelling: a cluster index per labelled vertex and an
// optional side (1 or 2) inside that cluster.
class GroundTruth {
 public:
  GroundTruth() = default;
  explicit GroundTruth(size_t n) : cluster_(n, -1), side_(n, 0) {}

  size_t num_vertices() const { return cluster_.size(); }
  void Set(Vertex v, int cluster, int side = 0) {
    cluster_[v] = cluster;
    side_[v] = static_cast<int8_t>(side);
  }
  bool labeled(Vertex v) const { return cluster_[v] >= 0; }
  std::optional<int> cluster(Vertex v) const {
    if (cluster_[v] < 0) return std::nullopt;
    return cluster_[v];
  }
  // 0 when no side is known.
  int side(Vertex v) const { return side_[v]; }

  std::vector<Vertex> LabeledVertices() const;
  size_t num_labeled() const;
  // Sorted distinct cluster ids.
  std::vector<int> ClusterIds() const;
  // True when every labelled vertex carries a side.
  bool HasSides() const;
  bool empty() const { return num_labeled() == 0; }

 private:
  std::vector<int32_t> cluster_;
  std::vector<int8_t> side_;
};

struct EdgeListOptions {
  // Map arbitrary tokens to dense ids in order of first appearance instead of
  // reading them as integers.
  bool string_ids = false;
};

// Whitespace separated `u v s` lines, `#` comments, s in {+, -, 1, +1, -1}.
absl::StatusOr<SignedGraph> ParseEdgeList(std::istream& in,
                                          const EdgeListOptions& options = {});
absl::StatusOr<SignedGraph> LoadEdgeList(const std::string& path,
                                         const EdgeListOptions& options = {});
void WriteEdgeList(std::ostream& out, const SignedGraph& g);

// `v c [side]` lines, side in {1, 2}.
absl::StatusOr<GroundTruth> ParseGroundTruth(std::istream& in, size_t n);
absl::StatusOr<GroundTruth> LoadGroundTruth(const std::string& path, size_t n);
void WriteGroundTruth(std::ostream& out, const GroundTruth& gt);

}  // namespace signed_oracle

#endif  // SIGNED_ORACLE_GRAPH_H_
