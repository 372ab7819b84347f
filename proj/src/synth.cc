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

#include "signed_oracle/synth.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "absl/strings/str_cat.h"
#include "signed_oracle/rng.h"

namespace signed_oracle {
namespace {

bool IsProbability(double p) { return p >= 0.0 && p <= 1.0; }

// Splits `total` into `parts` sizes differing by at most one, larger first.
std::vector<size_t> EvenSplit(size_t total, size_t parts) {
  std::vector<size_t> sizes(parts, total / parts);
  for (size_t i = 0; i < total % parts; ++i) ++sizes[i];
  return sizes;
}

// Calls f(v) for every v in [begin, end) independently with probability p,
// skipping geometrically between hits.
template <typename F>
void SampleRange(size_t begin, size_t end, double p, Rng& rng, F&& f) {
  if (p <= 0.0 || begin >= end) return;
  if (p >= 1.0) {
    for (size_t v = begin; v < end; ++v) f(v);
    return;
  }
  const double log_q = std::log1p(-p);
  size_t v = begin;
  while (true) {
    const double skip = std::floor(std::log1p(-rng.Uniform()) / log_q);
    if (skip >= static_cast<double>(end - v)) return;
    v += static_cast<size_t>(skip);
    f(v);
    if (++v >= end) return;
  }
}

int8_t SignWithProbability(double p_positive, Rng& rng) {
  return rng.Uniform() < p_positive ? 1 : -1;
}

}  // namespace

absl::Status ValidateSbmParams(const SbmParams& params) {
  if (params.k < 1) return absl::InvalidArgumentError("k must be >= 1");
  if (params.n < 2 * static_cast<size_t>(params.k)) {
    return absl::InvalidArgumentError(
        absl::StrCat("n=", params.n, " must be at least 2k=", 2 * params.k));
  }
  for (double p : {params.p_intra, params.p_cross, params.q, params.p_sign,
                   params.q_sign}) {
    if (!IsProbability(p)) {
      return absl::InvalidArgumentError(absl::StrCat("probability ", p, " not in [0,1]"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<SyntheticGraph> GenerateSbm(const SbmParams& params) {
  if (absl::Status s = ValidateSbmParams(params); !s.ok()) return s;
  const size_t k = static_cast<size_t>(params.k);

  // Block j is side (j % 2) + 1 of cluster j / 2.
  std::vector<size_t> block_begin;
  size_t next = 0;
  for (size_t cluster_size : EvenSplit(params.n, k)) {
    for (size_t side_size : EvenSplit(cluster_size, 2)) {
      block_begin.push_back(next);
      next += side_size;
    }
  }
  block_begin.push_back(params.n);

  SyntheticGraph out;
  out.truth = GroundTruth(params.n);
  std::vector<size_t> block_of(params.n);
  for (size_t b = 0; b + 1 < block_begin.size(); ++b) {
    for (size_t v = block_begin[b]; v < block_begin[b + 1]; ++v) {
      block_of[v] = b;
      out.truth.Set(static_cast<Vertex>(v), static_cast<int>(b / 2),
                    static_cast<int>(b % 2) + 1);
    }
  }

  Rng rng(params.seed);
  std::vector<SignedEdge> edges;
  for (size_t u = 0; u < params.n; ++u) {
    const size_t bu = block_of[u];
    for (size_t b = bu; b + 1 < block_begin.size(); ++b) {
      const size_t begin = std::max(block_begin[b], u + 1);
      double p;
      double p_positive;
      if (b == bu) {
        p = params.p_intra;
        p_positive = params.p_sign;
      } else if (b / 2 == bu / 2) {
        p = params.p_cross;
        p_positive = 1.0 - params.p_sign;
      } else {
        p = params.q;
        p_positive = params.q_sign;
      }
      SampleRange(begin, block_begin[b + 1], p, rng, [&](size_t v) {
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                         SignWithProbability(p_positive, rng)});
      });
    }
  }
  absl::StatusOr<SignedGraph> g = SignedGraph::FromEdges(params.n, std::move(edges));
  if (!g.ok()) return g.status();
  out.graph = *std::move(g);
  return out;
}

absl::StatusOr<SignedGraph> RandomSignedGraph(size_t n, double edge_prob,
                                              double negative_prob,
                                              uint64_t seed) {
  if (n < 2) return absl::InvalidArgumentError("need at least two vertices");
  if (!IsProbability(edge_prob) || !IsProbability(negative_prob)) {
    return absl::InvalidArgumentError("probability not in [0,1]");
  }
  Rng rng(seed);
  std::vector<SignedEdge> edges;
  std::vector<bool> touched(n, false);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.Uniform() >= edge_prob) continue;
      edges.push_back({u, v, SignWithProbability(1.0 - negative_prob, rng)});
      touched[u] = touched[v] = true;
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    if (touched[u]) continue;
    Vertex v = static_cast<Vertex>(rng.Below(n - 1));
    if (v >= u) ++v;
    edges.push_back({u, v, SignWithProbability(1.0 - negative_prob, rng)});
    touched[u] = touched[v] = true;
  }
  return SignedGraph::FromEdges(n, std::move(edges));
}

absl::StatusOr<SyntheticGraph> GenerateClusterable(const ClusterableParams& params) {
  if (params.k < 1) return absl::InvalidArgumentError("k must be >= 1");
  if (params.block_size < 2) return absl::InvalidArgumentError("block_size must be >= 2");
  if (!IsProbability(params.p_in) || !IsProbability(params.sign_noise)) {
    return absl::InvalidArgumentError("probability not in [0,1]");
  }
  const size_t k = static_cast<size_t>(params.k);
  const size_t n = k * params.block_size;
  const size_t cross_pairs = n * (n - params.block_size) / 2;
  if (params.cross_edges > cross_pairs / 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("at most ", cross_pairs / 2, " cross edges supported"));
  }
  Rng rng(params.seed);
  SyntheticGraph out;
  out.truth = GroundTruth(n);
  const size_t half = (params.block_size + 1) / 2;
  auto side_of = [&](size_t v) { return (v % params.block_size) < half ? 1 : 2; };
  for (size_t v = 0; v < n; ++v) {
    out.truth.Set(static_cast<Vertex>(v), static_cast<int>(v / params.block_size),
                  side_of(v));
  }

  std::set<std::pair<Vertex, Vertex>> present;
  std::vector<SignedEdge> edges;
  auto add = [&](size_t u, size_t v, int8_t sign) {
    if (u > v) std::swap(u, v);
    if (!present.insert({static_cast<Vertex>(u), static_cast<Vertex>(v)}).second) return;
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), sign});
  };
  auto balanced_sign = [&](size_t u, size_t v) -> int8_t {
    const int8_t sign = side_of(u) == side_of(v) ? 1 : -1;
    return rng.Uniform() < params.sign_noise ? static_cast<int8_t>(-sign) : sign;
  };

  std::vector<size_t> degree(n, 0);
  for (size_t b = 0; b < k; ++b) {
    const size_t begin = b * params.block_size;
    const size_t end = begin + params.block_size;
    for (size_t u = begin; u < end; ++u) {
      for (size_t v = u + 1; v < end; ++v) {
        if (rng.Uniform() < params.p_in) {
          add(u, v, balanced_sign(u, v));
          ++degree[u];
          ++degree[v];
        }
      }
    }
    for (size_t u = begin; u < end; ++u) {
      if (degree[u] > 0) continue;
      size_t v = begin + rng.Below(params.block_size - 1);
      if (v >= u) ++v;
      add(u, v, balanced_sign(u, v));
      ++degree[u];
      ++degree[v];
    }
  }
  size_t added = 0;
  while (added < params.cross_edges) {
    const size_t u = rng.Below(n);
    const size_t v = rng.Below(n);
    if (u / params.block_size == v / params.block_size) continue;
    const size_t before = edges.size();
    add(u, v, rng.Coin() ? 1 : -1);
    if (edges.size() > before) ++added;
  }
  absl::StatusOr<SignedGraph> g = SignedGraph::FromEdges(n, std::move(edges));
  if (!g.ok()) return g.status();
  out.graph = *std::move(g);
  return out;
}

}  // namespace signed_oracle
