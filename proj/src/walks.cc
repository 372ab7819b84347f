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

#include "signed_oracle/walks.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"

namespace signed_oracle {
namespace {

inline WalkEnd RunWalk(const SignedGraph& g, Vertex u, int steps, Rng& rng,
                       bool use_signs) {
  Vertex at = u;
  int8_t sign = 1;
  for (int step = 0; step < steps; ++step) {
    if (rng.Coin()) continue;
    const Neighbor& nb = g.neighbor_at(at, rng.Below(g.degree(at)));
    at = nb.vertex;
    if (use_signs) sign = static_cast<int8_t>(sign * nb.sign);
  }
  return {at, sign};
}

absl::Status CheckStart(const SignedGraph& g, Vertex u) {
  if (u >= g.num_vertices()) {
    return absl::InvalidArgumentError(absl::StrCat("vertex ", u, " out of range"));
  }
  // Every vertex reachable from a non-isolated start has degree >= 1.
  if (g.degree(u) == 0) {
    return absl::FailedPreconditionError(absl::StrCat("isolated vertex ", u));
  }
  return absl::OkStatus();
}

}  // namespace

absl::Status ValidateWalkParams(const WalkParams& params) {
  if (params.steps < 0) return absl::InvalidArgumentError("steps must be >= 0");
  if (params.walks < 1) return absl::InvalidArgumentError("walks must be >= 1");
  if (params.repetitions < 1 || params.repetitions % 2 == 0) {
    return absl::InvalidArgumentError("repetitions must be odd and >= 1");
  }
  return absl::OkStatus();
}

int64_t TheoreticalWalkCount(size_t n, uint32_t max_degree, int k, double alpha) {
  const double d = max_degree;
  return static_cast<int64_t>(std::ceil(40000.0 * d * d * std::pow(k, 1.5) *
                                        std::sqrt(static_cast<double>(n)) /
                                        std::pow(alpha, 1.5)));
}

int TheoreticalRepetitions(size_t n) {
  int h = n <= 1 ? 1 : static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
  if (h % 2 == 0) ++h;
  return h;
}

absl::StatusOr<WalkEnd> LazySignedWalk(const SignedGraph& g, Vertex u,
                                       int steps, Rng& rng, bool use_signs) {
  if (absl::Status s = CheckStart(g, u); !s.ok()) return s;
  if (steps < 0) return absl::InvalidArgumentError("steps must be >= 0");
  return RunWalk(g, u, steps, rng, use_signs);
}

double WalkVector::at(Vertex v) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), v,
      [](const Entry& e, Vertex x) { return e.vertex < x; });
  return it != entries_.end() && it->vertex == v ? it->value : 0.0;
}

absl::StatusOr<WalkVector> ComputeWalkVector(const SignedGraph& g, Vertex u,
                                             const WalkParams& params, Rng& rng) {
  if (absl::Status s = ValidateWalkParams(params); !s.ok()) return s;
  if (absl::Status s = CheckStart(g, u); !s.ok()) return s;

  const size_t n = g.num_vertices();
  const size_t walks = static_cast<size_t>(params.walks);
  const double scale = 1.0 / static_cast<double>(walks);
  std::vector<WalkVector::Entry> entries;
  auto emit = [&](Vertex v, int64_t count) {
    if (count == 0) return;
    double value = count * scale / std::sqrt(static_cast<double>(g.degree(v)));
    if (params.absolute) value = std::fabs(value);
    entries.push_back({v, value});
  };

  if (n <= walks) {
    // Dense counters cost O(n) <= O(R).
    std::vector<int32_t> counts(n, 0);
    std::vector<uint8_t> touched(n, 0);
    for (size_t i = 0; i < walks; ++i) {
      const WalkEnd end = RunWalk(g, u, params.steps, rng, params.use_signs);
      counts[end.vertex] += end.sign;
      touched[end.vertex] = 1;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (touched[v]) emit(v, counts[v]);
    }
  } else {
    std::vector<uint64_t> ends(walks);
    for (size_t i = 0; i < walks; ++i) {
      const WalkEnd end = RunWalk(g, u, params.steps, rng, params.use_signs);
      ends[i] = (static_cast<uint64_t>(end.vertex) << 1) | (end.sign < 0 ? 1 : 0);
    }
    std::sort(ends.begin(), ends.end());
    size_t i = 0;
    while (i < ends.size()) {
      const Vertex v = static_cast<Vertex>(ends[i] >> 1);
      int64_t count = 0;
      for (; i < ends.size() && (ends[i] >> 1) == v; ++i) {
        count += (ends[i] & 1) ? -1 : 1;
      }
      emit(v, count);
    }
  }
  return WalkVector(u, std::move(entries));
}

double SparseDot(const WalkVector& a, const WalkVector& b) {
  const auto& small = a.nnz() <= b.nnz() ? a.entries() : b.entries();
  const auto& large = a.nnz() <= b.nnz() ? b.entries() : a.entries();
  long double sum = 0.0L;
  if (small.empty()) return 0.0;
  if (small.size() * 16 < large.size()) {
    auto lo = large.begin();
    for (const WalkVector::Entry& e : small) {
      lo = std::lower_bound(lo, large.end(), e.vertex,
                            [](const WalkVector::Entry& x, Vertex v) {
                              return x.vertex < v;
                            });
      if (lo == large.end()) break;
      if (lo->vertex == e.vertex) {
        sum += static_cast<long double>(e.value) * lo->value;
      }
    }
  } else {
    size_t i = 0, j = 0;
    while (i < small.size() && j < large.size()) {
      if (small[i].vertex < large[j].vertex) {
        ++i;
      } else if (large[j].vertex < small[i].vertex) {
        ++j;
      } else {
        sum += static_cast<long double>(small[i].value) * large[j].value;
        ++i;
        ++j;
      }
    }
  }
  return static_cast<double>(sum);
}

absl::StatusOr<double> EstDotProd(const SignedGraph& g, Vertex u, Vertex v,
                                  const WalkParams& params, Rng& rng) {
  std::vector<double> products;
  products.reserve(params.repetitions);
  for (int i = 0; i < params.repetitions; ++i) {
    absl::StatusOr<WalkVector> mu = ComputeWalkVector(g, u, params, rng);
    if (!mu.ok()) return mu.status();
    absl::StatusOr<WalkVector> mv = ComputeWalkVector(g, v, params, rng);
    if (!mv.ok()) return mv.status();
    products.push_back(SparseDot(*mu, *mv));
  }
  return Median(std::move(products));
}

double DeltaDistance(double xuu, double xvv, double xuv, bool bicluster_mode) {
  const double difference = xuu + xvv - 2.0 * xuv;
  if (bicluster_mode) return difference;
  return std::min(difference, xuu + xvv + 2.0 * xuv);
}

double Median(std::vector<double> values) {
  const size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + mid, values.end());
  return values[mid];
}

}  // namespace signed_oracle
