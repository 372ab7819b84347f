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

// Exact signed bipartiteness ratios by enumeration over vertex bitmasks.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/str_cat.h"
#include "signed_oracle/spectral.h"

namespace signed_oracle::spectral {
namespace {

// Fraction compared by cross multiplication; den == 0 encodes +infinity.
struct Frac {
  int64_t num = 1;
  int64_t den = 0;

  bool finite() const { return den != 0; }
  friend bool operator<(const Frac& a, const Frac& b) {
    if (!b.finite()) return a.finite();
    if (!a.finite()) return false;
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
};

Frac Max(const Frac& a, const Frac& b) { return a < b ? b : a; }

// Adjacency of a vertex universe (at most 32 vertices) as bitmasks.
struct MaskGraph {
  std::vector<Vertex> vertices;  // local index -> vertex id
  std::vector<uint32_t> positive;
  std::vector<uint32_t> negative;
  std::vector<uint32_t> all;
  std::vector<int64_t> degree;
};

MaskGraph BuildMaskGraph(const SignedGraph& g, const std::vector<Vertex>& universe) {
  MaskGraph mg;
  mg.vertices = universe;
  absl::flat_hash_map<Vertex, int> local;
  for (size_t j = 0; j < universe.size(); ++j) local[universe[j]] = static_cast<int>(j);
  mg.positive.assign(universe.size(), 0);
  mg.negative.assign(universe.size(), 0);
  mg.all.assign(universe.size(), 0);
  for (size_t j = 0; j < universe.size(); ++j) {
    mg.degree.push_back(g.degree(universe[j]));
    for (const Neighbor& nb : g.neighbors(universe[j])) {
      auto it = local.find(nb.vertex);
      if (it == local.end()) continue;
      const uint32_t bit = 1u << it->second;
      (nb.sign > 0 ? mg.positive : mg.negative)[j] |= bit;
      mg.all[j] |= bit;
    }
  }
  return mg;
}

template <typename F>
void ForEachBit(uint32_t mask, F&& f) {
  while (mask != 0) {
    f(std::countr_zero(mask));
    mask &= mask - 1;
  }
}

int64_t Volume(const MaskGraph& mg, uint32_t set) {
  int64_t vol = 0;
  ForEachBit(set, [&](int j) { vol += mg.degree[j]; });
  return vol;
}

// Violating edge mass e_G(A, B). Edges leaving A u B include those leaving
// the universe.
int64_t Violating(const MaskGraph& mg, uint32_t a, uint32_t b) {
  const uint32_t u = a | b;
  int64_t e = 0;
  ForEachBit(a, [&](int j) {
    e += 2 * std::popcount(mg.positive[j] & b) + std::popcount(mg.negative[j] & a);
  });
  ForEachBit(b, [&](int j) { e += std::popcount(mg.negative[j] & b); });
  ForEachBit(u, [&](int j) { e += mg.degree[j] - std::popcount(mg.all[j] & u); });
  return e;
}

struct SetBest {
  Frac beta;          // infinite when vol(U) == 0
  uint32_t first = 0;  // V1 of the witness; V2 = U \ V1
};

// Minimum over the 2^(|U|-1) partitions of U with the lowest vertex in V1.
SetBest BestSplit(const MaskGraph& mg, uint32_t set) {
  SetBest best;
  const int64_t vol = Volume(mg, set);
  if (set == 0 || vol == 0) return best;
  const uint32_t low = set & (0u - set);
  const uint32_t rest = set ^ low;
  uint32_t sub = rest;
  while (true) {
    const uint32_t a = low | sub;
    const Frac f{Violating(mg, a, set ^ a), vol};
    if (f < best.beta) best = {f, a};
    if (sub == 0) break;
    sub = (sub - 1) & rest;
  }
  return best;
}

std::vector<Vertex> Members(const MaskGraph& mg, uint32_t set) {
  std::vector<Vertex> out;
  ForEachBit(set, [&](int j) { out.push_back(mg.vertices[j]); });
  return out;
}

SubBipartition Witness(const MaskGraph& mg, uint32_t set, uint32_t first) {
  return {Members(mg, first), Members(mg, set ^ first)};
}

std::vector<Vertex> AllVertices(const SignedGraph& g) {
  std::vector<Vertex> all(g.num_vertices());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return all;
}

// beta_G(U) for every subset U of V.
std::vector<SetBest> AllSubsets(const MaskGraph& mg) {
  const uint32_t count = 1u << mg.vertices.size();
  std::vector<SetBest> table(count);
  for (uint32_t set = 1; set < count; ++set) table[set] = BestSplit(mg, set);
  return table;
}

absl::Status GuardVertices(const SignedGraph& g, size_t limit, absl::string_view what) {
  if (g.num_vertices() > limit) {
    return absl::OutOfRangeError(absl::StrCat(what, " enumeration limited to ", limit,
                                              " vertices, got ", g.num_vertices()));
  }
  if (g.num_vertices() == 0) return absl::InvalidArgumentError("empty graph");
  return absl::OkStatus();
}

}  // namespace

int64_t InducedVolume(const SignedGraph& g, const std::vector<Vertex>& set) {
  absl::flat_hash_map<Vertex, bool> in;
  for (Vertex v : set) in[v] = true;
  int64_t mu = 0;
  for (Vertex v : set) {
    for (const Neighbor& nb : g.neighbors(v)) mu += in.contains(nb.vertex);
  }
  return mu;
}

absl::StatusOr<BetaReport> BetaMinOverSet(const SignedGraph& g,
                                          const std::vector<Vertex>& set) {
  if (set.empty()) return absl::InvalidArgumentError("empty vertex set");
  if (set.size() > kMaxSetEnumeration) {
    return absl::OutOfRangeError(absl::StrCat("set enumeration limited to ",
                                              kMaxSetEnumeration, " vertices, got ",
                                              set.size()));
  }
  if (absl::Status s = ValidateSubBipartition(g, {set, {}}); !s.ok()) return s;
  const MaskGraph mg = BuildMaskGraph(g, set);
  const uint32_t full = static_cast<uint32_t>((uint64_t{1} << set.size()) - 1);
  const SetBest best = BestSplit(mg, full);
  if (!best.beta.finite()) return absl::InvalidArgumentError("set has zero volume");
  BetaReport report;
  report.beta = Rational(best.beta.num, best.beta.den);
  report.witness = Witness(mg, full, best.first);
  report.variant = BetaVariant::kSet;
  return report;
}

absl::StatusOr<BetaReport> BetaGraph(const SignedGraph& g) {
  if (absl::Status s = GuardVertices(g, kMaxGraphEnumeration, "graph"); !s.ok()) return s;
  const MaskGraph mg = BuildMaskGraph(g, AllVertices(g));
  const std::vector<SetBest> table = AllSubsets(mg);
  uint32_t arg = 0;
  for (uint32_t set = 1; set < table.size(); ++set) {
    if (table[set].beta < table[arg].beta) arg = set;
  }
  if (arg == 0) return absl::InvalidArgumentError("graph has no edges");
  BetaReport report;
  report.beta = Rational(table[arg].beta.num, table[arg].beta.den);
  report.witness = Witness(mg, arg, table[arg].first);
  report.variant = BetaVariant::kGraph;
  return report;
}

absl::StatusOr<BetaReport> BetaInner(const SignedGraph& g) {
  if (absl::Status s = GuardVertices(g, kMaxGraphEnumeration, "graph"); !s.ok()) return s;
  const MaskGraph mg = BuildMaskGraph(g, AllVertices(g));
  const std::vector<SetBest> table = AllSubsets(mg);
  const int64_t total = static_cast<int64_t>(g.volume());
  uint32_t arg = 0;
  for (uint32_t set = 1; set < table.size(); ++set) {
    if (2 * Volume(mg, set) > total) continue;
    if (table[set].beta < table[arg].beta) arg = set;
  }
  if (arg == 0) {
    return absl::InvalidArgumentError("no set with positive volume at most vol(G)/2");
  }
  BetaReport report;
  report.beta = Rational(table[arg].beta.num, table[arg].beta.den);
  report.witness = Witness(mg, arg, table[arg].first);
  report.variant = BetaVariant::kInner;
  return report;
}

absl::StatusOr<BetaReport> BetaK(const SignedGraph& g, int k) {
  if (absl::Status s = GuardVertices(g, kMaxKWayVertices, "k-way"); !s.ok()) return s;
  if (k < 1 || k > kMaxKWayClusters) {
    return absl::OutOfRangeError(
        absl::StrCat("k-way enumeration supports 1 <= k <= ", kMaxKWayClusters));
  }
  const MaskGraph mg = BuildMaskGraph(g, AllVertices(g));
  const std::vector<SetBest> table = AllSubsets(mg);
  const uint32_t count = static_cast<uint32_t>(table.size());

  // best[j][mask]: min over j disjoint non-empty subsets of mask of the
  // largest ratio; choice[j][mask] is the subset picked last.
  std::vector<std::vector<Frac>> best(k + 1, std::vector<Frac>(count));
  std::vector<std::vector<uint32_t>> choice(k + 1, std::vector<uint32_t>(count, 0));
  std::fill(best[0].begin(), best[0].end(), Frac{0, 1});
  for (int j = 1; j <= k; ++j) {
    for (uint32_t mask = 1; mask < count; ++mask) {
      for (uint32_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
        if (!table[sub].beta.finite()) continue;
        const Frac& rest = best[j - 1][mask ^ sub];
        if (!rest.finite()) continue;
        const Frac candidate = Max(table[sub].beta, rest);
        if (candidate < best[j][mask]) {
          best[j][mask] = candidate;
          choice[j][mask] = sub;
        }
      }
    }
  }
  const uint32_t full = count - 1;
  if (!best[k][full].finite()) {
    return absl::InvalidArgumentError(
        absl::StrCat("graph has fewer than ", k, " disjoint sets of positive volume"));
  }
  BetaReport report;
  report.variant = BetaVariant::kKWay;
  report.beta = Rational(best[k][full].num, best[k][full].den);
  uint32_t mask = full;
  Frac worst{0, 1};
  for (int j = k; j >= 1; --j) {
    const uint32_t sub = choice[j][mask];
    report.parts.push_back(Witness(mg, sub, table[sub].first));
    if (!(table[sub].beta < worst)) {
      worst = table[sub].beta;
      report.witness = report.parts.back();
    }
    mask ^= sub;
  }
  return report;
}

}  // namespace signed_oracle::spectral
