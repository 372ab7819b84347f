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

#ifndef SIGNED_ORACLE_RNG_H_
#define SIGNED_ORACLE_RNG_H_

#include <cstdint>
#include <random>

namespace signed_oracle {

// Deterministic random stream. The engine is std::mt19937_64, whose output
// sequence is fixed by the C++ standard; bounded integers use Lemire's
// multiply-and-reject method and coins are drawn one bit at a time from a
// cached 64-bit word, so sequences do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  bool Coin() {
    if (bits_left_ == 0) {
      bits_ = engine_();
      bits_left_ = 64;
    }
    const bool bit = bits_ & 1;
    bits_ >>= 1;
    --bits_left_;
    return bit;
  }

  // Uniform in [0, bound). bound must be positive.
  uint64_t Below(uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
    uint64_t low = static_cast<uint64_t>(m);
    if (low < bound) {
      const uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(engine_()) * bound;
        low = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  // Uniform in [0, 1) with 53 random bits.
  double Uniform() { return (engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
  uint64_t bits_ = 0;
  int bits_left_ = 0;
};

// Seed for an independent sub-stream, e.g. one per query vertex or per job.
uint64_t DeriveSeed(uint64_t seed, uint64_t stream);
uint64_t DeriveSeed(uint64_t seed, uint64_t stream, uint64_t substream);

}  // namespace signed_oracle

#endif  // SIGNED_ORACLE_RNG_H_
