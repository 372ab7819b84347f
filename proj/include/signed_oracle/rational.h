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

#ifndef SIGNED_ORACLE_RATIONAL_H_
#define SIGNED_ORACLE_RATIONAL_H_

#include <cstdint>
#include <ostream>
#include <string>

namespace signed_oracle {

// Non-negative exact fraction with a positive denominator, kept in lowest
// terms. Used for bipartiteness ratios so that threshold comparisons in tests
// are exact.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t numerator, int64_t denominator);

  int64_t numerator() const { return num_; }
  int64_t denominator() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / den_; }
  std::string ToString() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.ToString();
  }

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

}  // namespace signed_oracle

#endif  // SIGNED_ORACLE_RATIONAL_H_
