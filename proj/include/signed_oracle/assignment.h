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

#ifndef SIGNED_ORACLE_ASSIGNMENT_H_
#define SIGNED_ORACLE_ASSIGNMENT_H_

#include <cstdint>
#include <vector>

namespace signed_oracle {

// Maximum-weight injective assignment of rows to columns (rows <= columns)
// by the Hungarian method. Returns the column of every row.
std::vector<int> MaxWeightAssignment(const std::vector<std::vector<int64_t>>& weight);

}  // namespace signed_oracle

#endif  // SIGNED_ORACLE_ASSIGNMENT_H_
