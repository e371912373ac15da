// Copyright 2026 The RCC Authors.
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

#ifndef RCC_ALIAS_TABLE_H_
#define RCC_ALIAS_TABLE_H_

#include <random>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace rcc {

// Walker/Vose alias table: O(n) construction, O(1) draws from a discrete
// distribution proportional to non-negative weights.
class AliasTable {
 public:
  AliasTable() = default;

  // Fails when weights are empty, negative, or sum to zero.
  static absl::StatusOr<AliasTable> Create(std::span<const double> weights);

  int size() const { return static_cast<int>(probability_.size()); }

  template <typename Urbg>
  int Sample(Urbg& rng) const {
    std::uniform_int_distribution<int> column(0, size() - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int i = column(rng);
    return coin(rng) < probability_[i] ? i : alias_[i];
  }

  // The exact probability of drawing `i`, reconstructed from the table.
  double Probability(int i) const;

 private:
  std::vector<double> probability_;
  std::vector<int> alias_;
};

}  // namespace rcc

#endif  // RCC_ALIAS_TABLE_H_
