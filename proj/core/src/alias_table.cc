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

#include "rcc/alias_table.h"

#include <numeric>

#include "rcc/errors.h"

namespace rcc {

absl::StatusOr<AliasTable> AliasTable::Create(
    std::span<const double> weights) {
  if (weights.empty()) {
    return MakeError(ErrorCode::kInvalidArgument, "alias table needs weights");
  }
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) {
      return MakeError(ErrorCode::kInvalidArgument,
                       "alias weights must be non-negative");
    }
    total += w;
  }
  if (!(total > 0.0)) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "alias weights sum to zero");
  }
  const int n = static_cast<int>(weights.size());
  AliasTable table;
  table.probability_.assign(n, 0.0);
  table.alias_.assign(n, 0);
  std::vector<double> scaled(n);
  std::vector<int> small;
  std::vector<int> large;
  for (int i = 0; i < n; ++i) {
    scaled[i] = weights[i] * n / total;
    (scaled[i] < 1.0 ? small : large).push_back(i);
  }
  while (!small.empty() && !large.empty()) {
    const int s = small.back();
    small.pop_back();
    const int l = large.back();
    table.probability_[s] = scaled[s];
    table.alias_[s] = l;
    scaled[l] = (scaled[l] + scaled[s]) - 1.0;
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // Leftovers are 1 up to rounding.
  for (int i : large) {
    table.probability_[i] = 1.0;
    table.alias_[i] = i;
  }
  for (int i : small) {
    table.probability_[i] = 1.0;
    table.alias_[i] = i;
  }
  return table;
}

double AliasTable::Probability(int i) const {
  double p = probability_[i];
  for (int j = 0; j < size(); ++j) {
    if (alias_[j] == i && j != i) p += 1.0 - probability_[j];
  }
  return p / size();
}

}  // namespace rcc
