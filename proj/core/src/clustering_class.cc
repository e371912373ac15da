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

#include "rcc/clustering_class.h"

#include <utility>

#include "rcc/errors.h"

namespace rcc {

absl::StatusOr<ClusteringClass> ClusteringClass::Create(
    std::vector<HierarchyTree> trees, std::vector<Clustering> flats) {
  if (trees.empty() && flats.empty()) {
    return MakeError(ErrorCode::kInvalidArgument, "clustering class is empty");
  }
  const int n =
      trees.empty() ? flats.front().size() : trees.front().num_elements();
  for (const auto& t : trees) {
    if (t.num_elements() != n) {
      return MakeError(ErrorCode::kSchemaViolation,
                       "class members cover different element sets");
    }
  }
  for (const auto& c : flats) {
    if (c.size() != n) {
      return MakeError(ErrorCode::kSchemaViolation,
                       "class members cover different element sets");
    }
  }
  ClusteringClass cls;
  cls.trees_ = std::move(trees);
  cls.flats_ = std::move(flats);
  cls.num_elements_ = n;
  return cls;
}

}  // namespace rcc
