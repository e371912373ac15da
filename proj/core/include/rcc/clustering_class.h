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

#ifndef RCC_CLUSTERING_CLASS_H_
#define RCC_CLUSTERING_CLASS_H_

#include <vector>

#include "absl/status/statusor.h"
#include "rcc/clustering.h"
#include "rcc/hierarchy_tree.h"

namespace rcc {

// A finite class F' = {T1..Tr, C1..Cs}: hierarchical trees (each standing
// for all of its prunings) and flat clusterings, all over the same elements.
class ClusteringClass {
 public:
  ClusteringClass() = default;

  static absl::StatusOr<ClusteringClass> Create(
      std::vector<HierarchyTree> trees, std::vector<Clustering> flats);

  const std::vector<HierarchyTree>& trees() const { return trees_; }
  const std::vector<Clustering>& flats() const { return flats_; }
  int num_elements() const { return num_elements_; }

 private:
  std::vector<HierarchyTree> trees_;
  std::vector<Clustering> flats_;
  int num_elements_ = 0;
};

}  // namespace rcc

#endif  // RCC_CLUSTERING_CLASS_H_
