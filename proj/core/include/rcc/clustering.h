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

#ifndef RCC_CLUSTERING_H_
#define RCC_CLUSTERING_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace rcc {

// A partition of the element indices [0, n). Blocks are numbered by first
// appearance, so `labels()` is the restricted-growth encoding of the
// partition and two equal partitions compare equal.
class Clustering {
 public:
  Clustering() = default;

  // Labels may be arbitrary non-negative integers; they are renumbered.
  static absl::StatusOr<Clustering> FromLabels(std::span<const int> labels);
  // Blocks must be non-empty, disjoint, and cover [0, n).
  static absl::StatusOr<Clustering> FromBlocks(
      int n, const std::vector<std::vector<int>>& blocks);

  static Clustering Singletons(int n);
  static Clustering OneCluster(int n);

  int size() const { return static_cast<int>(labels_.size()); }
  int num_clusters() const { return static_cast<int>(blocks_.size()); }
  // m(C): size of the largest block.
  int max_cluster_size() const;

  const std::vector<int>& labels() const { return labels_; }
  // Each block sorted ascending; blocks ordered by smallest member.
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int label(int x) const { return labels_[x]; }

  // C(x, y) without argument checks; for hot loops over validated pairs.
  bool Together(int x, int y) const { return labels_[x] == labels_[y]; }

  // C(x, y) with checks: x != y and both in range.
  absl::StatusOr<bool> SameCluster(int x, int y) const;

  friend bool operator==(const Clustering& a, const Clustering& b) {
    return a.labels_ == b.labels_;
  }

 private:
  explicit Clustering(std::vector<int> canonical_labels);

  std::vector<int> labels_;
  std::vector<std::vector<int>> blocks_;
};

}  // namespace rcc

#endif  // RCC_CLUSTERING_H_
