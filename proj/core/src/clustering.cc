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

#include "rcc/clustering.h"

#include <algorithm>
#include <string>
#include <utility>

#include "absl/container/flat_hash_map.h"
#include "absl/strings/str_cat.h"
#include "rcc/errors.h"

namespace rcc {

Clustering::Clustering(std::vector<int> canonical_labels)
    : labels_(std::move(canonical_labels)) {
  int k = 0;
  for (int l : labels_) k = std::max(k, l + 1);
  blocks_.assign(k, {});
  for (int x = 0; x < size(); ++x) blocks_[labels_[x]].push_back(x);
}

absl::StatusOr<Clustering> Clustering::FromLabels(
    std::span<const int> labels) {
  absl::flat_hash_map<int, int> renumber;
  std::vector<int> canonical;
  canonical.reserve(labels.size());
  for (int l : labels) {
    if (l < 0) {
      return MakeError(ErrorCode::kNotAPartition,
                       absl::StrCat("negative cluster label ", l));
    }
    auto [it, inserted] =
        renumber.try_emplace(l, static_cast<int>(renumber.size()));
    canonical.push_back(it->second);
  }
  return Clustering(std::move(canonical));
}

absl::StatusOr<Clustering> Clustering::FromBlocks(
    int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> labels(n, -1);
  for (size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) {
      return MakeError(ErrorCode::kNotAPartition, "empty cluster");
    }
    for (int x : blocks[b]) {
      if (x < 0 || x >= n) {
        return MakeError(ErrorCode::kNotAPartition,
                         absl::StrCat("element ", x, " out of range"));
      }
      if (labels[x] != -1) {
        return MakeError(ErrorCode::kNotAPartition,
                         absl::StrCat("element ", x, " in two clusters"));
      }
      labels[x] = static_cast<int>(b);
    }
  }
  for (int x = 0; x < n; ++x) {
    if (labels[x] == -1) {
      return MakeError(ErrorCode::kNotAPartition,
                       absl::StrCat("element ", x, " not covered"));
    }
  }
  return FromLabels(labels);
}

Clustering Clustering::Singletons(int n) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  return Clustering(std::move(labels));
}

Clustering Clustering::OneCluster(int n) {
  return Clustering(std::vector<int>(n, 0));
}

int Clustering::max_cluster_size() const {
  size_t m = 0;
  for (const auto& b : blocks_) m = std::max(m, b.size());
  return static_cast<int>(m);
}

absl::StatusOr<bool> Clustering::SameCluster(int x, int y) const {
  if (x < 0 || y < 0 || x >= size() || y >= size()) {
    return MakeError(ErrorCode::kUnknownId,
                     absl::StrCat("element out of range: ", x, ", ", y));
  }
  if (x == y) {
    return MakeError(ErrorCode::kSamePair, "pair endpoints must differ");
  }
  return Together(x, y);
}

}  // namespace rcc
