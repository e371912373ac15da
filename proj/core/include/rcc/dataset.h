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

#ifndef RCC_DATASET_H_
#define RCC_DATASET_H_

#include <map>
#include <optional>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "rcc/clustering.h"

namespace rcc {

struct Record {
  std::string id;
  std::optional<std::string> text;
  std::map<std::string, std::string> features;
  // Ground-truth cluster label, if known.
  std::optional<std::string> cluster;

  bool has_payload() const { return text.has_value() || !features.empty(); }
  // The string compared by the text distances: `text` when present,
  // otherwise the feature values joined by single spaces in key order.
  std::string ComparableText() const;
};

// An immutable collection of records indexed 0..n-1 in input order.
class Dataset {
 public:
  Dataset() = default;

  // Fails on duplicate ids or when ground truth is present on only some
  // records.
  static absl::StatusOr<Dataset> Create(std::vector<Record> records);

  int size() const { return static_cast<int>(records_.size()); }
  const std::vector<Record>& records() const { return records_; }
  const Record& record(int i) const { return records_[i]; }
  const std::string& id(int i) const { return records_[i].id; }

  absl::StatusOr<int> IndexOf(absl::string_view id) const;

  bool has_ground_truth() const { return truth_.has_value(); }
  // C*, built from the records' cluster labels.
  const std::optional<Clustering>& ground_truth() const { return truth_; }

 private:
  std::vector<Record> records_;
  absl::flat_hash_map<std::string, int> index_;
  std::optional<Clustering> truth_;
};

// same_cluster over record ids.
absl::StatusOr<bool> SameCluster(const Dataset& dataset,
                                 const Clustering& clustering,
                                 absl::string_view x, absl::string_view y);

}  // namespace rcc

#endif  // RCC_DATASET_H_
