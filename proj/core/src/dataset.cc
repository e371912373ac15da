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

#include "rcc/dataset.h"

#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "rcc/errors.h"

namespace rcc {

std::string Record::ComparableText() const {
  if (text.has_value()) return *text;
  std::vector<absl::string_view> values;
  values.reserve(features.size());
  for (const auto& [key, value] : features) values.push_back(value);
  return absl::StrJoin(values, " ");
}

absl::StatusOr<Dataset> Dataset::Create(std::vector<Record> records) {
  Dataset ds;
  size_t with_truth = 0;
  for (size_t i = 0; i < records.size(); ++i) {
    auto [it, inserted] =
        ds.index_.try_emplace(records[i].id, static_cast<int>(i));
    if (!inserted) {
      return MakeError(ErrorCode::kSchemaViolation,
                       absl::StrCat("duplicate record id '", records[i].id,
                                    "'"));
    }
    if (records[i].cluster.has_value()) ++with_truth;
  }
  if (with_truth != 0 && with_truth != records.size()) {
    return MakeError(ErrorCode::kSchemaViolation,
                     "ground truth must be present on every record or none");
  }
  if (with_truth != 0) {
    absl::flat_hash_map<std::string, int> label_of;
    std::vector<int> labels;
    labels.reserve(records.size());
    for (const auto& r : records) {
      auto [it, inserted] =
          label_of.try_emplace(*r.cluster, static_cast<int>(label_of.size()));
      labels.push_back(it->second);
    }
    auto truth = Clustering::FromLabels(labels);
    if (!truth.ok()) return truth.status();
    ds.truth_ = *std::move(truth);
  }
  ds.records_ = std::move(records);
  return ds;
}

absl::StatusOr<int> Dataset::IndexOf(absl::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    return MakeError(ErrorCode::kUnknownId,
                     absl::StrCat("unknown record id '", id, "'"));
  }
  return it->second;
}

absl::StatusOr<bool> SameCluster(const Dataset& dataset,
                                 const Clustering& clustering,
                                 absl::string_view x, absl::string_view y) {
  auto xi = dataset.IndexOf(x);
  if (!xi.ok()) return xi.status();
  auto yi = dataset.IndexOf(y);
  if (!yi.ok()) return yi.status();
  return clustering.SameCluster(*xi, *yi);
}

}  // namespace rcc
