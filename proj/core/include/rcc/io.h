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

#ifndef RCC_IO_H_
#define RCC_IO_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "rcc/clustering.h"
#include "rcc/clustering_class.h"
#include "rcc/dataset.h"
#include "rcc/hierarchy_tree.h"
#include "rcc/metrics.h"
#include "rcc/pcc.h"

namespace rcc {

// Dataset: JSON lines, one record per line:
//   {"id": "...", "text": "...", "features": {"k": "v"}, "cluster": "..."}
absl::StatusOr<Dataset> ParseDataset(std::istream& in);
absl::StatusOr<Dataset> LoadDataset(const std::filesystem::path& path);

// Tree: {"leaf": "<id>"} or {"children": [<node>, <node>]}.
absl::StatusOr<HierarchyTree> ParseTree(absl::string_view json,
                                        const Dataset& dataset);
// Flat clustering: {"clusters": [["id", ...], ...]}.
absl::StatusOr<Clustering> ParseFlatClustering(absl::string_view json,
                                               const Dataset& dataset);
std::string TreeToJson(const HierarchyTree& tree, const Dataset& dataset);
std::string FlatClusteringToJson(const Clustering& clustering,
                                 const Dataset& dataset);

// Loads class members from files and/or directories (directory entries with
// a .json extension, sorted by name). Each file is a tree or a flat
// clustering, told apart by its top-level key. Order of appearance fixes the
// member indices used for tie-breaking.
absl::StatusOr<ClusteringClass> LoadClusteringClass(
    const std::vector<std::filesystem::path>& paths, const Dataset& dataset);

// Precomputed distances: CSV with header `id1,id2,distance`, one row per
// unordered pair.
absl::StatusOr<DistanceModel> ParseDistanceCsv(std::istream& in,
                                               const Dataset& dataset);
absl::StatusOr<DistanceModel> LoadDistanceCsv(
    const std::filesystem::path& path, const Dataset& dataset);

// Graph: first line `n m`, then m lines `u v` (0-indexed).
absl::StatusOr<PccGraph> ParseGraph(std::istream& in);
void WriteGraph(const PccGraph& graph, std::ostream& out);

// X3C: first line `q m`, then m lines of three element indices in [0, 3q).
absl::StatusOr<X3cInstance> ParseX3c(std::istream& in);
void WriteX3c(const X3cInstance& instance, std::ostream& out);

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path);

}  // namespace rcc

#endif  // RCC_IO_H_
