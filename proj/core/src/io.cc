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

#include "rcc/io.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <utility>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "json.hpp"
#include "rcc/errors.h"

namespace rcc {
namespace {

using nlohmann::json;

absl::Status Schema(absl::string_view message) {
  return MakeError(ErrorCode::kSchemaViolation, message);
}

absl::StatusOr<json> ParseJson(absl::string_view text, absl::string_view what) {
  json parsed = json::parse(text.begin(), text.end(), nullptr, false);
  if (parsed.is_discarded()) {
    return Schema(absl::StrCat(what, ": invalid JSON"));
  }
  return parsed;
}

absl::StatusOr<Record> RecordFromJson(const json& j, int line_no) {
  if (!j.is_object()) {
    return Schema(absl::StrCat("line ", line_no, ": record must be an object"));
  }
  Record r;
  auto id = j.find("id");
  if (id == j.end() || !id->is_string()) {
    return Schema(absl::StrCat("line ", line_no, ": missing string 'id'"));
  }
  r.id = id->get<std::string>();
  if (auto text = j.find("text"); text != j.end() && !text->is_null()) {
    if (!text->is_string()) {
      return Schema(absl::StrCat("line ", line_no, ": 'text' must be a string"));
    }
    r.text = text->get<std::string>();
  }
  if (auto f = j.find("features"); f != j.end() && !f->is_null()) {
    if (!f->is_object()) {
      return Schema(
          absl::StrCat("line ", line_no, ": 'features' must be an object"));
    }
    for (auto it = f->begin(); it != f->end(); ++it) {
      if (!it.value().is_string()) {
        return Schema(absl::StrCat("line ", line_no, ": feature '", it.key(),
                                   "' must be a string"));
      }
      r.features[it.key()] = it.value().get<std::string>();
    }
  }
  if (auto c = j.find("cluster"); c != j.end() && !c->is_null()) {
    if (!c->is_string()) {
      return Schema(
          absl::StrCat("line ", line_no, ": 'cluster' must be a string"));
    }
    r.cluster = c->get<std::string>();
  }
  return r;
}

absl::StatusOr<int> ParseInt(absl::string_view token, absl::string_view what) {
  int value = 0;
  if (!absl::SimpleAtoi(token, &value)) {
    return Schema(absl::StrCat(what, ": expected an integer, got '", token,
                               "'"));
  }
  return value;
}

std::vector<absl::string_view> Tokens(absl::string_view line) {
  return absl::StrSplit(line, absl::ByAnyChar(" \t\r"), absl::SkipEmpty());
}

}  // namespace

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorCode::kFileNotFound,
                     absl::StrCat("cannot open ", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::StatusOr<Dataset> ParseDataset(std::istream& in) {
  std::vector<Record> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (absl::StripAsciiWhitespace(line).empty()) continue;
    auto parsed = ParseJson(line, absl::StrCat("line ", line_no));
    if (!parsed.ok()) return parsed.status();
    auto record = RecordFromJson(*parsed, line_no);
    if (!record.ok()) return record.status();
    records.push_back(*std::move(record));
  }
  return Dataset::Create(std::move(records));
}

absl::StatusOr<Dataset> LoadDataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    return MakeError(ErrorCode::kFileNotFound,
                     absl::StrCat("cannot open ", path.string()));
  }
  return ParseDataset(in);
}

absl::StatusOr<HierarchyTree> ParseTree(absl::string_view text,
                                        const Dataset& dataset) {
  auto parsed = ParseJson(text, "tree");
  if (!parsed.ok()) return parsed.status();
  HierarchyTree::Builder builder;
  std::function<absl::StatusOr<int>(const json&)> visit =
      [&](const json& node) -> absl::StatusOr<int> {
    if (!node.is_object()) return Schema("tree node must be an object");
    if (auto leaf = node.find("leaf"); leaf != node.end()) {
      if (!leaf->is_string()) return Schema("'leaf' must be a record id");
      auto index = dataset.IndexOf(leaf->get<std::string>());
      if (!index.ok()) return index.status();
      return builder.AddLeaf(*index);
    }
    auto children = node.find("children");
    if (children == node.end() || !children->is_array()) {
      return Schema("tree node needs 'leaf' or 'children'");
    }
    if (children->size() != 2) {
      return MakeError(ErrorCode::kMultiwayTree,
                       absl::StrCat("internal node has ", children->size(),
                                    " children; trees must be binary"));
    }
    auto left = visit((*children)[0]);
    if (!left.ok()) return left.status();
    auto right = visit((*children)[1]);
    if (!right.ok()) return right.status();
    return builder.Join(*left, *right);
  };
  auto root = visit(*parsed);
  if (!root.ok()) return root.status();
  return std::move(builder).Build(*root, dataset.size());
}

absl::StatusOr<Clustering> ParseFlatClustering(absl::string_view text,
                                               const Dataset& dataset) {
  auto parsed = ParseJson(text, "clustering");
  if (!parsed.ok()) return parsed.status();
  auto clusters = parsed->find("clusters");
  if (clusters == parsed->end() || !clusters->is_array()) {
    return Schema("flat clustering needs a 'clusters' array");
  }
  std::vector<std::vector<int>> blocks;
  for (const auto& c : *clusters) {
    if (!c.is_array()) return Schema("each cluster must be an array of ids");
    std::vector<int> block;
    for (const auto& id : c) {
      if (!id.is_string()) return Schema("cluster members must be ids");
      auto index = dataset.IndexOf(id.get<std::string>());
      if (!index.ok()) return index.status();
      block.push_back(*index);
    }
    blocks.push_back(std::move(block));
  }
  return Clustering::FromBlocks(dataset.size(), blocks);
}

std::string TreeToJson(const HierarchyTree& tree, const Dataset& dataset) {
  std::function<json(int)> build = [&](int v) -> json {
    const auto& node = tree.node(v);
    if (node.is_leaf()) return json{{"leaf", dataset.id(node.element)}};
    return json{{"children", json::array({build(node.left),
                                          build(node.right)})}};
  };
  return build(tree.root()).dump();
}

std::string FlatClusteringToJson(const Clustering& clustering,
                                 const Dataset& dataset) {
  json clusters = json::array();
  for (const auto& block : clustering.blocks()) {
    json ids = json::array();
    for (int x : block) ids.push_back(dataset.id(x));
    clusters.push_back(std::move(ids));
  }
  return json{{"clusters", std::move(clusters)}}.dump();
}

absl::StatusOr<ClusteringClass> LoadClusteringClass(
    const std::vector<std::filesystem::path>& paths, const Dataset& dataset) {
  std::vector<std::filesystem::path> files;
  for (const auto& path : paths) {
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec)) {
      std::vector<std::filesystem::path> entries;
      for (const auto& entry : std::filesystem::directory_iterator(path)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
          entries.push_back(entry.path());
        }
      }
      std::sort(entries.begin(), entries.end());
      files.insert(files.end(), entries.begin(), entries.end());
    } else {
      files.push_back(path);
    }
  }
  std::vector<HierarchyTree> trees;
  std::vector<Clustering> flats;
  for (const auto& file : files) {
    auto text = ReadFile(file);
    if (!text.ok()) return text.status();
    auto parsed = ParseJson(*text, file.string());
    if (!parsed.ok()) return parsed.status();
    if (parsed->contains("clusters")) {
      auto flat = ParseFlatClustering(*text, dataset);
      if (!flat.ok()) return flat.status();
      flats.push_back(*std::move(flat));
    } else {
      auto tree = ParseTree(*text, dataset);
      if (!tree.ok()) return tree.status();
      trees.push_back(*std::move(tree));
    }
  }
  return ClusteringClass::Create(std::move(trees), std::move(flats));
}

absl::StatusOr<DistanceModel> ParseDistanceCsv(std::istream& in,
                                               const Dataset& dataset) {
  std::string line;
  if (!std::getline(in, line) ||
      absl::StripAsciiWhitespace(line) != "id1,id2,distance") {
    return Schema("distance CSV must start with header 'id1,id2,distance'");
  }
  std::vector<DistanceEntry> entries;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const absl::string_view row = absl::StripAsciiWhitespace(line);
    if (row.empty()) continue;
    std::vector<absl::string_view> cells = absl::StrSplit(row, ',');
    if (cells.size() != 3) {
      return Schema(absl::StrCat("distance CSV line ", line_no,
                                 ": expected 3 fields"));
    }
    auto x = dataset.IndexOf(absl::StripAsciiWhitespace(cells[0]));
    if (!x.ok()) return x.status();
    auto y = dataset.IndexOf(absl::StripAsciiWhitespace(cells[1]));
    if (!y.ok()) return y.status();
    double d = 0.0;
    if (!absl::SimpleAtod(absl::StripAsciiWhitespace(cells[2]), &d)) {
      return Schema(absl::StrCat("distance CSV line ", line_no,
                                 ": bad distance value"));
    }
    entries.push_back({*x, *y, d});
  }
  return DistanceModel::FromEntries(dataset.size(), entries);
}

absl::StatusOr<DistanceModel> LoadDistanceCsv(
    const std::filesystem::path& path, const Dataset& dataset) {
  std::ifstream in(path);
  if (!in) {
    return MakeError(ErrorCode::kFileNotFound,
                     absl::StrCat("cannot open ", path.string()));
  }
  return ParseDistanceCsv(in, dataset);
}

absl::StatusOr<PccGraph> ParseGraph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return Schema("graph file is empty");
  auto header = Tokens(line);
  if (header.size() != 2) return Schema("graph header must be 'n m'");
  auto n = ParseInt(header[0], "graph header");
  if (!n.ok()) return n.status();
  auto m = ParseInt(header[1], "graph header");
  if (!m.ok()) return m.status();
  if (*n < 0 || *m < 0) return Schema("graph header values must be >= 0");
  std::vector<Pair> edges;
  while (static_cast<int>(edges.size()) < *m && std::getline(in, line)) {
    auto cells = Tokens(line);
    if (cells.empty()) continue;
    if (cells.size() != 2) return Schema("edge line must be 'u v'");
    auto u = ParseInt(cells[0], "edge");
    if (!u.ok()) return u.status();
    auto v = ParseInt(cells[1], "edge");
    if (!v.ok()) return v.status();
    edges.push_back(Pair{*u, *v});
  }
  if (static_cast<int>(edges.size()) != *m) {
    return Schema(absl::StrCat("graph declares ", *m, " edges but has ",
                               edges.size()));
  }
  return PccGraph::FromEdges(*n, edges);
}

void WriteGraph(const PccGraph& graph, std::ostream& out) {
  out << graph.size() << ' ' << graph.num_edges() << '\n';
  for (const Pair& e : graph.Edges()) {
    out << e.first << ' ' << e.second << '\n';
  }
}

absl::StatusOr<X3cInstance> ParseX3c(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) return Schema("X3C file is empty");
  auto header = Tokens(line);
  if (header.size() != 2) return Schema("X3C header must be 'q m'");
  auto q = ParseInt(header[0], "X3C header");
  if (!q.ok()) return q.status();
  auto m = ParseInt(header[1], "X3C header");
  if (!m.ok()) return m.status();
  X3cInstance instance;
  instance.q = *q;
  while (static_cast<int>(instance.subsets.size()) < *m &&
         std::getline(in, line)) {
    auto cells = Tokens(line);
    if (cells.empty()) continue;
    if (cells.size() != 3) return Schema("X3C subset line needs 3 elements");
    std::array<int, 3> subset{};
    for (int i = 0; i < 3; ++i) {
      auto e = ParseInt(cells[i], "X3C subset");
      if (!e.ok()) return e.status();
      subset[i] = *e;
    }
    instance.subsets.push_back(subset);
  }
  if (static_cast<int>(instance.subsets.size()) != *m) {
    return Schema(absl::StrCat("X3C declares ", *m, " subsets but has ",
                               instance.subsets.size()));
  }
  if (auto s = instance.Validate(); !s.ok()) return s;
  return instance;
}

void WriteX3c(const X3cInstance& instance, std::ostream& out) {
  out << instance.q << ' ' << instance.subsets.size() << '\n';
  for (const auto& s : instance.subsets) {
    out << s[0] << ' ' << s[1] << ' ' << s[2] << '\n';
  }
}

}  // namespace rcc
