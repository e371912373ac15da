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

#include "rcc/hierarchy_tree.h"

#include <algorithm>
#include <utility>

#include "absl/strings/str_cat.h"
#include "rcc/errors.h"

namespace rcc {

int HierarchyTree::Builder::AddLeaf(int element) {
  nodes_.push_back(Node{.element = element});
  return static_cast<int>(nodes_.size()) - 1;
}

int HierarchyTree::Builder::Join(int left, int right) {
  nodes_.push_back(Node{.left = left, .right = right});
  const int v = static_cast<int>(nodes_.size()) - 1;
  if (left >= 0 && left < v) nodes_[left].parent = v;
  if (right >= 0 && right < v) nodes_[right].parent = v;
  return v;
}

absl::StatusOr<HierarchyTree> HierarchyTree::Builder::Build(
    int root, int num_elements) && {
  return HierarchyTree::FromNodes(std::move(nodes_), root, num_elements);
}

absl::StatusOr<HierarchyTree> HierarchyTree::FromNodes(
    std::vector<Node> nodes, int root, int num_elements) {
  const int count = static_cast<int>(nodes.size());
  if (root < 0 || root >= count) {
    return MakeError(ErrorCode::kSchemaViolation, "tree root out of range");
  }
  HierarchyTree tree;
  tree.leaf_of_.assign(num_elements, -1);
  tree.range_begin_.assign(count, 0);
  tree.range_end_.assign(count, 0);
  std::vector<char> seen(count, 0);

  // Iterative DFS producing leaf order, post order, and leaf ranges.
  struct Frame {
    int node;
    bool expanded;
  };
  std::vector<Frame> stack = {{root, false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    Node& node = nodes[v];
    if (expanded) {
      tree.range_begin_[v] = tree.range_begin_[node.left];
      tree.range_end_[v] = tree.range_end_[node.right];
      tree.post_order_.push_back(v);
      continue;
    }
    if (seen[v]) {
      return MakeError(ErrorCode::kSchemaViolation,
                       absl::StrCat("tree node ", v, " reached twice"));
    }
    seen[v] = 1;
    if (node.is_leaf()) {
      if (node.left != -1 || node.right != -1) {
        return MakeError(ErrorCode::kSchemaViolation,
                         "leaf node with children");
      }
      if (node.element >= num_elements) {
        return MakeError(ErrorCode::kSchemaViolation,
                         absl::StrCat("leaf element ", node.element,
                                      " out of range"));
      }
      if (tree.leaf_of_[node.element] != -1) {
        return MakeError(ErrorCode::kSchemaViolation,
                         absl::StrCat("element ", node.element,
                                      " appears on two leaves"));
      }
      tree.leaf_of_[node.element] = v;
      tree.range_begin_[v] = static_cast<int>(tree.leaf_order_.size());
      tree.leaf_order_.push_back(node.element);
      tree.range_end_[v] = static_cast<int>(tree.leaf_order_.size());
      tree.post_order_.push_back(v);
      continue;
    }
    if (node.left < 0 || node.right < 0 || node.left >= count ||
        node.right >= count) {
      return MakeError(ErrorCode::kMultiwayTree,
                       absl::StrCat("internal node ", v,
                                    " must have exactly two children"));
    }
    nodes[node.left].parent = v;
    nodes[node.right].parent = v;
    stack.push_back({v, true});
    stack.push_back({node.right, false});
    stack.push_back({node.left, false});
  }
  for (int e = 0; e < num_elements; ++e) {
    if (tree.leaf_of_[e] == -1) {
      return MakeError(ErrorCode::kSchemaViolation,
                       absl::StrCat("element ", e, " missing from tree"));
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != count) {
    return MakeError(ErrorCode::kSchemaViolation,
                     "tree contains nodes unreachable from the root");
  }
  nodes[root].parent = -1;
  tree.position_.assign(num_elements, 0);
  for (int i = 0; i < num_elements; ++i) {
    tree.position_[tree.leaf_order_[i]] = i;
  }
  tree.nodes_ = std::move(nodes);
  tree.root_ = root;
  return tree;
}

std::span<const int> HierarchyTree::Leaves(int v) const {
  return std::span<const int>(leaf_order_).subspan(
      range_begin_[v], range_end_[v] - range_begin_[v]);
}

bool HierarchyTree::IsAncestorOrSelf(int ancestor, int v) const {
  // Internal nodes strictly contain their children's leaf ranges.
  return range_begin_[ancestor] <= range_begin_[v] &&
         range_end_[v] <= range_end_[ancestor];
}

int HierarchyTree::LowestCommonAncestor(int x_element, int y_element) const {
  const int py = position_[y_element];
  int v = leaf_of_[x_element];
  while (!(range_begin_[v] <= py && py < range_end_[v])) v = nodes_[v].parent;
  return v;
}

absl::StatusOr<Clustering> HierarchyTree::PruningToClustering(
    std::span<const int> frontier) const {
  std::vector<std::pair<int, int>> ranges;
  ranges.reserve(frontier.size());
  for (int v : frontier) {
    if (v < 0 || v >= num_nodes()) {
      return MakeError(ErrorCode::kInvalidFrontier,
                       absl::StrCat("frontier node ", v, " out of range"));
    }
    ranges.emplace_back(range_begin_[v], range_end_[v]);
  }
  std::sort(ranges.begin(), ranges.end());
  int covered = 0;
  for (const auto& [begin, end] : ranges) {
    if (begin < covered) {
      return MakeError(ErrorCode::kInvalidFrontier,
                       "frontier is not an antichain");
    }
    if (begin > covered) {
      return MakeError(ErrorCode::kInvalidFrontier,
                       "frontier does not cover all leaves");
    }
    covered = end;
  }
  if (covered != num_elements()) {
    return MakeError(ErrorCode::kInvalidFrontier,
                     "frontier does not cover all leaves");
  }
  std::vector<int> labels(num_elements());
  for (size_t c = 0; c < frontier.size(); ++c) {
    for (int e : Leaves(frontier[c])) labels[e] = static_cast<int>(c);
  }
  return Clustering::FromLabels(labels);
}

BigInt HierarchyTree::CountPrunings() const {
  std::vector<BigInt> count(nodes_.size());
  for (int v : post_order_) {
    const Node& n = nodes_[v];
    count[v] = n.is_leaf() ? BigInt(1)
                           : BigInt(1) + count[n.left] * count[n.right];
  }
  return count[root_];
}

std::vector<std::vector<int>> HierarchyTree::EnumerateFrom(int v) const {
  const Node& n = nodes_[v];
  if (n.is_leaf()) return {{v}};
  std::vector<std::vector<int>> out;
  const auto left = EnumerateFrom(n.left);
  const auto right = EnumerateFrom(n.right);
  out.reserve(left.size() * right.size() + 1);
  for (const auto& l : left) {
    for (const auto& r : right) {
      std::vector<int> f = l;
      f.insert(f.end(), r.begin(), r.end());
      out.push_back(std::move(f));
    }
  }
  out.push_back({v});
  return out;
}

std::vector<std::vector<int>> HierarchyTree::EnumeratePrunings() const {
  return EnumerateFrom(root_);
}

}  // namespace rcc
