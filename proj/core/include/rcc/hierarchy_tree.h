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

#ifndef RCC_HIERARCHY_TREE_H_
#define RCC_HIERARCHY_TREE_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "boost/multiprecision/cpp_int.hpp"
#include "rcc/clustering.h"

namespace rcc {

using BigInt = boost::multiprecision::cpp_int;

// A rooted binary tree whose leaves are exactly the elements [0, n).
// Internal nodes have exactly two children. Node ids are indices into
// `nodes()`.
class HierarchyTree {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    int parent = -1;
    int element = -1;  // >= 0 on leaves only.

    bool is_leaf() const { return element >= 0; }
  };

  // Incremental construction: add leaves, join pairs of roots, then Build.
  class Builder {
   public:
    int AddLeaf(int element);
    int Join(int left, int right);
    absl::StatusOr<HierarchyTree> Build(int root, int num_elements) &&;

   private:
    std::vector<Node> nodes_;
  };

  HierarchyTree() = default;

  // Validates that the nodes form a single binary tree rooted at `root`
  // whose leaves carry each element of [0, num_elements) exactly once.
  static absl::StatusOr<HierarchyTree> FromNodes(std::vector<Node> nodes,
                                                 int root, int num_elements);

  int num_elements() const { return static_cast<int>(leaf_of_.size()); }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int root() const { return root_; }
  const Node& node(int v) const { return nodes_[v]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  int leaf_of(int element) const { return leaf_of_[element]; }

  // Children before parents; the root is last.
  const std::vector<int>& post_order() const { return post_order_; }

  // Elements under `v`, in left-to-right leaf order.
  std::span<const int> Leaves(int v) const;
  int LeafCount(int v) const { return range_end_[v] - range_begin_[v]; }
  bool IsAncestorOrSelf(int ancestor, int v) const;
  int LowestCommonAncestor(int x_element, int y_element) const;

  // Each frontier node becomes one cluster. The frontier must be an
  // antichain whose leaf sets cover every element.
  absl::StatusOr<Clustering> PruningToClustering(
      std::span<const int> frontier) const;

  // count(leaf) = 1, count(v) = 1 + count(left) * count(right).
  BigInt CountPrunings() const;

  // Every pruning as a frontier, in the order produced by a post-order
  // recursion (finer prunings of the left subtree first). Intended for small
  // trees.
  std::vector<std::vector<int>> EnumeratePrunings() const;

 private:
  std::vector<std::vector<int>> EnumerateFrom(int v) const;

  std::vector<Node> nodes_;
  int root_ = -1;
  std::vector<int> leaf_of_;
  std::vector<int> post_order_;
  std::vector<int> leaf_order_;
  std::vector<int> position_;  // element -> index in leaf_order_
  std::vector<int> range_begin_;
  std::vector<int> range_end_;
};

}  // namespace rcc

#endif  // RCC_HIERARCHY_TREE_H_
