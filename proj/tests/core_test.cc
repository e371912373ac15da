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

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "rcc/clustering.h"
#include "rcc/clustering_class.h"
#include "rcc/dataset.h"
#include "rcc/errors.h"
#include "rcc/hierarchy_tree.h"
#include "rcc/pair.h"
#include "support/test_support.h"

namespace rcc {
namespace {

using testing::BalancedTree;
using testing::CaterpillarTree;
using testing::MustClustering;

Dataset AbcDataset() {
  std::vector<Record> records(3);
  records[0].id = "a";
  records[0].cluster = "x";
  records[1].id = "b";
  records[1].cluster = "x";
  records[2].id = "c";
  records[2].cluster = "y";
  return *Dataset::Create(records);
}

TEST(SameClusterTest, SameBlock) {
  Dataset d = AbcDataset();
  EXPECT_TRUE(*SameCluster(d, *d.ground_truth(), "a", "b"));
}

TEST(SameClusterTest, DifferentBlocks) {
  Dataset d = AbcDataset();
  EXPECT_FALSE(*SameCluster(d, *d.ground_truth(), "a", "c"));
}

TEST(SameClusterTest, SingletonsNeverTogether) {
  Clustering c = Clustering::Singletons(5);
  for (int x = 0; x < 5; ++x) {
    for (int y = 0; y < 5; ++y) {
      if (x != y) EXPECT_FALSE(*c.SameCluster(x, y));
    }
  }
}

TEST(SameClusterTest, Errors) {
  Dataset d = AbcDataset();
  EXPECT_EQ(GetErrorCode(SameCluster(d, *d.ground_truth(), "a", "z").status()),
            ErrorCode::kUnknownId);
  EXPECT_EQ(GetErrorCode(SameCluster(d, *d.ground_truth(), "a", "a").status()),
            ErrorCode::kSamePair);
}

TEST(SameClusterTest, EquivalenceRelationOnRandomLabels) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Clustering c = testing::RandomClustering(20, 1 + trial % 7, rng);
    for (int x = 0; x < 20; ++x) {
      for (int y = 0; y < 20; ++y) {
        if (x == y) continue;
        ASSERT_EQ(*c.SameCluster(x, y), *c.SameCluster(y, x));
        for (int z = 0; z < 20; ++z) {
          if (z == x || z == y) continue;
          if (*c.SameCluster(x, y) && *c.SameCluster(y, z)) {
            ASSERT_TRUE(*c.SameCluster(x, z));
          }
        }
      }
    }
  }
}

TEST(ClusteringTest, CanonicalLabelsAndMaxSize) {
  Clustering c = MustClustering({7, 7, 3, 9, 3, 7});
  EXPECT_EQ(c.labels(), (std::vector<int>{0, 0, 1, 2, 1, 0}));
  EXPECT_EQ(c.num_clusters(), 3);
  EXPECT_EQ(c.max_cluster_size(), 3);
}

TEST(ClusteringTest, FromBlocksRejectsOverlapAndGaps) {
  EXPECT_EQ(GetErrorCode(Clustering::FromBlocks(3, {{0, 1}, {1, 2}}).status()),
            ErrorCode::kNotAPartition);
  EXPECT_EQ(GetErrorCode(Clustering::FromBlocks(3, {{0, 1}}).status()),
            ErrorCode::kNotAPartition);
  EXPECT_EQ(GetErrorCode(Clustering::FromBlocks(3, {{0, 1, 2}, {}}).status()),
            ErrorCode::kNotAPartition);
}

TEST(DatasetTest, RejectsDuplicateIdsAndPartialTruth) {
  std::vector<Record> records(2);
  records[0].id = "a";
  records[1].id = "a";
  EXPECT_FALSE(Dataset::Create(records).ok());
  records[1].id = "b";
  records[0].cluster = "x";
  EXPECT_FALSE(Dataset::Create(records).ok());
}

TEST(PairTest, CanonicalIndexIsABijection) {
  const int n = 9;
  std::set<int64_t> seen;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const int64_t i = PairIndex(Pair::Of(y, x), n);
      EXPECT_GE(i, 0);
      EXPECT_LT(i, UnorderedPairCount(n));
      seen.insert(i);
    }
  }
  EXPECT_EQ(static_cast<int64_t>(seen.size()), UnorderedPairCount(n));
}

TEST(PruningTest, RootPruningIsOneCluster) {
  HierarchyTree tree = BalancedTree(4);
  const int root = tree.root();
  EXPECT_EQ(*tree.PruningToClustering({&root, 1}), Clustering::OneCluster(4));
}

TEST(PruningTest, LeafPruningIsSingletons) {
  HierarchyTree tree = BalancedTree(4);
  std::vector<int> leaves;
  for (int e = 0; e < 4; ++e) leaves.push_back(tree.leaf_of(e));
  EXPECT_EQ(*tree.PruningToClustering(leaves), Clustering::Singletons(4));
}

TEST(PruningTest, DepthOneFrontierOfBalancedTree) {
  HierarchyTree tree = BalancedTree(4);
  const auto& root = tree.node(tree.root());
  std::vector<int> frontier = {root.left, root.right};
  EXPECT_EQ(*tree.PruningToClustering(frontier), MustClustering({0, 0, 1, 1}));
  std::vector<Clustering> all = testing::brute::Prunings(tree);
  EXPECT_EQ(all.size(), 5u);
  EXPECT_NE(std::find(all.begin(), all.end(), MustClustering({0, 0, 1, 1})),
            all.end());
}

TEST(PruningTest, RejectsBadFrontiers) {
  HierarchyTree tree = BalancedTree(4);
  const int root = tree.root();
  const int left = tree.node(root).left;
  std::vector<int> not_antichain = {root, left};
  EXPECT_EQ(GetErrorCode(tree.PruningToClustering(not_antichain).status()),
            ErrorCode::kInvalidFrontier);
  std::vector<int> not_cover = {left};
  EXPECT_EQ(GetErrorCode(tree.PruningToClustering(not_cover).status()),
            ErrorCode::kInvalidFrontier);
}

TEST(CountPruningsTest, SmallTrees) {
  EXPECT_EQ(BalancedTree(1).CountPrunings(), 1);
  EXPECT_EQ(BalancedTree(4).CountPrunings(), 5);
  EXPECT_EQ(CaterpillarTree(4).CountPrunings(), 4);
}

TEST(CountPruningsTest, MatchesEnumerationOnRandomTrees) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 10;
    HierarchyTree tree = testing::RandomTree(n, rng);
    std::vector<Clustering> brute = testing::brute::Prunings(tree);
    std::set<std::vector<int>> distinct;
    for (const auto& c : brute) distinct.insert(c.labels());
    EXPECT_EQ(tree.CountPrunings(), BigInt(distinct.size()));
    std::set<std::vector<int>> enumerated;
    for (const auto& frontier : tree.EnumeratePrunings()) {
      auto c = tree.PruningToClustering(frontier);
      ASSERT_TRUE(c.ok()) << c.status();
      enumerated.insert(c->labels());
    }
    EXPECT_EQ(enumerated, distinct);
  }
}

TEST(HierarchyTreeTest, RejectsMultiwayAndIncompleteTrees) {
  HierarchyTree::Builder builder;
  const int a = builder.AddLeaf(0);
  const int b = builder.AddLeaf(1);
  const int root = builder.Join(a, b);
  EXPECT_FALSE(std::move(builder).Build(root, 3).ok());
}

TEST(HierarchyTreeTest, LowestCommonAncestor) {
  HierarchyTree tree = BalancedTree(4);
  const auto& root = tree.node(tree.root());
  EXPECT_EQ(tree.LowestCommonAncestor(0, 1), root.left);
  EXPECT_EQ(tree.LowestCommonAncestor(1, 2), tree.root());
}

TEST(ClusteringClassTest, RejectsEmptyAndMismatchedSizes) {
  EXPECT_FALSE(ClusteringClass::Create({}, {}).ok());
  EXPECT_FALSE(ClusteringClass::Create({BalancedTree(3)},
                                       {Clustering::Singletons(4)})
                   .ok());
  EXPECT_TRUE(ClusteringClass::Create({BalancedTree(4)},
                                      {Clustering::Singletons(4)})
                  .ok());
}

}  // namespace
}  // namespace rcc
