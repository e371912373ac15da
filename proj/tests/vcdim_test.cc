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

#include "gtest/gtest.h"
#include "rcc/errors.h"
#include "rcc/vcdim.h"
#include "support/test_support.h"

namespace rcc {
namespace {

TEST(BellNumberTest, Examples) {
  EXPECT_EQ(*BellNumber(0), 1);
  EXPECT_EQ(*BellNumber(3), 5);
  EXPECT_EQ(*BellNumber(5), 52);
  EXPECT_EQ(*BellNumber(30), BigInt("846749014511809332450147"));
  EXPECT_FALSE(BellNumber(31).ok());
  EXPECT_FALSE(BellNumber(-1).ok());
}

TEST(BellNumberTest, MatchesPartitionEnumeration) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(*BellNumber(n), BigInt(testing::brute::Partitions(n).size())) << n;
  }
}

TEST(MaxTreePairingsTest, Examples) {
  EXPECT_EQ(*MaxTreePairings(2), 1);
  EXPECT_EQ(*MaxTreePairings(4), 3);
  EXPECT_EQ(*MaxTreePairings(5), 15);
  EXPECT_EQ(*MaxTreePairings(20), BigInt("654729075"));
  EXPECT_FALSE(MaxTreePairings(0).ok());
  EXPECT_FALSE(MaxTreePairings(21).ok());
}

TEST(MaxTreePairingsTest, MatchesMatchingEnumeration) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(*MaxTreePairings(n), BigInt(testing::brute::MaxMatchings(n))) << n;
  }
}

TEST(GFlatTest, Examples) {
  EXPECT_EQ(*GFlat(1), 0);
  EXPECT_EQ(*GFlat(5), 9);
  EXPECT_EQ(*GFlat(52), 25);
  EXPECT_EQ(*GFlat(6), 16);
}

TEST(GTreeTest, Examples) {
  EXPECT_EQ(*GTree(1), 1);
  // pairings(3) = 3 already, so n = 9.
  EXPECT_EQ(*GTree(3), 9);
  EXPECT_EQ(*GTree(4), 25);
  EXPECT_EQ(*GTree(16), 49);
  EXPECT_EQ(*GTree(15), 25);
}

TEST(BoundForTest, ReportsBound) {
  auto report = BoundFor(ClassKind::kFlat, 52);
  ASSERT_TRUE(report.ok());
  EXPECT_EQ(report->bound, 25);
  EXPECT_GE(BoundFor(ClassKind::kTree, 2)->bound, 1);
  EXPECT_EQ(*ParseClassKind("tree"), ClassKind::kTree);
  EXPECT_FALSE(ParseClassKind("forest").ok());
}

TEST(ShatterCheckTest, Examples) {
  auto both = *ClusteringClass::Create(
      {}, {Clustering::Singletons(4), Clustering::OneCluster(4)});
  std::vector<Pair> one = {{0, 1}};
  EXPECT_TRUE(*ShatterCheck(both, one));
  auto single = *ClusteringClass::Create({}, {Clustering::Singletons(4)});
  EXPECT_FALSE(*ShatterCheck(single, one));
  std::vector<Pair> too_many(17, Pair{0, 1});
  EXPECT_FALSE(ShatterCheck(both, too_many).ok());
}

TEST(ShatterCheckTest, TreesContributeAllPrunings) {
  // ((0,1),(2,3)) realizes all four labelings of {(0,1), (2,3)}.
  auto cls = *ClusteringClass::Create({testing::BalancedTree(4)}, {});
  std::vector<Pair> cherries = {{0, 1}, {2, 3}};
  EXPECT_TRUE(*ShatterCheck(cls, cherries));
}

TEST(LargestShatteredSetTest, MatchesBruteForceOnTinyDomains) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + trial % 2;
    std::vector<Clustering> flats;
    for (int i = 0; i < 1 + trial % 8; ++i) {
      flats.push_back(testing::RandomClustering(n, 3, rng));
    }
    auto cls = *ClusteringClass::Create({}, flats);
    auto witness = LargestShatteredSet(cls);
    ASSERT_TRUE(witness.ok());
    EXPECT_TRUE(*ShatterCheck(cls, *witness));
    EXPECT_EQ(static_cast<int>(witness->size()),
              testing::brute::LargestShattered(n, flats));
  }
}

TEST(LargestShatteredSetTest, RandomFlatClassesRespectBound) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int s = 2 + trial % 5;
    std::vector<Clustering> flats;
    for (int i = 0; i < s; ++i) flats.push_back(testing::RandomClustering(6, 3, rng));
    auto cls = *ClusteringClass::Create({}, flats);
    EXPECT_LE(static_cast<int64_t>(LargestShatteredSet(cls)->size()), *GFlat(s));
  }
}

}  // namespace
}  // namespace rcc
