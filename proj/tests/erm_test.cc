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

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "rcc/erm.h"
#include "rcc/errors.h"
#include "rcc/sampling.h"
#include "support/test_support.h"

namespace rcc {
namespace {

using testing::MustClustering;

PairSample Sample(PairLabel label, std::vector<Pair> pairs) {
  PairSample s;
  s.label = label;
  s.attempts.assign(pairs.size(), 1);
  s.pairs = std::move(pairs);
  return s;
}

// a=0, b=1, c=2, d=3.
TEST(EmpiricalErrorTest, PositiveError) {
  Clustering c = MustClustering({0, 0, 1, 1});
  std::vector<Pair> s_plus = {{0, 1}, {0, 2}, {2, 3}};
  EXPECT_DOUBLE_EQ(*EmpiricalPositiveError(c, s_plus), 1.0 / 3.0);
  EXPECT_EQ(*EmpiricalPositiveError(Clustering::Singletons(4), s_plus), 1.0);
  EXPECT_EQ(*EmpiricalPositiveError(MustClustering({0, 0, 0, 0}), s_plus), 0.0);
  EXPECT_EQ(GetErrorCode(EmpiricalPositiveError(c, {}).status()),
            ErrorCode::kEmptySample);
}

TEST(EmpiricalErrorTest, NegativeErrorCountsCoClustered) {
  Clustering c = MustClustering({0, 0, 1, 1});
  std::vector<Pair> s_minus = {{0, 2}, {1, 3}, {0, 1}};
  EXPECT_DOUBLE_EQ(*EmpiricalNegativeError(c, s_minus), 1.0 / 3.0);
  EXPECT_EQ(*EmpiricalNegativeError(Clustering::Singletons(4), s_minus), 0.0);
  EXPECT_EQ(*EmpiricalNegativeError(Clustering::OneCluster(4), s_minus), 1.0);
}

TEST(EmpiricalErrorTest, MultiplicityCounts) {
  Clustering c = MustClustering({0, 0, 1, 1});
  std::vector<Pair> s_plus = {{0, 2}, {0, 2}, {0, 1}};
  EXPECT_DOUBLE_EQ(*EmpiricalPositiveError(c, s_plus), 2.0 / 3.0);
}

TEST(LossEstimateTest, DecompositionIsConsistent) {
  Clustering c = MustClustering({0, 0, 1, 1});
  auto loss = EstimateLoss(c, std::vector<Pair>{{0, 2}, {0, 1}},
                           std::vector<Pair>{{0, 1}, {1, 2}, {2, 3}}, 0.3);
  ASSERT_TRUE(loss.ok());
  EXPECT_DOUBLE_EQ(loss->e_hat, 0.5);
  EXPECT_DOUBLE_EQ(loss->g_hat, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(loss->l_hat, 0.3 * loss->e_hat + 0.7 * loss->g_hat);
}

TEST(NormalizedLossTest, Examples) {
  Clustering truth = MustClustering({0, 0, 0, 1, 1, 2});
  EXPECT_EQ(*NormalizedLossExact(truth, truth, 0.4), 0.0);
  EXPECT_EQ(*NormalizedLossExact(Clustering::Singletons(6), truth, 1.0), 1.0);
  EXPECT_EQ(GetErrorCode(NormalizedLossExact(Clustering::Singletons(3),
                                             Clustering::OneCluster(3), 0.5)
                             .status()),
            ErrorCode::kDegenerateTruth);
}

TEST(NormalizedLossTest, MatchesDoubleLoop) {
  std::mt19937_64 rng(31);
  Clustering truth = MustClustering({0, 0, 0, 1, 1, 1, 2, 2});
  for (int trial = 0; trial < 50; ++trial) {
    Clustering c = testing::RandomClustering(8, 1 + trial % 5, rng);
    const double mu = trial == 0 ? 0.5 : std::uniform_real_distribution<>(0, 1)(rng);
    EXPECT_NEAR(*NormalizedLossExact(c, truth, mu),
                testing::brute::NormalizedLoss(c, truth, mu), 1e-12);
  }
}

TEST(BestPruningTest, AllPositiveFavoursRoot) {
  HierarchyTree tree = testing::BalancedTree(6);
  std::vector<Pair> pos = {{0, 1}, {2, 5}, {3, 4}};
  std::vector<Pair> neg = {{0, 5}};
  auto best = BestPruning(tree, pos, neg, 1.0);
  ASSERT_TRUE(best.ok());
  EXPECT_EQ(best->loss.l_hat, 0.0);
  EXPECT_EQ(best->clustering, Clustering::OneCluster(6));
}

TEST(BestPruningTest, AllNegativeFavoursLeaves) {
  HierarchyTree tree = testing::BalancedTree(6);
  std::vector<Pair> pos = {{0, 1}};
  std::vector<Pair> neg = {{0, 1}, {2, 5}, {3, 4}};
  auto best = BestPruning(tree, pos, neg, 0.0);
  ASSERT_TRUE(best.ok());
  EXPECT_EQ(best->loss.l_hat, 0.0);
  EXPECT_EQ(best->clustering, Clustering::Singletons(6));
}

TEST(BestPruningTest, RejectsPairsOutsideTheTree) {
  HierarchyTree tree = testing::BalancedTree(4);
  std::vector<Pair> pos = {{0, 7}};
  std::vector<Pair> neg = {{0, 1}};
  EXPECT_FALSE(BestPruning(tree, pos, neg, 0.5).ok());
}

TEST(BestPruningTest, EqualsEnumerationMinimum) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 11;
    HierarchyTree tree = testing::RandomTree(n, rng);
    auto pos = testing::RandomPairs(n, 1 + trial % 13, rng);
    auto neg = testing::RandomPairs(n, 1 + (trial * 7) % 17, rng);
    const double mu = std::uniform_real_distribution<>(0, 1)(rng);
    auto best = BestPruning(tree, pos, neg, mu);
    ASSERT_TRUE(best.ok());
    double minimum = std::numeric_limits<double>::infinity();
    for (const Clustering& c : testing::brute::Prunings(tree)) {
      minimum = std::min(minimum, testing::brute::EmpiricalLoss(c, pos, neg, mu));
    }
    EXPECT_EQ(best->loss.l_hat, minimum) << "trial " << trial;
    EXPECT_EQ(testing::brute::EmpiricalLoss(best->clustering, pos, neg, mu),
              best->loss.l_hat);
    EXPECT_EQ(*tree.PruningToClustering(best->frontier), best->clustering);
  }
}

TEST(ErmTest, TruthInClassIsChosen) {
  Clustering truth = MustClustering({0, 0, 1, 1, 2});
  auto cls = *ClusteringClass::Create({}, {truth});
  auto s_plus = Sample(PairLabel::kPositive, {{0, 1}, {2, 3}});
  auto s_minus = Sample(PairLabel::kNegative, {{0, 2}, {1, 4}});
  auto result = Erm(cls, s_plus, s_minus, 0.5);
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result->chosen.clustering, truth);
  EXPECT_EQ(result->chosen.loss.e_hat, 0.0);
  EXPECT_EQ(result->chosen.loss.g_hat, 0.0);
}

TEST(ErmTest, TiesGoToLowerFlatIndex) {
  auto cls = *ClusteringClass::Create(
      {testing::BalancedTree(4)},
      {Clustering::Singletons(4), Clustering::OneCluster(4)});
  // Every pruning joining 0 and 2 also joins 0 and 1, so all members tie.
  auto s_plus = Sample(PairLabel::kPositive, {{0, 2}});
  auto s_minus = Sample(PairLabel::kNegative, {{0, 1}});
  auto result = Erm(cls, s_plus, s_minus, 0.5);
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result->chosen.kind, MemberKind::kFlat);
  EXPECT_EQ(result->chosen.index, 0);
  EXPECT_EQ(result->evaluations[0].loss.l_hat, result->evaluations[1].loss.l_hat);
}

TEST(ErmTest, ChosenDominatesEveryEvaluation) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 10;
    std::vector<Clustering> flats;
    for (int i = 0; i < 5; ++i) flats.push_back(testing::RandomClustering(n, 4, rng));
    auto cls = *ClusteringClass::Create(
        {testing::RandomTree(n, rng), testing::RandomTree(n, rng)}, flats);
    auto s_plus = Sample(PairLabel::kPositive, testing::RandomPairs(n, 30, rng));
    auto s_minus = Sample(PairLabel::kNegative, testing::RandomPairs(n, 30, rng));
    auto result = Erm(cls, s_plus, s_minus, 0.4);
    ASSERT_TRUE(result.ok());
    EXPECT_EQ(result->evaluations.size(), 7u);
    for (const auto& e : result->evaluations) {
      EXPECT_LE(result->chosen.loss.l_hat, e.loss.l_hat);
    }
  }
}

TEST(ErmTest, ExactReferencesGiveUnbiasedErrors) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 12;
    Clustering truth = testing::RandomClustering(n, 4, rng);
    Dataset d = testing::MakeDataset(truth.labels());
    std::vector<double> matrix(n * n, 0.0);
    std::uniform_real_distribution<double> u(0, 1);
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) matrix[x * n + y] = matrix[y * n + x] = u(rng);
    }
    DistanceModel model = testing::MustMatrix(n, matrix);
    NeighborIndex index = NeighborIndex::Build(model, 0.6);
    auto k_plus = ExactReferenceDistribution(ReferenceKind::kKPlusUniform, d, &index);
    auto p_minus = ExactReferenceDistribution(ReferenceKind::kNegative, d);
    if (!k_plus.ok() || !p_minus.ok()) continue;
    Clustering c = testing::RandomClustering(n, 3, rng);
    double p_separated = 0.0;
    std::vector<Pair> support_plus;
    for (const auto& [pair, p] : k_plus->entries()) {
      support_plus.push_back(pair);
      if (!c.Together(pair.first, pair.second)) p_separated += p;
    }
    double p_together = 0.0;
    std::vector<Pair> support_minus;
    for (const auto& [pair, p] : p_minus->entries()) {
      support_minus.push_back(pair);
      if (c.Together(pair.first, pair.second)) p_together += p;
    }
    EXPECT_NEAR(*EmpiricalPositiveError(c, support_plus), p_separated, 1e-12);
    EXPECT_NEAR(*EmpiricalNegativeError(c, support_minus), p_together, 1e-12);
  }
}

TEST(ExactClassMinimumTest, MatchesEnumeration) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 9;
    Clustering truth = testing::RandomClustering(n, 3, rng);
    if (truth.num_clusters() < 2) continue;
    HierarchyTree tree = testing::RandomTree(n, rng);
    Clustering flat = testing::RandomClustering(n, 4, rng);
    auto cls = *ClusteringClass::Create({tree}, {flat});
    const double mu = 0.35;
    double minimum = testing::brute::NormalizedLoss(flat, truth, mu);
    for (const Clustering& c : testing::brute::Prunings(tree)) {
      minimum = std::min(minimum, testing::brute::NormalizedLoss(c, truth, mu));
    }
    EXPECT_NEAR(*ExactClassMinimum(cls, truth, mu), minimum, 1e-12);
  }
}

TEST(RequiredSampleSizeTest, Examples) {
  EXPECT_EQ(*RequiredSampleSize(5, 0.1, 0.05, 1.0), 869);
  const int64_t base = *RequiredSampleSize(7, 0.1, 0.1, 1.0);
  const int64_t half = *RequiredSampleSize(7, 0.05, 0.1, 1.0);
  EXPECT_NEAR(static_cast<double>(half) / static_cast<double>(base), 4.0, 0.01);
  const int64_t doubled = *RequiredSampleSize(7, 0.1, 0.1, 2.0);
  EXPECT_NEAR(static_cast<double>(doubled) / static_cast<double>(base), 2.0, 0.01);
}

TEST(RequiredSampleSizeTest, RejectsOutOfRange) {
  EXPECT_FALSE(RequiredSampleSize(0, 0.1, 0.1, 1).ok());
  EXPECT_FALSE(RequiredSampleSize(3, 0.0, 0.1, 1).ok());
  EXPECT_FALSE(RequiredSampleSize(3, 0.1, 1.0, 1).ok());
  EXPECT_FALSE(RequiredSampleSize(3, 0.1, 0.1, 0).ok());
}

TEST(QueryBudgetTest, Examples) {
  auto b = QueryBudgetBound(100, 100, 0.5, 0.2, 0.1);
  ASSERT_TRUE(b.ok());
  EXPECT_NEAR(b->bound, 357.5, 1e-9);
  EXPECT_NEAR(b->failure_probability, 2 * std::exp(-0.01 * 100 / 4), 1e-12);
  EXPECT_NEAR(QueryBudgetBound(100, 100, 0.5, 0.2, 1e-12)->bound, 325.0, 1e-6);
  EXPECT_NEAR(QueryBudgetBound(30, 70, 1.0, 0.0, 0.3)->bound, 1.3 * 100, 1e-9);
  EXPECT_FALSE(QueryBudgetBound(10, 10, 0.0, 0.2, 0.1).ok());
  EXPECT_FALSE(QueryBudgetBound(10, 10, 0.5, 1.0, 0.1).ok());
  EXPECT_FALSE(QueryBudgetBound(10, 10, 0.5, 0.2, 0.0).ok());
}

}  // namespace
}  // namespace rcc
