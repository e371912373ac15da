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
#include <map>
#include <random>

#include "gtest/gtest.h"
#include "rcc/alias_table.h"
#include "rcc/errors.h"
#include "rcc/sampling.h"
#include "support/test_support.h"

namespace rcc {
namespace {

using testing::LabelsFromSizes;
using testing::MakeDataset;

std::vector<double> RandomMatrix(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> m(n * n, 0.0);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) m[x * n + y] = m[y * n + x] = u(rng);
  }
  return m;
}

TEST(AliasTableTest, ReconstructsWeights) {
  std::vector<double> w = {1, 0, 3, 2, 4};
  AliasTable table = *AliasTable::Create(w);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(table.Probability(i), w[i] / 10.0, 1e-12);
  Rng rng(1);
  std::vector<int> counts(5, 0);
  for (int i = 0; i < 200000; ++i) ++counts[table.Sample(rng)];
  EXPECT_EQ(counts[1], 0);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(counts[i] / 200000.0, w[i] / 10.0, 0.005);
}

TEST(AliasTableTest, RejectsDegenerateWeights) {
  EXPECT_FALSE(AliasTable::Create(std::vector<double>{}).ok());
  EXPECT_FALSE(AliasTable::Create(std::vector<double>{0, 0}).ok());
  EXPECT_FALSE(AliasTable::Create(std::vector<double>{1, -1}).ok());
}

TEST(NeighborIndexTest, FullAndEmptyThresholds) {
  std::mt19937_64 rng(4);
  DistanceModel m = testing::MustMatrix(7, RandomMatrix(7, rng));
  NeighborIndex all = NeighborIndex::Build(m, 1.0);
  EXPECT_EQ(all.total_size(), 42);
  for (int x = 0; x < 7; ++x) EXPECT_EQ(all.neighbors(x).size(), 6u);
  NeighborIndex none = NeighborIndex::Build(m, -1e-9);
  EXPECT_EQ(none.total_size(), 0);
}

TEST(NeighborIndexTest, MatchesRecountAndIsSymmetric) {
  std::mt19937_64 rng(6);
  const int n = 6;
  std::vector<double> matrix = RandomMatrix(n, rng);
  DistanceModel m = testing::MustMatrix(n, matrix);
  NeighborIndex index = NeighborIndex::Build(m, 0.3);
  int64_t total = 0;
  for (int x = 0; x < n; ++x) {
    std::vector<int> expected;
    for (int y = 0; y < n; ++y) {
      if (y != x && matrix[x * n + y] <= 0.3) expected.push_back(y);
    }
    EXPECT_EQ(index.neighbors(x), expected);
    total += static_cast<int64_t>(expected.size());
    for (int y : expected) EXPECT_TRUE(index.Contains(y, x));
    EXPECT_FALSE(index.Contains(x, x));
  }
  EXPECT_EQ(index.total_size(), total);
}

TEST(SampleNegativeTest, SingletonsAcceptFirstDraw) {
  Dataset d = MakeDataset({0, 1, 2, 3, 4});
  SimulatedOracle oracle(*d.ground_truth());
  OracleSession session(oracle);
  Rng rng(2);
  auto sample = CollectNegative(d, session, rng, 100);
  ASSERT_TRUE(sample.ok());
  for (int64_t a : sample->attempts) EXPECT_EQ(a, 1);
}

TEST(SampleNegativeTest, OneClusterIsRejected) {
  Dataset d = MakeDataset({0, 0, 0});
  SimulatedOracle oracle(*d.ground_truth());
  OracleSession session(oracle);
  Rng rng(2);
  EXPECT_EQ(GetErrorCode(SampleNegative(d, session, rng).status()),
            ErrorCode::kNoNegativePairs);
}

TEST(SampleNegativeTest, MatchesExactNegativeDistribution) {
  Dataset d = MakeDataset(LabelsFromSizes({5, 5}));
  SimulatedOracle oracle(*d.ground_truth());
  OracleSession session(oracle);
  Rng rng(42);
  auto sample = CollectNegative(d, session, rng, 100000);
  ASSERT_TRUE(sample.ok());
  for (const Pair& p : sample->pairs) {
    ASSERT_FALSE(d.ground_truth()->Together(p.first, p.second));
  }
  auto exact = ExactReferenceDistribution(ReferenceKind::kNegative, d);
  ASSERT_TRUE(exact.ok());
  EXPECT_EQ(exact->support_size(), 25);
  EXPECT_LT(TotalVariation(PairDistribution::Empirical(sample->pairs), *exact),
            0.02);
}

TEST(CollectTest, ZeroSizeRejected) {
  Dataset d = MakeDataset({0, 1, 2});
  SimulatedOracle oracle(*d.ground_truth());
  OracleSession session(oracle);
  Rng rng(1);
  EXPECT_EQ(GetErrorCode(CollectNegative(d, session, rng, 0).status()),
            ErrorCode::kInvalidArgument);
}

TEST(CollectTest, SingletonTruthSpendsOneQueryPerPair) {
  Dataset d = MakeDataset({0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14,
                           15, 16, 17, 18, 19});
  SimulatedOracle oracle(*d.ground_truth());
  OracleSession session(oracle, {.count_cached = true});
  Rng rng(1);
  auto sample = CollectNegative(d, session, rng, 100);
  ASSERT_TRUE(sample.ok());
  EXPECT_EQ(sample->queries_spent, 100);
}

TEST(CollectTest, QueriesSpentIsTheSessionDelta) {
  Dataset d = MakeDataset(LabelsFromSizes({3, 3, 2}));
  SimulatedOracle oracle(*d.ground_truth());
  OracleSession session(oracle);
  Rng rng(3);
  ASSERT_TRUE(session.Query(0, 1).ok());
  const int64_t before = session.query_count();
  auto sample = CollectNegative(d, session, rng, 50);
  ASSERT_TRUE(sample.ok());
  EXPECT_EQ(sample->queries_spent, session.query_count() - before);
}

TEST(CollectTest, MeanQueriesMatchGeometricExpectation) {
  // Clusters {2,2,2} over n = 6: gamma0 = 0.2, expected 1.25 per pair.
  Dataset d = MakeDataset(LabelsFromSizes({2, 2, 2}));
  SimulatedOracle oracle(*d.ground_truth());
  Rng rng(17);
  double total = 0.0;
  for (int run = 0; run < 200; ++run) {
    OracleSession session(oracle, {.count_cached = true});
    auto sample = CollectNegative(d, session, rng, 100);
    ASSERT_TRUE(sample.ok());
    total += static_cast<double>(sample->queries_spent) / 100.0;
  }
  const double mean = total / 200.0;
  EXPECT_GE(mean, 1.19);
  EXPECT_LE(mean, 1.31);
}

TEST(SamplePositiveTest, UnitBetaAcceptsFirstDraw) {
  Dataset d = MakeDataset(LabelsFromSizes({3, 3}));
  std::vector<double> matrix(36, 0.9);
  for (int x = 0; x < 6; ++x) {
    for (int y = 0; y < 6; ++y) {
      if (x == y) matrix[x * 6 + y] = 0.0;
      else if (x / 3 == y / 3) matrix[x * 6 + y] = 0.1;
    }
  }
  DistanceModel m = testing::MustMatrix(6, matrix);
  NeighborIndex index = NeighborIndex::Build(m, 0.2);
  SimulatedOracle oracle(*d.ground_truth());
  OracleSession session(oracle);
  Rng rng(5);
  auto sample = CollectPositive(index, session, rng, 200);
  ASSERT_TRUE(sample.ok());
  for (int64_t a : sample->attempts) EXPECT_EQ(a, 1);
}

TEST(SamplePositiveTest, SinglePairSupport) {
  Dataset d = MakeDataset({0, 0, 1, 2});
  std::vector<double> matrix(16, 0.5);
  for (int x = 0; x < 4; ++x) matrix[x * 4 + x] = 0.0;
  matrix[1] = matrix[4] = 0.1;
  DistanceModel m = testing::MustMatrix(4, matrix);
  NeighborIndex index = NeighborIndex::Build(m, 0.5);
  SimulatedOracle oracle(*d.ground_truth());
  OracleSession session(oracle);
  Rng rng(5);
  auto sample = CollectPositive(index, session, rng, 50);
  ASSERT_TRUE(sample.ok());
  for (const Pair& p : sample->pairs) EXPECT_EQ(p, (Pair{0, 1}));
}

TEST(SamplePositiveTest, EmptyIndexAndZeroBeta) {
  Dataset d = MakeDataset({0, 0, 1, 1});
  std::vector<double> matrix(16, 0.5);
  for (int x = 0; x < 4; ++x) matrix[x * 4 + x] = 0.0;
  DistanceModel m = testing::MustMatrix(4, matrix);
  SimulatedOracle oracle(*d.ground_truth());
  OracleSession session(oracle);
  Rng rng(5);
  EXPECT_EQ(GetErrorCode(
                SamplePositive(NeighborIndex::Build(m, 0.1), session, rng)
                    .status()),
            ErrorCode::kEmptyIndex);
  // Only cross-cluster pairs within lambda: beta = 0.
  matrix[0 * 4 + 2] = matrix[2 * 4 + 0] = 0.1;
  DistanceModel cross = testing::MustMatrix(4, matrix);
  EXPECT_EQ(GetErrorCode(SamplePositive(NeighborIndex::Build(cross, 0.2),
                                        session, rng, {.attempt_cap = 100})
                             .status()),
            ErrorCode::kBudgetExhausted);
}

TEST(SamplePositiveTest, MatchesUniformOnKPlus) {
  std::mt19937_64 gen(12);
  Dataset d = MakeDataset(LabelsFromSizes({4, 4, 3, 1}));
  DistanceModel m = testing::MustMatrix(12, RandomMatrix(12, gen));
  NeighborIndex index = NeighborIndex::Build(m, 0.5);
  SimulatedOracle oracle(*d.ground_truth());
  OracleSession session(oracle);
  Rng rng(77);
  auto sample = CollectPositive(index, session, rng, 100000);
  ASSERT_TRUE(sample.ok());
  for (const Pair& p : sample->pairs) {
    ASSERT_TRUE(d.ground_truth()->Together(p.first, p.second));
    ASSERT_TRUE(index.Contains(p.first, p.second));
  }
  auto exact =
      ExactReferenceDistribution(ReferenceKind::kKPlusUniform, d, &index);
  ASSERT_TRUE(exact.ok());
  EXPECT_LT(TotalVariation(PairDistribution::Empirical(sample->pairs), *exact),
            0.02);
}

TEST(ReferenceDistributionTest, Examples) {
  Dataset singletons = MakeDataset({0, 1, 2, 3});
  auto neg = ExactReferenceDistribution(ReferenceKind::kNegative, singletons);
  ASSERT_TRUE(neg.ok());
  EXPECT_EQ(neg->support_size(), 6);
  EXPECT_NEAR(neg->TotalMass(), 1.0, 1e-12);
  EXPECT_EQ(GetErrorCode(
                ExactReferenceDistribution(ReferenceKind::kPositive, singletons)
                    .status()),
            ErrorCode::kEmptySupport);

  Dataset one_pair = MakeDataset({0, 0, 1});
  auto pos = ExactReferenceDistribution(ReferenceKind::kPositive, one_pair);
  EXPECT_EQ(pos->Probability({0, 1}), 1.0);

  // {5,5}: 25 unordered cross pairs, i.e. 1/50 per ordered pair.
  Dataset halves = MakeDataset(LabelsFromSizes({5, 5}));
  auto cross = ExactReferenceDistribution(ReferenceKind::kNegative, halves);
  EXPECT_DOUBLE_EQ(cross->Probability({0, 5}) / 2.0, 1.0 / 50.0);
}

TEST(DeterminismTest, SameSeedSameSample) {
  Dataset d = MakeDataset(LabelsFromSizes({3, 3, 2}));
  auto run = [&] {
    SimulatedOracle oracle(*d.ground_truth());
    OracleSession session(oracle);
    Rng rng(99);
    return CollectNegative(d, session, rng, 300)->pairs;
  };
  EXPECT_EQ(run(), run());
}

}  // namespace
}  // namespace rcc
