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
#include <thread>

#include "gtest/gtest.h"
#include "rcc/errors.h"
#include "rcc/oracle.h"
#include "support/test_support.h"

namespace rcc {
namespace {

using testing::MakeDataset;
using testing::MustClustering;

TEST(OracleSessionTest, AnswersFollowTruth) {
  SimulatedOracle oracle(MustClustering({0, 0, 1}));
  OracleSession session(oracle);
  EXPECT_TRUE(*session.Query(0, 1));
  EXPECT_FALSE(*session.Query(2, 0));
}

TEST(OracleSessionTest, RepeatsHitTheCache) {
  SimulatedOracle oracle(MustClustering({0, 0, 1}));
  OracleSession session(oracle);
  EXPECT_EQ(session.query_count(), 0);
  EXPECT_TRUE(*session.Query(0, 1));
  EXPECT_TRUE(*session.Query(1, 0));
  EXPECT_EQ(session.query_count(), 1);
}

TEST(OracleSessionTest, CountsOnlyDistinctPairs) {
  SimulatedOracle oracle(MustClustering({0, 0, 1, 1}));
  OracleSession session(oracle);
  ASSERT_TRUE(session.Query(0, 1).ok());
  ASSERT_TRUE(session.Query(0, 2).ok());
  ASSERT_TRUE(session.Query(2, 3).ok());
  EXPECT_EQ(session.query_count(), 3);
  ASSERT_TRUE(session.Query(1, 0).ok());
  ASSERT_TRUE(session.Query(3, 2).ok());
  EXPECT_EQ(session.query_count(), 3);
  EXPECT_EQ(session.lookups(), 5);
}

TEST(OracleSessionTest, CountCachedCountsEveryLookup) {
  SimulatedOracle oracle(MustClustering({0, 0, 1, 1}));
  OracleSession session(oracle, {.count_cached = true});
  for (int i = 0; i < 4; ++i) ASSERT_TRUE(session.Query(0, 1).ok());
  EXPECT_EQ(session.query_count(), 4);
}

TEST(OracleSessionTest, RejectsBadArguments) {
  SimulatedOracle oracle(MustClustering({0, 0, 1}));
  OracleSession session(oracle);
  EXPECT_EQ(GetErrorCode(session.Query(1, 1).status()), ErrorCode::kSamePair);
  EXPECT_EQ(GetErrorCode(session.Query(0, 3).status()), ErrorCode::kUnknownId);
  EXPECT_EQ(session.query_count(), 0);
}

TEST(OracleSessionTest, SimulatedAgreesWithTruthExhaustively) {
  std::mt19937_64 rng(8);
  Clustering truth = testing::RandomClustering(30, 6, rng);
  SimulatedOracle oracle(truth);
  OracleSession session(oracle);
  for (int x = 0; x < 30; ++x) {
    for (int y = 0; y < 30; ++y) {
      if (x != y) EXPECT_EQ(*session.Query(x, y), *truth.SameCluster(x, y));
    }
  }
}

TEST(OracleSessionTest, CachingNeverChangesAnswers) {
  std::mt19937_64 rng(9);
  Clustering truth = testing::RandomClustering(10, 3, rng);
  SimulatedOracle a(truth);
  SimulatedOracle b(truth);
  OracleSession cached(a);
  OracleSession strict(b, {.count_cached = true});
  std::uniform_int_distribution<int> pick(0, 9);
  for (int i = 0; i < 500; ++i) {
    const int x = pick(rng);
    const int y = pick(rng);
    if (x == y) continue;
    EXPECT_EQ(*cached.Query(x, y), *strict.Query(x, y));
  }
  EXPECT_LE(cached.query_count(), strict.query_count());
  EXPECT_LE(cached.query_count(), 45);
}

TEST(OracleSessionTest, MonotoneUnderConcurrentReaders) {
  Clustering truth = MustClustering({0, 0, 1, 1, 2, 2, 3, 3});
  SimulatedOracle oracle(truth);
  OracleSession session(oracle);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&session, t] {
      for (int i = 0; i < 200; ++i) {
        const int x = (i + t) % 8;
        const int y = (i * 3 + 1 + t) % 8;
        if (x != y) (void)session.Query(x, y);
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_LE(session.query_count(), 28);
}

class InteractiveOracleTest : public ::testing::Test {
 protected:
  Dataset dataset_ = MakeDataset({0, 0, 1, 1});
};

TEST_F(InteractiveOracleTest, AnswerUnblocksTheSampler) {
  auto oracle = *InteractiveOracle::Create(dataset_, {});
  EXPECT_FALSE(oracle->Pending().has_value());
  absl::StatusOr<bool> answer;
  std::thread sampler([&] { answer = oracle->Answer(0, 1); });
  while (!oracle->Pending().has_value()) std::this_thread::yield();
  EXPECT_EQ(oracle->stats().pending, 1);
  EXPECT_EQ(GetErrorCode(oracle->SubmitAnswer("e0", "e2", true)),
            ErrorCode::kStalePair);
  EXPECT_TRUE(oracle->SubmitAnswer("e1", "e0", true).ok());
  sampler.join();
  ASSERT_TRUE(answer.ok());
  EXPECT_TRUE(*answer);
  EXPECT_EQ(oracle->stats().answered, 1);
  EXPECT_EQ(oracle->stats().pending, 0);
  EXPECT_EQ(GetErrorCode(oracle->SubmitAnswer("e1", "e0", true)),
            ErrorCode::kStalePair);
}

TEST_F(InteractiveOracleTest, TimeoutAbortsCleanly) {
  auto oracle = *InteractiveOracle::Create(
      dataset_, {.timeout = std::chrono::milliseconds(20)});
  EXPECT_EQ(GetErrorCode(oracle->Answer(0, 1).status()), ErrorCode::kTimeout);
}

TEST_F(InteractiveOracleTest, CloseWakesWaiter) {
  auto oracle = *InteractiveOracle::Create(dataset_, {});
  absl::StatusOr<bool> answer;
  std::thread sampler([&] { answer = oracle->Answer(0, 1); });
  while (!oracle->Pending().has_value()) std::this_thread::yield();
  oracle->Close();
  sampler.join();
  EXPECT_EQ(GetErrorCode(answer.status()), ErrorCode::kSessionClosed);
}

TEST_F(InteractiveOracleTest, AnswerLogResumesWithoutAsking) {
  const auto log = std::filesystem::temp_directory_path() /
                   ("rcc_answer_log_" + std::to_string(::getpid()) + ".jsonl");
  std::filesystem::remove(log);
  {
    auto oracle = *InteractiveOracle::Create(dataset_, {.answer_log = log});
    std::thread sampler([&] { EXPECT_FALSE(*oracle->Answer(1, 2)); });
    while (!oracle->Pending().has_value()) std::this_thread::yield();
    ASSERT_TRUE(oracle->SubmitAnswer("e1", "e2", false).ok());
    sampler.join();
  }
  auto resumed = *InteractiveOracle::Create(
      dataset_, {.timeout = std::chrono::milliseconds(1), .answer_log = log});
  auto answer = resumed->Answer(2, 1);
  ASSERT_TRUE(answer.ok());
  EXPECT_FALSE(*answer);
  std::filesystem::remove(log);
}

}  // namespace
}  // namespace rcc
