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

#ifndef RCC_ORACLE_H_
#define RCC_ORACLE_H_

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include "absl/strings/string_view.h"

#include "absl/container/flat_hash_map.h"
#include "absl/status/statusor.h"
#include "rcc/clustering.h"
#include "rcc/dataset.h"
#include "rcc/metrics.h"
#include "rcc/pair.h"

namespace rcc {

// Answers whether two elements share a target cluster. Implementations may
// assume x != y and both indices in range; OracleSession checks that.
class SameClusterOracle {
 public:
  virtual ~SameClusterOracle() = default;
  virtual int size() const = 0;
  virtual absl::StatusOr<bool> Answer(int x, int y) = 0;
  virtual absl::string_view mode() const = 0;
};

// Answers from a known ground-truth clustering.
class SimulatedOracle final : public SameClusterOracle {
 public:
  explicit SimulatedOracle(Clustering truth) : truth_(std::move(truth)) {}

  int size() const override { return truth_.size(); }
  absl::StatusOr<bool> Answer(int x, int y) override {
    return truth_.Together(x, y);
  }
  absl::string_view mode() const override { return "simulated"; }

 private:
  Clustering truth_;
};

// The graph labelling d_E(x, y) = 0 for pairs within `lambda`: the oracle for
// fitting a class to a thresholded similarity graph without supervision.
class ThresholdOracle final : public SameClusterOracle {
 public:
  ThresholdOracle(const DistanceModel& model, double lambda)
      : model_(model), lambda_(lambda) {}

  int size() const override { return model_.size(); }
  absl::StatusOr<bool> Answer(int x, int y) override {
    return model_(x, y) <= lambda_;
  }
  absl::string_view mode() const override { return "threshold"; }

 private:
  const DistanceModel& model_;
  double lambda_;
};

// A human oracle reached through a request/answer handshake. `Answer` blocks
// the calling (sampling) thread in the pending state until SubmitAnswer
// supplies the bit, the session is closed, or the timeout elapses.
//
//   idle --Answer()--> pending(pair) --SubmitAnswer()--> answered --> idle
//
// Answers are appended to a JSON-lines log; answers already in the log are
// returned without asking again, so an interrupted session can resume.
class InteractiveOracle final : public SameClusterOracle {
 public:
  struct Options {
    std::chrono::milliseconds timeout = std::chrono::hours(1);
    std::optional<std::filesystem::path> answer_log;
  };

  struct Stats {
    int64_t answered = 0;
    int pending = 0;
  };

  // Loads any existing answer log.
  static absl::StatusOr<std::unique_ptr<InteractiveOracle>> Create(
      const Dataset& dataset, Options options);

  int size() const override { return dataset_.size(); }
  absl::StatusOr<bool> Answer(int x, int y) override;
  absl::string_view mode() const override { return "interactive"; }

  // The pair awaiting a human answer, in the order it was asked.
  std::optional<std::pair<int, int>> Pending() const;
  // Fails with kStalePair unless {x_id, y_id} is the pending pair (either
  // order).
  absl::Status SubmitAnswer(absl::string_view x_id, absl::string_view y_id,
                            bool same);
  Stats stats() const;
  // Wakes any blocked Answer() call with kSessionClosed.
  void Close();

  const Dataset& dataset() const { return dataset_; }

 private:
  InteractiveOracle(const Dataset& dataset, Options options);
  absl::Status LoadLog();
  absl::Status AppendLog(const Pair& pair, bool same);

  const Dataset& dataset_;
  Options options_;
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::optional<std::pair<int, int>> pending_;
  std::optional<bool> answer_;
  bool closed_ = false;
  int64_t answered_ = 0;
  absl::flat_hash_map<Pair, bool> logged_;
  std::ofstream log_;
};

// Counting, caching front of an oracle. Queries on the same unordered pair
// are answered from the cache; only cache misses that reach the underlying
// oracle are counted unless `count_cached` is set, in which case every
// query counts.
class OracleSession {
 public:
  struct Options {
    bool count_cached = false;
  };

  explicit OracleSession(SameClusterOracle& oracle)
      : OracleSession(oracle, Options{}) {}
  OracleSession(SameClusterOracle& oracle, Options options)
      : oracle_(oracle), options_(options) {}

  OracleSession(const OracleSession&) = delete;
  OracleSession& operator=(const OracleSession&) = delete;

  absl::StatusOr<bool> Query(int x, int y);

  // q: monotone non-decreasing over the session.
  int64_t query_count() const;
  // Every Query() call that returned an answer, cached or not.
  int64_t lookups() const;
  std::optional<bool> Cached(const Pair& pair) const;
  absl::string_view mode() const { return oracle_.mode(); }
  int size() const { return oracle_.size(); }

 private:
  SameClusterOracle& oracle_;
  Options options_;
  std::mutex call_mu_;
  mutable std::shared_mutex cache_mu_;
  absl::flat_hash_map<Pair, bool> cache_;
  std::atomic<int64_t> query_count_ = 0;
  std::atomic<int64_t> lookups_ = 0;
};

}  // namespace rcc

#endif  // RCC_ORACLE_H_
