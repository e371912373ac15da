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

#ifndef RCC_SAMPLING_H_
#define RCC_SAMPLING_H_

#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "rcc/alias_table.h"
#include "rcc/dataset.h"
#include "rcc/metrics.h"
#include "rcc/oracle.h"
#include "rcc/pair.h"

namespace rcc {

using Rng = std::mt19937_64;

// S_x = {y != x : d(x, y) <= lambda} for every record, with an alias table
// over |S_x| for O(1) draws of x proportional to its neighbour count.
class NeighborIndex {
 public:
  NeighborIndex() = default;

  static NeighborIndex Build(const DistanceModel& model, double lambda);

  int size() const { return static_cast<int>(neighbors_.size()); }
  double lambda() const { return lambda_; }
  // |K|: ordered pairs within the threshold.
  int64_t total_size() const { return total_size_; }
  const std::vector<int>& neighbors(int x) const { return neighbors_[x]; }
  bool Contains(int x, int y) const;

  // One uniform draw from K (ordered pairs within the threshold).
  std::pair<int, int> DrawFromK(Rng& rng) const;

 private:
  double lambda_ = 0.0;
  std::vector<std::vector<int>> neighbors_;
  int64_t total_size_ = 0;
  AliasTable by_size_;
};

struct SamplerOptions {
  // Rejection loops give up with kBudgetExhausted after this many draws.
  int64_t attempt_cap = 1'000'000;
};

struct Draw {
  Pair pair;
  // Oracle lookups spent on this draw, including the accepted one.
  int64_t attempts = 0;
};

// P0: draw (x, y) uniformly from X^[2] until the oracle says "different".
// The accepted pair is distributed exactly as P-.
absl::StatusOr<Draw> SampleNegative(const Dataset& dataset,
                                    OracleSession& session, Rng& rng,
                                    const SamplerOptions& options = {});

// P11: draw x with probability |S_x| / |K|, then y uniformly from S_x, until
// the oracle says "same". The accepted pair is uniform over K+.
absl::StatusOr<Draw> SamplePositive(const NeighborIndex& index,
                                    OracleSession& session, Rng& rng,
                                    const SamplerOptions& options = {});

enum class PairLabel { kPositive, kNegative };

// A multiset of accepted pairs drawn i.i.d. with replacement.
struct PairSample {
  PairLabel label = PairLabel::kNegative;
  std::vector<Pair> pairs;
  // Oracle lookups per accepted pair (parallel to `pairs`).
  std::vector<int64_t> attempts;
  // Session query-count delta while collecting.
  int64_t queries_spent = 0;

  int size() const { return static_cast<int>(pairs.size()); }
  int64_t total_attempts() const;
  // Fraction of draws rejected. For a negative sample this estimates gamma0;
  // for a positive sample, 1 - beta.
  double RejectionRate() const;
};

absl::StatusOr<PairSample> CollectNegative(const Dataset& dataset,
                                           OracleSession& session, Rng& rng,
                                           int m,
                                           const SamplerOptions& options = {});
absl::StatusOr<PairSample> CollectPositive(const NeighborIndex& index,
                                           OracleSession& session, Rng& rng,
                                           int m,
                                           const SamplerOptions& options = {});

// A probability table over canonical unordered pairs. The mass of an
// unordered pair is the sum over its two ordered pairs.
class PairDistribution {
 public:
  PairDistribution() = default;
  explicit PairDistribution(std::vector<std::pair<Pair, double>> entries);

  static PairDistribution Uniform(std::vector<Pair> support);
  static PairDistribution Empirical(std::span<const Pair> draws);

  const std::vector<std::pair<Pair, double>>& entries() const {
    return entries_;
  }
  int support_size() const { return static_cast<int>(entries_.size()); }
  double Probability(const Pair& pair) const;
  double TotalMass() const;

 private:
  std::vector<std::pair<Pair, double>> entries_;  // sorted by pair
};

double TotalVariation(const PairDistribution& p, const PairDistribution& q);

enum class ReferenceKind {
  kNegative,        // P-: uniform over different-cluster pairs
  kPositive,        // P+: uniform over same-cluster pairs
  kKPlusUniform,    // uniform over same-cluster pairs within lambda
};

// Exact reference distributions by enumeration. kKPlusUniform requires an
// index. Fails with kEmptySupport when the support is empty.
absl::StatusOr<PairDistribution> ExactReferenceDistribution(
    ReferenceKind kind, const Dataset& dataset,
    const NeighborIndex* index = nullptr);

}  // namespace rcc

#endif  // RCC_SAMPLING_H_
