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

#ifndef RCC_ERM_H_
#define RCC_ERM_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "rcc/clustering.h"
#include "rcc/clustering_class.h"
#include "rcc/hierarchy_tree.h"
#include "rcc/pair.h"
#include "rcc/sampling.h"

namespace rcc {

// L^ = mu E^ + (1 - mu) G^, with the underlying counts kept so the value can
// be recomputed exactly.
struct LossEstimate {
  double e_hat = 0.0;  // fraction of S+ that C separates
  double g_hat = 0.0;  // fraction of S- that C co-clusters
  double l_hat = 0.0;
  double mu = 0.0;
  int64_t separated_positives = 0;
  int64_t positives = 0;
  int64_t coclustered_negatives = 0;
  int64_t negatives = 0;
};

// The one place the weighted loss is evaluated; every path (DP, enumeration,
// flat evaluation) goes through it so equal counts give bit-equal losses.
LossEstimate MakeLossEstimate(int64_t separated_positives, int64_t positives,
                              int64_t coclustered_negatives, int64_t negatives,
                              double mu);

absl::StatusOr<double> EmpiricalPositiveError(const Clustering& clustering,
                                              std::span<const Pair> positives);
// Counts pairs with C(x, y) = 1, consistent with the normalized loss.
absl::StatusOr<double> EmpiricalNegativeError(const Clustering& clustering,
                                              std::span<const Pair> negatives);

absl::StatusOr<LossEstimate> EstimateLoss(const Clustering& clustering,
                                          std::span<const Pair> positives,
                                          std::span<const Pair> negatives,
                                          double mu);

// mu P_{P+}[C = 0] + (1 - mu) P_{P-}[C = 1], by enumerating every pair.
// Fails with kDegenerateTruth when either P+ or P- is empty.
absl::StatusOr<double> NormalizedLossExact(const Clustering& clustering,
                                           const Clustering& truth, double mu);

struct PruningResult {
  std::vector<int> frontier;  // in left-to-right order
  Clustering clustering;
  LossEstimate loss;
};

// The pruning of `tree` minimising L^ on the given pair multisets, by a
// bottom-up pass: keeping node v whole costs the negatives inside v; splitting
// it costs the children's optima plus the positives whose lowest common
// ancestor is v. Ties prefer splitting.
absl::StatusOr<PruningResult> BestPruning(const HierarchyTree& tree,
                                          std::span<const Pair> positives,
                                          std::span<const Pair> negatives,
                                          double mu);

enum class MemberKind { kFlat, kTree };

struct MemberEvaluation {
  MemberKind kind = MemberKind::kFlat;
  int index = 0;
  std::vector<int> frontier;  // trees only
  Clustering clustering;
  LossEstimate loss;
};

struct ErmResult {
  MemberEvaluation chosen;
  std::vector<MemberEvaluation> evaluations;
  std::optional<double> true_loss;
  int64_t queries_spent = 0;
  int m_plus = 0;
  int m_minus = 0;
};

// argmin of L^ over every flat clustering and every tree's best pruning.
// Ties: flats before trees, then ascending index.
absl::StatusOr<ErmResult> Erm(const ClusteringClass& cls,
                              const PairSample& s_plus,
                              const PairSample& s_minus, double mu);

// min over the class of the exact normalized loss, trees included through
// their best pruning against all pairs.
absl::StatusOr<double> ExactClassMinimum(const ClusteringClass& cls,
                                         const Clustering& truth, double mu);

// ceil(a (vcdim + ln(2 / delta)) / epsilon^2).
absl::StatusOr<int64_t> RequiredSampleSize(int vcdim, double epsilon,
                                           double delta, double a);

struct QueryBudget {
  double bound = 0.0;
  // exp(-nu^2 m- / 4) + exp(-nu^2 m+ / 4)
  double failure_probability = 0.0;
};

// (1 + nu)(m- / (1 - gamma) + m+ / beta).
absl::StatusOr<QueryBudget> QueryBudgetBound(int64_t m_plus, int64_t m_minus,
                                             double beta, double gamma,
                                             double nu);

}  // namespace rcc

#endif  // RCC_ERM_H_
