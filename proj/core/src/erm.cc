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

#include "rcc/erm.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "absl/strings/str_cat.h"
#include "rcc/errors.h"

namespace rcc {
namespace {

absl::Status CheckPairs(std::span<const Pair> pairs, int n,
                        absl::string_view what) {
  if (pairs.empty()) {
    return MakeError(ErrorCode::kEmptySample, absl::StrCat(what, " is empty"));
  }
  for (const Pair& p : pairs) {
    if (p.first < 0 || p.second >= n || p.first >= p.second) {
      return MakeError(ErrorCode::kUnknownId,
                       absl::StrCat(what, " has pair (", p.first, ", ",
                                    p.second, ") outside the element set"));
    }
  }
  return absl::OkStatus();
}

int64_t CountSeparated(const Clustering& c, std::span<const Pair> pairs) {
  int64_t k = 0;
  for (const Pair& p : pairs) k += c.Together(p.first, p.second) ? 0 : 1;
  return k;
}

}  // namespace

LossEstimate MakeLossEstimate(int64_t separated_positives, int64_t positives,
                              int64_t coclustered_negatives, int64_t negatives,
                              double mu) {
  LossEstimate e;
  e.separated_positives = separated_positives;
  e.positives = positives;
  e.coclustered_negatives = coclustered_negatives;
  e.negatives = negatives;
  e.mu = mu;
  e.e_hat = static_cast<double>(separated_positives) /
            static_cast<double>(positives);
  e.g_hat = static_cast<double>(coclustered_negatives) /
            static_cast<double>(negatives);
  e.l_hat = mu * e.e_hat + (1.0 - mu) * e.g_hat;
  return e;
}

absl::StatusOr<double> EmpiricalPositiveError(
    const Clustering& clustering, std::span<const Pair> positives) {
  if (auto s = CheckPairs(positives, clustering.size(), "positive sample");
      !s.ok()) {
    return s;
  }
  return static_cast<double>(CountSeparated(clustering, positives)) /
         static_cast<double>(positives.size());
}

absl::StatusOr<double> EmpiricalNegativeError(
    const Clustering& clustering, std::span<const Pair> negatives) {
  if (auto s = CheckPairs(negatives, clustering.size(), "negative sample");
      !s.ok()) {
    return s;
  }
  const int64_t together = static_cast<int64_t>(negatives.size()) -
                           CountSeparated(clustering, negatives);
  return static_cast<double>(together) /
         static_cast<double>(negatives.size());
}

absl::StatusOr<LossEstimate> EstimateLoss(const Clustering& clustering,
                                          std::span<const Pair> positives,
                                          std::span<const Pair> negatives,
                                          double mu) {
  const int n = clustering.size();
  if (auto s = CheckPairs(positives, n, "positive sample"); !s.ok()) return s;
  if (auto s = CheckPairs(negatives, n, "negative sample"); !s.ok()) return s;
  const int64_t together = static_cast<int64_t>(negatives.size()) -
                           CountSeparated(clustering, negatives);
  return MakeLossEstimate(CountSeparated(clustering, positives),
                          static_cast<int64_t>(positives.size()), together,
                          static_cast<int64_t>(negatives.size()), mu);
}

absl::StatusOr<double> NormalizedLossExact(const Clustering& clustering,
                                           const Clustering& truth,
                                           double mu) {
  if (clustering.size() != truth.size()) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "clustering and truth cover different element sets");
  }
  const int n = truth.size();
  int64_t positives = 0;
  int64_t negatives = 0;
  int64_t separated = 0;
  int64_t together = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const bool c = clustering.Together(x, y);
      if (truth.Together(x, y)) {
        ++positives;
        separated += c ? 0 : 1;
      } else {
        ++negatives;
        together += c ? 1 : 0;
      }
    }
  }
  if (positives == 0 || negatives == 0) {
    return MakeError(ErrorCode::kDegenerateTruth,
                     "normalized loss needs both same- and different-cluster "
                     "pairs");
  }
  return MakeLossEstimate(separated, positives, together, negatives, mu).l_hat;
}

absl::StatusOr<PruningResult> BestPruning(const HierarchyTree& tree,
                                          std::span<const Pair> positives,
                                          std::span<const Pair> negatives,
                                          double mu) {
  const int n = tree.num_elements();
  if (auto s = CheckPairs(positives, n, "positive sample"); !s.ok()) return s;
  if (auto s = CheckPairs(negatives, n, "negative sample"); !s.ok()) return s;
  const int64_t num_pos = static_cast<int64_t>(positives.size());
  const int64_t num_neg = static_cast<int64_t>(negatives.size());

  std::vector<int64_t> pos_at(tree.num_nodes(), 0);
  std::vector<int64_t> neg_inside(tree.num_nodes(), 0);
  for (const Pair& p : positives) {
    ++pos_at[tree.LowestCommonAncestor(p.first, p.second)];
  }
  for (const Pair& p : negatives) {
    ++neg_inside[tree.LowestCommonAncestor(p.first, p.second)];
  }

  struct Best {
    int64_t separated = 0;
    int64_t together = 0;
    bool split = false;
  };
  std::vector<Best> best(tree.num_nodes());
  for (int v : tree.post_order()) {
    const auto& node = tree.node(v);
    if (node.is_leaf()) continue;
    const Best& l = best[node.left];
    const Best& r = best[node.right];
    // Negatives inside v: those whose LCA lies in v's subtree.
    neg_inside[v] += neg_inside[node.left] + neg_inside[node.right];
    const Best split{l.separated + r.separated + pos_at[v],
                     l.together + r.together, true};
    const double split_cost =
        MakeLossEstimate(split.separated, num_pos, split.together, num_neg, mu)
            .l_hat;
    const double whole_cost =
        MakeLossEstimate(0, num_pos, neg_inside[v], num_neg, mu).l_hat;
    best[v] = split_cost <= whole_cost ? split : Best{0, neg_inside[v], false};
  }

  PruningResult result;
  std::vector<int> stack = {tree.root()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (best[v].split) {
      stack.push_back(tree.node(v).right);
      stack.push_back(tree.node(v).left);
    } else {
      result.frontier.push_back(v);
    }
  }
  auto clustering = tree.PruningToClustering(result.frontier);
  if (!clustering.ok()) return clustering.status();
  result.clustering = *std::move(clustering);
  const Best& root = best[tree.root()];
  result.loss =
      MakeLossEstimate(root.separated, num_pos, root.together, num_neg, mu);
  return result;
}

absl::StatusOr<ErmResult> Erm(const ClusteringClass& cls,
                              const PairSample& s_plus,
                              const PairSample& s_minus, double mu) {
  if (s_plus.label != PairLabel::kPositive ||
      s_minus.label != PairLabel::kNegative) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "ERM needs a positive and a negative sample");
  }
  if (!(mu >= 0.0 && mu <= 1.0)) {
    return MakeError(ErrorCode::kInvalidArgument, "mu outside [0, 1]");
  }
  ErmResult result;
  for (size_t i = 0; i < cls.flats().size(); ++i) {
    auto loss = EstimateLoss(cls.flats()[i], s_plus.pairs, s_minus.pairs, mu);
    if (!loss.ok()) return loss.status();
    result.evaluations.push_back(MemberEvaluation{
        .kind = MemberKind::kFlat,
        .index = static_cast<int>(i),
        .clustering = cls.flats()[i],
        .loss = *loss,
    });
  }
  for (size_t i = 0; i < cls.trees().size(); ++i) {
    auto best = BestPruning(cls.trees()[i], s_plus.pairs, s_minus.pairs, mu);
    if (!best.ok()) return best.status();
    result.evaluations.push_back(MemberEvaluation{
        .kind = MemberKind::kTree,
        .index = static_cast<int>(i),
        .frontier = std::move(best->frontier),
        .clustering = std::move(best->clustering),
        .loss = best->loss,
    });
  }
  // Evaluations are already in tie-break order; keep the first minimum.
  size_t argmin = 0;
  for (size_t i = 1; i < result.evaluations.size(); ++i) {
    if (result.evaluations[i].loss.l_hat <
        result.evaluations[argmin].loss.l_hat) {
      argmin = i;
    }
  }
  result.chosen = result.evaluations[argmin];
  result.queries_spent = s_plus.queries_spent + s_minus.queries_spent;
  result.m_plus = s_plus.size();
  result.m_minus = s_minus.size();
  return result;
}

absl::StatusOr<double> ExactClassMinimum(const ClusteringClass& cls,
                                         const Clustering& truth, double mu) {
  if (truth.size() != cls.num_elements()) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "truth and class cover different element sets");
  }
  std::vector<Pair> positives;
  std::vector<Pair> negatives;
  for (int x = 0; x < truth.size(); ++x) {
    for (int y = x + 1; y < truth.size(); ++y) {
      (truth.Together(x, y) ? positives : negatives).push_back(Pair{x, y});
    }
  }
  if (positives.empty() || negatives.empty()) {
    return MakeError(ErrorCode::kDegenerateTruth,
                     "normalized loss needs both same- and different-cluster "
                     "pairs");
  }
  double minimum = std::numeric_limits<double>::infinity();
  for (const auto& flat : cls.flats()) {
    auto loss = EstimateLoss(flat, positives, negatives, mu);
    if (!loss.ok()) return loss.status();
    minimum = std::min(minimum, loss->l_hat);
  }
  for (const auto& tree : cls.trees()) {
    auto best = BestPruning(tree, positives, negatives, mu);
    if (!best.ok()) return best.status();
    minimum = std::min(minimum, best->loss.l_hat);
  }
  return minimum;
}

absl::StatusOr<int64_t> RequiredSampleSize(int vcdim, double epsilon,
                                           double delta, double a) {
  if (vcdim < 1) {
    return MakeError(ErrorCode::kInvalidArgument, "vcdim must be >= 1");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0)) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "epsilon and delta must lie in (0, 1)");
  }
  if (!(a > 0.0)) {
    return MakeError(ErrorCode::kInvalidArgument, "a must be positive");
  }
  const double m =
      a * (static_cast<double>(vcdim) + std::log(2.0 / delta)) /
      (epsilon * epsilon);
  return static_cast<int64_t>(std::ceil(m));
}

absl::StatusOr<QueryBudget> QueryBudgetBound(int64_t m_plus, int64_t m_minus,
                                             double beta, double gamma,
                                             double nu) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    return MakeError(ErrorCode::kInvalidArgument, "beta must lie in (0, 1]");
  }
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    return MakeError(ErrorCode::kInvalidArgument, "gamma must lie in [0, 1)");
  }
  if (!(nu > 0.0)) {
    return MakeError(ErrorCode::kInvalidArgument, "nu must be positive");
  }
  if (m_plus < 0 || m_minus < 0) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "sample sizes must be non-negative");
  }
  QueryBudget budget;
  budget.bound = (1.0 + nu) * (static_cast<double>(m_minus) / (1.0 - gamma) +
                               static_cast<double>(m_plus) / beta);
  budget.failure_probability =
      std::exp(-nu * nu * static_cast<double>(m_minus) / 4.0) +
      std::exp(-nu * nu * static_cast<double>(m_plus) / 4.0);
  return budget;
}

}  // namespace rcc
