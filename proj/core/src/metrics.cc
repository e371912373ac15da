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

#include "rcc/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "rcc/errors.h"
#include "rcc/pair.h"

namespace rcc {

double NormalizedEditDistance(absl::string_view a, absl::string_view b) {
  const size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 0.0;
  std::vector<size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), size_t{0});
  for (size_t i = 1; i <= a.size(); ++i) {
    size_t diagonal = row[0];
    row[0] = i;
    for (size_t j = 1; j <= b.size(); ++j) {
      const size_t above = row[j];
      const size_t substitute = diagonal + (a[i - 1] == b[j - 1] ? 0 : 1);
      row[j] = std::min({above + 1, row[j - 1] + 1, substitute});
      diagonal = above;
    }
  }
  return static_cast<double>(row[b.size()]) / static_cast<double>(longest);
}

double TokenJaccardDistance(absl::string_view a, absl::string_view b) {
  const absl::flat_hash_set<absl::string_view> ta =
      absl::StrSplit(a, absl::ByAnyChar(" \t\n\r"), absl::SkipEmpty());
  const absl::flat_hash_set<absl::string_view> tb =
      absl::StrSplit(b, absl::ByAnyChar(" \t\n\r"), absl::SkipEmpty());
  if (ta.empty() && tb.empty()) return 0.0;
  size_t common = 0;
  for (auto t : ta) common += tb.contains(t) ? 1 : 0;
  const size_t unioned = ta.size() + tb.size() - common;
  return 1.0 - static_cast<double>(common) / static_cast<double>(unioned);
}

absl::StatusOr<DistanceKind> ParseDistanceKind(absl::string_view name) {
  if (name == "normalized-edit") return DistanceKind::kNormalizedEdit;
  if (name == "token-jaccard") return DistanceKind::kTokenJaccard;
  if (name == "precomputed") return DistanceKind::kPrecomputed;
  return MakeError(ErrorCode::kInvalidArgument,
                   absl::StrCat("unknown distance kind '", name, "'"));
}

absl::string_view DistanceKindName(DistanceKind kind) {
  switch (kind) {
    case DistanceKind::kNormalizedEdit:
      return "normalized-edit";
    case DistanceKind::kTokenJaccard:
      return "token-jaccard";
    case DistanceKind::kPrecomputed:
      return "precomputed";
  }
  return "precomputed";
}

absl::StatusOr<DistanceModel> DistanceModel::FromText(const Dataset& dataset,
                                                      DistanceKind kind) {
  if (kind == DistanceKind::kPrecomputed) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "precomputed distances need a distance file");
  }
  DistanceModel model;
  model.kind_ = kind;
  model.n_ = dataset.size();
  model.texts_.reserve(dataset.size());
  for (const auto& r : dataset.records()) {
    if (!r.has_payload()) {
      return MakeError(ErrorCode::kSchemaViolation,
                       absl::StrCat("record '", r.id,
                                    "' has neither text nor features"));
    }
    model.texts_.push_back(r.ComparableText());
  }
  return model;
}

absl::StatusOr<DistanceModel> DistanceModel::FromEntries(
    int n, const std::vector<DistanceEntry>& entries) {
  DistanceModel model;
  model.kind_ = DistanceKind::kPrecomputed;
  model.n_ = n;
  model.upper_.assign(UnorderedPairCount(n), std::nan(""));
  for (const auto& e : entries) {
    if (e.x < 0 || e.y < 0 || e.x >= n || e.y >= n || e.x == e.y) {
      return MakeError(ErrorCode::kSchemaViolation,
                       absl::StrCat("invalid distance pair (", e.x, ", ", e.y,
                                    ")"));
    }
    if (!(e.distance >= 0.0 && e.distance <= 1.0)) {
      return MakeError(ErrorCode::kSchemaViolation,
                       absl::StrCat("distance ", e.distance,
                                    " outside [0, 1]"));
    }
    double& slot = model.upper_[PairIndex(Pair::Of(e.x, e.y), n)];
    if (!std::isnan(slot)) {
      return MakeError(ErrorCode::kSchemaViolation,
                       absl::StrCat("duplicate distance for pair (", e.x,
                                    ", ", e.y, ")"));
    }
    slot = e.distance;
  }
  for (size_t i = 0; i < model.upper_.size(); ++i) {
    if (std::isnan(model.upper_[i])) {
      return MakeError(ErrorCode::kSchemaViolation,
                       "distance matrix is missing pairs");
    }
  }
  return model;
}

absl::StatusOr<DistanceModel> DistanceModel::FromMatrix(
    int n, const std::vector<double>& matrix) {
  if (matrix.size() != static_cast<size_t>(n) * n) {
    return MakeError(ErrorCode::kSchemaViolation, "matrix must be n*n");
  }
  std::vector<DistanceEntry> entries;
  for (int x = 0; x < n; ++x) {
    if (matrix[x * n + x] != 0.0) {
      return MakeError(ErrorCode::kSchemaViolation,
                       "matrix diagonal must be zero");
    }
    for (int y = x + 1; y < n; ++y) {
      if (matrix[x * n + y] != matrix[y * n + x]) {
        return MakeError(ErrorCode::kSchemaViolation,
                         "matrix must be symmetric");
      }
      entries.push_back({x, y, matrix[x * n + y]});
    }
  }
  return FromEntries(n, entries);
}

double DistanceModel::operator()(int x, int y) const {
  if (x == y) return 0.0;
  switch (kind_) {
    case DistanceKind::kNormalizedEdit:
      return NormalizedEditDistance(texts_[x], texts_[y]);
    case DistanceKind::kTokenJaccard:
      return TokenJaccardDistance(texts_[x], texts_[y]);
    case DistanceKind::kPrecomputed:
      return upper_[PairIndex(Pair::Of(x, y), n_)];
  }
  return 1.0;
}

absl::StatusOr<double> DistanceModel::Distance(int x, int y) const {
  if (x < 0 || y < 0 || x >= n_ || y >= n_) {
    return MakeError(ErrorCode::kUnknownId,
                     absl::StrCat("element out of range: ", x, ", ", y));
  }
  return (*this)(x, y);
}

namespace {

absl::StatusOr<const Clustering*> TruthOf(const Dataset& dataset) {
  if (!dataset.has_ground_truth()) {
    return MakeError(ErrorCode::kMissingGroundTruth,
                     "dataset has no ground-truth cluster labels");
  }
  return &*dataset.ground_truth();
}

InformativenessCounts CountPairs(const Clustering& truth,
                                 const std::vector<double>& distances, int n,
                                 double lambda) {
  InformativenessCounts c;
  size_t k = 0;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y, ++k) {
      const bool positive = truth.Together(x, y);
      const bool within = distances[k] <= lambda;
      c.positive_pairs += positive;
      c.positive_beyond_threshold += positive && !within;
      c.pairs_within_threshold += within;
      c.positive_within_threshold += positive && within;
    }
  }
  return c;
}

std::vector<double> AllDistances(const DistanceModel& model) {
  const int n = model.size();
  std::vector<double> d;
  d.reserve(UnorderedPairCount(n));
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) d.push_back(model(x, y));
  }
  return d;
}

}  // namespace

double Gamma0Of(const Clustering& truth) {
  const double n = truth.size();
  if (n < 2) return 0.0;
  double same = 0;
  for (const auto& b : truth.blocks()) {
    same += static_cast<double>(b.size()) * (static_cast<double>(b.size()) - 1);
  }
  return same / (n * (n - 1));
}

absl::StatusOr<double> ComputeGamma0(const Dataset& dataset) {
  auto truth = TruthOf(dataset);
  if (!truth.ok()) return truth.status();
  if (dataset.size() < 2) {
    return MakeError(ErrorCode::kInvalidArgument, "need at least 2 records");
  }
  return Gamma0Of(**truth);
}

absl::StatusOr<InformativenessReport> ComputeAlphaBeta(
    const Dataset& dataset, const DistanceModel& model, double lambda) {
  auto truth = TruthOf(dataset);
  if (!truth.ok()) return truth.status();
  if (model.size() != dataset.size()) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "distance model does not match dataset");
  }
  const InformativenessCounts c =
      CountPairs(**truth, AllDistances(model), dataset.size(), lambda);
  if (c.positive_pairs == 0) {
    return MakeError(ErrorCode::kNoPositivePairs,
                     "alpha undefined: no same-cluster pairs");
  }
  if (c.pairs_within_threshold == 0) {
    return MakeError(ErrorCode::kNoPairsUnderThreshold,
                     "beta undefined: no pairs within lambda");
  }
  InformativenessReport report;
  report.lambda = lambda;
  report.counts = c;
  report.alpha = static_cast<double>(c.positive_beyond_threshold) /
                 static_cast<double>(c.positive_pairs);
  report.beta = static_cast<double>(c.positive_within_threshold) /
                static_cast<double>(c.pairs_within_threshold);
  report.gamma0 = Gamma0Of(**truth);
  return report;
}

absl::StatusOr<double> MuFromWeights(double w1, double w2, double gamma0) {
  if (!(w1 > 0.0) || !(w2 > 0.0)) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "weights must be positive");
  }
  if (!(gamma0 >= 0.0 && gamma0 <= 1.0)) {
    return MakeError(ErrorCode::kInvalidArgument, "gamma0 outside [0, 1]");
  }
  const double denominator = w1 * gamma0 + w2 * (1.0 - gamma0);
  if (!(denominator > 0.0)) {
    return MakeError(ErrorCode::kDegenerateWeights,
                     "weights and gamma0 give a zero denominator");
  }
  return w1 * gamma0 / denominator;
}

absl::StatusOr<std::vector<SweepPoint>> SweepLambda(const Dataset& dataset,
                                                    const DistanceModel& model,
                                                    int points) {
  auto truth = TruthOf(dataset);
  if (!truth.ok()) return truth.status();
  if (points < 2) {
    return MakeError(ErrorCode::kInvalidArgument, "sweep needs >= 2 points");
  }
  const std::vector<double> distances = AllDistances(model);
  std::vector<SweepPoint> out;
  for (int i = 0; i < points; ++i) {
    SweepPoint p;
    p.lambda = static_cast<double>(i) / (points - 1);
    const auto c = CountPairs(**truth, distances, dataset.size(), p.lambda);
    if (c.positive_pairs > 0) {
      p.alpha = static_cast<double>(c.positive_beyond_threshold) /
                static_cast<double>(c.positive_pairs);
    }
    if (c.pairs_within_threshold > 0) {
      p.beta = static_cast<double>(c.positive_within_threshold) /
               static_cast<double>(c.pairs_within_threshold);
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace rcc
