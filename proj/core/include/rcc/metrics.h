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

#ifndef RCC_METRICS_H_
#define RCC_METRICS_H_

#include <cstdint>
#include <optional>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "rcc/dataset.h"

namespace rcc {

// Levenshtein(a, b) / max(|a|, |b|), 0 for two empty strings. Operates on
// bytes.
double NormalizedEditDistance(absl::string_view a, absl::string_view b);
// 1 - |A ∩ B| / |A ∪ B| over whitespace-separated token sets; 0 when both
// sets are empty.
double TokenJaccardDistance(absl::string_view a, absl::string_view b);

enum class DistanceKind { kNormalizedEdit, kTokenJaccard, kPrecomputed };

absl::StatusOr<DistanceKind> ParseDistanceKind(absl::string_view name);
absl::string_view DistanceKindName(DistanceKind kind);

struct DistanceEntry {
  int x = 0;
  int y = 0;
  double distance = 0.0;
};

// A symmetric pairwise distance d over the records of one dataset, with
// d(x, x) = 0 and values in [0, 1].
class DistanceModel {
 public:
  DistanceModel() = default;

  // Text-based model; every record needs a text or feature payload.
  static absl::StatusOr<DistanceModel> FromText(const Dataset& dataset,
                                                DistanceKind kind);
  // Precomputed model. Every unordered pair must be given exactly once and
  // every value must lie in [0, 1].
  static absl::StatusOr<DistanceModel> FromEntries(
      int n, const std::vector<DistanceEntry>& entries);
  // Convenience for dense symmetric matrices (row-major, n*n).
  static absl::StatusOr<DistanceModel> FromMatrix(
      int n, const std::vector<double>& matrix);

  DistanceKind kind() const { return kind_; }
  int size() const { return n_; }

  // Unchecked lookup for validated indices.
  double operator()(int x, int y) const;
  absl::StatusOr<double> Distance(int x, int y) const;

 private:
  DistanceKind kind_ = DistanceKind::kPrecomputed;
  int n_ = 0;
  std::vector<std::string> texts_;
  std::vector<double> upper_;  // precomputed, upper triangle
};

// Pair counts behind alpha and beta, over unordered pairs (the ordered-pair
// ratios are identical).
struct InformativenessCounts {
  int64_t positive_pairs = 0;
  int64_t positive_beyond_threshold = 0;
  int64_t pairs_within_threshold = 0;
  int64_t positive_within_threshold = 0;
};

struct InformativenessReport {
  double lambda = 0.0;
  // P[d > lambda | C* = 1]
  double alpha = 0.0;
  // P[C* = 1 | d <= lambda]
  double beta = 0.0;
  double gamma0 = 0.0;
  InformativenessCounts counts;
};

// Exact alpha and beta by enumerating every pair. Fails with
// kNoPositivePairs when alpha is undefined and kNoPairsUnderThreshold when
// beta is undefined.
absl::StatusOr<InformativenessReport> ComputeAlphaBeta(
    const Dataset& dataset, const DistanceModel& model, double lambda);

// gamma0 = sum |Ci|(|Ci|-1) / (n(n-1)).
absl::StatusOr<double> ComputeGamma0(const Dataset& dataset);
double Gamma0Of(const Clustering& truth);

// mu = w1 gamma0 / (w1 gamma0 + w2 (1 - gamma0)).
absl::StatusOr<double> MuFromWeights(double w1, double w2, double gamma0);

struct SweepPoint {
  double lambda = 0.0;
  std::optional<double> alpha;
  std::optional<double> beta;
};

// (alpha, beta) over `points` evenly spaced thresholds in [0, 1]; undefined
// values are left empty.
absl::StatusOr<std::vector<SweepPoint>> SweepLambda(const Dataset& dataset,
                                                    const DistanceModel& model,
                                                    int points = 20);

}  // namespace rcc

#endif  // RCC_METRICS_H_
