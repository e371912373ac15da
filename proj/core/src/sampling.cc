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

#include "rcc/sampling.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "absl/strings/str_cat.h"
#include "rcc/errors.h"

namespace rcc {

NeighborIndex NeighborIndex::Build(const DistanceModel& model, double lambda) {
  NeighborIndex index;
  index.lambda_ = lambda;
  const int n = model.size();
  index.neighbors_.assign(n, {});
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (model(x, y) <= lambda) {
        index.neighbors_[x].push_back(y);
        index.neighbors_[y].push_back(x);
      }
    }
  }
  std::vector<double> sizes(n);
  for (int x = 0; x < n; ++x) {
    std::sort(index.neighbors_[x].begin(), index.neighbors_[x].end());
    sizes[x] = static_cast<double>(index.neighbors_[x].size());
    index.total_size_ += static_cast<int64_t>(index.neighbors_[x].size());
  }
  if (index.total_size_ > 0) {
    index.by_size_ = *AliasTable::Create(sizes);
  }
  return index;
}

bool NeighborIndex::Contains(int x, int y) const {
  const auto& s = neighbors_[x];
  return std::binary_search(s.begin(), s.end(), y);
}

std::pair<int, int> NeighborIndex::DrawFromK(Rng& rng) const {
  const int x = by_size_.Sample(rng);
  const auto& s = neighbors_[x];
  std::uniform_int_distribution<size_t> pick(0, s.size() - 1);
  return {x, s[pick(rng)]};
}

absl::StatusOr<Draw> SampleNegative(const Dataset& dataset,
                                    OracleSession& session, Rng& rng,
                                    const SamplerOptions& options) {
  const int n = dataset.size();
  if (n < 2) {
    return MakeError(ErrorCode::kInvalidArgument, "need at least 2 records");
  }
  if (dataset.has_ground_truth() &&
      dataset.ground_truth()->num_clusters() == 1) {
    return MakeError(ErrorCode::kNoNegativePairs,
                     "every pair is same-cluster; P0 cannot terminate");
  }
  std::uniform_int_distribution<int> first(0, n - 1);
  std::uniform_int_distribution<int> second(0, n - 2);
  for (int64_t attempt = 1; attempt <= options.attempt_cap; ++attempt) {
    const int x = first(rng);
    int y = second(rng);
    if (y >= x) ++y;
    auto same = session.Query(x, y);
    if (!same.ok()) return same.status();
    if (!*same) return Draw{Pair::Of(x, y), attempt};
  }
  return MakeError(ErrorCode::kBudgetExhausted,
                   absl::StrCat("no negative pair after ", options.attempt_cap,
                                " draws"));
}

absl::StatusOr<Draw> SamplePositive(const NeighborIndex& index,
                                    OracleSession& session, Rng& rng,
                                    const SamplerOptions& options) {
  if (index.total_size() == 0) {
    return MakeError(ErrorCode::kEmptyIndex,
                     "no pairs within lambda; P11 has nothing to draw");
  }
  for (int64_t attempt = 1; attempt <= options.attempt_cap; ++attempt) {
    const auto [x, y] = index.DrawFromK(rng);
    auto same = session.Query(x, y);
    if (!same.ok()) return same.status();
    if (*same) return Draw{Pair::Of(x, y), attempt};
  }
  return MakeError(ErrorCode::kBudgetExhausted,
                   absl::StrCat("no positive pair after ", options.attempt_cap,
                                " draws; beta may be 0"));
}

int64_t PairSample::total_attempts() const {
  int64_t total = 0;
  for (int64_t a : attempts) total += a;
  return total;
}

double PairSample::RejectionRate() const {
  const int64_t total = total_attempts();
  if (total == 0) return 0.0;
  return static_cast<double>(total - size()) / static_cast<double>(total);
}

namespace {

template <typename DrawFn>
absl::StatusOr<PairSample> Collect(PairLabel label, OracleSession& session,
                                   int m, DrawFn draw) {
  if (m < 1) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "sample size must be at least 1");
  }
  PairSample sample;
  sample.label = label;
  sample.pairs.reserve(m);
  sample.attempts.reserve(m);
  const int64_t before = session.query_count();
  for (int i = 0; i < m; ++i) {
    auto d = draw();
    if (!d.ok()) return d.status();
    sample.pairs.push_back(d->pair);
    sample.attempts.push_back(d->attempts);
  }
  sample.queries_spent = session.query_count() - before;
  return sample;
}

}  // namespace

absl::StatusOr<PairSample> CollectNegative(const Dataset& dataset,
                                           OracleSession& session, Rng& rng,
                                           int m,
                                           const SamplerOptions& options) {
  return Collect(PairLabel::kNegative, session, m, [&] {
    return SampleNegative(dataset, session, rng, options);
  });
}

absl::StatusOr<PairSample> CollectPositive(const NeighborIndex& index,
                                           OracleSession& session, Rng& rng,
                                           int m,
                                           const SamplerOptions& options) {
  return Collect(PairLabel::kPositive, session, m, [&] {
    return SamplePositive(index, session, rng, options);
  });
}

PairDistribution::PairDistribution(
    std::vector<std::pair<Pair, double>> entries)
    : entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
}

PairDistribution PairDistribution::Uniform(std::vector<Pair> support) {
  std::vector<std::pair<Pair, double>> entries;
  entries.reserve(support.size());
  const double p = 1.0 / static_cast<double>(support.size());
  for (const Pair& pair : support) entries.emplace_back(pair, p);
  return PairDistribution(std::move(entries));
}

PairDistribution PairDistribution::Empirical(std::span<const Pair> draws) {
  std::map<Pair, int64_t> counts;
  for (const Pair& p : draws) ++counts[p];
  std::vector<std::pair<Pair, double>> entries;
  entries.reserve(counts.size());
  for (const auto& [pair, c] : counts) {
    entries.emplace_back(pair, static_cast<double>(c) /
                                   static_cast<double>(draws.size()));
  }
  return PairDistribution(std::move(entries));
}

double PairDistribution::Probability(const Pair& pair) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), pair,
      [](const auto& entry, const Pair& p) { return entry.first < p; });
  if (it == entries_.end() || it->first != pair) return 0.0;
  return it->second;
}

double PairDistribution::TotalMass() const {
  double total = 0.0;
  for (const auto& [pair, p] : entries_) total += p;
  return total;
}

double TotalVariation(const PairDistribution& p, const PairDistribution& q) {
  const auto& a = p.entries();
  const auto& b = q.entries();
  double sum = 0.0;
  size_t i = 0;
  size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      sum += std::abs(a[i++].second);
    } else if (i == a.size() || b[j].first < a[i].first) {
      sum += std::abs(b[j++].second);
    } else {
      sum += std::abs(a[i++].second - b[j++].second);
    }
  }
  return sum / 2.0;
}

absl::StatusOr<PairDistribution> ExactReferenceDistribution(
    ReferenceKind kind, const Dataset& dataset, const NeighborIndex* index) {
  if (!dataset.has_ground_truth()) {
    return MakeError(ErrorCode::kMissingGroundTruth,
                     "reference distributions need ground truth");
  }
  if (kind == ReferenceKind::kKPlusUniform &&
      (index == nullptr || index->size() != dataset.size())) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "uniform-on-K+ needs a neighbour index for the dataset");
  }
  const Clustering& truth = *dataset.ground_truth();
  std::vector<Pair> support;
  for (int x = 0; x < dataset.size(); ++x) {
    for (int y = x + 1; y < dataset.size(); ++y) {
      const bool same = truth.Together(x, y);
      bool keep = false;
      switch (kind) {
        case ReferenceKind::kNegative:
          keep = !same;
          break;
        case ReferenceKind::kPositive:
          keep = same;
          break;
        case ReferenceKind::kKPlusUniform:
          keep = same && index->Contains(x, y);
          break;
      }
      if (keep) support.push_back(Pair{x, y});
    }
  }
  if (support.empty()) {
    return MakeError(ErrorCode::kEmptySupport,
                     "reference distribution has empty support");
  }
  return PairDistribution::Uniform(std::move(support));
}

}  // namespace rcc
