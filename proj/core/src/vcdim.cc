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

#include "rcc/vcdim.h"

#include <algorithm>
#include <functional>
#include <utility>

#include "absl/container/flat_hash_set.h"
#include "absl/strings/str_cat.h"
#include "rcc/errors.h"

namespace rcc {
namespace {

BigInt Pairings(int n) {
  const int half = n / 2;
  BigInt numerator = 1;
  for (int i = 2; i <= n; ++i) numerator *= i;
  BigInt denominator = 1;
  for (int i = 2; i <= half; ++i) denominator *= i;
  denominator <<= half;
  return numerator / denominator;
}

int64_t FloorSqrt(int64_t n) {
  int64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Every distinct labelling the class induces, as a bit vector over `pairs`.
std::vector<uint64_t> RealizedLabellings(const ClusteringClass& cls,
                                         std::span<const Pair> pairs) {
  absl::flat_hash_set<uint64_t> seen;
  auto add = [&](const Clustering& c) {
    uint64_t bits = 0;
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (c.Together(pairs[i].first, pairs[i].second)) bits |= uint64_t{1} << i;
    }
    seen.insert(bits);
  };
  for (const auto& flat : cls.flats()) add(flat);
  for (const auto& tree : cls.trees()) {
    for (const auto& frontier : tree.EnumeratePrunings()) {
      add(*tree.PruningToClustering(frontier));
    }
  }
  std::vector<uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Shattered(const std::vector<uint64_t>& realized,
               const std::vector<int>& chosen) {
  const size_t needed = size_t{1} << chosen.size();
  if (realized.size() < needed) return false;
  std::vector<char> hit(needed, 0);
  size_t distinct = 0;
  for (uint64_t bits : realized) {
    size_t pattern = 0;
    for (size_t i = 0; i < chosen.size(); ++i) {
      if (bits >> chosen[i] & 1) pattern |= size_t{1} << i;
    }
    if (!hit[pattern]) {
      hit[pattern] = 1;
      if (++distinct == needed) return true;
    }
  }
  return false;
}

}  // namespace

absl::StatusOr<BigInt> BellNumber(int n) {
  if (n < 0 || n > 30) {
    return MakeError(ErrorCode::kInvalidArgument,
                     absl::StrCat("bell number index ", n,
                                  " outside [0, 30]"));
  }
  // Row i of the triangle starts with B_i.
  std::vector<BigInt> row = {1};
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> next = {row.back()};
    for (const BigInt& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

absl::StatusOr<int64_t> GFlat(int64_t s) {
  if (s < 1) return MakeError(ErrorCode::kInvalidArgument, "s must be >= 1");
  for (int64_t n = 0;; ++n) {
    const int64_t root = FloorSqrt(n);
    if (root > 30) break;
    if (*BellNumber(static_cast<int>(root)) >= s) return n;
  }
  return MakeError(ErrorCode::kTooLarge, "s beyond the supported range");
}

absl::StatusOr<BigInt> MaxTreePairings(int n) {
  if (n < 1 || n > 20) {
    return MakeError(ErrorCode::kInvalidArgument,
                     absl::StrCat("pairing count index ", n,
                                  " outside [1, 20]"));
  }
  return Pairings(n);
}

absl::StatusOr<int64_t> GTree(int64_t s) {
  if (s < 1) return MakeError(ErrorCode::kInvalidArgument, "s must be >= 1");
  // Pairings(r) grows super-exponentially, so r stays small for any int64 s.
  for (int64_t n = 1;; ++n) {
    const int64_t root = FloorSqrt(n);
    if (Pairings(static_cast<int>(root)) >= s) return n;
  }
}

absl::StatusOr<ClassKind> ParseClassKind(absl::string_view name) {
  if (name == "flat") return ClassKind::kFlat;
  if (name == "tree") return ClassKind::kTree;
  return MakeError(ErrorCode::kInvalidArgument,
                   absl::StrCat("unknown class kind '", name, "'"));
}

absl::StatusOr<VcReport> BoundFor(ClassKind kind, int64_t s) {
  auto bound = kind == ClassKind::kFlat ? GFlat(s) : GTree(s);
  if (!bound.ok()) return bound.status();
  return VcReport{.kind = kind, .s = s, .bound = *bound, .shatter_witness = std::nullopt};
}

absl::StatusOr<bool> ShatterCheck(const ClusteringClass& cls,
                                  std::span<const Pair> pairs) {
  if (pairs.size() > 16) {
    return MakeError(ErrorCode::kTooLarge,
                     "shatter check limited to 16 pairs");
  }
  for (const Pair& p : pairs) {
    if (p.first < 0 || p.second >= cls.num_elements() ||
        p.first >= p.second) {
      return MakeError(ErrorCode::kUnknownId, "pair outside the element set");
    }
  }
  const auto realized = RealizedLabellings(cls, pairs);
  std::vector<int> all(pairs.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return Shattered(realized, all);
}

absl::StatusOr<std::vector<Pair>> LargestShatteredSet(
    const ClusteringClass& cls) {
  const int n = cls.num_elements();
  if (n > 11) {
    return MakeError(ErrorCode::kTooLarge,
                     "shattered-set search limited to 11 elements");
  }
  std::vector<Pair> pairs;
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) pairs.push_back(Pair{x, y});
  }
  const auto realized = RealizedLabellings(cls, pairs);
  std::vector<int> chosen;
  std::vector<int> best;
  std::function<void(int)> grow = [&](int from) {
    if (chosen.size() > best.size()) best = chosen;
    if ((size_t{1} << (chosen.size() + 1)) > realized.size()) return;
    for (int i = from; i < static_cast<int>(pairs.size()); ++i) {
      chosen.push_back(i);
      if (Shattered(realized, chosen)) grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);
  std::vector<Pair> witness;
  for (int i : best) witness.push_back(pairs[i]);
  return witness;
}

}  // namespace rcc
