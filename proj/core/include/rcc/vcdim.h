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

#ifndef RCC_VCDIM_H_
#define RCC_VCDIM_H_

#include <cstdint>
#include <optional>
#include <span>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "rcc/clustering_class.h"
#include "rcc/hierarchy_tree.h"
#include "rcc/pair.h"

namespace rcc {

// B_n via the Bell triangle; 0 <= n <= 30.
absl::StatusOr<BigInt> BellNumber(int n);

// Smallest n with B_floor(sqrt(n)) >= s.
absl::StatusOr<int64_t> GFlat(int64_t s);

// n! / (floor(n/2)! 2^floor(n/2)): clusterings of n points into pairs (plus
// one singleton when n is odd). 1 <= n <= 20.
absl::StatusOr<BigInt> MaxTreePairings(int n);

// Smallest n with MaxTreePairings(floor(sqrt(n))) >= s.
absl::StatusOr<int64_t> GTree(int64_t s);

enum class ClassKind { kFlat, kTree };

absl::StatusOr<ClassKind> ParseClassKind(absl::string_view name);

struct VcReport {
  ClassKind kind = ClassKind::kFlat;
  int64_t s = 0;
  int64_t bound = 0;
  std::optional<std::vector<Pair>> shatter_witness;
};

absl::StatusOr<VcReport> BoundFor(ClassKind kind, int64_t s);

// True iff every 0/1 labelling of `pairs` is the pair predicate of some
// member (trees contribute all their prunings). At most 16 pairs.
absl::StatusOr<bool> ShatterCheck(const ClusteringClass& cls,
                                  std::span<const Pair> pairs);

// A largest shattered pair set over all pairs of the class's elements, found
// by exhaustive search (shattered sets are closed under subsets). Elements
// are limited to 11 so every pair fits one 64-bit mask.
absl::StatusOr<std::vector<Pair>> LargestShatteredSet(
    const ClusteringClass& cls);

}  // namespace rcc

#endif  // RCC_VCDIM_H_
