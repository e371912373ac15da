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

#ifndef RCC_PAIR_H_
#define RCC_PAIR_H_

#include <compare>
#include <cstdint>
#include <utility>

namespace rcc {

// An unordered pair of distinct element indices stored canonically
// (first < second). Every unordered pair stands for the two ordered pairs
// (x, y) and (y, x) of X^[2]; probabilities over ordered pairs follow by
// symmetry.
struct Pair {
  int first = 0;
  int second = 0;

  static Pair Of(int x, int y) { return x < y ? Pair{x, y} : Pair{y, x}; }

  friend auto operator<=>(const Pair&, const Pair&) = default;

  template <typename H>
  friend H AbslHashValue(H h, const Pair& p) {
    return H::combine(std::move(h), p.first, p.second);
  }
};

// Number of unordered distinct pairs over n elements.
inline int64_t UnorderedPairCount(int64_t n) { return n * (n - 1) / 2; }

// Dense index of a canonical pair in row-major upper-triangle order.
inline int64_t PairIndex(const Pair& p, int64_t n) {
  const int64_t a = p.first;
  return a * (2 * n - a - 1) / 2 + (p.second - a - 1);
}

}  // namespace rcc

#endif  // RCC_PAIR_H_
