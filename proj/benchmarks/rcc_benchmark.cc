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

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "rcc/alias_table.h"
#include "rcc/dataset.h"
#include "rcc/erm.h"
#include "rcc/hierarchy_tree.h"
#include "rcc/metrics.h"
#include "rcc/oracle.h"
#include "rcc/pcc.h"
#include "rcc/sampling.h"

namespace rcc {
namespace {

// n records in clusters of four with random within/between distances.
struct Instance {
  Dataset dataset;
  DistanceModel model;
};

Instance MakeInstance(int n, uint64_t seed) {
  std::vector<Record> records;
  for (int i = 0; i < n; ++i) {
    records.push_back({.id = "r" + std::to_string(i),
                       .text = "record " + std::to_string(i),
                       .cluster = "c" + std::to_string(i / 4)});
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> matrix(static_cast<size_t>(n) * n, 0.0);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      const double d = x / 4 == y / 4 ? 0.3 * unit(rng) : 0.25 + 0.75 * unit(rng);
      matrix[x * n + y] = matrix[y * n + x] = d;
    }
  }
  return {*Dataset::Create(std::move(records)),
          *DistanceModel::FromMatrix(n, matrix)};
}

HierarchyTree RandomTree(int n, Rng& rng) {
  HierarchyTree::Builder builder;
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) roots.push_back(builder.AddLeaf(i));
  while (roots.size() > 1) {
    std::uniform_int_distribution<size_t> pick(0, roots.size() - 1);
    const size_t a = pick(rng);
    std::swap(roots[a], roots.back());
    const int left = roots.back();
    roots.pop_back();
    std::uniform_int_distribution<size_t> pick2(0, roots.size() - 1);
    const size_t b = pick2(rng);
    roots[b] = builder.Join(left, roots[b]);
  }
  return *std::move(builder).Build(roots.front(), n);
}

std::vector<Pair> RandomPairs(int n, int count, Rng& rng) {
  std::uniform_int_distribution<int> element(0, n - 1);
  std::vector<Pair> pairs;
  while (static_cast<int>(pairs.size()) < count) {
    const int x = element(rng), y = element(rng);
    if (x != y) pairs.push_back(Pair::Of(x, y));
  }
  return pairs;
}

void BM_AliasSample(benchmark::State& state) {
  Rng rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weights(state.range(0));
  for (double& w : weights) w = unit(rng);
  AliasTable table = *AliasTable::Create(weights);
  for (auto _ : state) benchmark::DoNotOptimize(table.Sample(rng));
}
BENCHMARK(BM_AliasSample)->Arg(16)->Arg(1 << 10)->Arg(1 << 16);

void BM_SampleNegative(benchmark::State& state) {
  Instance inst = MakeInstance(static_cast<int>(state.range(0)), 2);
  SimulatedOracle oracle(*inst.dataset.ground_truth());
  OracleSession session(oracle);
  Rng rng(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SampleNegative(inst.dataset, session, rng));
  }
}
BENCHMARK(BM_SampleNegative)->Arg(100)->Arg(1000);

void BM_SamplePositive(benchmark::State& state) {
  Instance inst = MakeInstance(static_cast<int>(state.range(0)), 4);
  NeighborIndex index = NeighborIndex::Build(inst.model, 0.3);
  SimulatedOracle oracle(*inst.dataset.ground_truth());
  OracleSession session(oracle);
  Rng rng(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SamplePositive(index, session, rng));
  }
}
BENCHMARK(BM_SamplePositive)->Arg(100)->Arg(1000);

void BM_NeighborIndexBuild(benchmark::State& state) {
  Instance inst = MakeInstance(static_cast<int>(state.range(0)), 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(NeighborIndex::Build(inst.model, 0.3));
  }
}
BENCHMARK(BM_NeighborIndexBuild)->Arg(100)->Arg(1000);

void BM_BestPruning(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  HierarchyTree tree = RandomTree(n, rng);
  auto positives = RandomPairs(n, 4000, rng);
  auto negatives = RandomPairs(n, 4000, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(BestPruning(tree, positives, negatives, 0.3));
  }
}
BENCHMARK(BM_BestPruning)->Arg(64)->Arg(1024)->Arg(16384);

void BM_CliqueCover(benchmark::State& state) {
  // A YES instance: q disjoint triples plus q shifted decoys.
  const int q = static_cast<int>(state.range(0));
  X3cInstance instance{.q = q, .subsets = {}};
  for (int i = 0; i < q; ++i) instance.subsets.push_back({3 * i, 3 * i + 1, 3 * i + 2});
  for (int i = 0; i + 1 < q; ++i) {
    instance.subsets.push_back({3 * i + 1, 3 * i + 2, 3 * i + 3});
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(DecideX3c(instance, {.p = 4, .t = 2}));
  }
}
BENCHMARK(BM_CliqueCover)->Arg(2)->Arg(4)->Arg(8);

void BM_NormalizedEditDistance(benchmark::State& state) {
  const std::string a(state.range(0), 'a');
  std::string b = a;
  for (size_t i = 0; i < b.size(); i += 3) b[i] = 'b';
  for (auto _ : state) benchmark::DoNotOptimize(NormalizedEditDistance(a, b));
}
BENCHMARK(BM_NormalizedEditDistance)->Arg(16)->Arg(64)->Arg(256);

}  // namespace
}  // namespace rcc

BENCHMARK_MAIN();
