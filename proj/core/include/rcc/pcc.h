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

#ifndef RCC_PCC_H_
#define RCC_PCC_H_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "absl/status/statusor.h"
#include "rcc/clustering.h"
#include "rcc/pair.h"

namespace rcc {

// A simple undirected graph; an edge means d_E(x, y) = 0 (a "similar" pair).
class PccGraph {
 public:
  PccGraph() = default;
  explicit PccGraph(int n);

  static absl::StatusOr<PccGraph> FromEdges(int n,
                                            const std::vector<Pair>& edges);

  int size() const { return static_cast<int>(adjacency_.size()); }
  int64_t num_edges() const { return num_edges_; }
  // Rejects self-loops and out-of-range endpoints; duplicates are ignored.
  absl::Status AddEdge(int x, int y);
  bool HasEdge(int x, int y) const;
  const std::vector<int>& neighbors(int x) const { return adjacency_[x]; }
  // Canonical pairs in ascending order.
  std::vector<Pair> Edges() const;

 private:
  std::vector<std::vector<int>> adjacency_;  // sorted
  int64_t num_edges_ = 0;
};

// Correlation loss counts over unordered pairs. The ordered-pair convention
// of X^[2] doubles both counts.
struct CorrelationLoss {
  int64_t negative_errors = 0;  // NL: co-clustered non-edges
  int64_t positive_errors = 0;  // PL: separated edges
  double weighted = 0.0;        // w1 NL + w2 PL
};

absl::StatusOr<CorrelationLoss> ComputeCorrelationLoss(
    const PccGraph& graph, const Clustering& clustering, double w1 = 1.0,
    double w2 = 1.0);

// Exact cover by 3-sets: a universe {0, ..., 3q-1} and 3-element subsets.
struct X3cInstance {
  int q = 0;
  std::vector<std::array<int, 3>> subsets;

  int universe_size() const { return 3 * q; }
  absl::Status Validate() const;
};

struct GadgetParams {
  int p = 4;  // clique size
  int t = 2;  // blocks per column
  absl::Status Validate() const;
};

// The two local clusterings of one subset's gadget, as vertex groups.
struct GadgetClusterings {
  // Subset chosen: x_ij with the first core, shifted chain, top clique.
  std::vector<std::vector<int>> inclusion;
  // Subset not chosen: core/top blocks; x_ij and anchors left out.
  std::vector<std::vector<int>> exclusion;
};

// Output of the X3C -> PCC generator.
//
// Layout (vertex ids): the 3q element vertices first (element e is vertex e),
// then p-3 anchor pools of q vertices each, then one gadget per subset. A
// gadget has p columns: three element columns (bottom = the subset's element
// vertices) and p-3 anchor columns (bottom = any anchor of that column's
// pool). Each column is a chain of t blocks; block j has a (p-1)-clique core
// joined to the block's bottom (previous top, or the column bottom) and to
// the block's own top vertex. The p last tops form a p-clique.
struct Gadget {
  PccGraph graph;
  X3cInstance instance;
  GadgetParams params;
  std::vector<GadgetClusterings> per_subset;
  // All element and anchor vertices as singletons, every core with its own
  // top: alpha = 0 against the graph, used for beta.
  Clustering reference;
  double alpha = 0.0;
  double beta_measured = 0.0;
  // Vertices in one gadget, excluding shared element and anchor vertices.
  int64_t gadget_vertices = 0;
  // Edges of one gadget including its edges to element and anchor vertices.
  int64_t edges_per_gadget = 0;
};

absl::StatusOr<Gadget> BuildGadget(const X3cInstance& instance,
                                   const GadgetParams& params);

// m (p^2 t + p - 3) + 3q, as counted for per-subset anchors.
int64_t UnsharedAnchorVertexCount(const X3cInstance& instance,
                         const GadgetParams& params);
// m p^2 t + p q: the generator's vertex count with shared anchor pools.
int64_t GadgetVertexCount(const X3cInstance& instance,
                          const GadgetParams& params);
// pt (C(p,2) + p - 1) + C(p,2).
int64_t NominalEdgeCountPerGadget(const GadgetParams& params);

// 1 / (1 + 2/p + 1/(pt)); requires t >= 2.
absl::StatusOr<double> GadgetBeta(const GadgetParams& params);

// Minimiser of the unweighted correlation loss over all clusterings with
// every block of size <= max_cluster_size. Ties go to the lexicographically
// smallest restricted-growth encoding. n <= 12.
absl::StatusOr<Clustering> SolvePccExhaustive(const PccGraph& graph,
                                              int max_cluster_size);

// A partition of all vertices into disjoint p-cliques, or nullopt if none
// exists. Enumerates the p-cliques, then runs exact-cover backtracking that
// always branches on the vertex with the fewest remaining cliques (forced
// vertices first, dead ends pruned immediately).
std::optional<Clustering> SolvePccCliqueCover(const PccGraph& graph, int p);

// Every p-clique as a sorted vertex list, ascending.
std::vector<std::vector<int>> EnumerateCliques(const PccGraph& graph, int p);

// YES iff the gadget graph has a perfect p-clique partition.
absl::StatusOr<bool> DecideX3c(const X3cInstance& instance,
                               const GadgetParams& params);

}  // namespace rcc

#endif  // RCC_PCC_H_
