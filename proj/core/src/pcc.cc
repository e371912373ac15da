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

#include "rcc/pcc.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <utility>

#include "absl/strings/str_cat.h"
#include "rcc/errors.h"

namespace rcc {

PccGraph::PccGraph(int n) : adjacency_(n) {}

absl::StatusOr<PccGraph> PccGraph::FromEdges(int n,
                                             const std::vector<Pair>& edges) {
  if (n < 0) return MakeError(ErrorCode::kInvalidArgument, "negative n");
  PccGraph g(n);
  for (const Pair& e : edges) {
    if (auto s = g.AddEdge(e.first, e.second); !s.ok()) return s;
  }
  return g;
}

absl::Status PccGraph::AddEdge(int x, int y) {
  if (x < 0 || y < 0 || x >= size() || y >= size()) {
    return MakeError(ErrorCode::kSchemaViolation,
                     absl::StrCat("edge (", x, ", ", y, ") out of range"));
  }
  if (x == y) {
    return MakeError(ErrorCode::kSchemaViolation,
                     absl::StrCat("self-loop on vertex ", x));
  }
  auto& ax = adjacency_[x];
  auto it = std::lower_bound(ax.begin(), ax.end(), y);
  if (it != ax.end() && *it == y) return absl::OkStatus();
  ax.insert(it, y);
  auto& ay = adjacency_[y];
  ay.insert(std::lower_bound(ay.begin(), ay.end(), x), x);
  ++num_edges_;
  return absl::OkStatus();
}

bool PccGraph::HasEdge(int x, int y) const {
  const auto& ax = adjacency_[x];
  return std::binary_search(ax.begin(), ax.end(), y);
}

std::vector<Pair> PccGraph::Edges() const {
  std::vector<Pair> out;
  out.reserve(num_edges_);
  for (int x = 0; x < size(); ++x) {
    for (int y : adjacency_[x]) {
      if (x < y) out.push_back(Pair{x, y});
    }
  }
  return out;
}

absl::StatusOr<CorrelationLoss> ComputeCorrelationLoss(
    const PccGraph& graph, const Clustering& clustering, double w1,
    double w2) {
  if (clustering.size() != graph.size()) {
    return MakeError(ErrorCode::kNotAPartition,
                     "clustering does not partition the vertex set");
  }
  CorrelationLoss loss;
  for (const auto& block : clustering.blocks()) {
    for (size_t i = 0; i < block.size(); ++i) {
      for (size_t j = i + 1; j < block.size(); ++j) {
        loss.negative_errors += graph.HasEdge(block[i], block[j]) ? 0 : 1;
      }
    }
  }
  for (const Pair& e : graph.Edges()) {
    loss.positive_errors += clustering.Together(e.first, e.second) ? 0 : 1;
  }
  loss.weighted = w1 * static_cast<double>(loss.negative_errors) +
                  w2 * static_cast<double>(loss.positive_errors);
  return loss;
}

absl::Status X3cInstance::Validate() const {
  if (q < 1) {
    return MakeError(ErrorCode::kInvalidArgument, "q must be at least 1");
  }
  for (const auto& s : subsets) {
    for (int e : s) {
      if (e < 0 || e >= universe_size()) {
        return MakeError(ErrorCode::kSchemaViolation,
                         absl::StrCat("subset element ", e,
                                      " outside the universe"));
      }
    }
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2]) {
      return MakeError(ErrorCode::kSchemaViolation,
                       "subset elements must be distinct");
    }
  }
  return absl::OkStatus();
}

absl::Status GadgetParams::Validate() const {
  if (p < 4) {
    return MakeError(ErrorCode::kInvalidArgument, "clique size p must be >= 4");
  }
  if (t < 2) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "chain length t must be >= 2");
  }
  return absl::OkStatus();
}

int64_t UnsharedAnchorVertexCount(const X3cInstance& instance,
                         const GadgetParams& params) {
  const int64_t p = params.p;
  const int64_t m = static_cast<int64_t>(instance.subsets.size());
  return m * (p * p * params.t + (p - 3)) + 3 * instance.q;
}

int64_t GadgetVertexCount(const X3cInstance& instance,
                          const GadgetParams& params) {
  const int64_t p = params.p;
  const int64_t m = static_cast<int64_t>(instance.subsets.size());
  return m * p * p * params.t + p * instance.q;
}

int64_t NominalEdgeCountPerGadget(const GadgetParams& params) {
  const int64_t p = params.p;
  const int64_t pairs = p * (p - 1) / 2;
  return p * params.t * (pairs + p - 1) + pairs;
}

absl::StatusOr<double> GadgetBeta(const GadgetParams& params) {
  if (params.t < 2) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "beta formula requires t >= 2");
  }
  if (params.p < 1) {
    return MakeError(ErrorCode::kInvalidArgument, "p must be positive");
  }
  const double p = params.p;
  const double t = params.t;
  return 1.0 / (1.0 + 2.0 / p + 1.0 / (p * t));
}

absl::StatusOr<Gadget> BuildGadget(const X3cInstance& instance,
                                   const GadgetParams& params) {
  if (auto s = instance.Validate(); !s.ok()) return s;
  if (auto s = params.Validate(); !s.ok()) return s;
  const int p = params.p;
  const int t = params.t;
  const int q = instance.q;
  const int m = static_cast<int>(instance.subsets.size());
  const int anchors_begin = 3 * q;
  const int gadgets_begin = anchors_begin + (p - 3) * q;
  const int per_gadget = p * p * t;
  const int n = gadgets_begin + m * per_gadget;

  auto anchor = [&](int pool, int j) { return anchors_begin + pool * q + j; };
  auto core = [&](int g, int c, int b, int k) {
    return gadgets_begin + g * per_gadget + c * p * t + b * p + k;
  };
  auto top = [&](int g, int c, int b) { return core(g, c, b, p - 1); };

  Gadget out;
  out.instance = instance;
  out.params = params;
  out.graph = PccGraph(n);
  auto edge = [&](int x, int y) { (void)out.graph.AddEdge(x, y); };

  for (int g = 0; g < m; ++g) {
    GadgetClusterings local;
    for (int c = 0; c < p; ++c) {
      for (int b = 0; b < t; ++b) {
        for (int k = 0; k < p - 1; ++k) {
          for (int k2 = k + 1; k2 < p - 1; ++k2) {
            edge(core(g, c, b, k), core(g, c, b, k2));
          }
          edge(core(g, c, b, k), top(g, c, b));
        }
        std::vector<int> bottoms;
        if (b > 0) {
          bottoms.push_back(top(g, c, b - 1));
        } else if (c < 3) {
          bottoms.push_back(instance.subsets[g][c]);
        } else {
          for (int j = 0; j < q; ++j) bottoms.push_back(anchor(c - 3, j));
        }
        for (int bottom : bottoms) {
          for (int k = 0; k < p - 1; ++k) edge(bottom, core(g, c, b, k));
        }
        std::vector<int> down = {bottoms.front()};
        std::vector<int> up;
        for (int k = 0; k < p - 1; ++k) {
          down.push_back(core(g, c, b, k));
          up.push_back(core(g, c, b, k));
        }
        up.push_back(top(g, c, b));
        std::sort(down.begin(), down.end());
        local.inclusion.push_back(std::move(down));
        local.exclusion.push_back(std::move(up));
      }
    }
    std::vector<int> tops;
    for (int c = 0; c < p; ++c) tops.push_back(top(g, c, t - 1));
    for (size_t i = 0; i < tops.size(); ++i) {
      for (size_t j = i + 1; j < tops.size(); ++j) edge(tops[i], tops[j]);
    }
    local.inclusion.push_back(std::move(tops));
    out.per_subset.push_back(std::move(local));
  }

  std::vector<int> labels(n);
  int next = 0;
  for (int v = 0; v < gadgets_begin; ++v) labels[v] = next++;
  for (const auto& local : out.per_subset) {
    for (const auto& block : local.exclusion) {
      for (int v : block) labels[v] = next;
      ++next;
    }
  }
  out.reference = *Clustering::FromLabels(labels);

  int64_t positive_edges = 0;
  for (const Pair& e : out.graph.Edges()) {
    positive_edges += out.reference.Together(e.first, e.second) ? 1 : 0;
  }
  // alpha: same-cluster pairs of the reference that are not edges.
  int64_t positives = 0;
  int64_t positives_beyond = 0;
  for (const auto& block : out.reference.blocks()) {
    for (size_t i = 0; i < block.size(); ++i) {
      for (size_t j = i + 1; j < block.size(); ++j) {
        ++positives;
        positives_beyond += out.graph.HasEdge(block[i], block[j]) ? 0 : 1;
      }
    }
  }
  out.alpha = positives == 0 ? 0.0
                             : static_cast<double>(positives_beyond) /
                                   static_cast<double>(positives);
  out.beta_measured = out.graph.num_edges() == 0
                          ? 0.0
                          : static_cast<double>(positive_edges) /
                                static_cast<double>(out.graph.num_edges());
  out.gadget_vertices = per_gadget;
  const int64_t pp = p;
  out.edges_per_gadget = NominalEdgeCountPerGadget(params) -
                         (pp - 3) * (pp - 1) + (pp - 3) * q * (pp - 1);
  return out;
}

absl::StatusOr<Clustering> SolvePccExhaustive(const PccGraph& graph,
                                              int max_cluster_size) {
  const int n = graph.size();
  if (n > 12) {
    return MakeError(ErrorCode::kTooLarge,
                     absl::StrCat("exhaustive solver limited to 12 vertices, "
                                  "got ",
                                  n));
  }
  if (max_cluster_size < 1) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "cluster size cap must be >= 1");
  }
  if (n == 0) return Clustering();

  std::vector<int> labels(n, 0);
  std::vector<int> block_size(n, 0);
  std::vector<int> best_labels;
  int64_t best = std::numeric_limits<int64_t>::max();

  // Pairs (u, v) with u < v are scored when v is placed.
  std::function<void(int, int, int64_t)> place = [&](int v, int blocks,
                                                     int64_t cost) {
    if (cost >= best) return;
    if (v == n) {
      best = cost;
      best_labels = labels;
      return;
    }
    for (int b = 0; b <= blocks && b < n; ++b) {
      if (block_size[b] >= max_cluster_size) continue;
      int64_t added = 0;
      for (int u = 0; u < v; ++u) {
        const bool edge = graph.HasEdge(u, v);
        const bool together = labels[u] == b;
        added += (together != edge) ? 1 : 0;
      }
      labels[v] = b;
      ++block_size[b];
      place(v + 1, std::max(blocks, b + 1), cost + added);
      --block_size[b];
    }
  };
  place(0, 0, 0);
  return Clustering::FromLabels(best_labels);
}

std::vector<std::vector<int>> EnumerateCliques(const PccGraph& graph, int p) {
  std::vector<std::vector<int>> out;
  if (p < 1) return out;
  std::vector<int> current;
  std::function<void(const std::vector<int>&)> extend =
      [&](const std::vector<int>& candidates) {
        if (static_cast<int>(current.size()) == p) {
          out.push_back(current);
          return;
        }
        for (size_t i = 0; i < candidates.size(); ++i) {
          const int v = candidates[i];
          std::vector<int> next;
          for (size_t j = i + 1; j < candidates.size(); ++j) {
            if (graph.HasEdge(v, candidates[j])) next.push_back(candidates[j]);
          }
          if (current.size() + 1 + next.size() < static_cast<size_t>(p)) {
            continue;
          }
          current.push_back(v);
          extend(next);
          current.pop_back();
        }
      };
  for (int v = 0; v < graph.size(); ++v) {
    std::vector<int> later;
    for (int u : graph.neighbors(v)) {
      if (u > v) later.push_back(u);
    }
    if (later.size() + 1 < static_cast<size_t>(p)) continue;
    current = {v};
    extend(later);
  }
  return out;
}

std::optional<Clustering> SolvePccCliqueCover(const PccGraph& graph, int p) {
  const int n = graph.size();
  if (p < 1 || n % p != 0) return std::nullopt;
  if (n == 0) return Clustering();
  const auto cliques = EnumerateCliques(graph, p);
  std::vector<std::vector<int>> containing(n);
  for (size_t c = 0; c < cliques.size(); ++c) {
    for (int v : cliques[c]) containing[v].push_back(static_cast<int>(c));
  }
  std::vector<char> covered(n, 0);
  std::vector<int> chosen;

  auto available = [&](int clique) {
    for (int v : cliques[clique]) {
      if (covered[v]) return false;
    }
    return true;
  };

  std::function<bool()> search = [&]() {
    int pivot = -1;
    int fewest = std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) {
      if (covered[v]) continue;
      int count = 0;
      for (int c : containing[v]) count += available(c) ? 1 : 0;
      if (count < fewest) {
        fewest = count;
        pivot = v;
        if (count <= 1) break;  // dead end or forced
      }
    }
    if (pivot == -1) return true;
    if (fewest == 0) return false;
    for (int c : containing[pivot]) {
      if (!available(c)) continue;
      for (int v : cliques[c]) covered[v] = 1;
      chosen.push_back(c);
      if (search()) return true;
      chosen.pop_back();
      for (int v : cliques[c]) covered[v] = 0;
    }
    return false;
  };
  if (!search()) return std::nullopt;

  std::vector<std::vector<int>> blocks;
  blocks.reserve(chosen.size());
  for (int c : chosen) blocks.push_back(cliques[c]);
  return *Clustering::FromBlocks(n, blocks);
}

absl::StatusOr<bool> DecideX3c(const X3cInstance& instance,
                               const GadgetParams& params) {
  auto gadget = BuildGadget(instance, params);
  if (!gadget.ok()) return gadget.status();
  return SolvePccCliqueCover(gadget->graph, params.p).has_value();
}

}  // namespace rcc
