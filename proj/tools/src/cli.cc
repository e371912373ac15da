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

#include "rcc_cli/cli.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "rcc/clustering_class.h"
#include "rcc/dataset.h"
#include "rcc/erm.h"
#include "rcc/errors.h"
#include "rcc/io.h"
#include "rcc/metrics.h"
#include "rcc/oracle.h"
#include "rcc/pcc.h"
#include "rcc/sampling.h"
#include "rcc/vcdim.h"
#include "rcc_cli/oracle_server.h"

namespace rcc::cli {
namespace {

using nlohmann::json;

#define RCC_ASSIGN_OR_RETURN_IMPL(var, lhs, expr) \
  auto var = (expr);                              \
  if (!var.ok()) return var.status();             \
  lhs = *std::move(var)
#define RCC_CONCAT_INNER(a, b) a##b
#define RCC_CONCAT(a, b) RCC_CONCAT_INNER(a, b)
#define RCC_ASSIGN_OR_RETURN(lhs, expr) \
  RCC_ASSIGN_OR_RETURN_IMPL(RCC_CONCAT(status_or_, __LINE__), lhs, expr)
#define RCC_RETURN_IF_ERROR(expr)              \
  do {                                         \
    if (absl::Status s = (expr); !s.ok()) return s; \
  } while (false)

absl::Status Invalid(absl::string_view message) {
  return MakeError(ErrorCode::kInvalidArgument, message);
}

json ClustersJson(const Clustering& clustering, const Dataset& dataset) {
  json clusters = json::array();
  for (const auto& block : clustering.blocks()) {
    json ids = json::array();
    for (int x : block) ids.push_back(dataset.id(x));
    clusters.push_back(std::move(ids));
  }
  return clusters;
}

json LossJson(const LossEstimate& loss) {
  return {{"e_hat", loss.e_hat},
          {"g_hat", loss.g_hat},
          {"l_hat", loss.l_hat},
          {"mu", loss.mu},
          {"separated_positives", loss.separated_positives},
          {"positives", loss.positives},
          {"coclustered_negatives", loss.coclustered_negatives},
          {"negatives", loss.negatives}};
}

const char* KindName(MemberKind kind) {
  return kind == MemberKind::kFlat ? "flat" : "tree";
}

absl::Status WriteReport(const RunConfig& config, const json& report,
                         std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (config.report.empty()) {
    out << text;
    return absl::OkStatus();
  }
  std::ofstream file(config.report, std::ios::binary | std::ios::trunc);
  if (!file) {
    return MakeError(ErrorCode::kFileNotFound,
                     absl::StrCat("cannot write report ", config.report));
  }
  file << text;
  return absl::OkStatus();
}

struct Inputs {
  Dataset dataset;
  DistanceModel model;
};

absl::StatusOr<Inputs> LoadInputs(const RunConfig& config) {
  if (config.data.empty()) return Invalid("--data is required");
  Inputs inputs;
  RCC_ASSIGN_OR_RETURN(inputs.dataset, LoadDataset(config.data));
  RCC_ASSIGN_OR_RETURN(DistanceKind kind, ParseDistanceKind(config.distance));
  if (kind == DistanceKind::kPrecomputed) {
    if (config.distances.empty()) {
      return Invalid("--distance precomputed needs --distances <csv>");
    }
    RCC_ASSIGN_OR_RETURN(inputs.model,
                         LoadDistanceCsv(config.distances, inputs.dataset));
  } else {
    RCC_ASSIGN_OR_RETURN(inputs.model,
                         DistanceModel::FromText(inputs.dataset, kind));
  }
  return inputs;
}

absl::Status CheckUnit(double value, absl::string_view name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    return Invalid(absl::StrCat("--", name, " must lie in [0, 1]"));
  }
  return absl::OkStatus();
}

absl::StatusOr<json> RunDedup(const RunConfig& config, std::ostream& err) {
  if (!config.lambda.has_value()) return Invalid("--lambda is required");
  RCC_RETURN_IF_ERROR(CheckUnit(*config.lambda, "lambda"));
  if (config.classes.empty()) return Invalid("--class is required");
  RCC_ASSIGN_OR_RETURN(Inputs inputs, LoadInputs(config));
  const Dataset& dataset = inputs.dataset;
  std::vector<std::filesystem::path> class_paths(config.classes.begin(),
                                                 config.classes.end());
  RCC_ASSIGN_OR_RETURN(ClusteringClass cls,
                       LoadClusteringClass(class_paths, dataset));

  const int s_flat = static_cast<int>(cls.flats().size());
  const int s_tree = static_cast<int>(cls.trees().size());
  int vcdim = 0;
  if (config.vcdim.has_value()) {
    vcdim = *config.vcdim;
  } else {
    int64_t bound = 1;
    if (s_flat > 0) {
      RCC_ASSIGN_OR_RETURN(int64_t g, GFlat(s_flat));
      bound += g;
    }
    if (s_tree > 0) {
      RCC_ASSIGN_OR_RETURN(int64_t g, GTree(s_tree));
      bound += g;
    }
    vcdim = static_cast<int>(bound);
  }
  RCC_ASSIGN_OR_RETURN(int64_t m_required, RequiredSampleSize(
                                               vcdim, config.epsilon,
                                               config.delta, config.a));
  const int m_plus =
      config.m_plus.value_or(static_cast<int>(m_required));
  const int m_minus =
      config.m_minus.value_or(static_cast<int>(m_required));

  std::unique_ptr<SameClusterOracle> oracle;
  InteractiveOracle* interactive = nullptr;
  if (config.oracle == "simulated") {
    if (!dataset.has_ground_truth()) {
      return MakeError(ErrorCode::kMissingGroundTruth,
                       "--oracle simulated needs cluster labels in --data");
    }
    oracle = std::make_unique<SimulatedOracle>(*dataset.ground_truth());
  } else if (config.oracle == "threshold") {
    oracle = std::make_unique<ThresholdOracle>(inputs.model, *config.lambda);
  } else if (config.oracle == "interactive") {
    InteractiveOracle::Options options;
    options.timeout = std::chrono::milliseconds(
        static_cast<int64_t>(config.answer_timeout_s * 1000.0));
    if (!config.answer_log.empty()) options.answer_log = config.answer_log;
    RCC_ASSIGN_OR_RETURN(auto created,
                         InteractiveOracle::Create(dataset, options));
    interactive = created.get();
    oracle = std::move(created);
  } else {
    return Invalid(absl::StrCat("unknown --oracle '", config.oracle, "'"));
  }

  std::unique_ptr<OracleHttpServer> server;
  if (interactive != nullptr) {
    server = std::make_unique<OracleHttpServer>(*interactive);
    RCC_ASSIGN_OR_RETURN(int port,
                         server->Start(config.host, config.port, config.ui_dir));
    err << json{{"event", "listening"},
                {"url", absl::StrCat("http://", config.host, ":", port)}}
               .dump()
        << std::endl;
    if (config.on_listening) config.on_listening(port);
  }

  OracleSession session(*oracle,
                        OracleSession::Options{.count_cached =
                                                   config.count_cached});
  Rng rng(config.seed);
  const SamplerOptions sampler{.attempt_cap = config.attempt_cap};
  const NeighborIndex index = NeighborIndex::Build(inputs.model, *config.lambda);

  auto collected = [&]() -> absl::StatusOr<std::pair<PairSample, PairSample>> {
    RCC_ASSIGN_OR_RETURN(PairSample s_minus,
                         CollectNegative(dataset, session, rng, m_minus,
                                         sampler));
    RCC_ASSIGN_OR_RETURN(PairSample s_plus,
                         CollectPositive(index, session, rng, m_plus, sampler));
    return std::make_pair(std::move(s_plus), std::move(s_minus));
  }();
  if (interactive != nullptr) {
    interactive->Close();
    server->Stop();
  }
  if (!collected.ok()) return collected.status();
  const PairSample& s_plus = collected->first;
  const PairSample& s_minus = collected->second;

  const double gamma0_hat = s_minus.RejectionRate();
  const double beta_hat = 1.0 - s_plus.RejectionRate();
  const double gamma0_for_mu = config.gamma0.value_or(gamma0_hat);
  RCC_RETURN_IF_ERROR(CheckUnit(gamma0_for_mu, "gamma0"));
  RCC_ASSIGN_OR_RETURN(double mu,
                       MuFromWeights(config.w1, config.w2, gamma0_for_mu));
  RCC_ASSIGN_OR_RETURN(ErmResult result, Erm(cls, s_plus, s_minus, mu));

  json report;
  report["version"] = kReportVersion;
  report["command"] = "dedup";
  report["config"] = {{"seed", config.seed},
                      {"lambda", *config.lambda},
                      {"w1", config.w1},
                      {"w2", config.w2},
                      {"epsilon", config.epsilon},
                      {"delta", config.delta},
                      {"a", config.a},
                      {"nu", config.nu},
                      {"oracle", config.oracle},
                      {"distance", config.distance},
                      {"count_cached", config.count_cached},
                      {"records", dataset.size()},
                      {"class", {{"flats", s_flat}, {"trees", s_tree}}}};
  report["vcdim"] = {{"value", vcdim},
                     {"source", config.vcdim.has_value() ? "flag" : "bound"}};

  const MemberEvaluation& chosen = result.chosen;
  json chosen_json = {{"kind", KindName(chosen.kind)},
                      {"index", chosen.index},
                      {"clusters", ClustersJson(chosen.clustering, dataset)},
                      {"num_clusters", chosen.clustering.num_clusters()}};
  if (chosen.kind == MemberKind::kTree) chosen_json["frontier"] = chosen.frontier;
  report["chosen"] = std::move(chosen_json);
  report["loss_estimate"] = LossJson(chosen.loss);
  json evaluations = json::array();
  for (const auto& e : result.evaluations) {
    evaluations.push_back({{"kind", KindName(e.kind)},
                           {"index", e.index},
                           {"l_hat", e.loss.l_hat},
                           {"e_hat", e.loss.e_hat},
                           {"g_hat", e.loss.g_hat}});
  }
  report["evaluations"] = std::move(evaluations);
  report["mu"] = {{"value", mu},
                  {"gamma0", gamma0_for_mu},
                  {"gamma0_source",
                   config.gamma0.has_value() ? "flag" : "estimated"}};
  report["samples"] = {{"m_plus", result.m_plus},
                       {"m_minus", result.m_minus},
                       {"queries_spent", result.queries_spent},
                       {"query_count", session.query_count()},
                       {"lookups", session.lookups()},
                       {"gamma0_hat", gamma0_hat},
                       {"beta_hat", beta_hat}};

  double beta_for_bound = beta_hat;
  double gamma_for_bound = gamma0_hat;
  std::string bound_source = "estimated";
  if (dataset.has_ground_truth()) {
    const Clustering& truth = *dataset.ground_truth();
    json exact;
    const double gamma0 = Gamma0Of(truth);
    exact["gamma0"] = gamma0;
    auto info = ComputeAlphaBeta(dataset, inputs.model, *config.lambda);
    if (info.ok()) {
      exact["alpha"] = info->alpha;
      exact["beta"] = info->beta;
      beta_for_bound = info->beta;
      gamma_for_bound = gamma0;
      bound_source = "exact";
    }
    auto loss = NormalizedLossExact(chosen.clustering, truth, mu);
    if (loss.ok()) {
      exact["loss"] = *loss;
      auto minimum = ExactClassMinimum(cls, truth, mu);
      if (minimum.ok()) exact["class_minimum"] = *minimum;
    }
    report["exact"] = std::move(exact);
  }
  json budget = {{"nu", config.nu},
                 {"beta", beta_for_bound},
                 {"gamma", gamma_for_bound},
                 {"source", bound_source}};
  auto bound = QueryBudgetBound(result.m_plus, result.m_minus, beta_for_bound,
                                gamma_for_bound, config.nu);
  if (bound.ok()) {
    budget["bound"] = bound->bound;
    budget["failure_probability"] = bound->failure_probability;
    budget["within_bound"] =
        static_cast<double>(result.queries_spent) <= bound->bound;
  } else {
    budget["bound"] = nullptr;
    budget["unavailable"] = std::string(bound.status().message());
  }
  report["query_budget"] = std::move(budget);
  return report;
}

absl::StatusOr<json> RunSampleStats(const RunConfig& config) {
  if (!config.lambda.has_value()) return Invalid("--lambda is required");
  RCC_RETURN_IF_ERROR(CheckUnit(*config.lambda, "lambda"));
  if (config.runs < 1 || config.sample_size < 1 || config.draws < 1) {
    return Invalid("--runs, --m and --draws must be at least 1");
  }
  RCC_ASSIGN_OR_RETURN(Inputs inputs, LoadInputs(config));
  const Dataset& dataset = inputs.dataset;
  if (!dataset.has_ground_truth()) {
    return MakeError(ErrorCode::kMissingGroundTruth,
                     "sample-stats needs cluster labels in --data");
  }
  const Clustering& truth = *dataset.ground_truth();
  RCC_ASSIGN_OR_RETURN(InformativenessReport info,
                       ComputeAlphaBeta(dataset, inputs.model, *config.lambda));
  const NeighborIndex index = NeighborIndex::Build(inputs.model, *config.lambda);
  const SamplerOptions sampler{.attempt_cap = config.attempt_cap};
  SimulatedOracle oracle(truth);
  const OracleSession::Options strict{.count_cached = config.count_cached};

  json report;
  report["version"] = kReportVersion;
  report["command"] = "sample-stats";
  report["config"] = {{"seed", config.seed},
                      {"lambda", *config.lambda},
                      {"runs", config.runs},
                      {"m", config.sample_size},
                      {"draws", config.draws},
                      {"distance", config.distance},
                      {"count_cached", config.count_cached}};
  report["alpha"] = info.alpha;
  report["beta"] = info.beta;
  report["gamma0"] = info.gamma0;

  // Distribution checks: one long run of each sampler.
  Rng rng(config.seed);
  {
    OracleSession session(oracle, strict);
    RCC_ASSIGN_OR_RETURN(PairSample neg, CollectNegative(dataset, session, rng,
                                                         config.draws, sampler));
    RCC_ASSIGN_OR_RETURN(PairDistribution exact,
                         ExactReferenceDistribution(ReferenceKind::kNegative,
                                                    dataset));
    report["tv_negative"] =
        TotalVariation(PairDistribution::Empirical(neg.pairs), exact);
  }
  {
    OracleSession session(oracle, strict);
    RCC_ASSIGN_OR_RETURN(PairSample pos, CollectPositive(index, session, rng,
                                                         config.draws, sampler));
    RCC_ASSIGN_OR_RETURN(
        PairDistribution k_plus,
        ExactReferenceDistribution(ReferenceKind::kKPlusUniform, dataset,
                                   &index));
    RCC_ASSIGN_OR_RETURN(PairDistribution p_plus,
                         ExactReferenceDistribution(ReferenceKind::kPositive,
                                                    dataset));
    report["tv_positive"] =
        TotalVariation(PairDistribution::Empirical(pos.pairs), k_plus);
    report["tv_kplus_vs_pplus"] = TotalVariation(k_plus, p_plus);
    report["kplus_tv_bound"] = 2.0 * info.alpha;
  }

  // Query-cost checks: `runs` fresh sessions of `m` draws each, counting
  // every oracle lookup a draw makes.
  auto cost = [&](bool positive) -> absl::StatusOr<json> {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int r = 0; r < config.runs; ++r) {
      OracleSession session(oracle, strict);
      absl::StatusOr<PairSample> sample =
          positive ? CollectPositive(index, session, rng, config.sample_size,
                                     sampler)
                   : CollectNegative(dataset, session, rng, config.sample_size,
                                     sampler);
      if (!sample.ok()) return sample.status();
      const double mean = static_cast<double>(sample->total_attempts()) /
                          static_cast<double>(config.sample_size);
      sum += mean;
      sum_sq += mean * mean;
    }
    const double runs = static_cast<double>(config.runs);
    const double mean = sum / runs;
    const double var =
        config.runs > 1 ? (sum_sq - runs * mean * mean) / (runs - 1.0) : 0.0;
    return json{{"mean_queries_per_pair", mean},
                {"stderr", std::sqrt(std::max(var, 0.0) / runs)}};
  };
  RCC_ASSIGN_OR_RETURN(json negative, cost(false));
  negative["bound"] = 1.0 / (1.0 - info.gamma0);
  RCC_ASSIGN_OR_RETURN(json positive, cost(true));
  positive["bound"] = 1.0 / info.beta;
  report["negative_queries"] = std::move(negative);
  report["positive_queries"] = std::move(positive);

  if (config.sweep) {
    RCC_ASSIGN_OR_RETURN(std::vector<SweepPoint> points,
                         SweepLambda(dataset, inputs.model));
    json sweep = json::array();
    for (const auto& point : points) {
      sweep.push_back(
          {{"lambda", point.lambda},
           {"alpha", point.alpha.has_value() ? json(*point.alpha) : json()},
           {"beta", point.beta.has_value() ? json(*point.beta) : json()}});
    }
    report["sweep"] = std::move(sweep);
  }
  return report;
}

json BlocksJson(const std::vector<std::vector<int>>& blocks) {
  json out = json::array();
  for (const auto& block : blocks) out.push_back(block);
  return out;
}

absl::StatusOr<json> RunGadget(const RunConfig& config) {
  if (config.x3c.empty()) return Invalid("--x3c is required");
  std::ifstream in(config.x3c);
  if (!in) {
    return MakeError(ErrorCode::kFileNotFound,
                     absl::StrCat("cannot open ", config.x3c));
  }
  RCC_ASSIGN_OR_RETURN(X3cInstance instance, ParseX3c(in));
  const GadgetParams params{.p = config.p, .t = config.t};
  RCC_ASSIGN_OR_RETURN(Gadget gadget, BuildGadget(instance, params));
  RCC_ASSIGN_OR_RETURN(double beta, GadgetBeta(params));

  json report;
  report["version"] = kReportVersion;
  report["command"] = "gadget";
  report["config"] = {{"p", params.p},
                      {"t", params.t},
                      {"q", instance.q},
                      {"subsets", instance.subsets.size()}};
  const int64_t m = static_cast<int64_t>(instance.subsets.size());
  report["stats"] = {
      {"alpha", gadget.alpha},
      {"beta", beta},
      {"beta_measured", gadget.beta_measured},
      {"vertices", gadget.graph.size()},
      {"edges", gadget.graph.num_edges()},
      {"edges_per_gadget", gadget.edges_per_gadget},
      {"vertices_per_gadget", gadget.gadget_vertices},
      {"unshared_anchor_vertices", UnsharedAnchorVertexCount(instance, params)},
      {"nominal_edges_per_gadget", NominalEdgeCountPerGadget(params)},
      {"nominal_edges_total", m * NominalEdgeCountPerGadget(params)}};
  json canonical = json::array();
  for (size_t i = 0; i < gadget.per_subset.size(); ++i) {
    const auto& c = gadget.per_subset[i];
    canonical.push_back({{"subset", i},
                         {"inclusion", BlocksJson(c.inclusion)},
                         {"exclusion", BlocksJson(c.exclusion)}});
  }
  report["canonical_clusterings"] = std::move(canonical);
  if (config.decide) {
    auto cover = SolvePccCliqueCover(gadget.graph, params.p);
    report["decision"] = cover.has_value() ? "YES" : "NO";
  }
  if (!config.graph_out.empty()) {
    std::ofstream out(config.graph_out, std::ios::binary | std::ios::trunc);
    if (!out) {
      return MakeError(ErrorCode::kFileNotFound,
                       absl::StrCat("cannot write ", config.graph_out));
    }
    WriteGraph(gadget.graph, out);
    report["graph_file"] = config.graph_out;
  } else {
    std::ostringstream graph;
    WriteGraph(gadget.graph, graph);
    report["graph"] = graph.str();
  }
  return report;
}

absl::StatusOr<json> RunVcdimCheck(const RunConfig& config) {
  RCC_ASSIGN_OR_RETURN(ClassKind kind, ParseClassKind(config.kind));
  RCC_ASSIGN_OR_RETURN(VcReport vc, BoundFor(kind, config.s));
  json report;
  report["version"] = kReportVersion;
  report["command"] = "vcdim-check";
  report["kind"] = config.kind;
  report["s"] = vc.s;
  report["bound"] = vc.bound;
  if (!config.classes.empty()) {
    if (config.data.empty()) return Invalid("--class needs --data");
    RCC_ASSIGN_OR_RETURN(Dataset dataset, LoadDataset(config.data));
    std::vector<std::filesystem::path> paths(config.classes.begin(),
                                             config.classes.end());
    RCC_ASSIGN_OR_RETURN(ClusteringClass cls,
                         LoadClusteringClass(paths, dataset));
    RCC_ASSIGN_OR_RETURN(std::vector<Pair> witness, LargestShatteredSet(cls));
    json pairs = json::array();
    for (const Pair& p : witness) {
      pairs.push_back({dataset.id(p.first), dataset.id(p.second)});
    }
    report["shatter_witness"] = std::move(pairs);
    report["largest_shattered"] = witness.size();
    report["within_bound"] = static_cast<int64_t>(witness.size()) <= vc.bound;
  }
  return report;
}

}  // namespace

std::string ErrorJson(const absl::Status& status) {
  return json{{"error",
               {{"code", std::string(ErrorCodeName(GetErrorCode(status)))},
                {"message", std::string(status.message())}}}}
      .dump();
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  absl::StatusOr<json> report;
  if (config.subcommand == "dedup" || config.subcommand == "serve") {
    RunConfig effective = config;
    if (config.subcommand == "serve") effective.oracle = "interactive";
    report = RunDedup(effective, err);
  } else if (config.subcommand == "sample-stats") {
    report = RunSampleStats(config);
  } else if (config.subcommand == "gadget") {
    report = RunGadget(config);
  } else if (config.subcommand == "vcdim-check") {
    report = RunVcdimCheck(config);
  } else {
    report = Invalid(absl::StrCat("unknown subcommand '", config.subcommand,
                                  "'"));
  }
  absl::Status status =
      report.ok() ? WriteReport(config, *report, out) : report.status();
  if (!status.ok()) {
    err << ErrorJson(status) << std::endl;
    return 1;
  }
  return 0;
}

absl::StatusOr<RunConfig> ParseArgs(int argc, const char* const* argv,
                                    std::ostream& out, bool* help) {
  *help = false;
  RunConfig config;
  CLI::App app{"Restricted correlation clustering for record de-duplication",
               "rcc"};
  app.require_subcommand(1);
  std::optional<uint64_t> seed;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "RNG seed (falls back to DEDUP_SEED)");
    sub->add_option("--report", config.report, "Report path (default stdout)");
  };
  auto inputs = [&](CLI::App* sub) {
    sub->add_option("--data", config.data, "Dataset (JSON lines)");
    sub->add_option("--distance", config.distance,
                    "normalized-edit | token-jaccard | precomputed");
    sub->add_option("--distances", config.distances,
                    "CSV of precomputed distances");
    sub->add_option("--lambda", config.lambda, "Distance threshold");
    sub->add_option("--attempt-cap", config.attempt_cap,
                    "Max draws per rejection loop");
    sub->add_flag("--count-cached", config.count_cached,
                  "Count cached repeats as queries");
  };
  auto dedup_options = [&](CLI::App* sub) {
    common(sub);
    inputs(sub);
    sub->add_option("--class", config.classes,
                    "Class members: files and/or directories")
        ->expected(1, -1);
    sub->add_option("--w1", config.w1, "Weight of co-clustered negatives");
    sub->add_option("--w2", config.w2, "Weight of separated positives");
    sub->add_option("--epsilon", config.epsilon, "Accuracy");
    sub->add_option("--delta", config.delta, "Failure probability");
    sub->add_option("--a", config.a, "Sample-size constant");
    sub->add_option("--nu", config.nu, "Query-budget slack");
    sub->add_option("--vcdim", config.vcdim, "Override the class VC bound");
    sub->add_option("--gamma0", config.gamma0,
                    "Known positive-pair fraction for mu");
    sub->add_option("--m-plus", config.m_plus, "Override positive sample size");
    sub->add_option("--m-minus", config.m_minus,
                    "Override negative sample size");
    sub->add_option("--port", config.port, "Oracle server port");
    sub->add_option("--host", config.host, "Oracle server address");
    sub->add_option("--ui-dir", config.ui_dir, "Static UI bundle to serve");
    sub->add_option("--answer-log", config.answer_log,
                    "Append-only log of human answers");
    sub->add_option("--answer-timeout", config.answer_timeout_s,
                    "Seconds to wait for each human answer");
  };

  auto* dedup = app.add_subcommand("dedup", "Select a clustering by ERM");
  dedup_options(dedup);
  dedup->add_option("--oracle", config.oracle,
                    "simulated | interactive | threshold");
  auto* serve = app.add_subcommand(
      "serve", "Interactive dedup with the oracle UI on one port");
  dedup_options(serve);

  auto* stats = app.add_subcommand("sample-stats", "Sampler diagnostics");
  common(stats);
  inputs(stats);
  stats->add_option("--runs", config.runs, "Independent query-cost runs");
  stats->add_option("--m", config.sample_size, "Pairs per run");
  stats->add_option("--draws", config.draws, "Draws for the TV checks");
  stats->add_flag("--sweep", config.sweep, "Report alpha/beta over 20 lambdas");

  auto* gadget = app.add_subcommand("gadget", "Build the X3C gadget graph");
  common(gadget);
  gadget->add_option("--x3c", config.x3c, "X3C instance file");
  gadget->add_option("--p", config.p, "Clique size");
  gadget->add_option("--t", config.t, "Blocks per column");
  gadget->add_option("--graph", config.graph_out, "Write the graph here");
  gadget->add_flag("--decide", config.decide,
                   "Decide the instance by clique-cover search");

  auto* vc = app.add_subcommand("vcdim-check", "VC-dimension bounds");
  common(vc);
  vc->add_option("--kind", config.kind, "flat | tree");
  vc->add_option("--s", config.s, "Class size");
  vc->add_option("--data", config.data, "Dataset for a shatter witness");
  vc->add_option("--class", config.classes, "Class members for the witness")
      ->expected(1, -1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    *help = true;
    return config;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    *help = true;
    return config;
  } catch (const CLI::ParseError& e) {
    return Invalid(e.what());
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  if (seed.has_value()) {
    config.seed = *seed;
  } else if (const char* env = std::getenv("DEDUP_SEED"); env != nullptr) {
    if (!absl::SimpleAtoi(env, &config.seed)) {
      return Invalid(absl::StrCat("DEDUP_SEED is not an integer: ", env));
    }
  }
  return config;
}

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  bool help = false;
  auto config = ParseArgs(argc, argv, out, &help);
  if (!config.ok()) {
    err << ErrorJson(config.status()) << std::endl;
    return 2;
  }
  if (help) return 0;
  return Run(*config, out, err);
}

}  // namespace rcc::cli
