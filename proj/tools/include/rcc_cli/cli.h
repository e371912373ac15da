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

#ifndef RCC_CLI_CLI_H_
#define RCC_CLI_CLI_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace rcc::cli {

inline constexpr char kReportVersion[] = "1";
inline constexpr int kDefaultPort = 7341;

struct RunConfig {
  std::string subcommand;
  uint64_t seed = 0;

  // Inputs.
  std::string data;
  std::vector<std::string> classes;
  std::string distance = "normalized-edit";
  std::string distances;
  std::string report;

  // dedup / sample-stats.
  std::optional<double> lambda;
  double w1 = 1.0;
  double w2 = 1.0;
  double epsilon = 0.1;
  double delta = 0.1;
  double a = 1.0;
  double nu = 0.5;
  std::optional<int> vcdim;
  std::optional<double> gamma0;
  std::optional<int> m_plus;
  std::optional<int> m_minus;
  std::string oracle = "simulated";
  bool count_cached = false;
  int64_t attempt_cap = 1'000'000;

  // sample-stats.
  int runs = 200;
  int sample_size = 100;
  int draws = 100'000;
  bool sweep = false;

  // gadget.
  std::string x3c;
  int p = 4;
  int t = 2;
  std::string graph_out;
  bool decide = false;

  // vcdim-check.
  std::string kind = "flat";
  int64_t s = 1;
  bool witness = false;

  // Interactive oracle.
  int port = kDefaultPort;
  std::string host = "127.0.0.1";
  std::string ui_dir;
  std::string answer_log;
  double answer_timeout_s = 3600.0;
  // Called with the bound port once the oracle server is listening.
  std::function<void(int)> on_listening;
};

// Parses argv into a RunConfig. `DEDUP_SEED` is read when --seed is absent.
// Returns kInvalidArgument on usage errors; `help` is set when --help was
// requested and the usage text was written to `out`.
absl::StatusOr<RunConfig> ParseArgs(int argc, const char* const* argv,
                                    std::ostream& out, bool* help);

// Runs one subcommand. Reports go to config.report, or to `out` when unset.
// On failure writes {"error": {"code": ..., "message": ...}} to `err`.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Entry point shared by main() and tests.
int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

std::string ErrorJson(const absl::Status& status);

}  // namespace rcc::cli

#endif  // RCC_CLI_CLI_H_
