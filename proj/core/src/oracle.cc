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

#include "rcc/oracle.h"

#include <ctime>
#include <utility>

#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "rcc/errors.h"

namespace rcc {
namespace {

std::string NowIso8601() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

}  // namespace

absl::StatusOr<bool> OracleSession::Query(int x, int y) {
  if (x < 0 || y < 0 || x >= oracle_.size() || y >= oracle_.size()) {
    return MakeError(ErrorCode::kUnknownId,
                     absl::StrCat("element out of range: ", x, ", ", y));
  }
  if (x == y) {
    return MakeError(ErrorCode::kSamePair, "pair endpoints must differ");
  }
  const Pair key = Pair::Of(x, y);
  if (auto hit = Cached(key); hit.has_value()) {
    ++lookups_;
    if (options_.count_cached) ++query_count_;
    return *hit;
  }
  std::lock_guard<std::mutex> call_lock(call_mu_);
  // Another caller may have filled the slot while we waited.
  if (auto hit = Cached(key); hit.has_value()) {
    ++lookups_;
    if (options_.count_cached) ++query_count_;
    return *hit;
  }
  auto answer = oracle_.Answer(x, y);
  if (!answer.ok()) return answer.status();
  {
    std::unique_lock<std::shared_mutex> lock(cache_mu_);
    cache_.emplace(key, *answer);
  }
  ++query_count_;
  ++lookups_;
  return *answer;
}

int64_t OracleSession::query_count() const { return query_count_.load(); }

int64_t OracleSession::lookups() const { return lookups_.load(); }

std::optional<bool> OracleSession::Cached(const Pair& pair) const {
  std::shared_lock<std::shared_mutex> lock(cache_mu_);
  auto it = cache_.find(pair);
  if (it == cache_.end()) return std::nullopt;
  return it->second;
}

InteractiveOracle::InteractiveOracle(const Dataset& dataset, Options options)
    : dataset_(dataset), options_(std::move(options)) {}

absl::StatusOr<std::unique_ptr<InteractiveOracle>> InteractiveOracle::Create(
    const Dataset& dataset, Options options) {
  std::unique_ptr<InteractiveOracle> oracle(
      new InteractiveOracle(dataset, std::move(options)));
  if (oracle->options_.answer_log.has_value()) {
    if (auto status = oracle->LoadLog(); !status.ok()) return status;
    oracle->log_.open(*oracle->options_.answer_log, std::ios::app);
    if (!oracle->log_) {
      return MakeError(ErrorCode::kFileNotFound,
                       absl::StrCat("cannot open answer log ",
                                    oracle->options_.answer_log->string()));
    }
  }
  return oracle;
}

absl::Status InteractiveOracle::LoadLog() {
  std::ifstream in(*options_.answer_log);
  if (!in) return absl::OkStatus();  // Fresh session.
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto parsed = nlohmann::json::parse(line, nullptr, false);
    if (parsed.is_discarded() || !parsed.contains("pair") ||
        !parsed["pair"].is_array() || parsed["pair"].size() != 2 ||
        !parsed.contains("same") || !parsed["same"].is_boolean()) {
      return MakeError(ErrorCode::kSchemaViolation,
                       absl::StrCat("answer log line ", line_no,
                                    " is malformed"));
    }
    auto x = dataset_.IndexOf(parsed["pair"][0].get<std::string>());
    if (!x.ok()) return x.status();
    auto y = dataset_.IndexOf(parsed["pair"][1].get<std::string>());
    if (!y.ok()) return y.status();
    logged_[Pair::Of(*x, *y)] = parsed["same"].get<bool>();
  }
  return absl::OkStatus();
}

absl::Status InteractiveOracle::AppendLog(const Pair& pair, bool same) {
  if (!log_.is_open()) return absl::OkStatus();
  nlohmann::json entry = {
      {"pair", {dataset_.id(pair.first), dataset_.id(pair.second)}},
      {"same", same},
      {"ts", NowIso8601()}};
  log_ << entry.dump() << '\n';
  log_.flush();
  if (!log_) {
    return MakeError(ErrorCode::kUnknown, "failed to append to answer log");
  }
  return absl::OkStatus();
}

absl::StatusOr<bool> InteractiveOracle::Answer(int x, int y) {
  std::unique_lock<std::mutex> lock(mu_);
  if (auto it = logged_.find(Pair::Of(x, y)); it != logged_.end()) {
    return it->second;
  }
  if (closed_) {
    return MakeError(ErrorCode::kSessionClosed, "interactive session closed");
  }
  pending_ = std::make_pair(x, y);
  answer_.reset();
  cv_.notify_all();
  const bool done = cv_.wait_for(lock, options_.timeout, [this] {
    return answer_.has_value() || closed_;
  });
  pending_.reset();
  if (!done) {
    return MakeError(ErrorCode::kTimeout,
                     "no answer before the interactive timeout");
  }
  if (!answer_.has_value()) {
    return MakeError(ErrorCode::kSessionClosed,
                     "interactive session closed before answer");
  }
  const bool same = *answer_;
  answer_.reset();
  logged_[Pair::Of(x, y)] = same;
  if (auto status = AppendLog(Pair::Of(x, y), same); !status.ok()) {
    return status;
  }
  return same;
}

std::optional<std::pair<int, int>> InteractiveOracle::Pending() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (answer_.has_value()) return std::nullopt;
  return pending_;
}

absl::Status InteractiveOracle::SubmitAnswer(absl::string_view x_id,
                                             absl::string_view y_id,
                                             bool same) {
  auto x = dataset_.IndexOf(x_id);
  if (!x.ok()) return x.status();
  auto y = dataset_.IndexOf(y_id);
  if (!y.ok()) return y.status();
  std::lock_guard<std::mutex> lock(mu_);
  if (!pending_.has_value() || answer_.has_value() ||
      Pair::Of(pending_->first, pending_->second) != Pair::Of(*x, *y)) {
    return MakeError(ErrorCode::kStalePair,
                     "answer does not match the pending query");
  }
  answer_ = same;
  ++answered_;
  cv_.notify_all();
  return absl::OkStatus();
}

InteractiveOracle::Stats InteractiveOracle::stats() const {
  std::lock_guard<std::mutex> lock(mu_);
  return Stats{.answered = answered_,
               .pending = pending_.has_value() && !answer_.has_value() ? 1 : 0};
}

void InteractiveOracle::Close() {
  std::lock_guard<std::mutex> lock(mu_);
  closed_ = true;
  cv_.notify_all();
}

}  // namespace rcc
