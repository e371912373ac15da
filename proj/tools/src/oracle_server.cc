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

#include "rcc_cli/oracle_server.h"

#include <string>
#include <utility>

#include "absl/strings/str_cat.h"
#include "httplib.h"
#include "json.hpp"
#include "rcc/errors.h"

namespace rcc::cli {
namespace {

using nlohmann::json;

// The ground-truth label is never shown to the person answering.
json RecordView(const Record& record) {
  json view = {{"id", record.id}};
  if (record.text.has_value()) view["text"] = *record.text;
  if (!record.features.empty()) view["features"] = record.features;
  return view;
}

void SendError(httplib::Response& res, int http_status,
               const absl::Status& status) {
  json body = {{"error",
                {{"code", std::string(ErrorCodeName(GetErrorCode(status)))},
                 {"message", std::string(status.message())}}}};
  res.status = http_status;
  res.set_content(body.dump(), "application/json");
}

}  // namespace

OracleHttpServer::OracleHttpServer(InteractiveOracle& oracle)
    : oracle_(oracle), server_(std::make_unique<httplib::Server>()) {
  Routes();
}

OracleHttpServer::~OracleHttpServer() { Stop(); }

void OracleHttpServer::Routes() {
  server_->Get("/api/next-query", [this](const httplib::Request&,
                                         httplib::Response& res) {
    auto pending = oracle_.Pending();
    if (!pending.has_value()) {
      res.status = 204;
      return;
    }
    const Dataset& dataset = oracle_.dataset();
    json body = {
        {"pair", {dataset.id(pending->first), dataset.id(pending->second)}},
        {"left", RecordView(dataset.record(pending->first))},
        {"right", RecordView(dataset.record(pending->second))}};
    res.set_content(body.dump(), "application/json");
  });

  server_->Post("/api/answer", [this](const httplib::Request& req,
                                      httplib::Response& res) {
    json body = json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object() || !body.contains("pair") ||
        !body["pair"].is_array() || body["pair"].size() != 2 ||
        !body["pair"][0].is_string() || !body["pair"][1].is_string() ||
        !body.contains("same") || !body["same"].is_boolean()) {
      SendError(res, 400,
                MakeError(ErrorCode::kSchemaViolation,
                          "expected {\"pair\": [id, id], \"same\": bool}"));
      return;
    }
    const auto x = body["pair"][0].get<std::string>();
    const auto y = body["pair"][1].get<std::string>();
    absl::Status status = oracle_.SubmitAnswer(x, y, body["same"].get<bool>());
    if (!status.ok()) {
      SendError(res, GetErrorCode(status) == ErrorCode::kStalePair ? 409 : 400,
                status);
      return;
    }
    const auto stats = oracle_.stats();
    res.set_content(json{{"answered", stats.answered}}.dump(),
                    "application/json");
  });

  server_->Get("/api/stats",
               [this](const httplib::Request&, httplib::Response& res) {
                 const auto stats = oracle_.stats();
                 res.set_content(json{{"answered", stats.answered},
                                      {"pending", stats.pending}}
                                     .dump(),
                                 "application/json");
               });
}

absl::StatusOr<int> OracleHttpServer::Start(const std::string& host, int port,
                                            const std::string& ui_dir) {
  if (!ui_dir.empty() && !server_->set_mount_point("/", ui_dir)) {
    return MakeError(ErrorCode::kFileNotFound,
                     absl::StrCat("UI directory not found: ", ui_dir));
  }
  int bound = port;
  if (port == 0) {
    bound = server_->bind_to_any_port(host);
  } else if (!server_->bind_to_port(host, port)) {
    bound = -1;
  }
  if (bound < 0) {
    return MakeError(ErrorCode::kInvalidArgument,
                     absl::StrCat("cannot bind ", host, ":", port));
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

void OracleHttpServer::Stop() {
  if (thread_.joinable()) {
    server_->stop();
    thread_.join();
  }
}

}  // namespace rcc::cli
