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

#ifndef RCC_CLI_ORACLE_SERVER_H_
#define RCC_CLI_ORACLE_SERVER_H_

#include <memory>
#include <string>
#include <thread>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "rcc/oracle.h"

namespace httplib {
class Server;
}

namespace rcc::cli {

// Hosts the interactive-oracle API and, optionally, a static UI bundle:
//   GET  /api/next-query  -> {"pair": [..], "left": {..}, "right": {..}} or 204
//   POST /api/answer      <- {"pair": [..], "same": bool}
//   GET  /api/stats       -> {"answered": k, "pending": 0|1}
class OracleHttpServer {
 public:
  explicit OracleHttpServer(InteractiveOracle& oracle);
  ~OracleHttpServer();
  OracleHttpServer(const OracleHttpServer&) = delete;
  OracleHttpServer& operator=(const OracleHttpServer&) = delete;

  // Binds and starts serving on a background thread. Port 0 picks a free
  // port. Returns the bound port.
  absl::StatusOr<int> Start(const std::string& host, int port,
                            const std::string& ui_dir = "");
  void Stop();

 private:
  void Routes();

  InteractiveOracle& oracle_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace rcc::cli

#endif  // RCC_CLI_ORACLE_SERVER_H_
