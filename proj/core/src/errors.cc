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

#include "rcc/errors.h"

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "absl/strings/cord.h"

namespace rcc {
namespace {

constexpr absl::string_view kPayloadUrl = "type.rcc/error-code";

constexpr std::array<std::pair<ErrorCode, absl::string_view>, 23> kNames = {{
    {ErrorCode::kUnknown, "unknown"},
    {ErrorCode::kInvalidArgument, "invalid_argument"},
    {ErrorCode::kUnknownId, "unknown_id"},
    {ErrorCode::kSamePair, "same_pair"},
    {ErrorCode::kFileNotFound, "file_not_found"},
    {ErrorCode::kSchemaViolation, "schema_violation"},
    {ErrorCode::kMissingGroundTruth, "missing_ground_truth"},
    {ErrorCode::kNoPositivePairs, "no_positive_pairs"},
    {ErrorCode::kNoPairsUnderThreshold, "no_pairs_under_threshold"},
    {ErrorCode::kDegenerateTruth, "degenerate_truth"},
    {ErrorCode::kDegenerateWeights, "degenerate_weights"},
    {ErrorCode::kNoNegativePairs, "no_negative_pairs"},
    {ErrorCode::kEmptyIndex, "empty_index"},
    {ErrorCode::kBudgetExhausted, "budget_exhausted"},
    {ErrorCode::kEmptySample, "empty_sample"},
    {ErrorCode::kEmptySupport, "empty_support"},
    {ErrorCode::kNotAPartition, "not_a_partition"},
    {ErrorCode::kInvalidFrontier, "invalid_frontier"},
    {ErrorCode::kMultiwayTree, "multiway_tree"},
    {ErrorCode::kTooLarge, "too_large"},
    {ErrorCode::kSessionClosed, "session_closed"},
    {ErrorCode::kTimeout, "timeout"},
    {ErrorCode::kStalePair, "stale_pair"},
}};

absl::StatusCode CanonicalCode(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknown:
      return absl::StatusCode::kUnknown;
    case ErrorCode::kFileNotFound:
      return absl::StatusCode::kNotFound;
    case ErrorCode::kBudgetExhausted:
      return absl::StatusCode::kResourceExhausted;
    case ErrorCode::kTimeout:
      return absl::StatusCode::kDeadlineExceeded;
    case ErrorCode::kSessionClosed:
      return absl::StatusCode::kCancelled;
    case ErrorCode::kMissingGroundTruth:
    case ErrorCode::kNoPositivePairs:
    case ErrorCode::kNoPairsUnderThreshold:
    case ErrorCode::kDegenerateTruth:
    case ErrorCode::kDegenerateWeights:
    case ErrorCode::kNoNegativePairs:
    case ErrorCode::kEmptyIndex:
    case ErrorCode::kEmptySupport:
    case ErrorCode::kStalePair:
      return absl::StatusCode::kFailedPrecondition;
    case ErrorCode::kTooLarge:
      return absl::StatusCode::kOutOfRange;
    default:
      return absl::StatusCode::kInvalidArgument;
  }
}

std::optional<ErrorCode> FromName(absl::string_view name) {
  for (const auto& [code, n] : kNames) {
    if (n == name) return code;
  }
  return std::nullopt;
}

}  // namespace

absl::string_view ErrorCodeName(ErrorCode code) {
  for (const auto& [c, name] : kNames) {
    if (c == code) return name;
  }
  return "unknown";
}

absl::Status MakeError(ErrorCode code, absl::string_view message) {
  absl::Status status(CanonicalCode(code), message);
  status.SetPayload(kPayloadUrl, absl::Cord(ErrorCodeName(code)));
  return status;
}

ErrorCode GetErrorCode(const absl::Status& status) {
  if (auto payload = status.GetPayload(kPayloadUrl); payload.has_value()) {
    if (auto code = FromName(std::string(*payload)); code.has_value()) {
      return *code;
    }
  }
  switch (status.code()) {
    case absl::StatusCode::kNotFound:
      return ErrorCode::kFileNotFound;
    case absl::StatusCode::kResourceExhausted:
      return ErrorCode::kBudgetExhausted;
    case absl::StatusCode::kDeadlineExceeded:
      return ErrorCode::kTimeout;
    case absl::StatusCode::kInvalidArgument:
      return ErrorCode::kInvalidArgument;
    default:
      return ErrorCode::kUnknown;
  }
}

}  // namespace rcc
