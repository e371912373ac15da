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

#ifndef RCC_ERRORS_H_
#define RCC_ERRORS_H_

#include "absl/strings/string_view.h"

#include "absl/status/status.h"

namespace rcc {

// Stable, machine-readable error codes. Every failing status produced by the
// library carries one of these as a payload; the CLI emits it verbatim.
enum class ErrorCode {
  kUnknown,
  kInvalidArgument,
  kUnknownId,
  kSamePair,
  kFileNotFound,
  kSchemaViolation,
  kMissingGroundTruth,
  kNoPositivePairs,
  kNoPairsUnderThreshold,
  kDegenerateTruth,
  kDegenerateWeights,
  kNoNegativePairs,
  kEmptyIndex,
  kBudgetExhausted,
  kEmptySample,
  kEmptySupport,
  kNotAPartition,
  kInvalidFrontier,
  kMultiwayTree,
  kTooLarge,
  kSessionClosed,
  kTimeout,
  kStalePair,
};

absl::string_view ErrorCodeName(ErrorCode code);

// Builds a status with the canonical absl code matching `code` and attaches
// the stable code as a payload.
absl::Status MakeError(ErrorCode code, absl::string_view message);

// Recovers the stable code; falls back to a mapping of the canonical code for
// statuses that did not originate in this library.
ErrorCode GetErrorCode(const absl::Status& status);

}  // namespace rcc

#endif  // RCC_ERRORS_H_
