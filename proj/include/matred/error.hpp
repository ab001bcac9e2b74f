// Copyright 2026 The Authors.
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

#ifndef MATRED_ERROR_HPP_
#define MATRED_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace matred {

enum class ErrorCode {
  // core
  kGroundSetTooLarge,
  kLoopPresent,
  kEmptyTruncation,
  kInvalidArgument,
  // zoo
  kInvalidPartition,
  kSelfLoopPresent,
  kElementOutsideT,
  kInvalidFamily,
  kNotLaminar,
  kUnsupportedOrder,
  // reducers
  kPresentationNotReduced,
  kRankNotTwo,
  kRankNotThree,
  kSinglePartitionClass,
  kBoundViolated,
  kCutBoundExceeded,
  // gammoid
  kPresentationMismatch,
  kTightSetMeetsS,
  kNoB2Forest,
  kNoLargeComponent,
  kNoReachableSmall,
  kIterationCapExceeded,
  kInvariantBreach,
  // verifier
  kNotGallai,
  kLineWithThreeColors,
  kTooLarge,
  kSearchSpaceTooLarge,
  // cli
  kParseError,
  kKindMismatch,
  kGroundSetMismatch,
  kUnsupportedParameter,
};

// Module-qualified name, e.g. "core.GroundSetTooLarge".
inline const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kGroundSetTooLarge: return "core.GroundSetTooLarge";
    case ErrorCode::kLoopPresent: return "core.LoopPresent";
    case ErrorCode::kEmptyTruncation: return "core.EmptyTruncation";
    case ErrorCode::kInvalidArgument: return "core.InvalidArgument";
    case ErrorCode::kInvalidPartition: return "zoo.InvalidPartition";
    case ErrorCode::kSelfLoopPresent: return "zoo.SelfLoopPresent";
    case ErrorCode::kElementOutsideT: return "zoo.ElementOutsideT";
    case ErrorCode::kInvalidFamily: return "zoo.InvalidFamily";
    case ErrorCode::kNotLaminar: return "zoo.NotLaminar";
    case ErrorCode::kUnsupportedOrder: return "zoo.UnsupportedOrder";
    case ErrorCode::kPresentationNotReduced: return "reducers.PresentationNotReduced";
    case ErrorCode::kRankNotTwo: return "reducers.RankNotTwo";
    case ErrorCode::kRankNotThree: return "reducers.RankNotThree";
    case ErrorCode::kSinglePartitionClass: return "reducers.SinglePartitionClass";
    case ErrorCode::kBoundViolated: return "reducers.BoundViolated";
    case ErrorCode::kCutBoundExceeded: return "reducers.CutBoundExceeded";
    case ErrorCode::kPresentationMismatch: return "gammoid.PresentationMismatch";
    case ErrorCode::kTightSetMeetsS: return "gammoid.TightSetMeetsS";
    case ErrorCode::kNoB2Forest: return "gammoid.NoB2Forest";
    case ErrorCode::kNoLargeComponent: return "gammoid.NoLargeComponent";
    case ErrorCode::kNoReachableSmall: return "gammoid.NoReachableSmall";
    case ErrorCode::kIterationCapExceeded: return "gammoid.IterationCapExceeded";
    case ErrorCode::kInvariantBreach: return "gammoid.InvariantBreach";
    case ErrorCode::kNotGallai: return "verifier.NotGallai";
    case ErrorCode::kLineWithThreeColors: return "verifier.LineWithThreeColors";
    case ErrorCode::kTooLarge: return "verifier.TooLarge";
    case ErrorCode::kSearchSpaceTooLarge: return "verifier.SearchSpaceTooLarge";
    case ErrorCode::kParseError: return "cli.ParseError";
    case ErrorCode::kKindMismatch: return "cli.KindMismatch";
    case ErrorCode::kGroundSetMismatch: return "cli.GroundSetMismatch";
    case ErrorCode::kUnsupportedParameter: return "cli.UnsupportedParameter";
  }
  return "unknown";
}

// True for errors caused by exhausting a search or iteration budget.
inline bool IsResourceError(ErrorCode code) {
  return code == ErrorCode::kGroundSetTooLarge ||
         code == ErrorCode::kIterationCapExceeded ||
         code == ErrorCode::kTooLarge ||
         code == ErrorCode::kSearchSpaceTooLarge;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace matred

#endif  // MATRED_ERROR_HPP_
