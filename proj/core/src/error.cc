// Copyright 2026 The ohedge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ohedge/error.h"

namespace ohedge {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::kInvalidDelta: return "InvalidDelta";
    case ErrorCode::kTooFewActions: return "TooFewActions";
    case ErrorCode::kInvalidStrategy: return "InvalidStrategy";
    case ErrorCode::kNonFiniteWeight: return "NonFiniteWeight";
    case ErrorCode::kUtilityOutOfRange: return "UtilityOutOfRange";
    case ErrorCode::kOutOfDomain: return "OutOfDomain";
    case ErrorCode::kZeroRate: return "ZeroRate";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kDegenerateGame: return "DegenerateGame";
    case ErrorCode::kMissingHorizon: return "MissingHorizon";
    case ErrorCode::kInvalidGamma: return "InvalidGamma";
    case ErrorCode::kInvalidArgs: return "InvalidArgs";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
      code_(code) {}

void Fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ohedge
