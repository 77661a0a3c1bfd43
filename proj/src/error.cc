// Copyright 2026 The qreading Authors
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

#include "qreading/error.h"

namespace qreading {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroState:
            return "ZeroState";
        case ErrorCode::NotUnitary:
            return "NotUnitary";
        case ErrorCode::NotUnitDeterminant:
            return "NotUnitDeterminant";
        case ErrorCode::InvalidOverlap:
            return "InvalidOverlap";
        case ErrorCode::InvalidThreshold:
            return "InvalidThreshold";
        case ErrorCode::InvalidDelta:
            return "InvalidDelta";
        case ErrorCode::DegeneratePhase:
            return "DegeneratePhase";
        case ErrorCode::Infeasible:
            return "Infeasible";
        case ErrorCode::InvalidArgs:
            return "InvalidArgs";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {
}

}  // namespace qreading
