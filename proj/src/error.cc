// Copyright 2026 The kraus-forge Authors
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

#include "kraus_forge/error.h"

namespace kraus_forge {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonHermitianInput:
            return "NonHermitianInput";
        case ErrorCode::ConvergenceFailure:
            return "ConvergenceFailure";
        case ErrorCode::OverflowDetected:
            return "OverflowDetected";
        case ErrorCode::InvalidGenerator:
            return "InvalidGenerator";
        case ErrorCode::NonRealGeneratorMatrix:
            return "NonRealGeneratorMatrix";
        case ErrorCode::NegativeTime:
            return "NegativeTime";
        case ErrorCode::NotTracePreserving:
            return "NotTracePreserving";
        case ErrorCode::NotCompletelyPositive:
            return "NotCompletelyPositive";
        case ErrorCode::InvalidState:
            return "InvalidState";
        case ErrorCode::IncompleteKrausSet:
            return "IncompleteKrausSet";
        case ErrorCode::InvalidParameter:
            return "InvalidParameter";
        case ErrorCode::SingularTime:
            return "SingularTime";
        case ErrorCode::QuadratureFailure:
            return "QuadratureFailure";
        case ErrorCode::DivergentLimit:
            return "DivergentLimit";
    }
    return "Unknown";
}

}  // namespace kraus_forge
