// Copyright 2026 The qinflate Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qinflate/error.hpp"

namespace qinflate {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotProjector: return "NotProjector";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::DimensionError: return "DimensionError";
    case ErrorCode::OddCardinalityRequired: return "OddCardinalityRequired";
    case ErrorCode::MissingMarginal: return "MissingMarginal";
    case ErrorCode::InconsistentMarginals: return "InconsistentMarginals";
    case ErrorCode::UnknownBase: return "UnknownBase";
    case ErrorCode::NotAnInflation: return "NotAnInflation";
    case ErrorCode::NotANetwork: return "NotANetwork";
    case ErrorCode::CyclicGraph: return "CyclicGraph";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string &what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

} // namespace qinflate
