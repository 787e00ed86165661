/*
   Copyright 2026 The skewcalc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "skew/error.hpp"

namespace skew {

std::string_view code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ZeroConjugator: return "ZeroConjugator";
        case ErrorCode::InfiniteField: return "InfiniteField";
        case ErrorCode::DivisionByZeroPolynomial: return "DivisionByZeroPolynomial";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::InvalidAlpha0: return "InvalidAlpha0";
        case ErrorCode::NotPIndependent: return "NotPIndependent";
        case ErrorCode::ConjugatePairDetected: return "ConjugatePairDetected";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::WrongFieldKind: return "WrongFieldKind";
        case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
        case ErrorCode::SeparabilityFailure: return "SeparabilityFailure";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorCode::NotMonic: return "NotMonic";
        case ErrorCode::DenominatorNotInS: return "DenominatorNotInS";
        case ErrorCode::NotMinimal: return "NotMinimal";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::UnsplittableDenominator: return "UnsplittableDenominator";
        case ErrorCode::NegativeValuation: return "NegativeValuation";
        case ErrorCode::ZeroGenerator: return "ZeroGenerator";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::FieldLiteralError: return "FieldLiteralError";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message) : std::runtime_error(message), code_(code) {}

Error::Error(ErrorCode code, const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      code_(code),
      has_position_(true),
      position_(position) {}

}  // namespace skew
