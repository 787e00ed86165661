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

#ifndef SKEW_ERROR_HPP
#define SKEW_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skew {

enum class ErrorCode {
    InvalidArgument,
    InvalidDescriptor,
    FieldMismatch,
    DivisionByZero,
    ZeroConjugator,
    InfiniteField,
    DivisionByZeroPolynomial,
    BothZero,
    InvalidAlpha0,
    NotPIndependent,
    ConjugatePairDetected,
    ZeroElement,
    WrongFieldKind,
    ZeroConstantTerm,
    SeparabilityFailure,
    DegreeMismatch,
    DegreeCapExceeded,
    NotMonic,
    DenominatorNotInS,
    NotMinimal,
    ZeroDenominator,
    UnsplittableDenominator,
    NegativeValuation,
    ZeroGenerator,
    SyntaxError,
    FieldLiteralError,
    Unsupported,
    InternalError,
};

// Stable identifier used in CLI output, e.g. "NotPIndependent".
std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message);
    Error(ErrorCode code, const std::string& message, std::size_t position);

    ErrorCode code() const noexcept { return code_; }
    bool has_position() const noexcept { return has_position_; }
    std::size_t position() const noexcept { return position_; }

   private:
    ErrorCode code_;
    bool has_position_ = false;
    std::size_t position_ = 0;
};

}  // namespace skew

#endif
