/*
   Copyright 2026 The tmot Authors

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

#ifndef TMOT_ERROR_HPP
#define TMOT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace tmot {

enum class ErrorCode {
    NotInvertible,
    NotIrreducible,
    ZeroLeadingTerm,
    BadLeadingCoeff,
    RankOverflow,
    DescentFailure,
    NotFinitelyGenerated,
    NotEffective,
    BadReduction,
    Divergent,
    PolicyExhausted,
    SlopeBoundViolated,
    SylvesterSingular,
    InsufficientOrder,
    DegreeExceeded,
    DegreeCapExceeded,
    LogDivergent,
    DimensionMismatch,
    ConfigParse,
    Checkpoint,
    Mismatch,
};

constexpr std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::NotIrreducible: return "NotIrreducible";
        case ErrorCode::ZeroLeadingTerm: return "ZeroLeadingTerm";
        case ErrorCode::BadLeadingCoeff: return "BadLeadingCoeff";
        case ErrorCode::RankOverflow: return "RankOverflow";
        case ErrorCode::DescentFailure: return "DescentFailure";
        case ErrorCode::NotFinitelyGenerated: return "NotFinitelyGenerated";
        case ErrorCode::NotEffective: return "NotEffective";
        case ErrorCode::BadReduction: return "BadReduction";
        case ErrorCode::Divergent: return "Divergent";
        case ErrorCode::PolicyExhausted: return "PolicyExhausted";
        case ErrorCode::SlopeBoundViolated: return "SlopeBoundViolated";
        case ErrorCode::SylvesterSingular: return "SylvesterSingular";
        case ErrorCode::InsufficientOrder: return "InsufficientOrder";
        case ErrorCode::DegreeExceeded: return "DegreeExceeded";
        case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
        case ErrorCode::LogDivergent: return "LogDivergent";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::ConfigParse: return "ConfigParse";
        case ErrorCode::Checkpoint: return "Checkpoint";
        case ErrorCode::Mismatch: return "Mismatch";
    }
    return "Unknown";
}

/// Every domain failure in the library is reported as an Error carrying a
/// stable code; the CLI prints error_name(code) and exits nonzero.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

   private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace tmot

#endif
