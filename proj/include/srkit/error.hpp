/*
   Copyright 2026 The srkit Authors

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

#ifndef SRKIT_ERROR_HPP
#define SRKIT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace srkit {

/// Stable error taxonomy.  The names are part of the CLI wire format.
enum class ErrorCode {
    RealArgument,
    ZeroFunction,
    PoleAtZero,
    NotUnitImaginary,
    NotPolynomial,
    OutsideConvergence,
    NotInClass,
    ConflictingNodes,
    OverlappingZeroPole,
    InvalidSpec,
    AnchorOffSphere,
    VanishingOnC,
    EpsilonUnattainable,
    IncompatibleChain,
    MalformedInput,
    UnknownCommand,
};

constexpr std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::RealArgument: return "RealArgument";
        case ErrorCode::ZeroFunction: return "ZeroFunction";
        case ErrorCode::PoleAtZero: return "PoleAtZero";
        case ErrorCode::NotUnitImaginary: return "NotUnitImaginary";
        case ErrorCode::NotPolynomial: return "NotPolynomial";
        case ErrorCode::OutsideConvergence: return "OutsideConvergence";
        case ErrorCode::NotInClass: return "NotInClass";
        case ErrorCode::ConflictingNodes: return "ConflictingNodes";
        case ErrorCode::OverlappingZeroPole: return "OverlappingZeroPole";
        case ErrorCode::InvalidSpec: return "InvalidSpec";
        case ErrorCode::AnchorOffSphere: return "AnchorOffSphere";
        case ErrorCode::VanishingOnC: return "VanishingOnC";
        case ErrorCode::EpsilonUnattainable: return "EpsilonUnattainable";
        case ErrorCode::IncompatibleChain: return "IncompatibleChain";
        case ErrorCode::MalformedInput: return "MalformedInput";
        case ErrorCode::UnknownCommand: return "UnknownCommand";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace srkit

#endif  // SRKIT_ERROR_HPP
