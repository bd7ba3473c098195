// Copyright 2026 the orc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace orc {

/// Every failure the library raises carries a stable machine-readable code
/// (surfaced verbatim in CLI error objects) and a human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, std::string message)
        : std::runtime_error(code + ": " + message),
          code_(std::move(code)),
          message_(std::move(message)) {}

    const std::string& code() const { return code_; }
    const std::string& message() const { return message_; }

private:
    std::string code_;
    std::string message_;
};

namespace errc {
inline constexpr const char* DivisionByZero = "DivisionByZero";
inline constexpr const char* NonUnitDivisor = "NonUnitDivisor";
inline constexpr const char* DomainMismatch = "DomainMismatch";
inline constexpr const char* UnsupportedCoefficients = "UnsupportedCoefficients";
inline constexpr const char* UnsupportedLocalization = "UnsupportedLocalization";
inline constexpr const char* DMBoundExceeded = "DMBoundExceeded";
inline constexpr const char* ZeroDenominator = "ZeroDenominator";
inline constexpr const char* NotAWitness = "NotAWitness";
inline constexpr const char* PrecisionExhausted = "PrecisionExhausted";
inline constexpr const char* NotAUnit = "NotAUnit";
inline constexpr const char* TrivialValuation = "TrivialValuation";
inline constexpr const char* NotContentExtension = "NotContentExtension";
inline constexpr const char* NoWitnessConstructed = "NoWitnessConstructed";
inline constexpr const char* BranchNotContent = "BranchNotContent";
inline constexpr const char* NegativeValueComponent = "NegativeValueComponent";
inline constexpr const char* IndexOutOfRange = "IndexOutOfRange";
inline constexpr const char* ParseError = "ParseError";
inline constexpr const char* UnknownExampleName = "UnknownExampleName";
inline constexpr const char* BadScenario = "BadScenario";
inline constexpr const char* BadConstruction = "BadConstruction";
}  // namespace errc

[[noreturn]] inline void fail(const char* code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool ok, const char* code, const std::string& message) {
    if (!ok) fail(code, message);
}

}  // namespace orc
