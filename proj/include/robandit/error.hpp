// error.hpp
#pragma once

#include <stdexcept>
#include <string>

namespace robandit {

enum class ErrorCode {
    InvalidArgument,
    NonUniqueMedian,
    NonUniqueMAD,
    ZeroMAD,
    IncompatibleStrategy,
    EmptyInput,
    InfeasibleRegime,
    TooFewSamples,
    ParameterOutOfRange,
    UnknownKey,
    TypeMismatch,
    FeasibilityViolation,
    ParseError,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NonUniqueMedian: return "NonUniqueMedian";
        case ErrorCode::NonUniqueMAD: return "NonUniqueMAD";
        case ErrorCode::ZeroMAD: return "ZeroMAD";
        case ErrorCode::IncompatibleStrategy: return "IncompatibleStrategy";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::InfeasibleRegime: return "InfeasibleRegime";
        case ErrorCode::TooFewSamples: return "TooFewSamples";
        case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorCode::UnknownKey: return "UnknownKey";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
        case ErrorCode::FeasibilityViolation: return "FeasibilityViolation";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace robandit
