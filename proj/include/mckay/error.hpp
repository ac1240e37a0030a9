#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mckay {

enum class ErrorCode {
    BadShape,
    NonGenerating,
    NotInM,
    BadTheta,
    MismatchedDescriptions,
    OutsideSupport,
    NotOptimal,
    NegativeW,
    UnboundedObjective,
    TrivialGroup,
    ParseError,
    Internal,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying one of the library's error kinds.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace mckay
