#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quatmob {

enum class ErrorCode {
    DivisionByZero,
    RealInput,
    NotOnSphere,
    InternalNumericError,
    Singular,
    BothZero,
    PoleInput,
    CoincidentPoints,
    NotSp11,
    ZeroD,
    NonImaginaryShift,
    ConstraintViolation,
    DegenerateResult,
    NotConcyclic,
    OutOfDomain,
    TooFewSamples,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every library operation; carries a stable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace quatmob
