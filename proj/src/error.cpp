#include "quatmob/error.hpp"

namespace quatmob {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::RealInput: return "RealInput";
        case ErrorCode::NotOnSphere: return "NotOnSphere";
        case ErrorCode::InternalNumericError: return "InternalNumericError";
        case ErrorCode::Singular: return "Singular";
        case ErrorCode::BothZero: return "BothZero";
        case ErrorCode::PoleInput: return "PoleInput";
        case ErrorCode::CoincidentPoints: return "CoincidentPoints";
        case ErrorCode::NotSp11: return "NotSp11";
        case ErrorCode::ZeroD: return "ZeroD";
        case ErrorCode::NonImaginaryShift: return "NonImaginaryShift";
        case ErrorCode::ConstraintViolation: return "ConstraintViolation";
        case ErrorCode::DegenerateResult: return "DegenerateResult";
        case ErrorCode::NotConcyclic: return "NotConcyclic";
        case ErrorCode::OutOfDomain: return "OutOfDomain";
        case ErrorCode::TooFewSamples: return "TooFewSamples";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace quatmob
