#include "nodelift/error.hpp"

namespace nodelift {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DenominatorNotInvertible: return "DenominatorNotInvertible";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::DegenerateArrangement: return "DegenerateArrangement";
    case ErrorCode::PlaneCollapse: return "PlaneCollapse";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::ProportionalCenter: return "ProportionalCenter";
    case ErrorCode::OddEuler: return "OddEuler";
    case ErrorCode::EqualPositions: return "EqualPositions";
    case ErrorCode::MissingEvidence: return "MissingEvidence";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::BadInput: return "BadInput";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code), position_(position)
{
}

} // namespace nodelift
