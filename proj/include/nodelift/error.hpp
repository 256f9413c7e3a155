#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nodelift {

enum class ErrorCode {
    DenominatorNotInvertible,
    NotInvertible,
    DivisionByZero,
    ZeroInput,
    NotPrime,
    RingMismatch,
    SyntaxError,
    UnknownVariable,
    InexactDivision,
    DegenerateArrangement,
    PlaneCollapse,
    SizeGuard,
    ProportionalCenter,
    OddEuler,
    EqualPositions,
    MissingEvidence,
    InvalidArgument,
    BadInput,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every module. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message,
          std::optional<std::size_t> position = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    /// Character offset for SyntaxError, when known.
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> position_;
};

} // namespace nodelift
