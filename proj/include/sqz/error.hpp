#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sqz {

// Every precondition failure in the library is reported through Error with
// one of these kinds, so callers (and tests) can branch on the cause.
enum class ErrorKind {
    NonPositiveVariance,
    HeisenbergViolation,
    EtaOutOfRange,
    InfeasibleTarget,
    CoherentInputDegenerate,
    TargetOutOfRange,
    ConfigOutOfRange,
    NotSqueezed,
    InvalidRun,
    NegativePhotonNumber,
    SignalBudgetExhausted,
    TOutOfRange,
    UnphysicalCovariance,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::invalid_argument {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::invalid_argument(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace sqz
