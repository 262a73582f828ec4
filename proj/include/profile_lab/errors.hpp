#pragma once

#include <stdexcept>
#include <string>

namespace plab {

// Domain error taxonomy. The CLI maps these to exit code 3 and a
// machine-readable {"error": code, "detail": ...} object on stderr.
enum class ErrorCode {
    InvalidSize,
    BudgetExceeded,
    UniformityMismatch,
    EmptyTarget,
    HomCountZero,
    ScaleTooSmall,
    FeasibilityExceeded,
    ConstructionUnavailable,
    NotNormalized,
    NegativeEntry,
    InvalidPattern,
    NotNormalizable,
    OutOfRange,
    ConvergenceFailure,
    ParseError,
};

const char* error_code_name(ErrorCode code);

class DomainError : public std::runtime_error {
public:
    DomainError(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
          code_(code), detail_(detail) {}

    ErrorCode code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace plab
