#include "profile_lab/errors.hpp"

namespace plab {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidSize: return "InvalidSize";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::UniformityMismatch: return "UniformityMismatch";
        case ErrorCode::EmptyTarget: return "EmptyTarget";
        case ErrorCode::HomCountZero: return "HomCountZero";
        case ErrorCode::ScaleTooSmall: return "ScaleTooSmall";
        case ErrorCode::FeasibilityExceeded: return "FeasibilityExceeded";
        case ErrorCode::ConstructionUnavailable: return "ConstructionUnavailable";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::NegativeEntry: return "NegativeEntry";
        case ErrorCode::InvalidPattern: return "InvalidPattern";
        case ErrorCode::NotNormalizable: return "NotNormalizable";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

} // namespace plab
