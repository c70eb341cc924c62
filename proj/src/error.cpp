#include "eqfix/error.hpp"

namespace eqfix {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::NotPolynomial: return "NotPolynomial";
        case ErrorKind::Inconsistent: return "Inconsistent";
        case ErrorKind::Underdetermined: return "Underdetermined";
        case ErrorKind::ZeroWeight: return "ZeroWeight";
        case ErrorKind::WrongWeightCount: return "WrongWeightCount";
        case ErrorKind::DuplicateId: return "DuplicateId";
        case ErrorKind::MissingMomentValue: return "MissingMomentValue";
        case ErrorKind::ZeroIsCritical: return "ZeroIsCritical";
        case ErrorKind::NotSemifree: return "NotSemifree";
        case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorKind::NotInModule: return "NotInModule";
        case ErrorKind::NoIntegerSolution: return "NoIntegerSolution";
        case ErrorKind::WrongCount: return "WrongCount";
        case ErrorKind::NotInjective: return "NotInjective";
        case ErrorKind::NotSurjective: return "NotSurjective";
        case ErrorKind::CountMismatch: return "CountMismatch";
    }
    return "Unknown";
}

bool is_input_error(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::Parse:
        case ErrorKind::ZeroWeight:
        case ErrorKind::WrongWeightCount:
        case ErrorKind::DuplicateId:
        case ErrorKind::MissingMomentValue:
        case ErrorKind::ZeroIsCritical:
        case ErrorKind::NotSemifree:
        case ErrorKind::SearchSpaceTooLarge:
            return true;
        default:
            return false;
    }
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace eqfix
