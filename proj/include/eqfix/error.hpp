#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqfix {

enum class ErrorKind {
    InvalidArgument,
    Parse,
    NotPolynomial,
    Inconsistent,
    Underdetermined,
    ZeroWeight,
    WrongWeightCount,
    DuplicateId,
    MissingMomentValue,
    ZeroIsCritical,
    NotSemifree,
    SearchSpaceTooLarge,
    NotInModule,
    NoIntegerSolution,
    WrongCount,
    NotInjective,
    NotSurjective,
    CountMismatch,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// True for errors caused by malformed or unsuitable input rather than by a
/// mathematical constraint failing. The CLI maps these to exit code 2.
bool is_input_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace eqfix
