#pragma once

#include <stdexcept>
#include <string>

namespace toraut {

enum class ErrorCode {
    DegreeTooSmall,
    EndpointRoot,
    NotSelfReciprocal,
    RepeatedRoots,
    CircleBoundaryUnresolved,
    NotMonic,
    BadForm,
    NotSimpleSpectrum,
    EmptyPart,
    NotPartiallyHyperbolic,
    RealRoot,
    NotUnimodular,
    MayBeNonPeriodic,
    DenominatorTooLarge,
    WrongUnstableDim,
    BudgetExhausted,
};

const char* to_string(ErrorCode code);

/// Analysis-level failure with a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Input that could not be read at all (bad file, malformed matrix text).
/// Kept separate from Error so the CLI can distinguish exit codes.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace toraut
