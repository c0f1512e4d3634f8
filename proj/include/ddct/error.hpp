#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ddct {

// Every recoverable failure carries one of these codes; the CLI prints the
// code's name on stderr and exits with status 2.
enum class Errc {
    // digits
    BaseTooSmall,
    TooFewDigits,
    TooManyDigits,
    FirstDigitNonzero,
    DigitOutOfRange,
    DigitsNotStrictlyIncreasing,
    // expansion
    StreamExhausted,
    NotClosedForm,
    OutOfRange,
    NoAlternate,
    NotDecidable,
    EmptyPeriod,
    // oracle
    BudgetExceeded,
    // automaton
    NotPeriodic,
    NotMember,
    TerminatingInput,
    // constructor
    AlphaOutOfRange,
    SeparationViolated,
    HypothesesUnmet,
    ContradictionCaseC,
    // fgeometry
    NoCommonDivisor,
    // parsing / cli
    ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail);

    Errc code() const noexcept { return code_; }
    std::string_view name() const noexcept { return errc_name(code_); }

private:
    Errc code_;
};

// Raised when an internal consistency check fails. Never caused by bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

[[noreturn]] void fail(Errc code, const std::string& detail);

inline void ensure(bool condition, const char* what)
{
    if (!condition) {
        throw InvariantViolation(what);
    }
}

} // namespace ddct
