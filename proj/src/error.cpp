#include "ddct/error.hpp"

namespace ddct {

std::string_view errc_name(Errc code) noexcept
{
    switch (code) {
    case Errc::BaseTooSmall: return "BaseTooSmall";
    case Errc::TooFewDigits: return "TooFewDigits";
    case Errc::TooManyDigits: return "TooManyDigits";
    case Errc::FirstDigitNonzero: return "FirstDigitNonzero";
    case Errc::DigitOutOfRange: return "DigitOutOfRange";
    case Errc::DigitsNotStrictlyIncreasing: return "DigitsNotStrictlyIncreasing";
    case Errc::StreamExhausted: return "StreamExhausted";
    case Errc::NotClosedForm: return "NotClosedForm";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::NoAlternate: return "NoAlternate";
    case Errc::NotDecidable: return "NotDecidable";
    case Errc::EmptyPeriod: return "EmptyPeriod";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::NotPeriodic: return "NotPeriodic";
    case Errc::NotMember: return "NotMember";
    case Errc::TerminatingInput: return "TerminatingInput";
    case Errc::AlphaOutOfRange: return "AlphaOutOfRange";
    case Errc::SeparationViolated: return "SeparationViolated";
    case Errc::HypothesesUnmet: return "HypothesesUnmet";
    case Errc::ContradictionCaseC: return "ContradictionCaseC";
    case Errc::NoCommonDivisor: return "NoCommonDivisor";
    case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code)
{
}

void fail(Errc code, const std::string& detail)
{
    throw Error(code, detail);
}

} // namespace ddct
