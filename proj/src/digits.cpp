#include "ddct/digits.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ddct/error.hpp"

namespace ddct {

DigitSet::DigitSet(std::int64_t base, std::vector<Digit> digits)
    : base_(base), digits_(std::move(digits))
{
    if (base_ < 3) {
        fail(Errc::BaseTooSmall, "base must be at least 3, got " + std::to_string(base_));
    }
    if (digits_.size() < 2) {
        fail(Errc::TooFewDigits, "need at least two digits");
    }
    if (static_cast<std::int64_t>(digits_.size()) >= base_) {
        fail(Errc::TooManyDigits, "need fewer digits than the base");
    }
    if (digits_.front() != 0) {
        fail(Errc::FirstDigitNonzero, "the smallest digit must be 0");
    }
    for (Digit d : digits_) {
        if (d < 0 || d >= base_) {
            fail(Errc::DigitOutOfRange, "digit " + std::to_string(d) + " outside [0, " +
                                            std::to_string(base_ - 1) + "]");
        }
    }
    for (std::size_t j = 1; j < digits_.size(); ++j) {
        if (digits_[j] <= digits_[j - 1]) {
            fail(Errc::DigitsNotStrictlyIncreasing, "digits must be listed in strictly increasing order");
        }
    }
}

bool DigitSet::contains(Digit d) const noexcept
{
    return std::binary_search(digits_.begin(), digits_.end(), d);
}

DigitSet new_digit_set(std::int64_t base, std::vector<Digit> digits)
{
    return DigitSet(base, std::move(digits));
}

bool DifferenceSet::contains(Digit delta) const noexcept
{
    return std::binary_search(deltas.begin(), deltas.end(), delta);
}

DifferenceSet difference_set(const DigitSet& digits)
{
    DifferenceSet out;
    out.deltas.reserve(digits.size() * digits.size());
    for (Digit d : digits.digits()) {
        for (Digit e : digits.digits()) {
            out.deltas.push_back(d - e);
        }
    }
    std::sort(out.deltas.begin(), out.deltas.end());
    out.deltas.erase(std::unique(out.deltas.begin(), out.deltas.end()), out.deltas.end());
    return out;
}

bool is_separated(const DigitSet& digits)
{
    const auto d = digits.digits();
    for (std::size_t j = 1; j < d.size(); ++j) {
        if (d[j] - d[j - 1] < 2) {
            return false;
        }
    }
    return true;
}

std::int64_t common_divisor(const DigitSet& digits)
{
    std::int64_t h = 0;
    for (Digit d : digits.digits()) {
        h = std::gcd(h, d);
    }
    return h;
}

} // namespace ddct
