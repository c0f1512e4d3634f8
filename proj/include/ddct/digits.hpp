#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ddct {

using Digit = std::int64_t;

/// The base n and the digit set D = {0 = d_1 < d_2 < ... < d_m <= n-1}, 2 <= m < n.
///
/// Construction validates and never repairs its input: an unsorted or
/// duplicated list is an error, not something to normalize.
class DigitSet {
public:
    /// Throws Error with BaseTooSmall, TooFewDigits, TooManyDigits,
    /// FirstDigitNonzero, DigitOutOfRange or DigitsNotStrictlyIncreasing.
    DigitSet(std::int64_t base, std::vector<Digit> digits);

    std::int64_t base() const noexcept { return base_; }
    std::span<const Digit> digits() const noexcept { return digits_; }
    std::size_t size() const noexcept { return digits_.size(); }
    Digit largest() const noexcept { return digits_.back(); }
    bool contains(Digit d) const noexcept;

    bool operator==(const DigitSet&) const = default;

private:
    std::int64_t base_;
    std::vector<Digit> digits_;
};

DigitSet new_digit_set(std::int64_t base, std::vector<Digit> digits);

/// D - D, sorted and deduplicated. Symmetric about zero.
struct DifferenceSet {
    std::vector<Digit> deltas;

    std::size_t size() const noexcept { return deltas.size(); }
    bool contains(Digit delta) const noexcept;
};

DifferenceSet difference_set(const DigitSet& digits);

/// d_{j+1} - d_j >= 2 for every consecutive pair.
bool is_separated(const DigitSet& digits);

/// Greatest h dividing every digit (the gcd of the nonzero digits).
std::int64_t common_divisor(const DigitSet& digits);

} // namespace ddct
