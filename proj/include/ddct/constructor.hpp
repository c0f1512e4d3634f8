#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "ddct/digits.hpp"
#include "ddct/expansion.hpp"
#include "ddct/numeric.hpp"
#include "ddct/oracle.hpp"

namespace ddct {

/// h_j = ⌊jα⌋ for a rational α in [0, 1]; AlphaOutOfRange otherwise.
std::uint64_t stairs(const Rational& alpha, std::uint64_t j);

class Staircase {
public:
    explicit Staircase(Rational alpha);

    const Rational& alpha() const noexcept { return alpha_; }
    std::uint64_t at(std::uint64_t j) const;

private:
    Rational alpha_;
};

/// Levels where the default digit may be overridden: j = 2^(2^i), i >= 3,
/// i.e. 256, 65536, 2^32.
bool is_flip_position(std::uint64_t j);

/// Digit stream x_j = d_m when h_j = h_{j-1} and 0 when h_j = h_{j-1} + 1.
/// At flip positions 0 becomes d_m when α = 1, and d_m becomes 0 when α = 0
/// and d_m = n - 1, so that the stream never terminates.
class ConstructedStream : public DigitGenerator {
public:
    ConstructedStream(DigitSet digits, Staircase stairs);

    /// Tail index i carries x_{i+1}.
    std::optional<Digit> digit(std::uint64_t index) const override;

    /// x_j for j >= 1.
    Digit at(std::uint64_t j) const;
    /// Whether x_j differs from the staircase default.
    bool flipped(std::uint64_t j) const;
    Digit default_digit(std::uint64_t j) const;

    const Staircase& staircase() const noexcept { return stairs_; }

private:
    DigitSet digits_;
    Staircase stairs_;
};

/// SeparationViolated unless D is separated; AlphaOutOfRange.
NAryExpansion construct_translation(const DigitSet& digits, const Rational& alpha);

enum class DenseRegime {
    Separated,  // separated digits with d_m < n - 1
    Uniform     // all digits share a factor h > 1
};

enum class DenseBranch {
    Interval,          // an offset-0 pair exists at level k
    PotentialInterval  // only offset -1 pairs remain; one shift digit recovers offset 0
};

struct DenseResult {
    NAryExpansion x;
    DenseRegime regime;
    DenseBranch branch;
    std::uint64_t level = 0;     // k: digits copied from y
    std::uint64_t graft = 0;     // level where the constructed stream starts
    bool used_alternate = false; // y replaced by its other expansion
    AlignmentState census_at_level;
    AlignmentState census_at_graft;
};

/// Smallest k >= 0 with n^-k < eps.
std::uint64_t precision_level(std::int64_t base, const Rational& eps);

/// A translation x with |x - y| < eps whose intersection C ∩ (C + x) has
/// dimension α·log_n m. Errors: NotMember, HypothesesUnmet,
/// ContradictionCaseC, AlphaOutOfRange, OutOfRange (eps <= 0).
DenseResult dense_translation(const DigitSet& digits, const NAryExpansion& y, const Rational& eps,
                              const Rational& alpha);

} // namespace ddct
