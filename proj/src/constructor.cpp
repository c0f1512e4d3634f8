#include "ddct/constructor.hpp"

#include "ddct/automaton.hpp"
#include "ddct/error.hpp"

namespace ddct {

namespace {

void check_alpha(const Rational& alpha)
{
    if (alpha < 0 || alpha > 1) {
        fail(Errc::AlphaOutOfRange, "alpha " + to_string(alpha) + " outside [0, 1]");
    }
}

Rational prefix_value(const std::vector<Digit>& digits, std::int64_t base)
{
    BigInt v = 0;
    for (Digit d : digits) {
        v = v * base + d;
    }
    return Rational(v, ipow(base, digits.size()));
}

AlignmentState census_of(const DigitSet& digits, const std::vector<Digit>& prefix)
{
    AlignmentState state = AlignmentState::seed();
    for (Digit x : prefix) {
        state = evolve(state, transition_matrix(digits, x));
    }
    return state;
}

} // namespace

std::uint64_t stairs(const Rational& alpha, std::uint64_t j)
{
    check_alpha(alpha);
    return floor(alpha * Rational(BigInt(j))).convert_to<std::uint64_t>();
}

Staircase::Staircase(Rational alpha) : alpha_(std::move(alpha))
{
    check_alpha(alpha_);
}

std::uint64_t Staircase::at(std::uint64_t j) const
{
    return stairs(alpha_, j);
}

bool is_flip_position(std::uint64_t j)
{
    for (unsigned i = 3; i <= 5; ++i) {
        if (j == (std::uint64_t{1} << (1U << i))) {
            return true;
        }
    }
    return false;
}

ConstructedStream::ConstructedStream(DigitSet digits, Staircase stairs)
    : digits_(std::move(digits)), stairs_(std::move(stairs))
{
}

Digit ConstructedStream::default_digit(std::uint64_t j) const
{
    ensure(j >= 1, "digit positions start at 1");
    return stairs_.at(j) == stairs_.at(j - 1) ? digits_.largest() : 0;
}

bool ConstructedStream::flipped(std::uint64_t j) const
{
    if (!is_flip_position(j)) {
        return false;
    }
    if (stairs_.alpha() == 1) {
        return true;
    }
    return stairs_.alpha() == 0 && digits_.largest() == digits_.base() - 1;
}

Digit ConstructedStream::at(std::uint64_t j) const
{
    const Digit d = default_digit(j);
    if (!flipped(j)) {
        return d;
    }
    return d == 0 ? digits_.largest() : 0;
}

std::optional<Digit> ConstructedStream::digit(std::uint64_t index) const
{
    return at(index + 1);
}

NAryExpansion construct_translation(const DigitSet& digits, const Rational& alpha)
{
    if (!is_separated(digits)) {
        fail(Errc::SeparationViolated, "the constructed stream needs separated digits");
    }
    auto source = std::make_shared<const ConstructedStream>(digits, Staircase(alpha));
    return NAryExpansion::generated(digits.base(), {}, std::move(source));
}

std::uint64_t precision_level(std::int64_t base, const Rational& eps)
{
    if (eps <= 0) {
        fail(Errc::OutOfRange, "eps must be positive");
    }
    std::uint64_t k = 0;
    BigInt scale = 1;
    // n^-k < eps  <=>  num(eps)·n^k > den(eps)
    while (boost::multiprecision::numerator(eps) * scale <= boost::multiprecision::denominator(eps)) {
        scale *= base;
        ++k;
    }
    return k;
}

DenseResult dense_translation(const DigitSet& digits, const NAryExpansion& y, const Rational& eps,
                              const Rational& alpha)
{
    check_alpha(alpha);
    const std::int64_t n = digits.base();
    const Digit dm = digits.largest();

    DenseRegime regime;
    if (is_separated(digits) && dm < n - 1) {
        regime = DenseRegime::Separated;
    } else if (common_divisor(digits) > 1) {
        regime = DenseRegime::Uniform;
    } else {
        fail(Errc::HypothesesUnmet, "need separated digits with d_m < n - 1, or a common divisor h > 1");
    }
    if (!is_member(digits, y)) {
        fail(Errc::NotMember, format_expansion(y) + " is not in F");
    }
    const std::uint64_t k = precision_level(n, eps);

    NAryExpansion source = y;
    bool used_alternate = false;
    for (;;) {
        std::vector<Digit> prefix = leading_digits(source, k);
        const AlignmentState at_k = census_of(digits, prefix);

        DenseBranch branch;
        if (at_k.at(0) > 0) {
            branch = DenseBranch::Interval;
        } else if (at_k.at(-1) > 0) {
            branch = DenseBranch::PotentialInterval;
            const DifferenceSet delta = difference_set(digits);
            ensure(!delta.contains(dm - 1) && !delta.contains(dm + 1), "d_m ± 1 is a digit difference");
            // Moves the right-most child of J onto the left-most child of I.
            prefix.push_back(n - dm);
        } else if (regime == DenseRegime::Uniform && !used_alternate) {
            source = alternate_representation(source);
            used_alternate = true;
            continue;
        } else {
            fail(Errc::ContradictionCaseC, "only offset +1 pairs survive at level " + std::to_string(k));
        }
        if (regime == DenseRegime::Separated) {
            // Keeps every offset-0 pair (m children each) and kills offsets ±1.
            prefix.push_back(0);
        }

        const AlignmentState at_graft = census_of(digits, prefix);
        if (at_graft.at(0) == 0 || at_graft.at(-1) != 0 || at_graft.at(1) != 0) {
            throw InvariantViolation("census at the graft level is not purely offset 0");
        }
        const Rational lo = prefix_value(prefix, n);
        const Rational hi = lo + Rational(BigInt(1), ipow(n, prefix.size()));
        const Rational target = to_rational(y);
        if (!(target - eps < lo && hi < target + eps)) {
            throw InvariantViolation("constructed prefix is not within eps of y");
        }

        const std::uint64_t graft = prefix.size();
        auto stream = std::make_shared<const ConstructedStream>(digits, Staircase(alpha));
        return DenseResult{NAryExpansion::generated(n, std::move(prefix), std::move(stream)),
                           regime,
                           branch,
                           k,
                           graft,
                           used_alternate,
                           at_k,
                           at_graft};
    }
}

} // namespace ddct
