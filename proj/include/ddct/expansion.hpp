#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ddct/digits.hpp"
#include "ddct/numeric.hpp"

namespace ddct {

// Procedural digit source for tails with no closed form. Implementations are
// immutable; `digit(i)` is the i-th tail digit (0-based) or nullopt past the
// end of a finite source.
class DigitGenerator {
public:
    virtual ~DigitGenerator() = default;
    virtual std::optional<Digit> digit(std::uint64_t index) const = 0;
};

struct ZeroTail {
};

struct PeriodicTail {
    std::vector<Digit> block;
};

struct GeneratorTail {
    std::shared_ptr<const DigitGenerator> source;
};

using Tail = std::variant<ZeroTail, PeriodicTail, GeneratorTail>;

class DigitStream;

/// 0.x_1 x_2 ... in base n: a finite prefix followed by a zero, periodic or
/// generated tail. An all-zero periodic block is stored as ZeroTail; an
/// all-(n-1) block is kept as given, since both representations of a
/// terminating value are needed.
class NAryExpansion {
public:
    NAryExpansion(std::int64_t base, std::vector<Digit> prefix, Tail tail = ZeroTail{});

    static NAryExpansion zero(std::int64_t base) { return NAryExpansion(base, {}); }
    static NAryExpansion periodic(std::int64_t base, std::vector<Digit> prefix, std::vector<Digit> block);
    static NAryExpansion generated(std::int64_t base, std::vector<Digit> prefix,
                                   std::shared_ptr<const DigitGenerator> source);

    std::int64_t base() const noexcept { return base_; }
    const std::vector<Digit>& prefix() const noexcept { return prefix_; }
    const Tail& tail() const noexcept { return tail_; }

    bool has_zero_tail() const noexcept { return std::holds_alternative<ZeroTail>(tail_); }
    bool has_periodic_tail() const noexcept { return std::holds_alternative<PeriodicTail>(tail_); }
    bool has_closed_form() const noexcept { return !std::holds_alternative<GeneratorTail>(tail_); }

    /// Digit x_{index+1}; nullopt only when a finite generator is exhausted.
    std::optional<Digit> digit(std::uint64_t index) const;

    DigitStream stream() const;

private:
    std::int64_t base_;
    std::vector<Digit> prefix_;
    Tail tail_;
};

/// Single-consumer cursor over an expansion's digits. Move-only, so at most
/// one owner can pull from a given cursor.
class DigitStream {
public:
    explicit DigitStream(NAryExpansion source) : source_(std::move(source)) {}

    DigitStream(const DigitStream&) = delete;
    DigitStream& operator=(const DigitStream&) = delete;
    DigitStream(DigitStream&&) noexcept = default;
    DigitStream& operator=(DigitStream&&) noexcept = default;

    std::optional<Digit> pull();
    /// Exactly `count` further digits, or StreamExhausted.
    std::vector<Digit> take(std::uint64_t count);
    std::uint64_t position() const noexcept { return position_; }

private:
    NAryExpansion source_;
    std::uint64_t position_ = 0;
};

/// The first k digits of x (zero padded), as a finite expansion.
NAryExpansion truncate(const NAryExpansion& x, std::uint64_t k);

/// First k digits as a list; StreamExhausted if the source runs out.
std::vector<Digit> leading_digits(const NAryExpansion& x, std::uint64_t k);

Rational to_rational(const NAryExpansion& x);

/// Canonical expansion of r in [0, 1]: terminating where possible, otherwise
/// minimal preperiod and period. 1 is returned as 0.(n-1).
NAryExpansion from_rational(const Rational& r, std::int64_t base);

/// The other expansion of a terminating value: 0.x_1..x_l <-> 0.x_1..(x_l - 1)(n-1)(n-1)...
NAryExpansion alternate_representation(const NAryExpansion& x);

bool is_terminating(const NAryExpansion& x);

/// Digits of the terminating form of a terminating value, without trailing
/// zeros; `is_one` marks the value 1, which has no 0.x_1..x_l form.
struct TerminatingForm {
    std::vector<Digit> digits;
    bool is_one = false;

    std::uint64_t level() const noexcept { return digits.size(); }
};

/// nullopt for non-terminating values; NotDecidable for generator tails.
std::optional<TerminatingForm> terminating_form(const NAryExpansion& x);

/// Digit-string grammar: `0.202`, `0.(20)`, `0.1(2)` for n <= 10 and
/// `0.[10,0](7,3)` for n > 10. `0` alone is zero.
NAryExpansion parse_expansion(std::string_view text, std::int64_t base);
std::string format_expansion(const NAryExpansion& x);
std::string format_digits(const std::vector<Digit>& digits, std::int64_t base);

} // namespace ddct
