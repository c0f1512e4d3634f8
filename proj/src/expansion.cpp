#include "ddct/expansion.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ddct/error.hpp"

namespace ddct {

namespace {

void check_digits(const std::vector<Digit>& digits, std::int64_t base)
{
    for (Digit d : digits) {
        if (d < 0 || d >= base) {
            fail(Errc::DigitOutOfRange,
                 "expansion digit " + std::to_string(d) + " outside [0, " + std::to_string(base - 1) + "]");
        }
    }
}

bool all_equal(const std::vector<Digit>& digits, Digit value)
{
    return std::all_of(digits.begin(), digits.end(), [value](Digit d) { return d == value; });
}

// Integer value of the digit list read in base n.
BigInt digit_value(const std::vector<Digit>& digits, std::int64_t base)
{
    BigInt v = 0;
    for (Digit d : digits) {
        v = v * base + d;
    }
    return v;
}

} // namespace

NAryExpansion::NAryExpansion(std::int64_t base, std::vector<Digit> prefix, Tail tail)
    : base_(base), prefix_(std::move(prefix)), tail_(std::move(tail))
{
    if (base_ < 2) {
        fail(Errc::BaseTooSmall, "expansion base must be at least 2");
    }
    check_digits(prefix_, base_);
    if (auto* periodic = std::get_if<PeriodicTail>(&tail_)) {
        if (periodic->block.empty()) {
            fail(Errc::EmptyPeriod, "periodic tail needs at least one digit");
        }
        check_digits(periodic->block, base_);
        if (all_equal(periodic->block, 0)) {
            tail_ = ZeroTail{};
        }
    } else if (auto* generated = std::get_if<GeneratorTail>(&tail_)) {
        ensure(generated->source != nullptr, "generator tail without a source");
    }
}

NAryExpansion NAryExpansion::periodic(std::int64_t base, std::vector<Digit> prefix, std::vector<Digit> block)
{
    return NAryExpansion(base, std::move(prefix), PeriodicTail{std::move(block)});
}

NAryExpansion NAryExpansion::generated(std::int64_t base, std::vector<Digit> prefix,
                                       std::shared_ptr<const DigitGenerator> source)
{
    return NAryExpansion(base, std::move(prefix), GeneratorTail{std::move(source)});
}

std::optional<Digit> NAryExpansion::digit(std::uint64_t index) const
{
    if (index < prefix_.size()) {
        return prefix_[index];
    }
    const std::uint64_t tail_index = index - prefix_.size();
    return std::visit(
        [&](const auto& tail) -> std::optional<Digit> {
            using T = std::decay_t<decltype(tail)>;
            if constexpr (std::is_same_v<T, ZeroTail>) {
                return Digit{0};
            } else if constexpr (std::is_same_v<T, PeriodicTail>) {
                return tail.block[tail_index % tail.block.size()];
            } else {
                auto d = tail.source->digit(tail_index);
                if (d && (*d < 0 || *d >= base_)) {
                    throw InvariantViolation("generator produced an out-of-range digit");
                }
                return d;
            }
        },
        tail_);
}

DigitStream NAryExpansion::stream() const
{
    return DigitStream(*this);
}

std::optional<Digit> DigitStream::pull()
{
    auto d = source_.digit(position_);
    if (d) {
        ++position_;
    }
    return d;
}

std::vector<Digit> DigitStream::take(std::uint64_t count)
{
    std::vector<Digit> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        auto d = pull();
        if (!d) {
            fail(Errc::StreamExhausted, "digit stream ended after " + std::to_string(position_) + " digits");
        }
        out.push_back(*d);
    }
    return out;
}

std::vector<Digit> leading_digits(const NAryExpansion& x, std::uint64_t k)
{
    return x.stream().take(k);
}

NAryExpansion truncate(const NAryExpansion& x, std::uint64_t k)
{
    return NAryExpansion(x.base(), leading_digits(x, k));
}

Rational to_rational(const NAryExpansion& x)
{
    if (!x.has_closed_form()) {
        fail(Errc::NotClosedForm, "generated expansions have no closed-form value");
    }
    const std::int64_t n = x.base();
    const BigInt scale = ipow(n, x.prefix().size());
    Rational value(digit_value(x.prefix(), n), scale);
    if (const auto* periodic = std::get_if<PeriodicTail>(&x.tail())) {
        // 0.(b_1..b_L) = B / (n^L - 1)
        const BigInt period_den = ipow(n, periodic->block.size()) - 1;
        value += Rational(digit_value(periodic->block, n), period_den * scale);
    }
    return value;
}

NAryExpansion from_rational(const Rational& r, std::int64_t base)
{
    if (r < 0 || r > 1) {
        fail(Errc::OutOfRange, "value " + to_string(r) + " outside [0, 1]");
    }
    if (r == 1) {
        return NAryExpansion::periodic(base, {}, {base - 1});
    }
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt rem = boost::multiprecision::numerator(r);
    std::vector<Digit> digits;
    std::map<BigInt, std::size_t> seen;
    while (rem != 0) {
        auto [it, inserted] = seen.emplace(rem, digits.size());
        if (!inserted) {
            std::vector<Digit> prefix(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
            std::vector<Digit> block(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
            return NAryExpansion::periodic(base, std::move(prefix), std::move(block));
        }
        rem *= base;
        digits.push_back(static_cast<Digit>(rem / den));
        rem %= den;
    }
    return NAryExpansion(base, std::move(digits));
}

bool is_terminating(const NAryExpansion& x)
{
    if (!x.has_closed_form()) {
        fail(Errc::NotDecidable, "cannot decide termination of a generated expansion");
    }
    if (x.has_zero_tail()) {
        return true;
    }
    return all_equal(std::get<PeriodicTail>(x.tail()).block, x.base() - 1);
}

std::optional<TerminatingForm> terminating_form(const NAryExpansion& x)
{
    if (!is_terminating(x)) {
        return std::nullopt;
    }
    const Rational value = to_rational(x);
    TerminatingForm form;
    if (value == 1) {
        form.is_one = true;
        return form;
    }
    NAryExpansion canonical = from_rational(value, x.base());
    ensure(canonical.has_zero_tail(), "terminating value with a periodic canonical form");
    form.digits = canonical.prefix();
    return form;
}

NAryExpansion alternate_representation(const NAryExpansion& x)
{
    if (!x.has_closed_form()) {
        fail(Errc::NotClosedForm, "generated expansions have no alternate representation");
    }
    const std::int64_t n = x.base();
    if (x.has_zero_tail()) {
        const auto& p = x.prefix();
        auto last = std::find_if(p.rbegin(), p.rend(), [](Digit d) { return d != 0; });
        if (last == p.rend()) {
            fail(Errc::NoAlternate, "zero has a single expansion");
        }
        const auto l = static_cast<std::size_t>(std::distance(last, p.rend())) - 1;
        std::vector<Digit> prefix(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(l) + 1);
        prefix[l] -= 1;
        return NAryExpansion::periodic(n, std::move(prefix), {n - 1});
    }
    if (is_terminating(x)) {
        const Rational value = to_rational(x);
        if (value == 1) {
            fail(Errc::NoAlternate, "1 has no expansion of the form 0.x_1..x_l");
        }
        return from_rational(value, n);
    }
    fail(Errc::NoAlternate, "non-terminating values have a single expansion");
}

namespace {

std::vector<Digit> parse_digit_list(std::string_view body, std::int64_t base, bool bracketed, std::string_view whole)
{
    std::vector<Digit> out;
    if (body.empty()) {
        return out;
    }
    if (!bracketed) {
        for (char c : body) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                fail(Errc::ParseError, "bad digit '" + std::string(1, c) + "' in '" + std::string(whole) + "'");
            }
            out.push_back(c - '0');
        }
    } else {
        std::size_t start = 0;
        while (start <= body.size()) {
            const auto comma = body.find(',', start);
            const auto token = body.substr(start, comma == std::string_view::npos ? body.npos : comma - start);
            if (token.empty()) {
                fail(Errc::ParseError, "empty digit in '" + std::string(whole) + "'");
            }
            Digit d = 0;
            for (char c : token) {
                if (!std::isdigit(static_cast<unsigned char>(c))) {
                    fail(Errc::ParseError, "bad digit '" + std::string(token) + "' in '" + std::string(whole) + "'");
                }
                d = d * 10 + (c - '0');
                if (d > base) {
                    break;
                }
            }
            out.push_back(d);
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
    }
    check_digits(out, base);
    return out;
}

} // namespace

NAryExpansion parse_expansion(std::string_view text, std::int64_t base)
{
    const std::string_view whole = text;
    if (text == "0") {
        return NAryExpansion::zero(base);
    }
    if (text.substr(0, 2) != "0.") {
        fail(Errc::ParseError, "expansion must start with '0.', got '" + std::string(whole) + "'");
    }
    text.remove_prefix(2);
    bool bracketed = base > 10;
    std::vector<Digit> prefix;
    if (!text.empty() && text.front() == '[') {
        const auto close = text.find(']');
        if (close == std::string_view::npos) {
            fail(Errc::ParseError, "unterminated '[' in '" + std::string(whole) + "'");
        }
        bracketed = true;
        prefix = parse_digit_list(text.substr(1, close - 1), base, true, whole);
        text.remove_prefix(close + 1);
    } else {
        const auto open = text.find('(');
        const auto body = text.substr(0, open);
        if (bracketed && !body.empty()) {
            fail(Errc::ParseError, "bases above 10 need bracketed digits, e.g. 0.[10,0](7,3)");
        }
        prefix = parse_digit_list(body, base, false, whole);
        text.remove_prefix(body.size());
    }
    if (text.empty()) {
        return NAryExpansion(base, std::move(prefix));
    }
    if (text.front() != '(' || text.back() != ')') {
        fail(Errc::ParseError, "trailing text in '" + std::string(whole) + "'");
    }
    auto block = parse_digit_list(text.substr(1, text.size() - 2), base, bracketed, whole);
    if (block.empty()) {
        fail(Errc::EmptyPeriod, "empty periodic block in '" + std::string(whole) + "'");
    }
    return NAryExpansion::periodic(base, std::move(prefix), std::move(block));
}

std::string format_digits(const std::vector<Digit>& digits, std::int64_t base)
{
    std::string out;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (base > 10 && i > 0) {
            out += ',';
        }
        out += std::to_string(digits[i]);
    }
    return out;
}

std::string format_expansion(const NAryExpansion& x)
{
    const std::int64_t n = x.base();
    const auto* periodic = std::get_if<PeriodicTail>(&x.tail());
    if (x.prefix().empty() && x.has_zero_tail()) {
        return "0";
    }
    std::string out = "0.";
    if (n > 10) {
        if (!x.prefix().empty()) {
            out += "[" + format_digits(x.prefix(), n) + "]";
        }
    } else {
        out += format_digits(x.prefix(), n);
    }
    if (periodic != nullptr) {
        out += "(" + format_digits(periodic->block, n) + ")";
    } else if (!x.has_closed_form()) {
        out += "...";
    }
    return out;
}

} // namespace ddct
