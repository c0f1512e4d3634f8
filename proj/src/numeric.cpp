#include "ddct/numeric.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "ddct/error.hpp"

namespace ddct {

BigInt ipow(const BigInt& base, std::uint64_t exponent)
{
    BigInt result = 1;
    BigInt b = base;
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= b;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            b *= b;
        }
    }
    return result;
}

BigInt ipow(std::int64_t base, std::uint64_t exponent)
{
    return ipow(BigInt(base), exponent);
}

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;  // truncates toward zero
    if ((a % b != 0) && (a < 0)) {
        --q;
    }
    return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b)
{
    BigInt q = a / b;
    if ((a % b != 0) && (a > 0)) {
        ++q;
    }
    return q;
}

BigInt floor(const Rational& r)
{
    return floor_div(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

std::string to_string(const BigInt& v)
{
    return v.str();
}

std::string to_string(const Rational& r)
{
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) {
        fail(Errc::ParseError, "expected an integer in rational '" + std::string(whole) + "'");
    }
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            fail(Errc::ParseError, "rational must be written p/q, got '" + std::string(whole) + "'");
        }
        value = value * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        fail(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

Float50 log_big(const BigInt& v)
{
    ensure(v > 0, "log of a non-positive integer");
    // Split off a power of two so the conversion to Float50 never overflows.
    const auto bits = boost::multiprecision::msb(v);
    if (bits < 1000) {
        return boost::multiprecision::log(Float50(v));
    }
    const auto shift = bits - 200;
    BigInt top = v >> shift;
    return boost::multiprecision::log(Float50(top)) + Float50(shift) * boost::multiprecision::log(Float50(2));
}

Float50 log_big(const Rational& v)
{
    return log_big(boost::multiprecision::numerator(v)) - log_big(boost::multiprecision::denominator(v));
}

std::string decimal(const Float50& v, int digits)
{
    std::ostringstream out;
    out << std::fixed << std::setprecision(digits) << v;
    return out.str();
}

std::string decimal(const Rational& v, int digits)
{
    return decimal(Float50(boost::multiprecision::numerator(v)) / Float50(boost::multiprecision::denominator(v)),
                   digits);
}

} // namespace ddct
