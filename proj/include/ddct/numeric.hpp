#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace ddct {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// 50 decimal digits; used only for logarithms of exact counts.
using Float50 = boost::multiprecision::cpp_bin_float_50;

BigInt ipow(const BigInt& base, std::uint64_t exponent);
BigInt ipow(std::int64_t base, std::uint64_t exponent);

// Floor and ceiling of a/b for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

BigInt floor(const Rational& r);

// Always "p/q", including integers ("1/1"), so the wire form is uniform.
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

// Accepts "p/q" or a bare integer "p". Decimal notation is rejected.
Rational parse_rational(std::string_view text);

// Natural log of a positive integer or rational, to ~50 significant digits.
Float50 log_big(const BigInt& v);
Float50 log_big(const Rational& v);

// Fixed-point decimal rendering with `digits` places after the point.
std::string decimal(const Float50& v, int digits);
std::string decimal(const Rational& v, int digits);

} // namespace ddct
