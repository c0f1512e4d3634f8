#include <doctest.h>

#include "ddct/error.hpp"
#include "ddct/numeric.hpp"

using namespace ddct;

TEST_CASE("integer powers and floor division")
{
    CHECK(ipow(3, 0) == 1);
    CHECK(ipow(3, 5) == 243);
    CHECK(ipow(BigInt(10), 30) == BigInt("1000000000000000000000000000000"));
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(-8, 2) == -4);
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(-7, 2) == -3);
    CHECK(floor(Rational(-1, 3)) == -1);
}

TEST_CASE("rationals print as p/q, integers included")
{
    CHECK(to_string(Rational(1)) == "1/1");
    CHECK(to_string(Rational(6, 7)) == "6/7");
    CHECK(to_string(Rational(-4, 8)) == "-1/2");
}

TEST_CASE("rational parsing")
{
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    for (const char* bad : {"0.5", "1/0", "", "1/", "a/b", "1/2/3"}) {
        CAPTURE(bad);
        try {
            parse_rational(bad);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::ParseError);
        }
    }
}

TEST_CASE("logarithms of exact values")
{
    using boost::multiprecision::abs;
    CHECK(abs(log_big(BigInt(8)) / log_big(BigInt(2)) - 3) < Float50("1e-45"));
    // 2^4000 overflows a double but not the shifted evaluation
    const Float50 big = log_big(ipow(2, 4000)) / log_big(BigInt(2));
    CHECK(abs(big - 4000) < Float50("1e-40"));
    CHECK(abs(log_big(Rational(1, 4)) + 2 * log_big(BigInt(2))) < Float50("1e-45"));
}

TEST_CASE("decimal rendering")
{
    CHECK(decimal(Rational(1, 3), 5) == "0.33333");
    CHECK(decimal(Rational(2), 3) == "2.000");
    CHECK(decimal(Float50(1) / 8, 4) == "0.1250");
}
