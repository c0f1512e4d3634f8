#pragma once

// Reference computations used by the tests. Each one works from the
// definitions directly (digit strings, point sets, interval unions) and
// shares no code path with the library routine it checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "ddct/digits.hpp"
#include "ddct/expansion.hpp"
#include "ddct/numeric.hpp"
#include "ddct/oracle.hpp"

namespace ref {

using ddct::BigInt;
using ddct::Digit;
using ddct::DigitSet;
using ddct::Rational;

// Every digit set for base n with exactly m digits, 0 included.
inline std::vector<DigitSet> digit_sets(std::int64_t n, std::size_t m)
{
    std::vector<DigitSet> out;
    const std::int64_t rest = n - 1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rest); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) + 1 != m) {
            continue;
        }
        std::vector<Digit> d{0};
        for (std::int64_t i = 0; i < rest; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                d.push_back(i + 1);
            }
        }
        out.emplace_back(n, d);
    }
    return out;
}

// Every digit set with base in [3, max_base] and 2 <= m < n.
inline std::vector<DigitSet> all_digit_sets(std::int64_t max_base)
{
    std::vector<DigitSet> out;
    for (std::int64_t n = 3; n <= max_base; ++n) {
        for (std::size_t m = 2; m < static_cast<std::size_t>(n); ++m) {
            for (auto& d : digit_sets(n, m)) {
                out.push_back(std::move(d));
            }
        }
    }
    return out;
}

// Integer a = Σ x_i n^(k-i) for every digit string x in D^k, counted in mixed radix.
inline std::vector<BigInt> positions(const DigitSet& d, std::uint64_t k)
{
    std::vector<BigInt> out;
    std::vector<std::size_t> idx(k, 0);
    const auto digits = d.digits();
    for (;;) {
        BigInt a = 0;
        for (std::size_t i = 0; i < k; ++i) {
            a = a * d.base() + digits[idx[i]];
        }
        out.push_back(a);
        std::size_t i = k;
        while (i > 0 && ++idx[i - 1] == digits.size()) {
            idx[--i] = 0;
        }
        if (i == 0) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline BigInt digit_value(const std::vector<Digit>& digits, std::int64_t n)
{
    BigInt v = 0;
    for (Digit x : digits) {
        v = v * n + x;
    }
    return v;
}

struct Census {
    std::map<int, BigInt> pairs;                 // offset -> ordered pair count
    std::map<unsigned, BigInt> intervals_by_mask; // partner offsets of each I
};

// Direct double loop over C_k x (C_k + T).
inline Census census(const DigitSet& d, const BigInt& shift, std::uint64_t k)
{
    const auto pos = positions(d, k);
    Census out;
    for (int delta = -1; delta <= 1; ++delta) {
        out.pairs[delta] = 0;
    }
    for (const BigInt& a : pos) {
        unsigned mask = 0;
        for (const BigInt& b : pos) {
            const BigInt delta = b + shift - a;
            if (delta >= -1 && delta <= 1) {
                const int dlt = delta.convert_to<int>();
                out.pairs[dlt] += 1;
                mask |= 1U << static_cast<unsigned>(dlt + 1);
            }
        }
        if (mask != 0) {
            out.intervals_by_mask[mask] += 1;
        }
    }
    return out;
}

// Merge closed rational intervals.
inline std::vector<std::pair<Rational, Rational>> merge(std::vector<std::pair<Rational, Rational>> iv)
{
    std::sort(iv.begin(), iv.end());
    std::vector<std::pair<Rational, Rational>> out;
    for (auto& [lo, hi] : iv) {
        if (!out.empty() && lo <= out.back().second) {
            out.back().second = std::max(out.back().second, hi);
        } else {
            out.emplace_back(lo, hi);
        }
    }
    return out;
}

// Grid cells [p, p+1] (p in [lo_cell, hi_cell)) whose interior meets the union.
inline std::vector<BigInt> cells_meeting(const std::vector<std::pair<Rational, Rational>>& merged,
                                         const BigInt& lo_cell, const BigInt& hi_cell)
{
    std::vector<BigInt> out;
    for (BigInt p = lo_cell; p < hi_cell; ++p) {
        const Rational a(p);
        const Rational b(p + 1);
        for (const auto& [lo, hi] : merged) {
            if (lo < b && a < hi) {
                out.push_back(p);
                break;
            }
        }
    }
    return out;
}

// Images σ_{δ_1}∘…∘σ_{δ_k}(I) over all words, in units of 1/n^k.
inline std::vector<std::pair<Rational, Rational>> ifs_images(const DigitSet& d, std::uint64_t k)
{
    std::vector<Digit> delta;
    for (Digit a : d.digits()) {
        for (Digit b : d.digits()) {
            delta.push_back(a - b);
        }
    }
    std::sort(delta.begin(), delta.end());
    delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
    const Rational half(d.largest(), d.base() - 1);
    std::vector<std::pair<Rational, Rational>> cur{{-half, half}};
    for (std::uint64_t j = 0; j < k; ++j) {
        std::vector<std::pair<Rational, Rational>> next;
        for (const auto& [lo, hi] : cur) {
            for (Digit x : delta) {
                // a new outermost σ_x shifts by x·n^j in units of 1/n^(j+1)
                const Rational shift(x * ddct::ipow(d.base(), j));
                next.emplace_back(lo + shift, hi + shift);
            }
        }
        cur = merge(std::move(next));
    }
    return cur;
}

inline std::mt19937_64& rng()
{
    static std::mt19937_64 engine(0x5eed'cafe'f00dULL);
    return engine;
}

inline Digit uniform_digit(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline std::vector<Digit> random_digits(std::int64_t n, std::size_t count)
{
    std::vector<Digit> out(count);
    for (auto& x : out) {
        x = uniform_digit(0, n - 1);
    }
    return out;
}

} // namespace ref
