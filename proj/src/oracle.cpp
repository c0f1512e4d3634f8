#include "ddct/oracle.hpp"

#include <algorithm>
#include <string>
#include <type_traits>

#include "ddct/error.hpp"

namespace ddct {

bool LevelIntervalSet::contains(const BigInt& p) const
{
    return std::binary_search(positions.begin(), positions.end(), p);
}

Rational LevelIntervalSet::left_endpoint(std::size_t i) const
{
    return Rational(positions.at(i) - origin, ipow(base, level));
}

BigInt SubsetCensus::interval_and_potential() const
{
    return by_mask[0b011] + by_mask[0b111];
}

BigInt SubsetCensus::interval_only() const
{
    return by_mask[0b010] + by_mask[0b110];
}

AlignmentState SubsetCensus::pairs() const
{
    AlignmentState out;
    out.level = level;
    for (unsigned mask = 1; mask < 8; ++mask) {
        for (int delta = -1; delta <= 1; ++delta) {
            if (mask & (1U << static_cast<unsigned>(delta + 1))) {
                out.at(delta) += by_mask[mask];
            }
        }
    }
    return out;
}

void check_budget(const BigInt& count, std::uint64_t budget, const char* what)
{
    if (count > budget) {
        fail(Errc::BudgetExceeded, std::string(what) + " needs " + count.str() + " entries, budget is " +
                                       std::to_string(budget));
    }
}

namespace {

using Machine = std::int64_t;

// Positions up to n^k (and differences of them) fit comfortably in 63 bits.
bool fits_machine(std::int64_t base, std::uint64_t level)
{
    return ipow(base, level) < (BigInt(1) << 60);
}

template <class Int>
Int narrow(const BigInt& v)
{
    if constexpr (std::is_same_v<Int, BigInt>) {
        return v;
    } else {
        return v.convert_to<Machine>();
    }
}

template <class Int>
std::vector<Int> enumerate_cells(const DigitSet& digits, std::uint64_t level)
{
    const Int n = digits.base();
    std::vector<Int> cells{Int(0)};
    for (std::uint64_t k = 0; k < level; ++k) {
        std::vector<Int> next;
        next.reserve(cells.size() * digits.size());
        // Children of a sorted list stay sorted since every digit is < n.
        for (const Int& a : cells) {
            for (Digit d : digits.digits()) {
                next.push_back(a * n + Int(d));
            }
        }
        cells = std::move(next);
    }
    return cells;
}

// For each i with cells[i] - shift in cells, set `bit` in flags[i]. Returns
// how many such i exist. Linear two-pointer scan over the sorted list.
template <class Int>
std::uint64_t mark_shifted(const std::vector<Int>& cells, const Int& shift, std::vector<std::uint8_t>* flags,
                           std::uint8_t bit)
{
    std::uint64_t count = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Int target = cells[i] - shift;
        while (j < cells.size() && cells[j] < target) {
            ++j;
        }
        if (j == cells.size()) {
            break;
        }
        if (cells[j] == target) {
            ++count;
            if (flags != nullptr) {
                (*flags)[i] |= bit;
            }
        }
    }
    return count;
}

BigInt truncation_value(const NAryExpansion& t, std::uint64_t level)
{
    BigInt v = 0;
    for (Digit d : leading_digits(t, level)) {
        v = v * t.base() + d;
    }
    return v;
}

void check_cell_budget(const DigitSet& digits, std::uint64_t level, std::uint64_t budget)
{
    check_budget(ipow(static_cast<std::int64_t>(digits.size()), level), budget, "C_k enumeration");
}

constexpr std::uint8_t offset_bit(int delta)
{
    return static_cast<std::uint8_t>(1U << static_cast<unsigned>(delta + 1));
}

template <class Int>
std::vector<std::uint8_t> offset_flags(const std::vector<Int>& cells, const BigInt& shift_t)
{
    std::vector<std::uint8_t> flags(cells.size(), 0);
    for (int delta = -1; delta <= 1; ++delta) {
        // (b + T) - a = delta  <=>  a - (T - delta) = b
        mark_shifted<Int>(cells, narrow<Int>(shift_t - delta), &flags, offset_bit(delta));
    }
    return flags;
}

template <class Int>
AlignmentState pair_census_impl(const DigitSet& digits, const BigInt& shift_t, std::uint64_t level)
{
    const auto cells = enumerate_cells<Int>(digits, level);
    AlignmentState state;
    state.level = level;
    for (int delta = -1; delta <= 1; ++delta) {
        state.at(delta) = mark_shifted<Int>(cells, narrow<Int>(shift_t - delta), nullptr, 0);
    }
    return state;
}

template <class Int>
SubsetCensus subset_census_impl(const DigitSet& digits, const BigInt& shift_t, std::uint64_t level)
{
    const auto cells = enumerate_cells<Int>(digits, level);
    const auto flags = offset_flags<Int>(cells, shift_t);
    std::array<std::uint64_t, 8> tally{};
    for (auto f : flags) {
        ++tally[f];
    }
    SubsetCensus out;
    out.level = level;
    for (unsigned mask = 1; mask < 8; ++mask) {
        out.by_mask[mask] = tally[mask];
    }
    return out;
}

template <class Int>
LevelIntervalSet intersect_impl(const DigitSet& digits, const BigInt& shift_t, std::uint64_t level,
                                std::uint8_t allowed)
{
    const auto cells = enumerate_cells<Int>(digits, level);
    const auto flags = offset_flags<Int>(cells, shift_t);
    LevelIntervalSet out{digits.base(), level, 0, {}};
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (flags[i] & allowed) {
            out.positions.emplace_back(cells[i]);
        }
    }
    return out;
}

template <class Int>
std::vector<BigInt> realized_differences(const DigitSet& digits, std::uint64_t level)
{
    const auto cells = enumerate_cells<Int>(digits, level);
    if constexpr (std::is_same_v<Int, Machine>) {
        // Differences lie in [-max, max]; a bitmap beats sorting when small.
        const Machine max = cells.back();
        if (max < (Machine(1) << 25)) {
            std::vector<std::uint8_t> seen(static_cast<std::size_t>(2 * max + 1), 0);
            for (Machine a : cells) {
                for (Machine b : cells) {
                    seen[static_cast<std::size_t>(a - b + max)] = 1;
                }
            }
            std::vector<BigInt> out;
            for (std::size_t i = 0; i < seen.size(); ++i) {
                if (seen[i]) {
                    out.emplace_back(static_cast<Machine>(i) - max);
                }
            }
            return out;
        }
    }
    std::vector<Int> diffs;
    diffs.reserve(cells.size() * cells.size());
    for (const Int& a : cells) {
        for (const Int& b : cells) {
            diffs.push_back(a - b);
        }
    }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    return std::vector<BigInt>(diffs.begin(), diffs.end());
}

} // namespace

LevelIntervalSet level_intervals(const DigitSet& digits, std::uint64_t level, std::uint64_t budget)
{
    check_cell_budget(digits, level, budget);
    LevelIntervalSet out{digits.base(), level, 0, {}};
    if (fits_machine(digits.base(), level)) {
        const auto cells = enumerate_cells<Machine>(digits, level);
        out.positions.assign(cells.begin(), cells.end());
    } else {
        out.positions = enumerate_cells<BigInt>(digits, level);
    }
    return out;
}

AlignmentState pair_census(const DigitSet& digits, const NAryExpansion& t, std::uint64_t level,
                           std::uint64_t budget)
{
    check_cell_budget(digits, level, budget);
    const BigInt shift_t = truncation_value(t, level);
    return fits_machine(digits.base(), level) ? pair_census_impl<Machine>(digits, shift_t, level)
                                              : pair_census_impl<BigInt>(digits, shift_t, level);
}

SubsetCensus subset_census(const DigitSet& digits, const NAryExpansion& t, std::uint64_t level,
                           std::uint64_t budget)
{
    check_cell_budget(digits, level, budget);
    const BigInt shift_t = truncation_value(t, level);
    return fits_machine(digits.base(), level) ? subset_census_impl<Machine>(digits, shift_t, level)
                                              : subset_census_impl<BigInt>(digits, shift_t, level);
}

LevelIntervalSet intersect_levels(const DigitSet& digits, const NAryExpansion& t, std::uint64_t level,
                                  std::uint64_t budget)
{
    check_cell_budget(digits, level, budget);
    BigInt shift_t;
    std::uint8_t allowed = offset_bit(-1) | offset_bit(0);
    std::optional<TerminatingForm> form;
    if (t.has_closed_form()) {
        form = terminating_form(t);
    }
    if (form && form->level() <= level) {
        // t is an exact multiple of n^-k: every touching cell meets C_k + t.
        const Rational scaled = to_rational(t) * Rational(ipow(digits.base(), level));
        ensure(boost::multiprecision::denominator(scaled) == 1, "terminating t is not on the level-k grid");
        shift_t = boost::multiprecision::numerator(scaled);
        allowed |= offset_bit(1);
    } else {
        shift_t = truncation_value(t, level);
    }
    return fits_machine(digits.base(), level) ? intersect_impl<Machine>(digits, shift_t, level, allowed)
                                              : intersect_impl<BigInt>(digits, shift_t, level, allowed);
}

LevelIntervalSet difference_level(const DigitSet& digits, std::uint64_t level, std::uint64_t budget)
{
    check_budget(ipow(static_cast<std::int64_t>(digits.size()), 2 * level), budget, "pairwise differences");
    const auto diffs = fits_machine(digits.base(), level) ? realized_differences<Machine>(digits, level)
                                                          : realized_differences<BigInt>(digits, level);
    LevelIntervalSet out{digits.base(), level, ipow(digits.base(), level), {}};
    // diffs is sorted, so {c-1, c} + origin comes out sorted after dedup.
    out.positions.reserve(2 * diffs.size());
    for (const BigInt& c : diffs) {
        for (BigInt p : {BigInt(c - 1 + out.origin), BigInt(c + out.origin)}) {
            if (out.positions.empty() || out.positions.back() < p) {
                out.positions.push_back(std::move(p));
            }
        }
    }
    return out;
}

} // namespace ddct
