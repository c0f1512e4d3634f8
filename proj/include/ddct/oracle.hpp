#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ddct/digits.hpp"
#include "ddct/expansion.hpp"
#include "ddct/numeric.hpp"

namespace ddct {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// A set of level-k n-ary cells. Position p stands for the closed interval
/// [(p - origin)/n^k, (p - origin + 1)/n^k]; origin is 0 for subsets of
/// [0, 1] and n^k for the window [-1, 1].
struct LevelIntervalSet {
    std::int64_t base = 0;
    std::uint64_t level = 0;
    BigInt origin = 0;
    std::vector<BigInt> positions;  // strictly increasing

    std::size_t size() const noexcept { return positions.size(); }
    bool empty() const noexcept { return positions.empty(); }
    bool contains(const BigInt& p) const;
    Rational left_endpoint(std::size_t i) const;

    bool operator==(const LevelIntervalSet&) const = default;
};

/// Pair census by alignment offset delta = position(J) - position(I):
/// -1 potential interval, 0 interval, +1 potentially empty.
struct AlignmentState {
    std::uint64_t level = 0;
    std::array<BigInt, 3> counts{};

    static AlignmentState seed() { return AlignmentState{0, {0, 1, 0}}; }

    BigInt& at(int delta) { return counts[static_cast<std::size_t>(delta + 1)]; }
    const BigInt& at(int delta) const { return counts[static_cast<std::size_t>(delta + 1)]; }

    /// Pairs that can still carry points when t does not terminate.
    BigInt live() const { return at(-1) + at(0); }
    BigInt total() const { return at(-1) + at(0) + at(1); }

    bool operator==(const AlignmentState&) const = default;
};

/// Census of intervals I in C_k grouped by the set of offsets at which I has
/// a partner J. Mask bit 0 is offset -1, bit 1 offset 0, bit 2 offset +1;
/// mask 0 (no partner) is not counted.
struct SubsetCensus {
    std::uint64_t level = 0;
    std::array<BigInt, 8> by_mask{};

    static SubsetCensus seed() { SubsetCensus s; s.by_mask[0b010] = 1; return s; }

    /// Intervals simultaneously in the interval and potential interval case.
    BigInt interval_and_potential() const;
    /// Intervals in the interval case but not the potential interval case.
    BigInt interval_only() const;
    /// Pair counts recovered from the subset counts.
    AlignmentState pairs() const;

    bool operator==(const SubsetCensus&) const = default;
};

/// Positions of the m^k cells of C_k.
LevelIntervalSet level_intervals(const DigitSet& digits, std::uint64_t level,
                                 std::uint64_t budget = kDefaultBudget);

/// Brute-force pair census of C_k against C_k + floor_k(t).
AlignmentState pair_census(const DigitSet& digits, const NAryExpansion& t, std::uint64_t level,
                           std::uint64_t budget = kDefaultBudget);

/// Brute-force census of C_k cells by their partner-offset set.
SubsetCensus subset_census(const DigitSet& digits, const NAryExpansion& t, std::uint64_t level,
                           std::uint64_t budget = kDefaultBudget);

/// Cells of C_k kept in the level-k cover of C ∩ (C + t): partners at offsets
/// {-1, 0} for non-terminating t, and cells meeting C_k + t exactly once t
/// has terminated at or before level k.
LevelIntervalSet intersect_levels(const DigitSet& digits, const NAryExpansion& t, std::uint64_t level,
                                  std::uint64_t budget = kDefaultBudget);

/// Level-k cells of the window [-1, 1] covered by C_k - C_k, computed from
/// all pairwise position differences. A realized difference c covers the two
/// cells [c-1, c] and [c, c+1].
LevelIntervalSet difference_level(const DigitSet& digits, std::uint64_t level,
                                  std::uint64_t budget = kDefaultBudget);

/// Throws BudgetExceeded when count > budget.
void check_budget(const BigInt& count, std::uint64_t budget, const char* what);

} // namespace ddct
