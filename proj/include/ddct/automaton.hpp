#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ddct/digits.hpp"
#include "ddct/expansion.hpp"
#include "ddct/numeric.hpp"
#include "ddct/oracle.hpp"

namespace ddct {

/// M[δ'][δ] = #{(d, e) in D² : nδ + (e - d) + x = δ'} for δ, δ' in {-1, 0, +1}.
/// Pairs leaving {-1, 0, +1} never come back, so the 3x3 block is exact.
struct OffsetTransitionMatrix {
    Digit shift = 0;
    std::array<std::array<std::uint32_t, 3>, 3> entries{};

    std::uint32_t at(int to, int from) const
    {
        return entries[static_cast<std::size_t>(to + 1)][static_cast<std::size_t>(from + 1)];
    }

    bool operator==(const OffsetTransitionMatrix&) const = default;
};

OffsetTransitionMatrix transition_matrix(const DigitSet& digits, Digit shift);

AlignmentState evolve(const AlignmentState& state, const OffsetTransitionMatrix& m);

struct CensusSequence {
    std::vector<Digit> digits;           // t_1 .. t_depth
    std::vector<AlignmentState> states;  // levels 0 .. depth
};

CensusSequence census_sequence(const DigitSet& digits, const NAryExpansion& t, std::uint64_t depth);

/// One step of the refined automaton: intervals grouped by the offsets at
/// which they have partners, rather than pairs grouped by offset.
SubsetCensus refine(const SubsetCensus& census, const DigitSet& digits, Digit shift);

/// Refined censuses for levels 0 .. depth.
std::vector<SubsetCensus> refined_census_sequence(const DigitSet& digits, const NAryExpansion& t,
                                                  std::uint64_t depth);

/// Whether t lies in F = {t : C ∩ (C + t) nonempty}. Needs a zero or
/// periodic tail; NotDecidable otherwise.
bool is_member(const DigitSet& digits, const NAryExpansion& t);

/// Largest root of x² - trace·x + det for a nonnegative integer matrix,
/// kept exact (as an integer or (trace + sqrt(disc))/2) plus a rational
/// enclosure [lower, upper].
struct SpectralRadius {
    BigInt trace;
    BigInt det;
    BigInt disc;
    std::optional<BigInt> integer;  // set when the radius is an integer
    Rational lower;
    Rational upper;

    std::string exact() const;
};

using Matrix2 = std::array<std::array<BigInt, 2>, 2>;

SpectralRadius spectral_radius(const Matrix2& m, const Rational& width);

/// Growth data of a non-terminating periodic t: the period product
/// restricted to the live offsets {-1, 0} it can reach.
struct PeriodGrowth {
    std::uint64_t period = 0;
    std::uint64_t preperiod = 0;
    Matrix2 product{};         // rows/columns indexed by offsets -1, 0
    std::vector<int> offsets;  // the offsets kept after pruning
    SpectralRadius radius;
};

/// TerminatingInput for terminating t, NotPeriodic for generated tails,
/// NotMember when C ∩ (C + t) is empty.
PeriodGrowth period_growth(const DigitSet& digits, const NAryExpansion& t,
                           const Rational& width = Rational(1, BigInt(1'000'000'000'000'000)));

enum class DimensionKind {
    Periodic,          // log_n ρ / p from the period product
    TerminatingCopy,   // terminating t, contains a scaled copy of C
    TerminatingPoints  // terminating t, finitely many points
};

/// Minkowski dimension of C ∩ (C + t).
struct DimensionReport {
    DimensionKind kind = DimensionKind::Periodic;
    std::string exact;                // e.g. "log_3(2)/2", "log_3(2)", "0"
    std::optional<Rational> rational; // when the value is a rational number
    Float50 value = 0;
    std::optional<PeriodGrowth> growth;
};

DimensionReport box_dimension_periodic(const DigitSet& digits, const NAryExpansion& t,
                                       const Rational& width = Rational(1, BigInt(1'000'000'000'000'000)));

struct SlopePoint {
    std::uint64_t level = 0;
    BigInt live;                 // counts[-1] + counts[0]
    std::optional<Float50> slope; // log_n(live)/level; empty when live = 0
};

/// Slopes for levels 1 .. depth.
std::vector<SlopePoint> count_slope(const DigitSet& digits, const NAryExpansion& t, std::uint64_t depth);

/// log_n(value) as an exact string plus its rational value when
/// value^a = n^b for small a.
std::string log_string(std::int64_t base, const BigInt& value);
std::optional<Rational> rational_log(std::int64_t base, const BigInt& value);

} // namespace ddct
