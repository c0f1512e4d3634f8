#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ddct/digits.hpp"
#include "ddct/numeric.hpp"
#include "ddct/oracle.hpp"

namespace ddct {

/// Consecutive differences δ_j < δ_{j+1} whose images under σ_δ leave a gap.
struct GapWitness {
    std::size_t index = 0;  // j, 0-based position in the sorted difference set
    Digit lower = 0;        // δ_j
    Digit upper = 0;        // δ_{j+1}
};

struct LogValue {
    std::string exact;                 // e.g. "log_5(3)"
    std::optional<Rational> rational;  // set when the logarithm is rational
    Float50 value = 0;
};

struct FReport {
    bool is_interval = false;
    Rational right_endpoint;             // d_m/(n-1), the largest point of F
    std::optional<GapWitness> gap_witness;
    bool osc_holds = false;
    std::optional<LogValue> f_dimension; // log_n #Δ, present iff osc_holds
};

/// Interval criterion 2·d_m >= (n-1)(δ_{j+1} - δ_j) for all j. Fills
/// is_interval, right_endpoint and gap_witness; the witness is searched on
/// the nonnegative half of the (symmetric) difference set first.
FReport f_is_interval(const DigitSet& digits);

/// Open-set condition 2·d_m <= (n-1)(δ_{j+1} - δ_j) for all j, and the
/// resulting dimension log_n #Δ. Fills osc_holds and f_dimension.
FReport osc_and_dimension(const DigitSet& digits);

/// Both halves together.
FReport f_report(const DigitSet& digits);

/// For all-even digit sets: whether D - D = {-n+1, ..., -2, 0, 2, ..., n-1}
/// (false for even n). Empty when some digit is odd.
std::optional<bool> even_digit_interval(const DigitSet& digits);

/// Level k of the IFS {σ_δ : δ in Δ} applied to I = [-d_m/(n-1), d_m/(n-1)].
/// Image number i is [c_i/n^k - w, c_i/n^k + w] with w = d_m/((n-1)n^k);
/// in units of 1/((n-1)n^k) its endpoints are the integers c_i(n-1) ± d_m.
struct IfsLevel {
    std::int64_t base = 0;
    std::uint64_t level = 0;
    Digit largest = 0;                 // d_m
    std::vector<std::int64_t> centers; // distinct c_i, increasing

    /// Level-k cells of the window [-1, 1] (origin n^k, as difference_level)
    /// whose interior meets some image.
    LevelIntervalSet cells() const;
    /// Whether the images cover I without gaps.
    bool covers_hull() const;
    /// Maximal closed intervals of the union of images.
    std::vector<std::pair<Rational, Rational>> runs() const;
};

IfsLevel g_ifs_level(const DigitSet& digits, std::uint64_t level, std::uint64_t budget = kDefaultBudget);

/// (-F) ∪ F = h·B - d_m/(n-1) for h = common divisor of D; B is either the
/// whole interval [0, 1] or the deleted digits set with digits
/// {e_i - e_j + e_m}, e_j = d_j/h.
struct BRepresentation {
    std::int64_t h = 0;
    std::vector<Digit> b_digits;  // {e_i - e_j + e_m}, increasing
    bool is_interval = false;     // b_digits = {0, ..., n-1}
    std::optional<DigitSet> b;    // present iff !is_interval
    Rational shift;               // d_m/(n-1)
};

/// NoCommonDivisor when h = 1.
BRepresentation b_representation(const DigitSet& digits);

/// Exact level-k check of the identity against g_ifs_level(D, k).
bool verify_b_representation(const DigitSet& digits, const BRepresentation& rep, std::uint64_t level,
                             std::uint64_t budget = kDefaultBudget);

} // namespace ddct
