#include "ddct/fgeometry.hpp"

#include <algorithm>

#include "ddct/automaton.hpp"
#include "ddct/error.hpp"

namespace ddct {

FReport f_is_interval(const DigitSet& digits)
{
    const std::int64_t n = digits.base();
    const Digit dm = digits.largest();
    const auto& delta = difference_set(digits).deltas;
    FReport report;
    report.right_endpoint = Rational(dm, n - 1);

    auto violates = [&](std::size_t j) { return 2 * dm < (n - 1) * (delta[j + 1] - delta[j]); };
    // Δ is symmetric, so a gap on the negative side mirrors one on the right.
    const auto zero = static_cast<std::size_t>(std::find(delta.begin(), delta.end(), 0) - delta.begin());
    for (std::size_t j = zero; j + 1 < delta.size() && !report.gap_witness; ++j) {
        if (violates(j)) {
            report.gap_witness = GapWitness{j, delta[j], delta[j + 1]};
        }
    }
    for (std::size_t j = 0; j < zero && !report.gap_witness; ++j) {
        if (violates(j)) {
            report.gap_witness = GapWitness{j, delta[j], delta[j + 1]};
        }
    }
    report.is_interval = !report.gap_witness;
    return report;
}

FReport osc_and_dimension(const DigitSet& digits)
{
    const std::int64_t n = digits.base();
    const Digit dm = digits.largest();
    const auto& delta = difference_set(digits).deltas;
    FReport report;
    report.right_endpoint = Rational(dm, n - 1);
    report.osc_holds = true;
    for (std::size_t j = 0; j + 1 < delta.size(); ++j) {
        if (2 * dm > (n - 1) * (delta[j + 1] - delta[j])) {
            report.osc_holds = false;
        }
    }
    if (report.osc_holds) {
        ensure(delta.size() > digits.size(), "open-set condition with #Δ <= #D");
        const BigInt count = delta.size();
        report.f_dimension = LogValue{log_string(n, count), rational_log(n, count),
                                      log_big(count) / log_big(BigInt(n))};
    }
    return report;
}

FReport f_report(const DigitSet& digits)
{
    FReport report = f_is_interval(digits);
    FReport osc = osc_and_dimension(digits);
    report.osc_holds = osc.osc_holds;
    report.f_dimension = std::move(osc.f_dimension);
    return report;
}

std::optional<bool> even_digit_interval(const DigitSet& digits)
{
    const auto d = digits.digits();
    if (std::any_of(d.begin(), d.end(), [](Digit x) { return x % 2 != 0; })) {
        return std::nullopt;
    }
    const std::int64_t n = digits.base();
    if (n % 2 == 0) {
        return false;
    }
    std::vector<Digit> evens;
    for (Digit x = -(n - 1); x <= n - 1; x += 2) {
        evens.push_back(x);
    }
    return difference_set(digits).deltas == evens;
}

LevelIntervalSet IfsLevel::cells() const
{
    const BigInt scale = base - 1;
    LevelIntervalSet out{base, level, ipow(base, level), {}};
    for (std::int64_t c : centers) {
        // Image in grid units: [(c(n-1) - d_m)/(n-1), (c(n-1) + d_m)/(n-1)].
        // Cell p overlaps its interior iff p + 1 > left and p < right.
        const BigInt lo = floor_div(BigInt(c) * scale - largest, scale);
        const BigInt hi = ceil_div(BigInt(c) * scale + largest, scale) - 1;
        for (BigInt p = lo; p <= hi; ++p) {
            BigInt pos = p + out.origin;
            if (out.positions.empty() || out.positions.back() < pos) {
                out.positions.push_back(std::move(pos));
            }
        }
    }
    return out;
}

bool IfsLevel::covers_hull() const
{
    const std::int64_t n1 = base - 1;
    for (std::size_t i = 0; i + 1 < centers.size(); ++i) {
        if (n1 * (centers[i + 1] - centers[i]) > 2 * largest) {
            return false;
        }
    }
    // The outermost images always end at ±d_m/(n-1); checked, not assumed.
    const BigInt edge = BigInt(largest) * ipow(base, level);
    return BigInt(centers.front()) * n1 - largest == -edge && BigInt(centers.back()) * n1 + largest == edge;
}

std::vector<std::pair<Rational, Rational>> IfsLevel::runs() const
{
    const BigInt unit = BigInt(base - 1) * ipow(base, level);
    std::vector<std::pair<Rational, Rational>> out;
    BigInt run_lo = 0;
    BigInt run_hi = 0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const BigInt lo = BigInt(centers[i]) * (base - 1) - largest;
        const BigInt hi = BigInt(centers[i]) * (base - 1) + largest;
        if (i > 0 && lo <= run_hi) {
            run_hi = std::max(run_hi, hi);
            continue;
        }
        if (i > 0) {
            out.emplace_back(Rational(run_lo, unit), Rational(run_hi, unit));
        }
        run_lo = lo;
        run_hi = hi;
    }
    out.emplace_back(Rational(run_lo, unit), Rational(run_hi, unit));
    return out;
}

IfsLevel g_ifs_level(const DigitSet& digits, std::uint64_t level, std::uint64_t budget)
{
    const std::int64_t n = digits.base();
    const auto& delta = difference_set(digits).deltas;
    // Distinct centers are integers of size <= n^k, so at most 2n^k + 1.
    const BigInt words = ipow(static_cast<std::int64_t>(delta.size()), level);
    const BigInt bound = 2 * ipow(n, level) + 1;
    check_budget(std::min(words, bound), budget, "IFS images");
    if (ipow(n, level) >= (BigInt(1) << 60)) {
        fail(Errc::BudgetExceeded, "IFS level too deep for machine-size centers");
    }

    IfsLevel out{n, level, digits.largest(), {0}};
    std::int64_t scale = 1;  // n^(j-1) at step j
    for (std::uint64_t j = 1; j <= level; ++j) {
        // σ_{δ_1}∘…∘σ_{δ_j} adds δ_1·n^(j-1) to the center of the inner word.
        std::vector<std::int64_t> next;
        next.reserve(out.centers.size() * delta.size());
        for (Digit d : delta) {
            for (std::int64_t c : out.centers) {
                next.push_back(d * scale + c);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        out.centers = std::move(next);
        scale *= n;
    }
    return out;
}

BRepresentation b_representation(const DigitSet& digits)
{
    const std::int64_t n = digits.base();
    BRepresentation rep;
    rep.h = common_divisor(digits);
    if (rep.h <= 1) {
        fail(Errc::NoCommonDivisor, "digits share no factor h > 1");
    }
    const Digit em = digits.largest() / rep.h;
    for (Digit di : digits.digits()) {
        for (Digit dj : digits.digits()) {
            rep.b_digits.push_back(di / rep.h - dj / rep.h + em);
        }
    }
    std::sort(rep.b_digits.begin(), rep.b_digits.end());
    rep.b_digits.erase(std::unique(rep.b_digits.begin(), rep.b_digits.end()), rep.b_digits.end());
    rep.is_interval = static_cast<std::int64_t>(rep.b_digits.size()) == n;
    if (!rep.is_interval) {
        rep.b = DigitSet(n, rep.b_digits);
    }
    rep.shift = Rational(digits.largest(), n - 1);
    return rep;
}

bool verify_b_representation(const DigitSet& digits, const BRepresentation& rep, std::uint64_t level,
                             std::uint64_t budget)
{
    const std::int64_t n = digits.base();
    const Digit dm = digits.largest();
    const IfsLevel g = g_ifs_level(digits, level, budget);
    if (rep.is_interval) {
        // h·[0, 1] - d_m/(n-1) = I needs h(n-1) = 2·d_m, and G_k must fill I.
        return rep.h * (n - 1) == 2 * dm && g.covers_hull();
    }
    // Images of B's hull [0, 2e_m/(n-1)] under level-k words of B, scaled by
    // h and shifted; in units of 1/((n-1)n^k) each has width 2·d_m like G_k.
    const LevelIntervalSet b_cells = level_intervals(*rep.b, level, budget);
    const BigInt nk = ipow(n, level);
    std::vector<BigInt> from_b;
    from_b.reserve(b_cells.size());
    for (const BigInt& beta : b_cells.positions) {
        from_b.push_back(rep.h * beta * (n - 1) - dm * nk);
    }
    std::vector<BigInt> from_g;
    from_g.reserve(g.centers.size());
    for (std::int64_t c : g.centers) {
        from_g.push_back(BigInt(c) * (n - 1) - dm);
    }
    const BigInt b_width = BigInt(rep.h) * rep.b_digits.back();
    return from_b == from_g && b_width == 2 * dm;
}

} // namespace ddct
