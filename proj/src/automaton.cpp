#include "ddct/automaton.hpp"

#include <algorithm>

#include "ddct/error.hpp"

namespace ddct {

namespace {

constexpr unsigned offset_bit(int delta)
{
    return 1U << static_cast<unsigned>(delta + 1);
}

void check_shift(const DigitSet& digits, Digit shift)
{
    if (shift < 0 || shift >= digits.base()) {
        fail(Errc::DigitOutOfRange, "translation digit " + std::to_string(shift) + " outside [0, " +
                                        std::to_string(digits.base() - 1) + "]");
    }
}

std::vector<OffsetTransitionMatrix> all_matrices(const DigitSet& digits)
{
    std::vector<OffsetTransitionMatrix> out;
    for (Digit x = 0; x < digits.base(); ++x) {
        out.push_back(transition_matrix(digits, x));
    }
    return out;
}

// Live-offset support: bit 0 for -1, bit 1 for 0. Offset +1 is left out since
// its pairs never reach {-1, 0} again.
unsigned step_support(unsigned mask, const OffsetTransitionMatrix& m)
{
    unsigned out = 0;
    for (int from = -1; from <= 0; ++from) {
        if (!(mask & offset_bit(from))) {
            continue;
        }
        for (int to = -1; to <= 0; ++to) {
            if (m.at(to, from) > 0) {
                out |= offset_bit(to);
            }
        }
    }
    return out;
}

bool support_survives(const std::vector<OffsetTransitionMatrix>& matrices, const std::vector<Digit>& prefix,
                      const std::vector<Digit>& block)
{
    unsigned mask = offset_bit(0);
    for (Digit x : prefix) {
        mask = step_support(mask, matrices[static_cast<std::size_t>(x)]);
        if (mask == 0) {
            return false;
        }
    }
    // The support at the start of a period fixes everything after it.
    std::vector<unsigned> seen;
    while (std::find(seen.begin(), seen.end(), mask) == seen.end()) {
        seen.push_back(mask);
        for (Digit x : block) {
            mask = step_support(mask, matrices[static_cast<std::size_t>(x)]);
            if (mask == 0) {
                return false;
            }
        }
    }
    return true;
}

// Exact census at the canonical level of a terminating t. The value 1 sits
// at level 0 with the single pair at offset +1.
AlignmentState terminating_state(const DigitSet& digits, const TerminatingForm& form)
{
    if (form.is_one) {
        return AlignmentState{0, {0, 0, 1}};
    }
    AlignmentState state = AlignmentState::seed();
    for (Digit x : form.digits) {
        state = evolve(state, transition_matrix(digits, x));
    }
    return state;
}

bool touch_points_meet(const DigitSet& digits, const AlignmentState& state)
{
    // Adjacent cells share an endpoint, which lies in both copies of C exactly
    // when the right end of a cell is in C, i.e. when d_m = n - 1.
    return (state.at(-1) > 0 || state.at(1) > 0) && digits.largest() == digits.base() - 1;
}

bool alternate_survives(const DigitSet& digits, const NAryExpansion& t)
{
    try {
        const NAryExpansion alt = alternate_representation(t);
        const auto* block = std::get_if<PeriodicTail>(&alt.tail());
        if (block == nullptr) {
            return false;
        }
        return support_survives(all_matrices(digits), alt.prefix(), block->block);
    } catch (const Error& e) {
        if (e.code() == Errc::NoAlternate) {
            return false;
        }
        throw;
    }
}

std::vector<Digit> tail_block(const NAryExpansion& t)
{
    if (const auto* periodic = std::get_if<PeriodicTail>(&t.tail())) {
        return periodic->block;
    }
    return {0};
}

Matrix2 live_block(const OffsetTransitionMatrix& m)
{
    Matrix2 out;
    for (int to = -1; to <= 0; ++to) {
        for (int from = -1; from <= 0; ++from) {
            out[static_cast<std::size_t>(to + 1)][static_cast<std::size_t>(from + 1)] = m.at(to, from);
        }
    }
    return out;
}

Matrix2 multiply(const Matrix2& a, const Matrix2& b)
{
    Matrix2 out;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    return out;
}

std::string log_of(std::int64_t base, const std::string& arg)
{
    return "log_" + std::to_string(base) + "(" + arg + ")";
}

std::string over_period(std::string expr, std::uint64_t period)
{
    return period == 1 ? expr : expr + "/" + std::to_string(period);
}

} // namespace

OffsetTransitionMatrix transition_matrix(const DigitSet& digits, Digit shift)
{
    check_shift(digits, shift);
    OffsetTransitionMatrix m;
    m.shift = shift;
    const std::int64_t n = digits.base();
    for (int from = -1; from <= 1; ++from) {
        for (Digit d : digits.digits()) {
            for (Digit e : digits.digits()) {
                const std::int64_t to = n * from + (e - d) + shift;
                if (to >= -1 && to <= 1) {
                    ++m.entries[static_cast<std::size_t>(to + 1)][static_cast<std::size_t>(from + 1)];
                }
            }
        }
    }
    return m;
}

AlignmentState evolve(const AlignmentState& state, const OffsetTransitionMatrix& m)
{
    AlignmentState out;
    out.level = state.level + 1;
    for (int to = -1; to <= 1; ++to) {
        for (int from = -1; from <= 1; ++from) {
            if (const auto c = m.at(to, from); c != 0 && state.at(from) != 0) {
                out.at(to) += state.at(from) * c;
            }
        }
    }
    return out;
}

CensusSequence census_sequence(const DigitSet& digits, const NAryExpansion& t, std::uint64_t depth)
{
    if (t.base() != digits.base()) {
        fail(Errc::DigitOutOfRange, "expansion base differs from the digit set base");
    }
    CensusSequence seq;
    seq.digits = leading_digits(t, depth);
    seq.states.reserve(depth + 1);
    seq.states.push_back(AlignmentState::seed());
    const auto matrices = all_matrices(digits);
    for (Digit x : seq.digits) {
        seq.states.push_back(evolve(seq.states.back(), matrices[static_cast<std::size_t>(x)]));
    }
    return seq;
}

SubsetCensus refine(const SubsetCensus& census, const DigitSet& digits, Digit shift)
{
    check_shift(digits, shift);
    const std::int64_t n = digits.base();
    SubsetCensus out;
    out.level = census.level + 1;
    for (unsigned mask = 1; mask < 8; ++mask) {
        if (census.by_mask[mask] == 0) {
            continue;
        }
        for (Digit d : digits.digits()) {
            unsigned child = 0;
            for (int delta = -1; delta <= 1; ++delta) {
                if (!(mask & offset_bit(delta))) {
                    continue;
                }
                for (Digit e : digits.digits()) {
                    const std::int64_t to = n * delta + (e - d) + shift;
                    if (to >= -1 && to <= 1) {
                        child |= offset_bit(static_cast<int>(to));
                    }
                }
            }
            if (child != 0) {
                out.by_mask[child] += census.by_mask[mask];
            }
        }
    }
    return out;
}

std::vector<SubsetCensus> refined_census_sequence(const DigitSet& digits, const NAryExpansion& t,
                                                  std::uint64_t depth)
{
    std::vector<SubsetCensus> out{SubsetCensus::seed()};
    for (Digit x : leading_digits(t, depth)) {
        out.push_back(refine(out.back(), digits, x));
    }
    return out;
}

bool is_member(const DigitSet& digits, const NAryExpansion& t)
{
    if (!t.has_closed_form()) {
        fail(Errc::NotDecidable, "membership needs a zero or periodic tail");
    }
    if (t.base() != digits.base()) {
        fail(Errc::DigitOutOfRange, "expansion base differs from the digit set base");
    }
    if (const auto form = terminating_form(t)) {
        const AlignmentState state = terminating_state(digits, *form);
        if (state.at(0) > 0 || touch_points_meet(digits, state)) {
            return true;
        }
        return alternate_survives(digits, t);
    }
    return support_survives(all_matrices(digits), t.prefix(), tail_block(t));
}

std::string SpectralRadius::exact() const
{
    if (integer) {
        return integer->str();
    }
    return "(" + trace.str() + "+sqrt(" + disc.str() + "))/2";
}

SpectralRadius spectral_radius(const Matrix2& m, const Rational& width)
{
    SpectralRadius r;
    r.trace = m[0][0] + m[1][1];
    r.det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    r.disc = r.trace * r.trace - 4 * r.det;
    ensure(r.disc >= 0, "negative discriminant for a nonnegative matrix");
    const BigInt root = boost::multiprecision::sqrt(r.disc);
    if (root * root == r.disc) {
        // trace and sqrt(disc) have equal parity since trace² - disc = 4·det.
        r.integer = (r.trace + root) / 2;
        r.lower = r.upper = Rational(*r.integer);
        return r;
    }
    // p(x) = x² - trace·x + det is increasing right of trace/2, where it is
    // -disc/4 < 0; sqrt(disc) <= (disc + 1)/2 bounds the root from above.
    auto p = [&](const Rational& x) { return x * x - Rational(r.trace) * x + Rational(r.det); };
    Rational lo(r.trace, 2);
    Rational hi = lo + Rational(r.disc + 1, 2);
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        (p(mid) < 0 ? lo : hi) = mid;
    }
    r.lower = lo;
    r.upper = hi;
    return r;
}

PeriodGrowth period_growth(const DigitSet& digits, const NAryExpansion& t, const Rational& width)
{
    if (!t.has_closed_form()) {
        fail(Errc::NotPeriodic, "generated expansions have no period");
    }
    if (is_terminating(t)) {
        fail(Errc::TerminatingInput, "terminating t has no period product");
    }
    if (!is_member(digits, t)) {
        fail(Errc::NotMember, format_expansion(t) + " is not in F");
    }
    const auto matrices = all_matrices(digits);
    const auto block = tail_block(t);

    PeriodGrowth g;
    g.preperiod = t.prefix().size();
    g.period = block.size();

    AlignmentState start = AlignmentState::seed();
    for (Digit x : t.prefix()) {
        start = evolve(start, matrices[static_cast<std::size_t>(x)]);
    }
    g.product = {{{1, 0}, {0, 1}}};
    for (Digit x : block) {
        g.product = multiply(live_block(matrices[static_cast<std::size_t>(x)]), g.product);
    }

    // Offsets reachable from the live support at the start of a period.
    std::array<bool, 2> keep{start.at(-1) > 0, start.at(0) > 0};
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t from = 0; from < 2; ++from) {
            for (std::size_t to = 0; to < 2; ++to) {
                if (keep[from] && g.product[to][from] > 0) {
                    keep[to] = true;
                }
            }
        }
    }
    // Drop offsets that feed nothing kept; they add at most a bounded term.
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t from = 0; from < 2; ++from) {
            bool feeds = false;
            for (std::size_t to = 0; to < 2; ++to) {
                feeds = feeds || (keep[to] && g.product[to][from] > 0);
            }
            keep[from] = keep[from] && feeds;
        }
    }
    ensure(keep[0] || keep[1], "member t with no surviving offset");

    for (std::size_t i = 0; i < 2; ++i) {
        if (keep[i]) {
            g.offsets.push_back(static_cast<int>(i) - 1);
        }
    }
    if (g.offsets.size() == 2) {
        g.radius = spectral_radius(g.product, width);
    } else {
        const std::size_t i = static_cast<std::size_t>(g.offsets[0] + 1);
        Matrix2 single{{{g.product[i][i], 0}, {0, 0}}};
        g.radius = spectral_radius(single, width);
    }
    return g;
}

std::optional<Rational> rational_log(std::int64_t base, const BigInt& value)
{
    ensure(value >= 1, "logarithm of a non-positive count");
    if (value == 1) {
        return Rational(0);
    }
    BigInt power = 1;
    for (std::int64_t a = 1; a <= 64; ++a) {
        power *= value;
        BigInt rest = power;
        std::int64_t b = 0;
        while (rest % base == 0) {
            rest /= base;
            ++b;
        }
        if (rest == 1) {
            return Rational(b, a);
        }
    }
    return std::nullopt;
}

std::string log_string(std::int64_t base, const BigInt& value)
{
    return log_of(base, value.str());
}

DimensionReport box_dimension_periodic(const DigitSet& digits, const NAryExpansion& t, const Rational& width)
{
    const std::int64_t n = digits.base();
    const Float50 log_n = log_big(BigInt(n));
    DimensionReport report;
    if (t.has_closed_form()) {
        if (const auto form = terminating_form(t)) {
            const AlignmentState state = terminating_state(digits, *form);
            if (state.at(0) > 0) {
                const BigInt m = digits.size();
                report.kind = DimensionKind::TerminatingCopy;
                report.exact = log_string(n, m);
                report.rational = rational_log(n, m);
                report.value = log_big(m) / log_n;
                return report;
            }
            if (!is_member(digits, t)) {
                fail(Errc::NotMember, format_expansion(t) + " is not in F");
            }
            report.kind = DimensionKind::TerminatingPoints;
            report.exact = "0";
            report.rational = Rational(0);
            report.value = 0;
            return report;
        }
    }
    PeriodGrowth g = period_growth(digits, t, width);
    const SpectralRadius& rho = g.radius;
    const Rational per_period(1, static_cast<std::int64_t>(g.period));
    report.kind = DimensionKind::Periodic;
    if (rho.integer) {
        report.exact = over_period(log_string(n, *rho.integer), g.period);
        if (auto r = rational_log(n, *rho.integer)) {
            report.rational = *r * per_period;
        }
        report.value = log_big(*rho.integer) / (log_n * g.period);
    } else {
        report.exact = over_period(log_of(n, rho.exact()), g.period);
        if (rho.trace == 0 && rho.det < 0) {
            // rho = sqrt(-det)
            if (auto r = rational_log(n, -rho.det)) {
                report.rational = *r * per_period / 2;
            }
        }
        const Float50 root = (Float50(rho.trace) + boost::multiprecision::sqrt(Float50(rho.disc))) / 2;
        report.value = boost::multiprecision::log(root) / (log_n * g.period);
    }
    report.growth = std::move(g);
    return report;
}

std::vector<SlopePoint> count_slope(const DigitSet& digits, const NAryExpansion& t, std::uint64_t depth)
{
    const auto seq = census_sequence(digits, t, depth);
    const Float50 log_n = log_big(BigInt(digits.base()));
    std::vector<SlopePoint> out;
    out.reserve(depth);
    for (std::uint64_t k = 1; k <= depth; ++k) {
        SlopePoint point;
        point.level = k;
        point.live = seq.states[k].live();
        if (point.live > 0) {
            point.slope = log_big(point.live) / (log_n * k);
        }
        out.push_back(std::move(point));
    }
    return out;
}

} // namespace ddct
