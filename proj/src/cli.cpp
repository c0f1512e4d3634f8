#include "ddct/cli.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ddct/automaton.hpp"
#include "ddct/constructor.hpp"
#include "ddct/digits.hpp"
#include "ddct/error.hpp"
#include "ddct/expansion.hpp"
#include "ddct/fgeometry.hpp"
#include "ddct/oracle.hpp"

namespace ddct::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kDecimals = 30;

struct Options {
    std::optional<std::int64_t> base;
    std::optional<std::string> digits;
    std::optional<std::string> t;
    std::optional<std::string> alpha;
    std::optional<std::string> eps;
    std::optional<std::uint64_t> depth;
    std::optional<std::uint64_t> level;
    std::optional<std::uint64_t> budget;
    std::string format = "json";
    bool verify = false;
};

[[noreturn]] void missing(const char* flag, const std::string& command)
{
    fail(Errc::ParseError, std::string("'") + command + "' needs " + flag);
}

DigitSet digit_set(const Options& o, const std::string& command)
{
    if (!o.base) {
        missing("--base", command);
    }
    if (!o.digits) {
        missing("--digits", command);
    }
    std::vector<Digit> list;
    std::stringstream in(*o.digits);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
            fail(Errc::ParseError, "bad digit '" + token + "' in --digits");
        }
        list.push_back(std::stoll(token));
    }
    return DigitSet(*o.base, std::move(list));
}

NAryExpansion expansion(const Options& o, const std::string& command)
{
    if (!o.t) {
        missing("--t", command);
    }
    return parse_expansion(*o.t, *o.base);
}

Rational rational_flag(const std::optional<std::string>& value, const char* flag, const std::string& command)
{
    if (!value) {
        missing(flag, command);
    }
    return parse_rational(*value);
}

std::uint64_t budget(const Options& o)
{
    if (o.budget) {
        return *o.budget;
    }
    if (const char* env = std::getenv("DDCT_BUDGET")) {
        const std::string text(env);
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
            fail(Errc::ParseError, "DDCT_BUDGET must be a nonnegative integer, got '" + text + "'");
        }
        return std::stoull(text);
    }
    return kDefaultBudget;
}

Json digits_json(std::span<const Digit> digits)
{
    Json out = Json::array();
    for (Digit d : digits) {
        out.push_back(d);
    }
    return out;
}

Json optional_rational(const std::optional<Rational>& r)
{
    return r ? Json(to_string(*r)) : Json(nullptr);
}

Json log_json(const std::string& exact, const std::optional<Rational>& rational, const Float50& value)
{
    return Json{{"exact", exact},
                {"rational", optional_rational(rational)},
                {"decimal", decimal(value, kDecimals)},
                {"precision", kDecimals}};
}

Json slope_json(const std::optional<Float50>& slope)
{
    return slope ? Json(decimal(*slope, kDecimals)) : Json(nullptr);
}

std::string slope_cell(const std::optional<Float50>& slope)
{
    return slope ? decimal(*slope, kDecimals) : "";
}

Json census_json(const AlignmentState& s)
{
    return Json{{"-1", s.at(-1).str()}, {"0", s.at(0).str()}, {"+1", s.at(1).str()}};
}

Json base_json(const DigitSet& d)
{
    return Json{{"base", d.base()}, {"digits", digits_json(d.digits())}};
}

class Report {
public:
    Report(const Options& o, std::ostream& out) : csv_(o.format == "csv"), out_(out) {}

    bool csv() const { return csv_; }

    void json(const Json& j) { out_ << j.dump() << '\n'; }

    void row(const std::vector<std::string>& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            out_ << (i ? "," : "") << cells[i];
        }
        out_ << '\n';
    }

    void no_csv(const std::string& command)
    {
        if (csv_) {
            fail(Errc::ParseError, "'" + command + "' has no csv output");
        }
    }

private:
    bool csv_;
    std::ostream& out_;
};

void cmd_validate(const Options& o, Report& r)
{
    r.no_csv("validate");
    const DigitSet d = digit_set(o, "validate");
    Json j = base_json(d);
    j["valid"] = true;
    j["m"] = d.size();
    j["largest"] = d.largest();
    j["separated"] = is_separated(d);
    j["common_divisor"] = common_divisor(d);
    r.json(j);
}

void cmd_delta(const Options& o, Report& r)
{
    const DigitSet d = digit_set(o, "delta");
    const DifferenceSet delta = difference_set(d);
    if (r.csv()) {
        r.row({"delta"});
        for (Digit x : delta.deltas) {
            r.row({std::to_string(x)});
        }
        return;
    }
    Json j = base_json(d);
    j["delta"] = digits_json(delta.deltas);
    j["size"] = delta.size();
    r.json(j);
}

void cmd_f_test(const Options& o, Report& r)
{
    r.no_csv("f-test");
    const DigitSet d = digit_set(o, "f-test");
    const FReport f = f_report(d);
    Json j;
    j["is_interval"] = f.is_interval;
    j["right_endpoint"] = to_string(f.right_endpoint);
    if (f.gap_witness) {
        j["gap_witness"] = Json{{"index", f.gap_witness->index},
                                {"lower", f.gap_witness->lower},
                                {"upper", f.gap_witness->upper}};
    } else {
        j["gap_witness"] = nullptr;
    }
    j["osc_holds"] = f.osc_holds;
    j["f_dimension"] =
        f.f_dimension ? log_json(f.f_dimension->exact, f.f_dimension->rational, f.f_dimension->value) : Json(nullptr);
    const auto even = even_digit_interval(d);
    j["even_digit_interval"] = even ? Json(*even) : Json(nullptr);
    r.json(j);
}

void cmd_b_rep(const Options& o, Report& r)
{
    r.no_csv("b-rep");
    const DigitSet d = digit_set(o, "b-rep");
    const BRepresentation rep = b_representation(d);
    const std::uint64_t levels = o.level.value_or(5);
    for (std::uint64_t k = 0; k <= levels; ++k) {
        if (!verify_b_representation(d, rep, k, budget(o))) {
            throw InvariantViolation("representation fails at level " + std::to_string(k));
        }
    }
    Json j = base_json(d);
    j["h"] = rep.h;
    j["branch"] = rep.is_interval ? "interval" : "cantor";
    j["b_digits"] = digits_json(rep.b_digits);
    j["shift"] = to_string(rep.shift);
    j["verified_levels"] = levels;
    r.json(j);
}

void cmd_g_level(const Options& o, Report& r)
{
    const DigitSet d = digit_set(o, "g-level");
    if (!o.level) {
        missing("--level", "g-level");
    }
    const IfsLevel g = g_ifs_level(d, *o.level, budget(o));
    const auto runs = g.runs();
    if (r.csv()) {
        r.row({"lower", "upper"});
        for (const auto& [lo, hi] : runs) {
            r.row({to_string(lo), to_string(hi)});
        }
        return;
    }
    Json j = base_json(d);
    j["level"] = *o.level;
    j["images"] = g.centers.size();
    j["covers_hull"] = g.covers_hull();
    j["cells"] = g.cells().size();
    Json list = Json::array();
    for (const auto& [lo, hi] : runs) {
        list.push_back(Json::array({to_string(lo), to_string(hi)}));
    }
    j["runs"] = list;
    r.json(j);
}

void cmd_member(const Options& o, Report& r)
{
    r.no_csv("member");
    const DigitSet d = digit_set(o, "member");
    const NAryExpansion t = expansion(o, "member");
    Json j;
    j["member"] = is_member(d, t);
    j["t"] = format_expansion(t);
    j["value"] = to_string(to_rational(t));
    r.json(j);
}

void cmd_census(const Options& o, Report& r)
{
    const DigitSet d = digit_set(o, "census");
    const NAryExpansion t = expansion(o, "census");
    const std::uint64_t depth = o.depth.value_or(10);
    const CensusSequence seq = census_sequence(d, t, depth);
    const auto slopes = count_slope(d, t, depth);
    if (r.csv()) {
        r.row({"level", "digit", "minus", "zero", "plus", "live", "slope"});
        for (std::uint64_t k = 0; k <= depth; ++k) {
            const AlignmentState& s = seq.states[k];
            r.row({std::to_string(k), k ? std::to_string(seq.digits[k - 1]) : "", s.at(-1).str(), s.at(0).str(),
                   s.at(1).str(), s.live().str(), k ? slope_cell(slopes[k - 1].slope) : ""});
        }
        return;
    }
    Json levels = Json::array();
    for (std::uint64_t k = 0; k <= depth; ++k) {
        Json entry{{"level", k}};
        entry["digit"] = k ? Json(seq.digits[k - 1]) : Json(nullptr);
        entry["census"] = census_json(seq.states[k]);
        entry["slope"] = k ? slope_json(slopes[k - 1].slope) : Json(nullptr);
        levels.push_back(entry);
    }
    Json j;
    j["t"] = format_expansion(t);
    j["depth"] = depth;
    j["levels"] = levels;
    r.json(j);
}

void cmd_dim(const Options& o, Report& r)
{
    r.no_csv("dim");
    const DigitSet d = digit_set(o, "dim");
    const NAryExpansion t = expansion(o, "dim");
    const DimensionReport dim = box_dimension_periodic(d, t);
    Json j;
    j["t"] = format_expansion(t);
    switch (dim.kind) {
    case DimensionKind::Periodic:
        j["kind"] = "periodic";
        break;
    case DimensionKind::TerminatingCopy:
        j["kind"] = "terminating-copy";
        break;
    case DimensionKind::TerminatingPoints:
        j["kind"] = "terminating-points";
        break;
    }
    j["dimension"] = log_json(dim.exact, dim.rational, dim.value);
    if (dim.growth) {
        const PeriodGrowth& g = *dim.growth;
        j["preperiod"] = g.preperiod;
        j["period"] = g.period;
        j["offsets"] = g.offsets;
        j["product"] = Json::array({Json::array({g.product[0][0].str(), g.product[0][1].str()}),
                                    Json::array({g.product[1][0].str(), g.product[1][1].str()})});
        j["radius"] = Json{{"exact", g.radius.exact()},
                           {"lower", to_string(g.radius.lower)},
                           {"upper", to_string(g.radius.upper)}};
    }
    if (o.depth) {
        const auto slopes = count_slope(d, t, *o.depth);
        j["estimate"] = Json{{"depth", *o.depth}, {"slope", slope_json(slopes.back().slope)}};
    }
    r.json(j);
}

void cmd_construct(const Options& o, Report& r)
{
    const DigitSet d = digit_set(o, "construct");
    const Rational alpha = rational_flag(o.alpha, "--alpha", "construct");
    const std::uint64_t depth = o.depth.value_or(20);
    const NAryExpansion x = construct_translation(d, alpha);
    const CensusSequence seq = census_sequence(d, x, depth);
    const auto slopes = count_slope(d, x, depth);
    if (r.csv()) {
        r.row({"level", "digit", "census0", "slope"});
        for (std::uint64_t k = 1; k <= depth; ++k) {
            r.row({std::to_string(k), std::to_string(seq.digits[k - 1]), seq.states[k].at(0).str(),
                   slope_cell(slopes[k - 1].slope)});
        }
        return;
    }
    Json levels = Json::array();
    for (std::uint64_t k = 1; k <= depth; ++k) {
        levels.push_back(Json{{"level", k},
                              {"digit", seq.digits[k - 1]},
                              {"census0", seq.states[k].at(0).str()},
                              {"slope", slope_json(slopes[k - 1].slope)}});
    }
    Json j = base_json(d);
    j["alpha"] = to_string(alpha);
    j["depth"] = depth;
    j["levels"] = levels;
    r.json(j);
}

void cmd_dense(const Options& o, Report& r)
{
    const DigitSet d = digit_set(o, "dense");
    const NAryExpansion y = expansion(o, "dense");
    const Rational eps = rational_flag(o.eps, "--eps", "dense");
    const Rational alpha = rational_flag(o.alpha, "--alpha", "dense");
    const std::uint64_t depth = o.depth.value_or(200);
    const DenseResult res = dense_translation(d, y, eps, alpha);
    const auto slopes = count_slope(d, res.x, depth);
    bool alive = true;
    for (const auto& p : slopes) {
        alive = alive && p.live > 0;
    }
    if (r.csv()) {
        r.row({"level", "digit", "live", "slope"});
        const auto digits = leading_digits(res.x, depth);
        for (std::uint64_t k = 1; k <= depth; ++k) {
            r.row({std::to_string(k), std::to_string(digits[k - 1]), slopes[k - 1].live.str(),
                   slope_cell(slopes[k - 1].slope)});
        }
        return;
    }
    Json j = base_json(d);
    j["y"] = format_expansion(y);
    j["eps"] = to_string(eps);
    j["alpha"] = to_string(alpha);
    j["regime"] = res.regime == DenseRegime::Separated ? "separated" : "uniform";
    j["branch"] = res.branch == DenseBranch::Interval ? "interval" : "potential-interval";
    j["level"] = res.level;
    j["graft"] = res.graft;
    j["used_alternate"] = res.used_alternate;
    j["prefix"] = digits_json(res.x.prefix());
    j["census_at_level"] = census_json(res.census_at_level);
    j["census_at_graft"] = census_json(res.census_at_graft);
    j["depth"] = depth;
    j["alive"] = alive;
    j["slope"] = slope_json(slopes.back().slope);
    r.json(j);
}

void cmd_oracle(const Options& o, Report& r)
{
    r.no_csv("oracle");
    const DigitSet d = digit_set(o, "oracle");
    const NAryExpansion t = expansion(o, "oracle");
    if (!o.level) {
        missing("--level", "oracle");
    }
    const std::uint64_t k = *o.level;
    const std::uint64_t b = budget(o);
    const AlignmentState pairs = pair_census(d, t, k, b);
    const SubsetCensus subsets = subset_census(d, t, k, b);
    const LevelIntervalSet cover = intersect_levels(d, t, k, b);
    Json j;
    j["t"] = format_expansion(t);
    j["level"] = k;
    j["census"] = census_json(pairs);
    j["interval_and_potential"] = subsets.interval_and_potential().str();
    j["cover_cells"] = cover.size();
    if (o.verify) {
        const CensusSequence seq = census_sequence(d, t, k);
        const auto refined = refined_census_sequence(d, t, k);
        for (std::uint64_t i = 0; i <= k; ++i) {
            if (pair_census(d, t, i, b) != seq.states[i] || subset_census(d, t, i, b) != refined[i]) {
                throw InvariantViolation("automaton disagrees with enumeration at level " + std::to_string(i));
            }
        }
        j["verified"] = true;
    }
    r.json(j);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Intersections of deleted digits Cantor sets with their translates", "ddct"};
    app.require_subcommand(1);

    Options o;
    const std::map<std::string, std::pair<std::string, void (*)(const Options&, Report&)>> commands{
        {"validate", {"check a digit set", cmd_validate}},
        {"delta", {"difference set D - D", cmd_delta}},
        {"f-test", {"interval criterion, open-set condition and dimension of F", cmd_f_test}},
        {"b-rep", {"(-F) ∪ F as a scaled deleted digits set", cmd_b_rep}},
        {"g-level", {"level-k IFS approximation of (-F) ∪ F", cmd_g_level}},
        {"member", {"is t in F", cmd_member}},
        {"census", {"pair census by alignment offset", cmd_census}},
        {"dim", {"Minkowski dimension of C ∩ (C + t)", cmd_dim}},
        {"construct", {"translation with dimension alpha·log_n m", cmd_construct}},
        {"dense", {"such a translation within eps of y", cmd_dense}},
        {"oracle", {"brute-force enumeration at one level", cmd_oracle}},
    };
    for (const auto& [name, entry] : commands) {
        CLI::App* sub = app.add_subcommand(name, entry.first);
        sub->add_option("--base", o.base, "base n");
        sub->add_option("--digits", o.digits, "digit list, e.g. 0,2");
        sub->add_option("--t", o.t, "expansion, e.g. 0.(20)");
        sub->add_option("--alpha", o.alpha, "rational p/q in [0, 1]");
        sub->add_option("--eps", o.eps, "rational p/q > 0");
        sub->add_option("--depth", o.depth, "number of levels");
        sub->add_option("--level", o.level, "level k");
        sub->add_option("--budget", o.budget, "enumeration budget (overrides DDCT_BUDGET)");
        sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--verify", o.verify, "cross-check against the automaton");
    }

    std::vector<std::string> argv_store{"ddct"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "ParseError: " << e.what() << '\n';
        return 2;
    }

    try {
        for (const auto& [name, entry] : commands) {
            if (app.got_subcommand(name)) {
                Report report(o, out);
                entry.second(o, report);
            }
        }
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const InvariantViolation& e) {
        err << "InvariantViolation: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace ddct::cli
