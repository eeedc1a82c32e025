#include "disruptix/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace disruptix {
namespace {

void require_counts(const CitationCounts& c) {
    if (c.sc < 0 || c.dc < 0 || c.pc < 0 || c.nr < 0)
        throw Error("citation counts must be non-negative");
}

IndicatorScore invalid_score(Indicator id, bool below, std::string note) {
    IndicatorScore score;
    score.id = id;
    score.valid = false;
    score.below_threshold = below;
    score.note = std::move(note);
    return score;
}

bool is_integral(double x) { return std::isfinite(x) && x == std::floor(x); }

// x^e with the x^0 = 1 convention (0^0 included). Flags the two domain
// violations instead of producing NaN/inf.
std::optional<double> checked_pow(double base, double exp, const char* what, std::string& err) {
    if (exp == 0.0) return 1.0;
    if (base == 0.0 && exp < 0.0) {
        err = std::string(what) + ": zero base under negative exponent";
        return std::nullopt;
    }
    if (base < 0.0 && !is_integral(exp)) {
        err = std::string(what) + ": negative base under non-integer exponent";
        return std::nullopt;
    }
    return std::pow(base, exp);
}

int compare(const Rational& x, const Rational& y) {
    // Denominators are positive here; cross-multiply in 128 bits.
    __int128 lhs = static_cast<__int128>(x.num) * y.den;
    __int128 rhs = static_cast<__int128>(y.num) * x.den;
    return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

struct LabelEntry {
    Indicator id;
    std::string_view label;
};

constexpr LabelEntry kLabels[] = {
    {Indicator::sc, "SC"},
    {Indicator::sc_minus_dc, "SC-DC"},
    {Indicator::sc_minus_pc, "SC-PC"},
    {Indicator::sc_minus_dc_minus_pc, "SC-DC-PC"},
    {Indicator::sc_ratio, "SC/(SC+DC)"},
    {Indicator::scdc_ratio, "(SC-DC)/(SC+DC)"},
    {Indicator::scpc_ratio, "(SC-PC)/(SC+DC)"},
    {Indicator::scdcpc_ratio, "(SC-DC-PC)/(SC+DC)"},
    {Indicator::d_original, "(SC-DC)/(SC+DC+PC)"},
    {Indicator::sc_times_sc_ratio, "SC*SC/(SC+DC)"},
    {Indicator::scdc_times_scdc_ratio, "(SC-DC)*(SC-DC)/(SC+DC)"},
    {Indicator::sc_times_scdc_ratio, "SC*(SC-DC)/(SC+DC)"},
    {Indicator::tc, "TC"},
    {Indicator::sc_minus_nr, "SC-NR"},
    {Indicator::sc_dc_minus_nr, "SC-DC-NR"},
    {Indicator::sc_pc_minus_nr, "SC-PC-NR"},
    {Indicator::sc_dc_pc_minus_nr, "SC-DC-PC-NR"},
    {Indicator::sc_plus_dc_minus_nr, "SC+DC-NR"},
    {Indicator::sc_plus_dc_minus_pc, "SC+DC-PC"},
    {Indicator::sc_plus_dc_minus_pc_minus_nr, "SC+DC-PC-NR"},
    {Indicator::kosmulski_successful, "SC+DC-NR>0"},
    {Indicator::yanovsky_ratio, "(SC+DC)/NR"},
    {Indicator::general, "general"},
};

}  // namespace

double IndicatorScore::number() const {
    if (const double* v = std::get_if<double>(&value)) return *v;
    throw Error("indicator score holds no numeric value");
}

bool IndicatorScore::truth() const {
    if (const bool* v = std::get_if<bool>(&value)) return *v;
    throw Error("indicator score holds no boolean value");
}

std::string_view indicator_label(Indicator id) {
    for (const auto& entry : kLabels)
        if (entry.id == id) return entry.label;
    return "?";
}

std::optional<Indicator> indicator_from_label(std::string_view label) {
    for (const auto& entry : kLabels)
        if (entry.label == label) return entry.id;
    return std::nullopt;
}

bool is_ratio_form(Indicator id) {
    switch (id) {
        case Indicator::sc_ratio:
        case Indicator::scdc_ratio:
        case Indicator::scpc_ratio:
        case Indicator::scdcpc_ratio:
        case Indicator::d_original:
        case Indicator::sc_times_sc_ratio:
        case Indicator::scdc_times_scdc_ratio:
        case Indicator::sc_times_scdc_ratio:
        case Indicator::yanovsky_ratio:
            return true;
        default:
            return false;
    }
}

bool is_integer_form(Indicator id) {
    switch (id) {
        case Indicator::sc:
        case Indicator::sc_minus_dc:
        case Indicator::sc_minus_pc:
        case Indicator::sc_minus_dc_minus_pc:
        case Indicator::tc:
        case Indicator::sc_minus_nr:
        case Indicator::sc_dc_minus_nr:
        case Indicator::sc_pc_minus_nr:
        case Indicator::sc_dc_pc_minus_nr:
        case Indicator::sc_plus_dc_minus_nr:
        case Indicator::sc_plus_dc_minus_pc:
        case Indicator::sc_plus_dc_minus_pc_minus_nr:
            return true;
        default:
            return false;
    }
}

const std::vector<Indicator>& compute_all_order() {
    static const std::vector<Indicator> order = {
        Indicator::sc,
        Indicator::sc_minus_dc,
        Indicator::sc_minus_pc,
        Indicator::sc_minus_dc_minus_pc,
        Indicator::sc_ratio,
        Indicator::scdc_ratio,
        Indicator::scpc_ratio,
        Indicator::scdcpc_ratio,
        Indicator::d_original,
        Indicator::sc_times_sc_ratio,
        Indicator::scdc_times_scdc_ratio,
        Indicator::sc_times_scdc_ratio,
        Indicator::tc,
        Indicator::sc_minus_nr,
        Indicator::sc_dc_minus_nr,
        Indicator::sc_pc_minus_nr,
        Indicator::sc_dc_pc_minus_nr,
        Indicator::sc_plus_dc_minus_nr,
        Indicator::sc_plus_dc_minus_pc,
        Indicator::sc_plus_dc_minus_pc_minus_nr,
        Indicator::kosmulski_successful,
        Indicator::yanovsky_ratio,
    };
    return order;
}

std::optional<Rational> exact_score(Indicator id, const CitationCounts& c) {
    const std::int64_t sc = c.sc, dc = c.dc, pc = c.pc, nr = c.nr;
    switch (id) {
        case Indicator::sc: return Rational{sc, 1};
        case Indicator::sc_minus_dc: return Rational{sc - dc, 1};
        case Indicator::sc_minus_pc: return Rational{sc - pc, 1};
        case Indicator::sc_minus_dc_minus_pc: return Rational{sc - dc - pc, 1};
        case Indicator::sc_ratio: return Rational{sc, sc + dc};
        case Indicator::scdc_ratio: return Rational{sc - dc, sc + dc};
        case Indicator::scpc_ratio: return Rational{sc - pc, sc + dc};
        case Indicator::scdcpc_ratio: return Rational{sc - dc - pc, sc + dc};
        case Indicator::d_original: return Rational{sc - dc, sc + dc + pc};
        case Indicator::sc_times_sc_ratio: return Rational{sc * sc, sc + dc};
        case Indicator::scdc_times_scdc_ratio: return Rational{(sc - dc) * (sc - dc), sc + dc};
        case Indicator::sc_times_scdc_ratio: return Rational{sc * (sc - dc), sc + dc};
        case Indicator::tc: return Rational{sc + dc, 1};
        case Indicator::sc_minus_nr: return Rational{sc - nr, 1};
        case Indicator::sc_dc_minus_nr: return Rational{sc - dc - nr, 1};
        case Indicator::sc_pc_minus_nr: return Rational{sc - pc - nr, 1};
        case Indicator::sc_dc_pc_minus_nr: return Rational{sc - dc - pc - nr, 1};
        case Indicator::sc_plus_dc_minus_nr: return Rational{sc + dc - nr, 1};
        case Indicator::sc_plus_dc_minus_pc: return Rational{sc + dc - pc, 1};
        case Indicator::sc_plus_dc_minus_pc_minus_nr: return Rational{sc + dc - pc - nr, 1};
        case Indicator::yanovsky_ratio: return Rational{sc + dc, nr};
        case Indicator::kosmulski_successful:
        case Indicator::general:
            return std::nullopt;
    }
    return std::nullopt;
}

IndicatorScore compute(Indicator id, const CitationCounts& counts, std::int64_t threshold) {
    require_counts(counts);
    if (id == Indicator::general)
        throw NotApplicableError("the general form needs coefficients; use compute_general");

    const bool below = is_ratio_form(id) && counts.tc() <= threshold;

    if (id == Indicator::kosmulski_successful) {
        IndicatorScore score;
        score.id = id;
        score.value = counts.sc + counts.dc - counts.nr > 0;
        score.valid = true;
        return score;
    }

    auto rational = exact_score(id, counts);
    if (rational->den == 0) {
        std::string denom = id == Indicator::d_original  ? "SC+DC+PC"
                            : id == Indicator::yanovsky_ratio ? "NR"
                                                               : "SC+DC";
        return invalid_score(id, below, "denominator " + denom + " is zero");
    }

    IndicatorScore score;
    score.id = id;
    // Integer numerator and denominator are exact in double up to 2^53, so
    // the quotient is correctly rounded.
    score.value = static_cast<double>(rational->num) / static_cast<double>(rational->den);
    score.valid = true;
    score.below_threshold = below;
    return score;
}

std::vector<IndicatorScore> compute_all(const CitationCounts& counts, std::int64_t threshold) {
    std::vector<IndicatorScore> scores;
    scores.reserve(compute_all_order().size());
    for (Indicator id : compute_all_order()) scores.push_back(compute(id, counts, threshold));
    return scores;
}

IndicatorScore compute_general(const Coefficients& co, const CitationCounts& counts,
                               const GeneralOptions& options) {
    require_counts(counts);
    for (double x : {co.a, co.b, co.c, co.d, co.e, co.f})
        if (!std::isfinite(x)) throw Error("general-formula coefficients must be finite");

    const bool below = co.f != 0.0 && counts.tc() <= options.threshold;
    const double sc = static_cast<double>(counts.sc);
    const double dc = static_cast<double>(counts.dc);
    std::string err;

    // Numerator (SC^a - DC^b)^c; b = 0 suppresses the DC term unless the
    // literal x^0 = 1 reading was requested.
    auto sc_a = checked_pow(sc, co.a, "SC^a", err);
    if (!sc_a) return invalid_score(Indicator::general, below, err);
    double base = *sc_a;
    if (co.b != 0.0 || options.literal_zero_powers) {
        auto dc_b = checked_pow(dc, co.b, "DC^b", err);
        if (!dc_b) return invalid_score(Indicator::general, below, err);
        base -= *dc_b;
    }
    auto numerator = checked_pow(base, co.c, "(SC^a-DC^b)^c", err);
    if (!numerator) return invalid_score(Indicator::general, below, err);

    // Denominator (SC^d + DC^e)^f; f = 0 suppresses it (the literal
    // reading x^0 = 1 gives the same value).
    double denominator = 1.0;
    if (co.f != 0.0) {
        auto sc_d = checked_pow(sc, co.d, "SC^d", err);
        if (!sc_d) return invalid_score(Indicator::general, below, err);
        auto dc_e = checked_pow(dc, co.e, "DC^e", err);
        if (!dc_e) return invalid_score(Indicator::general, below, err);
        double den_base = *sc_d + *dc_e;
        if (den_base == 0.0) {
            if (co.f > 0.0)
                return invalid_score(Indicator::general, below, "denominator SC^d+DC^e is zero");
            return invalid_score(Indicator::general, below,
                                 "(SC^d+DC^e)^f: zero base under negative exponent");
        }
        auto den = checked_pow(den_base, co.f, "(SC^d+DC^e)^f", err);
        if (!den) return invalid_score(Indicator::general, below, err);
        denominator = *den;
    }

    double value = *numerator / denominator;
    if (!std::isfinite(value))
        return invalid_score(Indicator::general, below, "result is not finite");

    IndicatorScore score;
    score.id = Indicator::general;
    score.value = value;
    score.valid = true;
    score.below_threshold = below;
    return score;
}

bool ReductionReport::all_pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(),
                       [](const ReductionCheck& c) { return c.pass; });
}

ReductionReport verify_reductions(const CitationCounts& counts) {
    require_counts(counts);
    const double sc = static_cast<double>(counts.sc);
    const double dc = static_cast<double>(counts.dc);
    const double tc = sc + dc;
    const bool tc_zero = counts.tc() == 0;

    struct Row {
        const char* label;
        Coefficients coeffs;
        std::optional<double> direct;
    };
    // Right-hand sides computed directly, independent of the power path.
    const Row rows[] = {
        {"a=1,b=0,c=1,f=0 -> SC", {1, 0, 1, 1, 1, 0}, sc},
        {"a=1,b=1,c=1,f=0 -> SC-DC", {1, 1, 1, 1, 1, 0}, sc - dc},
        {"a=1,b=0,c=1,d=1,e=1,f=1 -> SC/(SC+DC)",
         {1, 0, 1, 1, 1, 1},
         tc_zero ? std::nullopt : std::optional<double>(sc / tc)},
        {"a=1,b=1,c=1,d=1,e=1,f=1 -> (SC-DC)/(SC+DC)",
         {1, 1, 1, 1, 1, 1},
         tc_zero ? std::nullopt : std::optional<double>((sc - dc) / tc)},
        {"a=1,b=0,c=2,d=1,e=1,f=1 -> SC*SC/(SC+DC)",
         {1, 0, 2, 1, 1, 1},
         tc_zero ? std::nullopt : std::optional<double>(sc * sc / tc)},
        {"a=1,b=1,c=2,d=1,e=1,f=1 -> (SC-DC)*(SC-DC)/(SC+DC)",
         {1, 1, 2, 1, 1, 1},
         tc_zero ? std::nullopt : std::optional<double>((sc - dc) * (sc - dc) / tc)},
    };

    ReductionReport report;
    for (const auto& row : rows) {
        ReductionCheck check;
        check.label = row.label;
        check.coeffs = row.coeffs;
        check.direct_value = row.direct;
        auto score = compute_general(row.coeffs, counts);
        if (score.valid) check.general_value = score.number();

        if (!check.general_value && !check.direct_value) {
            check.vacuous = true;
            check.pass = true;
        } else if (check.general_value && check.direct_value) {
            double l = *check.general_value, r = *check.direct_value;
            double scale = std::max({1.0, std::fabs(l), std::fabs(r)});
            check.pass = std::fabs(l - r) <= 1e-12 * scale;
        } else {
            check.pass = false;  // one side defined, the other not
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

char sign_char(Sign sign) noexcept {
    switch (sign) {
        case Sign::positive: return '+';
        case Sign::negative: return '-';
        case Sign::none: return '0';
    }
    return '?';
}

SignTriple characterize_signs(Indicator id, const CitationCounts& counts) {
    require_counts(counts);
    if (id == Indicator::kosmulski_successful || id == Indicator::general)
        throw NotApplicableError("sign characterization applies to numeric fixed indicators only");

    auto base = exact_score(id, counts);
    if (base->den == 0)
        throw Error("characterize_signs: denominator is zero at the given counts");

    auto probe = [&](CitationCounts bumped) {
        auto next = exact_score(id, bumped);
        if (next->den == 0)
            throw Error("characterize_signs: denominator is zero after a unit increment");
        int order = compare(*next, *base);
        return order > 0 ? Sign::positive : order < 0 ? Sign::negative : Sign::none;
    };

    CitationCounts sc_up = counts, dc_up = counts, pc_up = counts;
    ++sc_up.sc;
    ++dc_up.dc;
    ++pc_up.pc;
    return SignTriple{probe(sc_up), probe(dc_up), probe(pc_up)};
}

}  // namespace disruptix
