#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "disruptix/errors.hpp"

namespace disruptix {

//! The integer tuple every disruption indicator is computed from.
//!
//! sc: solo citers (cite the focal paper only), dc: duet citers (cite the
//! focal paper and at least one of its references), pc: prelude citers
//! (cite references only, inside the window), nr: size of the focal
//! paper's reference list. tc = sc + dc is the familiar total-citations
//! count.
struct CitationCounts {
    std::int64_t sc = 0;
    std::int64_t dc = 0;
    std::int64_t pc = 0;
    std::int64_t nr = 0;

    std::int64_t tc() const noexcept { return sc + dc; }
    bool operator==(const CitationCounts&) const = default;
};

//! The full indicator family. The first nine are the core table rows,
//! in their table order; the rest are the extensions built from the same
//! counts (multiplicative combinations, TC, the NR family, the successful-
//! paper predicate and the per-reference impact ratio).
enum class Indicator {
    sc,                           // SC
    sc_minus_dc,                  // SC-DC
    sc_minus_pc,                  // SC-PC
    sc_minus_dc_minus_pc,         // SC-DC-PC
    sc_ratio,                     // SC/(SC+DC)
    scdc_ratio,                   // (SC-DC)/(SC+DC)
    scpc_ratio,                   // (SC-PC)/(SC+DC)
    scdcpc_ratio,                 // (SC-DC-PC)/(SC+DC)
    d_original,                   // (SC-DC)/(SC+DC+PC)
    sc_times_sc_ratio,            // SC*SC/(SC+DC)
    scdc_times_scdc_ratio,        // (SC-DC)*(SC-DC)/(SC+DC)
    sc_times_scdc_ratio,          // SC*(SC-DC)/(SC+DC)
    tc,                           // SC+DC
    sc_minus_nr,                  // SC-NR
    sc_dc_minus_nr,               // SC-DC-NR
    sc_pc_minus_nr,               // SC-PC-NR
    sc_dc_pc_minus_nr,            // SC-DC-PC-NR
    sc_plus_dc_minus_nr,          // SC+DC-NR
    sc_plus_dc_minus_pc,          // SC+DC-PC
    sc_plus_dc_minus_pc_minus_nr, // SC+DC-PC-NR
    kosmulski_successful,         // SC+DC-NR > 0 (boolean)
    yanovsky_ratio,               // (SC+DC)/NR
    general,                      // (SC^a-DC^b)^c / (SC^d+DC^e)^f
};

//! Ratio indicators flatter rarely cited papers, so they carry a minimum
//! citation count before they are meaningful; scores at tc <= threshold
//! are flagged, never altered.
inline constexpr std::int64_t kDefaultCitationThreshold = 20;

//! Exponents of the general evaluation formula
//!     D = (SC^a - DC^b)^c / (SC^d + DC^e)^f.
//! A zero exponent normally means x^0 = 1 (including 0^0 = 1). Two zeros
//! are special so that the formula degenerates into the plain indicators:
//! b = 0 suppresses the DC term entirely (numerator base becomes SC^a, not
//! SC^a - 1) and f = 0 suppresses the denominator. The literal x^0 = 1
//! reading of b is available via GeneralOptions::literal_zero_powers.
struct Coefficients {
    double a = 1, b = 1, c = 1, d = 1, e = 1, f = 1;
};

//! Exact value of a rational-valued indicator as num/den on integer counts
//! (den = 1 for the purely integer family). den == 0 encodes a forbidden
//! denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
};

//! One computed indicator. `value` holds a double for numeric indicators,
//! a bool for the successful-paper predicate, and stays empty when the
//! formula is undefined on the given counts (valid = false, note says why).
struct IndicatorScore {
    Indicator id = Indicator::sc;
    std::variant<std::monostate, double, bool> value;
    bool valid = false;
    bool below_threshold = false;
    std::string note;

    double number() const;
    bool truth() const;
};

std::string_view indicator_label(Indicator id);
std::optional<Indicator> indicator_from_label(std::string_view label);

//! Indicators normalized by a citation denominator; only these carry the
//! below-threshold flag.
bool is_ratio_form(Indicator id);

//! Indicators whose value is integer on integer counts.
bool is_integer_form(Indicator id);

//! The 22 coefficient-free indicators in output order: the nine table rows
//! first, then the extensions.
const std::vector<Indicator>& compute_all_order();

//! Exact rational value of a numeric indicator; nullopt for the boolean
//! predicate and the coefficient-dependent general form. A result with
//! den == 0 marks a zero denominator.
std::optional<Rational> exact_score(Indicator id, const CitationCounts& counts);

//! Evaluate one indicator. Counts must be componentwise non-negative.
//! Undefined formulas (zero denominator) come back with valid = false
//! rather than a number.
IndicatorScore compute(Indicator id, const CitationCounts& counts,
                       std::int64_t threshold = kDefaultCitationThreshold);

//! Every coefficient-free indicator, in compute_all_order(). Per-indicator
//! failures are inline (valid = false); nothing aborts.
std::vector<IndicatorScore> compute_all(const CitationCounts& counts,
                                        std::int64_t threshold = kDefaultCitationThreshold);

struct GeneralOptions {
    //! Evaluate b = 0 as DC^0 = 1 instead of suppressing the DC term.
    bool literal_zero_powers = false;
    std::int64_t threshold = kDefaultCitationThreshold;
};

//! The general evaluation formula. Invalid (with a note naming the
//! offending subexpression) on a zero denominator, on a negative base
//! under a non-integer exponent, and on zero under a negative exponent.
IndicatorScore compute_general(const Coefficients& coeffs, const CitationCounts& counts,
                               const GeneralOptions& options = {});

//! One degenerate-coefficient identity of the general formula.
struct ReductionCheck {
    std::string label;
    Coefficients coeffs;
    std::optional<double> general_value;  // empty when invalid on these counts
    std::optional<double> direct_value;
    bool vacuous = false;  // both sides undefined
    bool pass = false;
};

struct ReductionReport {
    std::vector<ReductionCheck> checks;

    bool all_pass() const noexcept;
};

//! Check the six degenerate reductions of the general formula against
//! directly computed right-hand sides, to 1e-12 relative tolerance.
//! Failures are data in the report, never exceptions.
ReductionReport verify_reductions(const CitationCounts& counts);

enum class Sign { positive, negative, none };

char sign_char(Sign sign) noexcept;

struct SignTriple {
    Sign sc = Sign::none;
    Sign dc = Sign::none;
    Sign pc = Sign::none;

    bool operator==(const SignTriple&) const = default;
};

//! Direction of the indicator under a unit increment of each count:
//! + strictly increases, - strictly decreases, 0 unchanged. Counts are
//! integers, so discrete increments (not derivatives) make the
//! characterization literally assertable. Comparison is exact
//! rational arithmetic. Throws NotApplicableError for the boolean
//! predicate and the general form, Error if a denominator vanishes before
//! or after an increment.
SignTriple characterize_signs(Indicator id, const CitationCounts& counts);

}  // namespace disruptix
