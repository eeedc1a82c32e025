#include "disruptix/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace disruptix {

using nlohmann::ordered_json;

std::string format_fixed(double value, int places) {
    double scale = std::pow(10.0, places);
    if (std::fabs(value) * scale >= 9e17) {  // llround would overflow; precision is gone anyway
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.*f", places, value);
        return buf;
    }
    long long scaled = std::llround(value * scale);
    bool negative = scaled < 0;
    unsigned long long magnitude = negative ? -static_cast<unsigned long long>(scaled) : scaled;
    unsigned long long unit = static_cast<unsigned long long>(scale);
    std::string out = negative ? "-" : "";
    out += std::to_string(magnitude / unit);
    if (places > 0) {
        std::string frac = std::to_string(magnitude % unit);
        out += '.';
        out += std::string(places - frac.size(), '0');
        out += frac;
    }
    return out;
}

std::string format_score_cell(const IndicatorScore& score, int places) {
    if (!score.valid) return "invalid";
    if (std::holds_alternative<bool>(score.value)) return score.truth() ? "true" : "false";
    std::string cell = is_integer_form(score.id)
                           ? std::to_string(std::llround(score.number()))
                           : format_fixed(score.number(), places);
    if (score.below_threshold) cell += '*';
    return cell;
}

ordered_json classification_to_json(const CitationClassification& classification) {
    ordered_json j;
    j["focal"] = classification.focal;
    j["sc"] = classification.sc;
    j["dc"] = classification.dc;
    j["pc"] = classification.pc;
    j["counts"] = {{"sc", classification.counts.sc},
                   {"dc", classification.counts.dc},
                   {"pc", classification.counts.pc},
                   {"nr", classification.counts.nr}};
    auto excluded = ordered_json::array();
    for (const auto& exclusion : classification.excluded)
        excluded.push_back({{"id", exclusion.id},
                            {"reason", std::string(exclusion_reason_label(exclusion.reason))}});
    j["excluded"] = excluded;
    return j;
}

ordered_json score_to_json(const IndicatorScore& score) {
    ordered_json j;
    j["indicator"] = std::string(indicator_label(score.id));
    if (!score.valid)
        j["value"] = nullptr;
    else if (std::holds_alternative<bool>(score.value))
        j["value"] = score.truth();
    else
        j["value"] = score.number();
    j["valid"] = score.valid;
    j["below_threshold"] = score.below_threshold;
    if (!score.note.empty()) j["note"] = score.note;
    return j;
}

ordered_json score_column_to_json(const ScoreColumn& column) {
    ordered_json j;
    j["focal"] = column.focal;
    if (!column.ok()) {
        j["error"] = column.error;
        return j;
    }
    j["counts"] = {{"sc", column.counts.sc},
                   {"dc", column.counts.dc},
                   {"pc", column.counts.pc},
                   {"nr", column.counts.nr}};
    auto scores = ordered_json::array();
    for (const auto& score : column.scores) scores.push_back(score_to_json(score));
    j["scores"] = scores;
    return j;
}

std::string score_table_tsv(const std::vector<ScoreColumn>& columns) {
    // Row labels come from the widest column (a general row may be present).
    std::size_t rows = 0;
    const ScoreColumn* widest = nullptr;
    for (const auto& column : columns)
        if (column.ok() && column.scores.size() > rows) {
            rows = column.scores.size();
            widest = &column;
        }

    std::ostringstream out;
    out << "indicator";
    for (const auto& column : columns) out << '\t' << column.focal;
    out << '\n';

    const auto& order = compute_all_order();
    if (!widest && !columns.empty()) rows = order.size();  // all focals failed
    for (std::size_t r = 0; r < rows; ++r) {
        if (r < order.size())
            out << indicator_label(widest ? widest->scores[r].id : order[r]);
        else
            out << widest->extra_labels[r - order.size()];
        for (const auto& column : columns) {
            out << '\t';
            if (!column.ok())
                out << "error";
            else if (r < column.scores.size())
                out << format_score_cell(column.scores[r]);
            else
                out << "-";
        }
        out << '\n';
    }
    return out.str();
}

std::string annual_to_tsv(const AnnualCitations& histogram) {
    std::ostringstream out;
    for (const auto& [year, count] : histogram.per_year) out << year << '\t' << count << '\n';
    if (histogram.unknown_year > 0) out << "unknown" << '\t' << histogram.unknown_year << '\n';
    return out.str();
}

ordered_json annual_to_json(const PaperId& focal, const AnnualCitations& histogram) {
    ordered_json j;
    j["focal"] = focal;
    ordered_json years = ordered_json::object();
    for (const auto& [year, count] : histogram.per_year)
        years[std::to_string(year)] = count;
    j["years"] = years;
    j["unknown"] = histogram.unknown_year;
    return j;
}

}  // namespace disruptix
