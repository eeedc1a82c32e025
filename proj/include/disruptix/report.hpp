#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "disruptix/classifier.hpp"
#include "disruptix/graph.hpp"
#include "disruptix/indicators.hpp"

namespace disruptix {

//! Deterministic fixed-point rendering with `places` decimals, ties
//! rounded half away from zero (conventional table rounding).
std::string format_fixed(double value, int places);

//! One table cell: integers unpadded, ratios at 4 decimals, "invalid" when
//! the formula is undefined, trailing '*' when below the citation
//! threshold, true/false for the boolean predicate.
std::string format_score_cell(const IndicatorScore& score, int places = 4);

//! {"focal":..., "sc":[...], "dc":[...], "pc":[...], "counts":{...},
//!  "excluded":[{"id":...,"reason":...}]}
nlohmann::ordered_json classification_to_json(const CitationClassification& classification);

//! {"indicator":..., "value": number|boolean|null, "valid":...,
//!  "below_threshold":...}
nlohmann::ordered_json score_to_json(const IndicatorScore& score);

//! One scored focal paper; `error` non-empty when classification failed.
struct ScoreColumn {
    PaperId focal;
    std::string error;
    CitationCounts counts;
    std::vector<IndicatorScore> scores;
    std::vector<std::string> extra_labels;  // labels for rows beyond the fixed order

    bool ok() const noexcept { return error.empty(); }
};

nlohmann::ordered_json score_column_to_json(const ScoreColumn& column);

//! Indicator rows x focal columns, tab-separated, one header line.
std::string score_table_tsv(const std::vector<ScoreColumn>& columns);

//! `year<TAB>count` rows ascending; the unknown-year bucket, when present,
//! comes last.
std::string annual_to_tsv(const AnnualCitations& histogram);

nlohmann::ordered_json annual_to_json(const PaperId& focal, const AnnualCitations& histogram);

}  // namespace disruptix
