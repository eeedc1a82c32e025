#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "disruptix/graph.hpp"
#include "disruptix/indicators.hpp"

namespace disruptix {

//! When does a paper that cites the focal paper's references (but not the
//! focal paper itself) start counting as a prelude citer?
enum class PcWindow {
    strictly_after,  // published the year after the focal paper, or later
    inclusive,       // the focal paper's own year also qualifies
};

enum class UnknownYearHandling {
    exclude_and_report,  // an unverifiable window predicate must not inflate pc
    include,
};

struct WindowPolicy {
    PcWindow pc_start = PcWindow::strictly_after;
    //! Only the prelude window has a defined start; applying it
    //! to solo/duet citers as well exists for symmetry experiments.
    bool apply_window_to_sc_dc = false;
    UnknownYearHandling unknown_years = UnknownYearHandling::exclude_and_report;
};

enum class ExclusionReason { pre_window, unknown_year };

std::string_view exclusion_reason_label(ExclusionReason reason);

struct Exclusion {
    PaperId id;
    ExclusionReason reason;

    bool operator==(const Exclusion&) const = default;
};

//! The three disjoint citer sets around one focal paper.
//!
//! sc: papers citing the focal paper and none of its references.
//! dc: papers citing the focal paper and at least one of its references.
//! pc: papers citing at least one reference but not the focal paper,
//!     published inside the prelude window.
//! Each id appears at most once regardless of how many references it cites,
//! and the focal paper appears nowhere. All sets sorted lexicographically.
struct CitationClassification {
    PaperId focal;
    std::vector<PaperId> sc;
    std::vector<PaperId> dc;
    std::vector<PaperId> pc;
    std::vector<Exclusion> excluded;  // window/unknown-year rejections, sorted by id
    WindowPolicy policy;
    CitationCounts counts;  // set sizes plus nr = |focal references|
};

//! Classify the papers surrounding `focal` on a frozen graph.
//!
//! Pure read; safe to call concurrently for distinct (or equal) focals.
//! Cost is O(|citers(focal)| + sum |citers(ref)|) via the reverse index.
//!
//! Throws UnknownFocalError if focal is absent, FocalYearUnknownError if
//! its year is unknown (the prelude window would be undecidable), and
//! GraphNotFrozenError during the build phase.
CitationClassification classify(const CitationGraph& graph, const PaperId& focal,
                                const WindowPolicy& policy = {});

struct BatchEntry {
    PaperId focal;
    std::optional<CitationClassification> classification;
    std::string error;  // empty on success

    bool ok() const noexcept { return classification.has_value(); }
};

//! classify() over a list of focals, order preserved, per-focal errors
//! reported inline instead of aborting the batch.
std::vector<BatchEntry> classify_batch(const CitationGraph& graph,
                                       std::span<const PaperId> focals,
                                       const WindowPolicy& policy = {});

}  // namespace disruptix
