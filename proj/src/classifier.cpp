#include "disruptix/classifier.hpp"

#include <algorithm>

namespace disruptix {
namespace {

using NodeIndex = CitationGraph::NodeIndex;

bool in_window(int candidate_year, int focal_year, PcWindow window) {
    return window == PcWindow::strictly_after ? candidate_year > focal_year
                                              : candidate_year >= focal_year;
}

// Do two index-sorted reference lists share an element?
bool intersects(std::span<const NodeIndex> a, std::span<const NodeIndex> b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib)
            ++ia;
        else if (*ib < *ia)
            ++ib;
        else
            return true;
    }
    return false;
}

std::vector<PaperId> to_sorted_ids(const CitationGraph& graph, const std::vector<NodeIndex>& nodes) {
    std::vector<PaperId> out;
    out.reserve(nodes.size());
    for (NodeIndex n : nodes) out.push_back(graph.id_of(n));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string_view exclusion_reason_label(ExclusionReason reason) {
    return reason == ExclusionReason::pre_window ? "pre-window" : "unknown-year";
}

CitationClassification classify(const CitationGraph& graph, const PaperId& focal,
                                const WindowPolicy& policy) {
    auto focal_node = graph.find(focal);
    if (!focal_node) throw UnknownFocalError("unknown focal paper: " + focal);
    auto focal_year = graph.year_of(*focal_node);
    if (!focal_year)
        throw FocalYearUnknownError("focal paper '" + focal +
                                    "' has no publication year; prelude window undecidable");

    auto focal_refs = graph.references(*focal_node);
    auto focal_citers = graph.citers(*focal_node);

    std::vector<NodeIndex> sc_nodes, dc_nodes;
    std::vector<std::pair<NodeIndex, ExclusionReason>> excluded_nodes;

    // Solo/duet split over the focal paper's citers.
    for (NodeIndex p : focal_citers) {
        if (policy.apply_window_to_sc_dc) {
            auto year = graph.year_of(p);
            if (!year) {
                if (policy.unknown_years == UnknownYearHandling::exclude_and_report) {
                    excluded_nodes.emplace_back(p, ExclusionReason::unknown_year);
                    continue;
                }
            } else if (!in_window(*year, *focal_year, policy.pc_start)) {
                excluded_nodes.emplace_back(p, ExclusionReason::pre_window);
                continue;
            }
        }
        if (intersects(graph.references(p), focal_refs))
            dc_nodes.push_back(p);
        else
            sc_nodes.push_back(p);
    }

    // Prelude candidates: citers of any reference, deduplicated, minus the
    // focal paper itself and minus everything that cites the focal paper.
    std::vector<NodeIndex> candidates;
    for (NodeIndex ref : focal_refs) {
        auto ref_citers = graph.citers(ref);
        candidates.insert(candidates.end(), ref_citers.begin(), ref_citers.end());
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<NodeIndex> prelude_only;
    prelude_only.reserve(candidates.size());
    std::set_difference(candidates.begin(), candidates.end(), focal_citers.begin(),
                        focal_citers.end(), std::back_inserter(prelude_only));

    std::vector<NodeIndex> pc_nodes;
    for (NodeIndex p : prelude_only) {
        if (p == *focal_node) continue;
        auto year = graph.year_of(p);
        if (!year) {
            if (policy.unknown_years == UnknownYearHandling::include)
                pc_nodes.push_back(p);
            else
                excluded_nodes.emplace_back(p, ExclusionReason::unknown_year);
        } else if (in_window(*year, *focal_year, policy.pc_start)) {
            pc_nodes.push_back(p);
        } else {
            excluded_nodes.emplace_back(p, ExclusionReason::pre_window);
        }
    }

    CitationClassification result;
    result.focal = focal;
    result.sc = to_sorted_ids(graph, sc_nodes);
    result.dc = to_sorted_ids(graph, dc_nodes);
    result.pc = to_sorted_ids(graph, pc_nodes);
    result.excluded.reserve(excluded_nodes.size());
    for (auto [node, reason] : excluded_nodes)
        result.excluded.push_back({graph.id_of(node), reason});
    std::sort(result.excluded.begin(), result.excluded.end(),
              [](const Exclusion& a, const Exclusion& b) { return a.id < b.id; });
    result.policy = policy;
    result.counts = CitationCounts{static_cast<std::int64_t>(result.sc.size()),
                                   static_cast<std::int64_t>(result.dc.size()),
                                   static_cast<std::int64_t>(result.pc.size()),
                                   static_cast<std::int64_t>(focal_refs.size())};
    return result;
}

std::vector<BatchEntry> classify_batch(const CitationGraph& graph,
                                       std::span<const PaperId> focals,
                                       const WindowPolicy& policy) {
    std::vector<BatchEntry> out;
    out.reserve(focals.size());
    for (const auto& focal : focals) {
        BatchEntry entry{focal, std::nullopt, {}};
        try {
            entry.classification = classify(graph, focal, policy);
        } catch (const Error& e) {
            entry.error = e.what();
        }
        out.push_back(std::move(entry));
    }
    return out;
}

}  // namespace disruptix
