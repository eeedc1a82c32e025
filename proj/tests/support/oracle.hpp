#pragma once

// Independent reference classifier: a direct predicate scan over raw paper
// records, no reverse index, no shared code with the library's classify().
// Deliberately naive; used as the oracle everywhere classification results
// are checked.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "disruptix/classifier.hpp"
#include "disruptix/graph.hpp"

namespace oracle {

struct Result {
    std::set<disruptix::PaperId> sc, dc, pc;
    std::map<disruptix::PaperId, disruptix::ExclusionReason> excluded;
    disruptix::CitationCounts counts;
};

inline Result classify(const std::vector<disruptix::Paper>& papers,
                       const disruptix::PaperId& focal,
                       const disruptix::WindowPolicy& policy = {}) {
    using namespace disruptix;

    const Paper* focal_paper = nullptr;
    for (const auto& p : papers)
        if (p.id == focal) focal_paper = &p;
    if (!focal_paper) throw UnknownFocalError("oracle: unknown focal " + focal);
    if (!focal_paper->year) throw FocalYearUnknownError("oracle: focal year unknown");
    const int focal_year = *focal_paper->year;

    std::set<PaperId> focal_refs;
    for (const auto& r : focal_paper->references)
        if (r != focal) focal_refs.insert(r);

    auto in_window = [&](int year) {
        return policy.pc_start == PcWindow::strictly_after ? year > focal_year
                                                           : year >= focal_year;
    };

    Result result;
    for (const auto& p : papers) {
        if (p.id == focal) continue;
        bool cites_focal = false;
        bool cites_refs = false;
        for (const auto& r : p.references) {
            if (r == focal) cites_focal = true;
            if (focal_refs.count(r)) cites_refs = true;
        }
        if (cites_focal) {
            if (policy.apply_window_to_sc_dc) {
                if (!p.year) {
                    if (policy.unknown_years == UnknownYearHandling::exclude_and_report) {
                        result.excluded[p.id] = ExclusionReason::unknown_year;
                        continue;
                    }
                } else if (!in_window(*p.year)) {
                    result.excluded[p.id] = ExclusionReason::pre_window;
                    continue;
                }
            }
            (cites_refs ? result.dc : result.sc).insert(p.id);
        } else if (cites_refs) {
            if (!p.year) {
                if (policy.unknown_years == UnknownYearHandling::include)
                    result.pc.insert(p.id);
                else
                    result.excluded[p.id] = ExclusionReason::unknown_year;
            } else if (in_window(*p.year)) {
                result.pc.insert(p.id);
            } else {
                result.excluded[p.id] = ExclusionReason::pre_window;
            }
        }
    }
    result.counts = CitationCounts{static_cast<std::int64_t>(result.sc.size()),
                                   static_cast<std::int64_t>(result.dc.size()),
                                   static_cast<std::int64_t>(result.pc.size()),
                                   static_cast<std::int64_t>(focal_refs.size())};
    return result;
}

inline bool matches(const Result& expected, const disruptix::CitationClassification& actual) {
    auto same = [](const std::set<disruptix::PaperId>& s,
                   const std::vector<disruptix::PaperId>& v) {
        return std::set<disruptix::PaperId>(v.begin(), v.end()) == s && v.size() == s.size();
    };
    return same(expected.sc, actual.sc) && same(expected.dc, actual.dc) &&
           same(expected.pc, actual.pc) && expected.counts == actual.counts;
}

}  // namespace oracle
