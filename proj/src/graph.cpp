#include "disruptix/graph.hpp"

#include <algorithm>

namespace disruptix {

std::uint64_t AnnualCitations::total() const noexcept {
    std::uint64_t sum = unknown_year;
    for (const auto& [year, count] : per_year) sum += count;
    return sum;
}

void CitationGraph::ensure_not_frozen(const char* op) const {
    if (frozen_) throw GraphFrozenError(std::string(op) + ": graph is frozen");
}

void CitationGraph::ensure_frozen(const char* op) const {
    if (!frozen_) throw GraphNotFrozenError(std::string(op) + ": graph is not frozen yet");
}

std::optional<CitationGraph::NodeIndex> CitationGraph::find(const PaperId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::optional<int> CitationGraph::year_of(NodeIndex n) const {
    if (years_[n] == kUnknownYear) return std::nullopt;
    return years_[n];
}

CitationGraph::NodeIndex CitationGraph::intern(const PaperId& id) {
    auto it = index_.find(id);
    if (it != index_.end()) return it->second;
    auto n = static_cast<NodeIndex>(ids_.size());
    ids_.push_back(id);
    index_.emplace(id, n);
    years_.push_back(kUnknownYear);
    refs_.emplace_back();
    citers_.emplace_back();
    is_record_.push_back(false);
    return n;
}

void CitationGraph::link(NodeIndex citing, NodeIndex cited) {
    auto& refs = refs_[citing];
    auto pos = std::lower_bound(refs.begin(), refs.end(), cited);
    if (pos != refs.end() && *pos == cited) {
        ++dup_refs_removed_;
        return;
    }
    refs.insert(pos, cited);
    citers_[cited].push_back(citing);
    ++edge_count_;
}

void CitationGraph::add_paper(const Paper& paper) {
    ensure_not_frozen("add_paper");
    if (paper.id.empty()) throw InvalidPaperError("paper id must be non-empty");
    if (paper.year && !limits_.contains(*paper.year))
        throw InvalidPaperError("paper '" + paper.id + "': year " + std::to_string(*paper.year) +
                                " outside accepted range [" + std::to_string(limits_.min_year) +
                                ", " + std::to_string(limits_.max_year) + "]");

    // Normalize the reference list before touching graph state so that a
    // duplicate re-add can be detected without side effects.
    std::uint64_t self_strips = 0;
    std::vector<PaperId> refs;
    refs.reserve(paper.references.size());
    for (const auto& ref : paper.references) {
        if (ref.empty())
            throw InvalidPaperError("paper '" + paper.id + "': empty reference id");
        if (ref == paper.id) {
            ++self_strips;
            continue;
        }
        refs.push_back(ref);
    }
    std::sort(refs.begin(), refs.end());
    auto last = std::unique(refs.begin(), refs.end());
    std::uint64_t dups = static_cast<std::uint64_t>(refs.end() - last);
    refs.erase(last, refs.end());

    NodeIndex self = intern(paper.id);
    std::vector<NodeIndex> ref_idx;
    ref_idx.reserve(refs.size());
    for (const auto& ref : refs) ref_idx.push_back(intern(ref));
    std::sort(ref_idx.begin(), ref_idx.end());

    std::int32_t year = paper.year ? *paper.year : kUnknownYear;

    if (is_record_[self]) {
        if (years_[self] == year && refs_[self] == ref_idx) return;  // idempotent re-add
        throw DuplicatePaperError("paper '" + paper.id +
                                  "' already present with different year or references");
    }

    // New record, or upgrade of a stub. A stub may already carry edges
    // (edges-csv builds); the record's references merge over them.
    for (NodeIndex r : ref_idx) link(self, r);
    if (paper.year || years_[self] == kUnknownYear) years_[self] = year;
    is_record_[self] = true;
    ++record_count_;
    self_refs_stripped_ += self_strips;
    dup_refs_removed_ += dups;
}

void CitationGraph::add_edge(const PaperId& citing, const PaperId& cited) {
    ensure_not_frozen("add_edge");
    if (citing.empty() || cited.empty()) throw InvalidPaperError("edge endpoints must be non-empty");
    if (citing == cited) {
        ++self_refs_stripped_;
        return;
    }
    NodeIndex a = intern(citing);
    NodeIndex b = intern(cited);
    link(a, b);
}

void CitationGraph::set_year(const PaperId& id, int year) {
    ensure_not_frozen("set_year");
    if (id.empty()) throw InvalidPaperError("paper id must be non-empty");
    if (!limits_.contains(year))
        throw InvalidPaperError("paper '" + id + "': year " + std::to_string(year) +
                                " outside accepted range");
    years_[intern(id)] = year;
}

void CitationGraph::freeze() {
    if (frozen_) return;
    for (auto& list : citers_) std::sort(list.begin(), list.end());

    mutual_pairs_ = 0;
    for (NodeIndex a = 0; a < refs_.size(); ++a) {
        for (NodeIndex b : refs_[a]) {
            if (b <= a) continue;
            if (std::binary_search(refs_[b].begin(), refs_[b].end(), a)) ++mutual_pairs_;
        }
    }
    frozen_ = true;
}

std::span<const CitationGraph::NodeIndex> CitationGraph::citers(NodeIndex n) const {
    ensure_frozen("citers");
    return citers_[n];
}

std::vector<PaperId> CitationGraph::citers_of(const PaperId& id) const {
    ensure_frozen("citers_of");
    auto n = find(id);
    if (!n) return {};
    std::vector<PaperId> out;
    out.reserve(citers_[*n].size());
    for (NodeIndex c : citers_[*n]) out.push_back(ids_[c]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PaperId> CitationGraph::references_of(const PaperId& id) const {
    auto n = find(id);
    if (!n) return {};
    std::vector<PaperId> out;
    out.reserve(refs_[*n].size());
    for (NodeIndex r : refs_[*n]) out.push_back(ids_[r]);
    std::sort(out.begin(), out.end());
    return out;
}

AnnualCitations CitationGraph::annual_citations(const PaperId& id) const {
    ensure_frozen("annual_citations");
    AnnualCitations hist;
    auto n = find(id);
    if (!n) return hist;
    for (NodeIndex c : citers_[*n]) {
        if (years_[c] == kUnknownYear)
            ++hist.unknown_year;
        else
            ++hist.per_year[years_[c]];
    }
    return hist;
}

std::uint64_t CitationGraph::mutual_citation_pairs() const {
    ensure_frozen("mutual_citation_pairs");
    return mutual_pairs_;
}

}  // namespace disruptix
