#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "disruptix/errors.hpp"

namespace disruptix {

using PaperId = std::string;

// A paper record: identifier, publication year (if known) and its outgoing
// reference list. Reference lists are normalized on insertion: duplicates
// dropped, self-references stripped.
struct Paper {
    PaperId id;
    std::optional<int> year;
    std::vector<PaperId> references;
};

// Accepted publication-year range; records outside it are rejected.
struct YearLimits {
    int min_year = 1450;
    int max_year = 2100;

    bool contains(int y) const noexcept { return y >= min_year && y <= max_year; }
};

// Citations to one paper grouped by the citing papers' publication years.
// Years with zero citations are absent; citers without a year land in the
// separate unknown_year bucket.
struct AnnualCitations {
    std::map<int, std::uint32_t> per_year;
    std::uint32_t unknown_year = 0;

    std::uint64_t total() const noexcept;
};

//! Directed citation graph (citing -> cited) over string paper ids.
//!
//! Two-phase lifecycle: a single-writer build phase (add_paper / add_edge /
//! set_year) followed by freeze(), after which the graph is immutable and
//! safe for unlimited concurrent readers. The reverse index (paper -> its
//! citers) is maintained incrementally, so citers_of is an index lookup,
//! never a scan.
//!
//! Referenced ids without a record of their own are materialized as stub
//! nodes (unknown year, empty references) so that they still anchor their
//! slice of the reverse index. A later add_paper with the same id upgrades
//! the stub in place.
class CitationGraph {
public:
    using NodeIndex = std::uint32_t;

    explicit CitationGraph(YearLimits limits = {}) : limits_(limits) {}

    // --- build phase; all mutators throw GraphFrozenError once frozen ---

    //! Store a paper record. Re-adding an id with identical content is a
    //! no-op; differing content throws DuplicatePaperError. References to
    //! absent ids create stub nodes.
    void add_paper(const Paper& paper);

    //! Add a single citation edge, materializing both endpoints as stubs
    //! if needed. Self-edges are dropped (counted as stripped), duplicate
    //! edges are dropped (counted as duplicates).
    void add_edge(const PaperId& citing, const PaperId& cited);

    //! Assign a publication year (years sidecar). Creates the node as a
    //! stub if absent; an existing year is overwritten.
    void set_year(const PaperId& id, int year);

    //! End the build phase: sorts the reverse index and counts mutual
    //! citation pairs. Idempotent.
    void freeze();

    // --- introspection (any phase) ---

    bool frozen() const noexcept { return frozen_; }
    std::size_t node_count() const noexcept { return ids_.size(); }
    std::size_t record_count() const noexcept { return record_count_; }
    std::size_t stub_count() const noexcept { return ids_.size() - record_count_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::uint64_t self_references_stripped() const noexcept { return self_refs_stripped_; }
    std::uint64_t duplicate_references_removed() const noexcept { return dup_refs_removed_; }
    const YearLimits& limits() const noexcept { return limits_; }

    std::optional<NodeIndex> find(const PaperId& id) const;
    const PaperId& id_of(NodeIndex n) const { return ids_[n]; }
    std::optional<int> year_of(NodeIndex n) const;
    bool is_stub(NodeIndex n) const { return !is_record_[n]; }
    std::span<const NodeIndex> references(NodeIndex n) const { return refs_[n]; }

    // --- queries (frozen only; throw GraphNotFrozenError otherwise) ---

    //! Citers of n, sorted by node index.
    std::span<const NodeIndex> citers(NodeIndex n) const;

    //! Exactly { p : id in p.references }, lexicographically sorted.
    //! Unknown ids yield an empty set.
    std::vector<PaperId> citers_of(const PaperId& id) const;

    //! The paper's reference list, lexicographically sorted.
    std::vector<PaperId> references_of(const PaperId& id) const;

    //! Per-year citation histogram of id; zero-count years omitted,
    //! unknown-year citers aggregated separately.
    AnnualCitations annual_citations(const PaperId& id) const;

    //! Unordered pairs {a, b} with a citing b and b citing a. Citation
    //! cycles are data errors worth surfacing in load reports.
    std::uint64_t mutual_citation_pairs() const;

private:
    static constexpr std::int32_t kUnknownYear = INT32_MIN;

    NodeIndex intern(const PaperId& id);
    void ensure_not_frozen(const char* op) const;
    void ensure_frozen(const char* op) const;
    void link(NodeIndex citing, NodeIndex cited);

    YearLimits limits_;
    std::vector<PaperId> ids_;
    std::unordered_map<PaperId, NodeIndex> index_;
    std::vector<std::int32_t> years_;
    std::vector<std::vector<NodeIndex>> refs_;    // sorted by node index, unique
    std::vector<std::vector<NodeIndex>> citers_;  // transpose of refs_; sorted on freeze
    std::vector<bool> is_record_;
    std::size_t record_count_ = 0;
    std::size_t edge_count_ = 0;
    std::uint64_t self_refs_stripped_ = 0;
    std::uint64_t dup_refs_removed_ = 0;
    std::uint64_t mutual_pairs_ = 0;
    bool frozen_ = false;
};

}  // namespace disruptix
