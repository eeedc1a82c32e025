#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "disruptix/graph.hpp"

namespace disruptix {

enum class InputFormat { papers_jsonl, edges_csv };

std::optional<InputFormat> parse_input_format(const std::string& name);

struct IngestOptions {
    InputFormat format = InputFormat::papers_jsonl;
    //! strict: throw ParseError on the first bad line. Otherwise bad lines
    //! are skipped and counted in the load report.
    bool strict = true;
    //! Companion `id,year` CSV assigning years (edges-csv builds).
    std::optional<std::string> years_path;
    YearLimits limits{};
};

struct LoadReport {
    std::size_t papers = 0;  // records with explicit metadata
    std::size_t edges = 0;
    std::size_t stubs = 0;   // nodes materialized for dangling targets
    std::size_t skipped = 0;
    std::uint64_t self_references_stripped = 0;
    std::uint64_t duplicate_references_removed = 0;
    std::uint64_t mutual_citation_pairs = 0;
    std::vector<std::string> warnings;
};

struct IngestResult {
    CitationGraph graph;
    LoadReport report;
};

//! Load a citation graph from a file and freeze it.
//!
//! papers-jsonl: one object per line, {"id": string, "year": int|null,
//! "references": [string, ...]}. edges-csv: header `citing,cited`, one
//! edge per row; years come from the optional sidecar.
//!
//! Throws ParseError (strict mode), EmptyInputError when no valid record
//! survives, IoError when a file cannot be opened.
IngestResult ingest_file(const std::string& path, const IngestOptions& options = {});

IngestResult ingest_stream(std::istream& in, const IngestOptions& options = {});

//! Canonical papers-jsonl export: one line per node (stubs included, their
//! year null), ids in lexicographic order, key order id/year/references,
//! references sorted lexicographically. Byte-stable for a given graph, so
//! export-after-ingest round-trips bit-identically.
void export_papers_jsonl(const CitationGraph& graph, std::ostream& out);

std::string export_papers_jsonl(const CitationGraph& graph);

}  // namespace disruptix
