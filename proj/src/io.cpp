#include "disruptix/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace disruptix {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::size_t kMaxReportedWarnings = 20;

void note_warning(LoadReport& report, const std::string& text) {
    if (report.warnings.size() < kMaxReportedWarnings)
        report.warnings.push_back(text);
    else if (report.warnings.size() == kMaxReportedWarnings)
        report.warnings.push_back("further warnings suppressed");
}

// One bad line: throw in strict mode, otherwise count and remember.
void bad_line(bool strict, LoadReport& report, std::size_t line, const std::string& reason) {
    if (strict) throw ParseError(line, reason);
    ++report.skipped;
    note_warning(report, "line " + std::to_string(line) + " skipped: " + reason);
}

std::string strip_line_ends(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == '\n')) s.pop_back();
    return s;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

// Minimal CSV row split; the formats here never need quoting.
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::optional<Paper> parse_paper_line(const std::string& line, const YearLimits& limits,
                                      std::string& reason) {
    json record = json::parse(line, nullptr, false);
    if (record.is_discarded()) {
        reason = "not valid JSON";
        return std::nullopt;
    }
    if (!record.is_object()) {
        reason = "expected a JSON object";
        return std::nullopt;
    }
    Paper paper;
    auto id = record.find("id");
    if (id == record.end() || !id->is_string() || id->get<std::string>().empty()) {
        reason = "missing or empty \"id\"";
        return std::nullopt;
    }
    paper.id = id->get<std::string>();

    if (auto year = record.find("year"); year != record.end() && !year->is_null()) {
        if (!year->is_number_integer()) {
            reason = "\"year\" must be an integer or null";
            return std::nullopt;
        }
        auto y = year->get<std::int64_t>();
        if (y < limits.min_year || y > limits.max_year) {
            reason = "year " + std::to_string(y) + " outside accepted range";
            return std::nullopt;
        }
        paper.year = static_cast<int>(y);
    }

    if (auto refs = record.find("references"); refs != record.end() && !refs->is_null()) {
        if (!refs->is_array()) {
            reason = "\"references\" must be an array";
            return std::nullopt;
        }
        for (const auto& ref : *refs) {
            if (!ref.is_string() || ref.get<std::string>().empty()) {
                reason = "references must be non-empty strings";
                return std::nullopt;
            }
            paper.references.push_back(ref.get<std::string>());
        }
    }
    return paper;
}

std::size_t ingest_papers_jsonl(std::istream& in, CitationGraph& graph, bool strict,
                                LoadReport& report) {
    std::size_t line_no = 0;
    std::size_t records = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        line = strip_line_ends(line);
        if (blank(line)) continue;

        std::string reason;
        auto paper = parse_paper_line(line, graph.limits(), reason);
        if (!paper) {
            bad_line(strict, report, line_no, reason);
            continue;
        }
        try {
            graph.add_paper(*paper);
            ++records;
        } catch (const Error& e) {
            bad_line(strict, report, line_no, e.what());
        }
    }
    return records;
}

std::size_t ingest_edges_csv(std::istream& in, CitationGraph& graph, bool strict,
                             LoadReport& report) {
    std::string line;
    if (!std::getline(in, line)) throw EmptyInputError("edges-csv: empty input");
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (strip_line_ends(line) != "citing,cited")
        throw ParseError(1, "edges-csv must start with header `citing,cited`");

    std::size_t line_no = 1;
    std::size_t edges = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_line_ends(line);
        if (blank(line)) continue;
        auto fields = split_csv(line);
        if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
            bad_line(strict, report, line_no, "expected `citing,cited`");
            continue;
        }
        try {
            graph.add_edge(fields[0], fields[1]);
            ++edges;
        } catch (const Error& e) {
            bad_line(strict, report, line_no, e.what());
        }
    }
    return edges;
}

void ingest_years_csv(std::istream& in, CitationGraph& graph, bool strict, LoadReport& report) {
    std::string line;
    if (!std::getline(in, line)) return;  // empty sidecar assigns nothing
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (strip_line_ends(line) != "id,year")
        throw ParseError(1, "years file must start with header `id,year`");

    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        line = strip_line_ends(line);
        if (blank(line)) continue;
        auto fields = split_csv(line);
        int year = 0;
        bool numeric = fields.size() == 2 && !fields[1].empty();
        if (numeric) {
            try {
                std::size_t used = 0;
                year = std::stoi(fields[1], &used);
                numeric = used == fields[1].size();
            } catch (const std::exception&) {
                numeric = false;
            }
        }
        if (!numeric || fields[0].empty()) {
            bad_line(strict, report, line_no, "expected `id,year`");
            continue;
        }
        try {
            graph.set_year(fields[0], year);
        } catch (const Error& e) {
            bad_line(strict, report, line_no, e.what());
        }
    }
}

}  // namespace

std::optional<InputFormat> parse_input_format(const std::string& name) {
    if (name == "papers-jsonl") return InputFormat::papers_jsonl;
    if (name == "edges-csv") return InputFormat::edges_csv;
    return std::nullopt;
}

IngestResult ingest_stream(std::istream& in, const IngestOptions& options) {
    IngestResult result{CitationGraph(options.limits), {}};
    auto& [graph, report] = result;

    std::size_t valid = options.format == InputFormat::papers_jsonl
                            ? ingest_papers_jsonl(in, graph, options.strict, report)
                            : ingest_edges_csv(in, graph, options.strict, report);
    if (valid == 0) throw EmptyInputError("no valid records in input");

    if (options.years_path) {
        std::ifstream years(*options.years_path, std::ios::binary);
        if (!years) throw IoError("cannot open years file: " + *options.years_path);
        ingest_years_csv(years, graph, options.strict, report);
    }

    graph.freeze();
    report.papers = graph.record_count();
    report.edges = graph.edge_count();
    report.stubs = graph.stub_count();
    report.self_references_stripped = graph.self_references_stripped();
    report.duplicate_references_removed = graph.duplicate_references_removed();
    report.mutual_citation_pairs = graph.mutual_citation_pairs();
    if (report.self_references_stripped > 0)
        note_warning(report, "stripped " + std::to_string(report.self_references_stripped) +
                                 " self-reference(s)");
    if (report.duplicate_references_removed > 0)
        note_warning(report, "removed " + std::to_string(report.duplicate_references_removed) +
                                 " duplicate reference(s)");
    if (report.mutual_citation_pairs > 0)
        note_warning(report, "found " + std::to_string(report.mutual_citation_pairs) +
                                 " mutual citation pair(s); likely data errors");
    return result;
}

IngestResult ingest_file(const std::string& path, const IngestOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    return ingest_stream(in, options);
}

void export_papers_jsonl(const CitationGraph& graph, std::ostream& out) {
    std::vector<CitationGraph::NodeIndex> order(graph.node_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<CitationGraph::NodeIndex>(i);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return graph.id_of(a) < graph.id_of(b); });

    for (auto n : order) {
        ordered_json record;
        record["id"] = graph.id_of(n);
        if (auto year = graph.year_of(n))
            record["year"] = *year;
        else
            record["year"] = nullptr;
        std::vector<PaperId> refs;
        refs.reserve(graph.references(n).size());
        for (auto r : graph.references(n)) refs.push_back(graph.id_of(r));
        std::sort(refs.begin(), refs.end());
        record["references"] = refs;
        out << record.dump() << '\n';
    }
}

std::string export_papers_jsonl(const CitationGraph& graph) {
    std::ostringstream out;
    export_papers_jsonl(graph, out);
    return out.str();
}

}  // namespace disruptix
