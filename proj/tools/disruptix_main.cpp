// disruptix - citation-graph disruption indicators
//
// Subcommands: ingest, classify, score, annual. See --help and README.md.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "disruptix/classifier.hpp"
#include "disruptix/graph.hpp"
#include "disruptix/indicators.hpp"
#include "disruptix/io.hpp"
#include "disruptix/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitResolutionError = 3;

struct Options {
    std::string input;
    std::string format = "papers-jsonl";
    std::string years;
    bool lenient = false;
    std::vector<std::string> focals;
    bool all_cited = false;
    long long min_tc = 1;
    long long threshold = disruptix::kDefaultCitationThreshold;
    std::string pc_window = "strict";
    std::string unknown_years = "exclude";
    bool window_sc_dc = false;
    std::string coeffs;
    bool literal_powers = false;
    std::string output;  // json | tsv; per-command default
    std::string out;     // output path; empty = stdout
    std::string config;
};

// --- config file: TOML-style `key = value` lines, '#' comments ----------

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string unquote(std::string v) {
    if (v.size() >= 2 && ((v.front() == '"' && v.back() == '"') ||
                          (v.front() == '\'' && v.back() == '\'')))
        return v.substr(1, v.size() - 2);
    return v;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw disruptix::IoError("cannot open config file: " + path);
    std::map<std::string, std::string> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw disruptix::ParseError(line_no, "config entries must look like key = value");
        values[trim(line.substr(0, eq))] = unquote(trim(line.substr(eq + 1)));
    }
    return values;
}

bool parse_bool(const std::string& v) {
    return v == "1" || v == "true" || v == "yes" || v == "on";
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> items;
    std::istringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

void apply_config(Options& o, const std::map<std::string, std::string>& cfg) {
    auto get = [&](const char* key) -> const std::string* {
        auto it = cfg.find(key);
        return it == cfg.end() ? nullptr : &it->second;
    };
    if (auto v = get("input")) o.input = *v;
    if (auto v = get("format")) o.format = *v;
    if (auto v = get("years")) o.years = *v;
    if (auto v = get("lenient")) o.lenient = parse_bool(*v);
    if (auto v = get("focal")) o.focals = split_list(*v);
    if (auto v = get("all_cited")) o.all_cited = parse_bool(*v);
    if (auto v = get("min_tc")) o.min_tc = std::stoll(*v);
    if (auto v = get("threshold")) o.threshold = std::stoll(*v);
    if (auto v = get("pc_window")) o.pc_window = *v;
    if (auto v = get("unknown_years")) o.unknown_years = *v;
    if (auto v = get("window_sc_dc")) o.window_sc_dc = parse_bool(*v);
    if (auto v = get("coeffs")) o.coeffs = *v;
    if (auto v = get("literal_powers")) o.literal_powers = parse_bool(*v);
    if (auto v = get("output")) o.output = *v;
    if (auto v = get("out")) o.out = *v;
}

// Locate --config before the real parse so config values become defaults
// that explicit flags then override.
std::optional<std::string> prescan_config_path(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
        if (arg.rfind("--config=", 0) == 0) return arg.substr(9);
    }
    if (const char* env = std::getenv("DISRUPTIX_CONFIG"); env && *env) return std::string(env);
    return std::nullopt;
}

// --- shared plumbing -----------------------------------------------------

disruptix::IngestResult load_graph(const Options& o) {
    auto format = disruptix::parse_input_format(o.format);
    if (!format)
        throw disruptix::IoError("unknown format '" + o.format +
                                 "' (expected papers-jsonl or edges-csv)");
    disruptix::IngestOptions options;
    options.format = *format;
    options.strict = !o.lenient;
    if (!o.years.empty()) options.years_path = o.years;
    return disruptix::ingest_file(o.input, options);
}

disruptix::WindowPolicy window_policy(const Options& o) {
    disruptix::WindowPolicy policy;
    if (o.pc_window == "inclusive")
        policy.pc_start = disruptix::PcWindow::inclusive;
    else if (o.pc_window != "strict")
        throw disruptix::IoError("unknown --pc-window '" + o.pc_window +
                                 "' (expected strict or inclusive)");
    if (o.unknown_years == "include")
        policy.unknown_years = disruptix::UnknownYearHandling::include;
    else if (o.unknown_years != "exclude")
        throw disruptix::IoError("unknown --unknown-years '" + o.unknown_years +
                                 "' (expected exclude or include)");
    policy.apply_window_to_sc_dc = o.window_sc_dc;
    return policy;
}

std::optional<disruptix::Coefficients> parse_coeffs(const Options& o) {
    if (o.coeffs.empty()) return std::nullopt;
    auto parts = split_list(o.coeffs);
    if (parts.size() != 6)
        throw disruptix::IoError("--coeffs needs six comma-separated numbers a,b,c,d,e,f");
    double v[6];
    for (std::size_t i = 0; i < 6; ++i) {
        try {
            std::size_t used = 0;
            v[i] = std::stod(parts[i], &used);
            if (used != parts[i].size()) throw std::invalid_argument(parts[i]);
        } catch (const std::exception&) {
            throw disruptix::IoError("--coeffs: '" + parts[i] + "' is not a number");
        }
    }
    return disruptix::Coefficients{v[0], v[1], v[2], v[3], v[4], v[5]};
}

// Explicit focal list in the given order, or every paper with tc >= min_tc.
std::vector<disruptix::PaperId> resolve_focals(const Options& o,
                                               const disruptix::CitationGraph& graph) {
    if (!o.all_cited) return o.focals;
    std::vector<disruptix::PaperId> focals;
    for (std::uint32_t n = 0; n < graph.node_count(); ++n)
        if (graph.citers(n).size() >= static_cast<std::size_t>(o.min_tc))
            focals.push_back(graph.id_of(n));
    std::sort(focals.begin(), focals.end());
    return focals;
}

class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw disruptix::IoError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string coeffs_row_label(const disruptix::Coefficients& c) {
    std::ostringstream label;
    label << "general(" << c.a << ',' << c.b << ',' << c.c << ',' << c.d << ',' << c.e << ','
          << c.f << ')';
    return label.str();
}

// --- subcommands ---------------------------------------------------------

int cmd_ingest(const Options& o) {
    auto [graph, report] = load_graph(o);
    if (!o.out.empty()) {
        std::ofstream out(o.out, std::ios::binary);
        if (!out) throw disruptix::IoError("cannot open output file: " + o.out);
        disruptix::export_papers_jsonl(graph, out);
    }
    std::cout << "papers=" << report.papers << " edges=" << report.edges
              << " stubs=" << report.stubs << " skipped=" << report.skipped << '\n';
    for (const auto& warning : report.warnings) std::cout << "warning: " << warning << '\n';
    return kExitOk;
}

int cmd_classify(const Options& o) {
    auto [graph, report] = load_graph(o);
    auto focals = resolve_focals(o, graph);
    auto resolvable = std::count_if(focals.begin(), focals.end(),
                                    [&](const auto& id) { return graph.find(id).has_value(); });
    if (focals.empty() || resolvable == 0) {
        std::cerr << "no focal papers resolvable\n";
        return kExitResolutionError;
    }

    auto entries = disruptix::classify_batch(graph, focals, window_policy(o));
    OutputTarget target(o.out);
    auto& out = target.stream();
    if (o.output == "tsv") {
        out << "focal\tsc\tdc\tpc\tnr\texcluded\n";
        for (const auto& entry : entries) {
            if (!entry.ok()) {
                out << entry.focal << "\terror\terror\terror\terror\terror\n";
                std::cerr << entry.focal << ": " << entry.error << '\n';
                continue;
            }
            const auto& c = entry.classification->counts;
            out << entry.focal << '\t' << c.sc << '\t' << c.dc << '\t' << c.pc << '\t' << c.nr
                << '\t' << entry.classification->excluded.size() << '\n';
        }
    } else {
        for (const auto& entry : entries) {
            if (!entry.ok()) {
                nlohmann::ordered_json j;
                j["focal"] = entry.focal;
                j["error"] = entry.error;
                out << j.dump() << '\n';
                continue;
            }
            out << disruptix::classification_to_json(*entry.classification).dump() << '\n';
        }
    }
    return kExitOk;
}

int cmd_score(const Options& o) {
    auto [graph, report] = load_graph(o);
    auto focals = resolve_focals(o, graph);
    auto resolvable = std::count_if(focals.begin(), focals.end(),
                                    [&](const auto& id) { return graph.find(id).has_value(); });
    if (focals.empty() || resolvable == 0) {
        std::cerr << "no focal papers resolvable\n";
        return kExitResolutionError;
    }
    auto coeffs = parse_coeffs(o);
    auto policy = window_policy(o);

    std::vector<disruptix::ScoreColumn> columns;
    columns.reserve(focals.size());
    for (const auto& entry : disruptix::classify_batch(graph, focals, policy)) {
        disruptix::ScoreColumn column;
        column.focal = entry.focal;
        if (!entry.ok()) {
            column.error = entry.error;
            std::cerr << entry.focal << ": " << entry.error << '\n';
        } else {
            column.counts = entry.classification->counts;
            column.scores = disruptix::compute_all(column.counts, o.threshold);
            if (coeffs) {
                disruptix::GeneralOptions general{o.literal_powers, o.threshold};
                column.scores.push_back(disruptix::compute_general(*coeffs, column.counts, general));
                column.extra_labels.push_back(coeffs_row_label(*coeffs));
            }
        }
        columns.push_back(std::move(column));
    }

    OutputTarget target(o.out);
    auto& out = target.stream();
    if (o.output == "json") {
        for (const auto& column : columns)
            out << disruptix::score_column_to_json(column).dump() << '\n';
    } else {
        out << disruptix::score_table_tsv(columns);
    }
    return kExitOk;
}

int cmd_annual(const Options& o) {
    auto [graph, report] = load_graph(o);
    if (o.focals.size() != 1) {
        std::cerr << "annual needs exactly one --focal\n";
        return kExitInputError;
    }
    const auto& focal = o.focals.front();
    if (!graph.find(focal)) {
        std::cerr << "unknown focal paper: " << focal << '\n';
        return kExitResolutionError;
    }
    auto histogram = graph.annual_citations(focal);
    OutputTarget target(o.out);
    if (o.output == "json")
        target.stream() << disruptix::annual_to_json(focal, histogram).dump() << '\n';
    else
        target.stream() << disruptix::annual_to_tsv(histogram);
    return kExitOk;
}

void add_common_options(CLI::App* cmd, Options& o, bool with_selection) {
    cmd->add_option("--input", o.input, "input graph file")->required();
    cmd->add_option("--format", o.format, "papers-jsonl | edges-csv (default papers-jsonl)");
    cmd->add_option("--years", o.years, "companion id,year CSV (edges-csv)");
    cmd->add_flag("--lenient", o.lenient, "skip malformed lines instead of failing");
    cmd->add_option("--config", o.config, "config file (key = value); env DISRUPTIX_CONFIG");
    cmd->add_option("--out", o.out, "write output to this path instead of stdout");
    if (with_selection) {
        cmd->add_option("--focal", o.focals, "focal paper id (repeatable)");
        cmd->add_flag("--all-cited", o.all_cited, "select every paper with tc >= --min-tc");
        cmd->add_option("--min-tc", o.min_tc, "citation floor for --all-cited (default 1)");
        cmd->add_option("--pc-window", o.pc_window, "strict | inclusive (default strict)");
        cmd->add_option("--unknown-years", o.unknown_years,
                        "exclude | include prelude candidates without a year (default exclude)");
        cmd->add_flag("--window-sc-dc", o.window_sc_dc, "apply the window to solo/duet citers too");
    }
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    try {
        if (auto config = prescan_config_path(argc, argv)) apply_config(o, read_config_file(*config));
    } catch (const disruptix::Error& e) {
        std::cerr << "disruptix: " << e.what() << '\n';
        return kExitInputError;
    }

    CLI::App app{"citation-graph disruption indicators"};
    app.require_subcommand(1);
    int rc = kExitOk;

    auto* ingest = app.add_subcommand("ingest", "load a graph and print its load report");
    add_common_options(ingest, o, false);
    ingest->callback([&] { rc = cmd_ingest(o); });

    auto* classify = app.add_subcommand("classify", "solo/duet/prelude citer sets per focal");
    add_common_options(classify, o, true);
    classify->add_option("--output", o.output, "json | tsv (default json)");
    classify->callback([&] {
        if (o.output.empty()) o.output = "json";
        rc = cmd_classify(o);
    });

    auto* score = app.add_subcommand("score", "indicator table per focal");
    add_common_options(score, o, true);
    score->add_option("--threshold", o.threshold,
                      "citation threshold flagging ratio scores (default 20)");
    score->add_option("--coeffs", o.coeffs, "a,b,c,d,e,f adds a general-formula row");
    score->add_flag("--literal-powers", o.literal_powers,
                    "evaluate zero exponents literally as x^0 = 1");
    score->add_option("--output", o.output, "tsv | json (default tsv)");
    score->callback([&] {
        if (o.output.empty()) o.output = "tsv";
        rc = cmd_score(o);
    });

    auto* annual = app.add_subcommand("annual", "annual citation histogram of one focal");
    add_common_options(annual, o, true);
    annual->add_option("--output", o.output, "tsv | json (default tsv)");
    annual->callback([&] {
        if (o.output.empty()) o.output = "tsv";
        rc = cmd_annual(o);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    } catch (const disruptix::Error& e) {
        std::cerr << "disruptix: " << e.what() << '\n';
        return kExitInputError;
    }
    return rc;
}
