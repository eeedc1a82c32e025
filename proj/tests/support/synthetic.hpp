#pragma once

// Random paper-record generators for property tests.

#include <random>
#include <string>
#include <vector>

#include "disruptix/graph.hpp"

namespace synthetic {

struct GraphSpec {
    std::size_t min_nodes = 2;
    std::size_t max_nodes = 200;
    int min_year = 1990;
    int max_year = 2020;
    double unknown_year_prob = 0.0;
    std::size_t max_refs = 10;
};

inline std::vector<disruptix::Paper> random_papers(std::mt19937& rng, const GraphSpec& spec = {}) {
    std::uniform_int_distribution<std::size_t> node_count(spec.min_nodes, spec.max_nodes);
    std::uniform_int_distribution<int> year(spec.min_year, spec.max_year);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    const std::size_t n = node_count(rng);
    std::vector<disruptix::Paper> papers(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        papers[i].id = "P" + std::to_string(i);
        if (coin(rng) >= spec.unknown_year_prob) papers[i].year = year(rng);
        std::uniform_int_distribution<std::size_t> ref_count(0, spec.max_refs);
        const std::size_t k = ref_count(rng);
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t target = pick(rng);
            if (target != i) papers[i].references.push_back("P" + std::to_string(target));
        }
    }
    return papers;
}

inline disruptix::CitationGraph build_graph(const std::vector<disruptix::Paper>& papers) {
    disruptix::CitationGraph graph;
    for (const auto& paper : papers) graph.add_paper(paper);
    graph.freeze();
    return graph;
}

inline std::string to_jsonl(const std::vector<disruptix::Paper>& papers) {
    std::string out;
    for (const auto& paper : papers) {
        out += "{\"id\":\"" + paper.id + "\",\"year\":";
        out += paper.year ? std::to_string(*paper.year) : "null";
        out += ",\"references\":[";
        for (std::size_t i = 0; i < paper.references.size(); ++i) {
            if (i) out += ',';
            out += '"' + paper.references[i] + '"';
        }
        out += "]}\n";
    }
    return out;
}

}  // namespace synthetic
