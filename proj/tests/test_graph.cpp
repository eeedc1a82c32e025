#include <doctest.h>

#include <algorithm>
#include <random>

#include "disruptix/graph.hpp"
#include "support/synthetic.hpp"

using namespace disruptix;

namespace {

Paper make(const PaperId& id, std::optional<int> year, std::vector<PaperId> refs = {}) {
    return Paper{id, year, std::move(refs)};
}

}  // namespace

TEST_CASE("add_paper stores a paper with no references") {
    CitationGraph g;
    g.add_paper(make("F", 2000));
    g.freeze();
    CHECK(g.node_count() == 1);
    CHECK(g.record_count() == 1);
    CHECK(g.edge_count() == 0);
    CHECK(g.citers_of("F").empty());
}

TEST_CASE("add_paper updates the reverse index for every reference") {
    CitationGraph g;
    g.add_paper(make("A", 2001, {"F"}));
    g.freeze();
    CHECK(g.citers_of("F") == std::vector<PaperId>{"A"});
    CHECK(g.stub_count() == 1);  // F materialized as a stub
    CHECK(!g.year_of(*g.find("F")).has_value());
    CHECK(g.references(*g.find("F")).empty());
}

TEST_CASE("re-adding an identical paper is a no-op") {
    CitationGraph g;
    g.add_paper(make("A", 2001, {"F", "G"}));
    g.add_paper(make("A", 2001, {"G", "F"}));  // order-insensitive
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.record_count() == 1);
}

TEST_CASE("re-adding with different content throws DuplicatePaperError") {
    CitationGraph g;
    g.add_paper(make("A", 2001, {"F"}));
    CHECK_THROWS_AS(g.add_paper(make("A", 2002, {"F"})), DuplicatePaperError);
    CHECK_THROWS_AS(g.add_paper(make("A", 2001, {"F", "G"})), DuplicatePaperError);
}

TEST_CASE("mutation after freeze throws GraphFrozenError") {
    CitationGraph g;
    g.add_paper(make("F", 2000));
    g.freeze();
    CHECK_THROWS_AS(g.add_paper(make("X", 2001)), GraphFrozenError);
    CHECK_THROWS_AS(g.add_edge("X", "F"), GraphFrozenError);
    CHECK_THROWS_AS(g.set_year("F", 1999), GraphFrozenError);
}

TEST_CASE("queries before freeze throw GraphNotFrozenError") {
    CitationGraph g;
    g.add_paper(make("F", 2000));
    CHECK_THROWS_AS(g.citers_of("F"), GraphNotFrozenError);
    CHECK_THROWS_AS(g.annual_citations("F"), GraphNotFrozenError);
}

TEST_CASE("self-references are stripped and counted") {
    CitationGraph g;
    g.add_paper(make("A", 2001, {"A", "F"}));
    CHECK(g.self_references_stripped() == 1);
    CHECK(g.edge_count() == 1);
    g.freeze();
    CHECK(g.citers_of("A").empty());
}

TEST_CASE("duplicate references are deduplicated and counted") {
    CitationGraph g;
    g.add_paper(make("A", 2001, {"F", "F", "G"}));
    CHECK(g.duplicate_references_removed() == 1);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("structurally invalid papers are rejected") {
    CitationGraph g;
    CHECK_THROWS_AS(g.add_paper(make("", 2000)), InvalidPaperError);
    CHECK_THROWS_AS(g.add_paper(make("A", 1200)), InvalidPaperError);
    CHECK_THROWS_AS(g.add_paper(make("A", 3000)), InvalidPaperError);
    CHECK_THROWS_AS(g.add_paper(make("A", 2000, {""})), InvalidPaperError);
    CHECK(g.node_count() == 0);
}

TEST_CASE("year limits are configurable") {
    CitationGraph g(YearLimits{0, 9999});
    g.add_paper(make("A", 1200));
    CHECK(g.record_count() == 1);
}

TEST_CASE("citers_of unknown id yields the empty set") {
    CitationGraph g;
    g.add_paper(make("F", 2000));
    g.freeze();
    CHECK(g.citers_of("nope").empty());
}

TEST_CASE("citers_of matches a brute-force transpose scan") {
    CitationGraph g;
    g.add_paper(make("F", 2000));
    g.add_paper(make("A", 2001, {"F"}));
    g.add_paper(make("B", 2002, {"F", "A"}));
    g.add_paper(make("C", 2003, {"F"}));
    g.add_paper(make("D", 2004, {"A"}));
    g.freeze();
    CHECK(g.citers_of("F") == std::vector<PaperId>{"A", "B", "C"});

    // brute force: scan every reference list
    std::vector<PaperId> scan;
    for (std::uint32_t n = 0; n < g.node_count(); ++n)
        for (auto r : g.references(n))
            if (g.id_of(r) == "F") scan.push_back(g.id_of(n));
    std::sort(scan.begin(), scan.end());
    CHECK(g.citers_of("F") == scan);
}

TEST_CASE("transpose invariant holds on random graphs") {
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        auto papers = synthetic::random_papers(rng);
        auto g = synthetic::build_graph(papers);
        for (std::uint32_t p = 0; p < g.node_count(); ++p) {
            for (auto q : g.references(p)) {
                auto citers = g.citers(q);
                CHECK(std::binary_search(citers.begin(), citers.end(), p));
            }
            for (auto c : g.citers(p)) {
                auto refs = g.references(c);
                CHECK(std::binary_search(refs.begin(), refs.end(), p));
            }
        }
    }
}

TEST_CASE("annual_citations counts citers per year") {
    CitationGraph g;
    g.add_paper(make("F", 2000));
    g.add_paper(make("A", 2001, {"F"}));
    g.add_paper(make("B", 2001, {"F"}));
    g.add_paper(make("C", 2003, {"F"}));
    g.freeze();
    auto hist = g.annual_citations("F");
    CHECK(hist.per_year == std::map<int, std::uint32_t>{{2001, 2}, {2003, 1}});
    CHECK(hist.unknown_year == 0);
    CHECK(hist.total() == 3);
}

TEST_CASE("annual_citations of an uncited paper is empty") {
    CitationGraph g;
    g.add_paper(make("F", 2000));
    g.freeze();
    auto hist = g.annual_citations("F");
    CHECK(hist.per_year.empty());
    CHECK(hist.total() == 0);
}

TEST_CASE("unknown-year citers aggregate in the unknown bucket") {
    CitationGraph g;
    g.add_paper(make("F", 2000));
    g.add_paper(make("A", std::nullopt, {"F"}));
    g.add_paper(make("B", 2001, {"F"}));
    g.freeze();
    auto hist = g.annual_citations("F");
    CHECK(hist.unknown_year == 1);
    CHECK(hist.per_year.at(2001) == 1);
}

TEST_CASE("annual histogram equals a brute-force group-by over 50 citers") {
    std::mt19937 rng(13);
    std::uniform_int_distribution<int> year(1995, 2005);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    CitationGraph g;
    g.add_paper(make("F", 1990));
    std::vector<Paper> citers;
    for (int i = 0; i < 50; ++i) {
        Paper p = make("C" + std::to_string(i), std::nullopt, {"F"});
        if (coin(rng) > 0.1) p.year = year(rng);
        citers.push_back(p);
        g.add_paper(p);
    }
    g.freeze();

    std::map<int, std::uint32_t> expected;
    std::uint32_t expected_unknown = 0;
    for (const auto& p : citers) {
        if (p.year)
            ++expected[*p.year];
        else
            ++expected_unknown;
    }
    auto hist = g.annual_citations("F");
    CHECK(hist.per_year == expected);
    CHECK(hist.unknown_year == expected_unknown);
    CHECK(hist.total() == g.citers_of("F").size());
}

TEST_CASE("histogram totals match citer counts on random graphs") {
    std::mt19937 rng(99);
    for (int round = 0; round < 10; ++round) {
        synthetic::GraphSpec spec;
        spec.unknown_year_prob = 0.2;
        auto papers = synthetic::random_papers(rng, spec);
        auto g = synthetic::build_graph(papers);
        for (const auto& p : papers)
            CHECK(g.annual_citations(p.id).total() == g.citers_of(p.id).size());
    }
}

TEST_CASE("a stub is upgraded in place by a later record") {
    CitationGraph g;
    g.add_paper(make("A", 2001, {"F"}));
    CHECK(g.stub_count() == 1);
    g.add_paper(make("F", 2000, {"R"}));
    CHECK(g.stub_count() == 1);  // now R is the only stub
    CHECK(g.record_count() == 2);
    g.freeze();
    CHECK(g.citers_of("F") == std::vector<PaperId>{"A"});
    CHECK(g.citers_of("R") == std::vector<PaperId>{"F"});
}

TEST_CASE("add_edge builds stub nodes and drops self edges") {
    CitationGraph g;
    g.add_edge("A", "F");
    g.add_edge("A", "F");  // duplicate
    g.add_edge("A", "A");  // self
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.duplicate_references_removed() == 1);
    CHECK(g.self_references_stripped() == 1);
    g.freeze();
    CHECK(g.citers_of("F") == std::vector<PaperId>{"A"});
}

TEST_CASE("mutual citation pairs are flagged") {
    CitationGraph g;
    g.add_paper(make("A", 2000, {"B"}));
    g.add_paper(make("B", 2000, {"A"}));
    g.add_paper(make("C", 2001, {"A"}));
    g.freeze();
    CHECK(g.mutual_citation_pairs() == 1);
}
