#include <doctest.h>

#include "disruptix/classifier.hpp"
#include "disruptix/report.hpp"
#include "support/synthetic.hpp"

using namespace disruptix;

TEST_CASE("fixed-point formatting rounds half away from zero") {
    CHECK(format_fixed(0.8426229508, 4) == "0.8426");
    CHECK(format_fixed(-0.4240437158, 4) == "-0.4240");
    CHECK(format_fixed(0.12345, 4) == "0.1235");
    CHECK(format_fixed(-0.12345, 4) == "-0.1235");
    CHECK(format_fixed(2.0, 4) == "2.0000");
    CHECK(format_fixed(0.0, 4) == "0.0000");
    CHECK(format_fixed(-0.00004, 4) == "0.0000");  // never "-0"
    CHECK(format_fixed(776.66557377, 4) == "776.6656");
    CHECK(format_fixed(3.0, 0) == "3");
}

TEST_CASE("score cells: integers plain, ratios at 4 decimals, flags appended") {
    auto integer = compute(Indicator::sc_minus_dc, {843, 72, 0, 0});
    CHECK(format_score_cell(integer) == "771");

    auto ratio = compute(Indicator::scdc_ratio, {843, 72, 0, 0});
    CHECK(format_score_cell(ratio) == "0.8426");

    auto flagged = compute(Indicator::sc_ratio, {1, 0, 0, 0});
    CHECK(format_score_cell(flagged) == "1.0000*");

    auto invalid = compute(Indicator::scdc_ratio, {0, 0, 5, 0});
    CHECK(format_score_cell(invalid) == "invalid");

    auto predicate = compute(Indicator::kosmulski_successful, {5, 0, 0, 1});
    CHECK(format_score_cell(predicate) == "true");
}

TEST_CASE("classification JSON carries the documented shape") {
    auto graph = synthetic::build_graph({{"F", 2000, {"R1", "R2"}},
                                         {"A", 2001, {"F"}},
                                         {"B", 2002, {"F", "R1"}},
                                         {"C", 2001, {"R2"}},
                                         {"D", 1999, {"R1"}},
                                         {"E", 2003, {"R1", "R2"}}});
    auto j = classification_to_json(classify(graph, "F"));
    CHECK(j.dump() ==
          R"({"focal":"F","sc":["A"],"dc":["B"],"pc":["C","E"],)"
          R"("counts":{"sc":1,"dc":1,"pc":2,"nr":2},)"
          R"("excluded":[{"id":"D","reason":"pre-window"}]})");
}

TEST_CASE("score JSON: value is number, boolean or null") {
    auto ratio = score_to_json(compute(Indicator::scdc_ratio, {843, 72, 0, 0}));
    CHECK(ratio["indicator"] == "(SC-DC)/(SC+DC)");
    CHECK(ratio["value"].is_number());
    CHECK(ratio["valid"] == true);
    CHECK(ratio["below_threshold"] == false);

    auto invalid = score_to_json(compute(Indicator::sc_ratio, {0, 0, 0, 0}));
    CHECK(invalid["value"].is_null());
    CHECK(invalid["valid"] == false);
    CHECK(invalid["below_threshold"] == true);

    auto predicate = score_to_json(compute(Indicator::kosmulski_successful, {5, 0, 0, 1}));
    CHECK(predicate["value"].is_boolean());
}

TEST_CASE("score table lays out indicator rows by focal columns") {
    ScoreColumn case_one{"caseI", "", {843, 72, 1231, 0}, compute_all({843, 72, 1231, 0}), {}};
    ScoreColumn case_two{"caseII", "", {647, 385, 6701, 0}, compute_all({647, 385, 6701, 0}), {}};
    auto tsv = score_table_tsv({case_one, case_two});

    CHECK(tsv.find("indicator\tcaseI\tcaseII\n") == 0);
    CHECK(tsv.find("SC\t843\t647\n") != std::string::npos);
    CHECK(tsv.find("SC-DC\t771\t262\n") != std::string::npos);
    CHECK(tsv.find("SC-PC\t-388\t-6054\n") != std::string::npos);
    CHECK(tsv.find("SC-DC-PC\t-460\t-6439\n") != std::string::npos);
    CHECK(tsv.find("SC/(SC+DC)\t0.9213\t0.6269\n") != std::string::npos);
    CHECK(tsv.find("(SC-DC)/(SC+DC)\t0.8426\t0.2539\n") != std::string::npos);
    CHECK(tsv.find("(SC-PC)/(SC+DC)\t-0.4240\t-5.8663\n") != std::string::npos);
    CHECK(tsv.find("(SC-DC-PC)/(SC+DC)\t-0.5027\t-6.2393\n") != std::string::npos);
    CHECK(tsv.find("(SC-DC)/(SC+DC+PC)\t0.3593\t0.0339\n") != std::string::npos);
    CHECK(tsv.find("SC*SC/(SC+DC)\t776.6656\t405.6289\n") != std::string::npos);
    CHECK(tsv.find("(SC+DC)/NR\tinvalid\tinvalid\n") != std::string::npos);  // nr = 0 here
}

TEST_CASE("score table marks failed focals as error columns") {
    ScoreColumn good{"F", "", {1, 1, 2, 2}, compute_all({1, 1, 2, 2}), {}};
    ScoreColumn bad{"ghost", "unknown focal paper: ghost", {}, {}, {}};
    auto tsv = score_table_tsv({good, bad});
    CHECK(tsv.find("SC\t1\terror\n") != std::string::npos);
}

TEST_CASE("annual TSV is ascending with the unknown bucket last") {
    AnnualCitations hist;
    hist.per_year = {{2003, 1}, {2001, 2}};
    hist.unknown_year = 3;
    CHECK(annual_to_tsv(hist) == "2001\t2\n2003\t1\nunknown\t3\n");

    AnnualCitations empty;
    CHECK(annual_to_tsv(empty).empty());
}

TEST_CASE("annual JSON shape") {
    AnnualCitations hist;
    hist.per_year = {{2001, 2}};
    auto j = annual_to_json("F", hist);
    CHECK(j.dump() == R"({"focal":"F","years":{"2001":2},"unknown":0})");
}
