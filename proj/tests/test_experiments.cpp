#include <catch2/catch_amalgamated.hpp>

#include <regex>
#include <sstream>

#include "sdim/experiments.hpp"

using namespace sdim;

TEST_CASE("gp-n1 suite proves sdim = n", "[experiments]") {
    auto reports = run_gp_n1(3, 6);
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports) {
        CHECK(r.verdict == Verdict::Confirmed);
        REQUIRE(r.proven_sdim.has_value());
        CHECK(*r.proven_sdim == r.n);
        CHECK(r.exact.has_value());
        CHECK(r.exact->proven);
    }
}

TEST_CASE("4k+2 suite closes the small instances exactly", "[experiments]") {
    auto reports = run_theorem_4k2(1, 3);
    REQUIRE(reports.size() == 3);
    for (const auto& r : reports) {
        INFO("n=" << r.n);
        CHECK(r.verdict == Verdict::Confirmed);
        REQUIRE(r.proven_sdim.has_value());
        CHECK(*r.proven_sdim == r.n); // 4k+2 = n
        CHECK(r.exact.has_value());   // n <= 14 goes through the exact solver
    }
}

TEST_CASE("4k+2 suite closes larger instances by construction + diametral bound",
          "[experiments]") {
    auto reports = run_theorem_4k2(4, 5);
    for (const auto& r : reports) {
        INFO("n=" << r.n);
        CHECK(r.verdict == Verdict::Confirmed);
        CHECK_FALSE(r.exact.has_value());
        REQUIRE(r.construction.has_value());
        CHECK(r.construction->verified);
        CHECK(r.construction->size == r.n);
        CHECK(r.bounds.diametral_lb.proven);
        CHECK(r.bounds.diametral_lb.value == r.n);
        REQUIRE(r.proven_sdim.has_value());
        CHECK(*r.proven_sdim == r.n);
    }
}

TEST_CASE("4k suite: small k against published values, k=5 against 5k", "[experiments]") {
    auto reports = run_theorem_4k(3, 5);
    REQUIRE(reports.size() == 3);

    const auto& k3 = reports[0]; // n=12
    CHECK(k3.verdict == Verdict::Confirmed);
    REQUIRE(k3.proven_sdim.has_value());
    CHECK(*k3.proven_sdim == 13); // not 5k=15; the theorem starts at k=5
    CHECK(k3.note.find("outside theorem range") != std::string::npos);

    const auto& k4 = reports[1]; // n=16
    REQUIRE(k4.proven_sdim.has_value());
    CHECK(*k4.proven_sdim == 19);

    const auto& k5 = reports[2]; // n=20
    CHECK(k5.verdict == Verdict::Confirmed);
    REQUIRE(k5.proven_sdim.has_value());
    CHECK(*k5.proven_sdim == 25);
    CHECK_FALSE(k5.exact.has_value()); // closed by mmd bound meeting the construction
    REQUIRE(k5.construction.has_value());
    CHECK(k5.construction->verified);
    CHECK(k5.construction->size == 25);
    CHECK(k5.bounds.mmd_cover_lb.value == 25);
    REQUIRE(k5.mmd_tight.has_value());
    CHECK(*k5.mmd_tight);
}

TEST_CASE("4k+1 suite: upper bound holds and the exact probe lands on the catalog",
          "[experiments]") {
    auto reports = run_corollary_4k1(3, 4);
    REQUIRE(reports.size() == 2);
    for (const auto& r : reports) {
        CHECK(r.verdict == Verdict::Confirmed);
        REQUIRE(r.construction.has_value());
        CHECK(r.construction->verified);
    }
    REQUIRE(reports[0].proven_sdim.has_value());
    CHECK(*reports[0].proven_sdim == 17); // GP(13,2)
    CHECK(reports[0].note.find("matches published value 17") != std::string::npos);
    REQUIRE(reports[1].proven_sdim.has_value());
    CHECK(*reports[1].proven_sdim == 24); // GP(17,2)
}

TEST_CASE("4k+3 scan: small k checked against published values", "[experiments]") {
    auto reports = run_hypothesis_4k3(1, 2);
    REQUIRE(reports.size() == 2);

    const auto& k1 = reports[0]; // n=7
    CHECK(k1.verdict == Verdict::Confirmed);
    REQUIRE(k1.proven_sdim.has_value());
    CHECK(*k1.proven_sdim == 9);
    CHECK(k1.note.find("hypothesis value 9") != std::string::npos);
    CHECK(k1.note.find("outside hypothesis range") != std::string::npos);

    const auto& k2 = reports[1]; // n=11: hypothesis formula says 14, table says 12
    CHECK(k2.verdict == Verdict::Confirmed);
    REQUIRE(k2.proven_sdim.has_value());
    CHECK(*k2.proven_sdim == 12);
    CHECK(k2.note.find("hypothesis value 14") != std::string::npos);
    CHECK(k2.note.find("published small-case value 12") != std::string::npos);
}

TEST_CASE("table4 suite reproduces every row", "[experiments]") {
    auto reports = run_table4();
    REQUIRE(reports.size() == 11);
    for (const auto& r : reports) {
        INFO("n=" << r.n);
        CHECK(r.verdict == Verdict::Confirmed);
        REQUIRE(r.proven_sdim.has_value());
        REQUIRE(r.reference_value.has_value());
        CHECK(*r.proven_sdim == *r.reference_value);
        REQUIRE(r.construction.has_value());
        CHECK(r.construction->verified);
        if (r.n == 7) {
            CHECK(r.note.find("claims sdim 9 but lists 10") != std::string::npos);
            CHECK(r.note.find("solver proves 9") != std::string::npos);
        }
    }
}

TEST_CASE("confirmed verdicts always rest on proven quantities", "[experiments]") {
    std::vector<ExperimentReport> all;
    for (auto&& r : run_theorem_4k2(1, 4)) all.push_back(r);
    for (auto&& r : run_theorem_4k(3, 5)) all.push_back(r);
    for (auto&& r : run_gp_n1(3, 5)) all.push_back(r);
    for (auto&& r : run_hypothesis_4k3(1, 2)) all.push_back(r);
    for (const auto& r : all)
        if (r.verdict == Verdict::Confirmed && r.suite != "cor-4k1")
            REQUIRE(r.proven_sdim.has_value());
}

TEST_CASE("unproven instances stay unproven rather than confirmed", "[experiments]") {
    ExperimentOptions opt;
    opt.budget = Millis(0); // no search time: only root bounds are available
    auto reports = run_table4(opt);
    for (const auto& r : reports)
        if (r.verdict == Verdict::Confirmed) REQUIRE(r.proven_sdim.has_value());
    // GP(19,2): any disjoint-row packing is a matching, so the zero-budget lower
    // bound caps at 19 < sdim = 24 and the instance cannot be closed
    const auto& n19 = *std::find_if(reports.begin(), reports.end(),
                                    [](const auto& r) { return r.n == 19; });
    CHECK(n19.verdict == Verdict::Unproven);
    CHECK_FALSE(n19.proven_sdim.has_value());
}

TEST_CASE("report emission: JSONL and CSV", "[experiments]") {
    auto reports = run_gp_n1(3, 5);
    std::ostringstream jl, csv;
    write_jsonl(reports, jl);
    write_csv(reports, csv);

    std::istringstream lines(jl.str());
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        CHECK(j["suite"] == "gp-n1");
        CHECK(j.contains("bounds"));
        CHECK(j.contains("verdict"));
        ++count;
    }
    CHECK(count == 3);

    std::istringstream csvl(csv.str());
    std::getline(csvl, line);
    CHECK(line == "n,k,family,lb,ub,exact,proven,verdict");
    int rows = 0;
    while (std::getline(csvl, line)) {
        CHECK(std::regex_match(
            line, std::regex(R"(\d+,\d+,[^,]*,\d+,\d+,\d*,(true|false),[a-z-]+)")));
        ++rows;
    }
    CHECK(rows == 3);
}

TEST_CASE("reports are deterministic up to wall-clock fields", "[experiments]") {
    auto mask = [](std::string s) {
        return std::regex_replace(s, std::regex(R"("millis":\d+)"), "\"millis\":0");
    };
    std::ostringstream a, b;
    write_jsonl(run_theorem_4k2(1, 2), a);
    write_jsonl(run_theorem_4k2(1, 2), b);
    CHECK(mask(a.str()) == mask(b.str()));

    // worker count must not change anything but timings
    ExperimentOptions serial, parallel;
    parallel.workers = 3;
    std::ostringstream c, d;
    write_jsonl(run_gp_n1(3, 8, serial), c);
    write_jsonl(run_gp_n1(3, 8, parallel), d);
    CHECK(mask(c.str()) == mask(d.str()));
}

TEST_CASE("solve result JSON has the documented shape", "[experiments]") {
    Graph g = build_gp({5, 2});
    auto cs = build_constraints(all_pairs_distances(g));
    auto res = solve_exact(cs);
    auto j = solve_result_json(res, g);
    // fixed key order
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"n", "k", "optimum", "basis", "proven", "lb",
                                           "nodes", "millis"});
    CHECK(j["n"] == 5);
    CHECK(j["k"] == 2);
    CHECK(j["optimum"] == 8);
    CHECK(j["proven"] == true);
    CHECK(j["basis"].size() == 8);
    for (const auto& l : j["basis"]) {
        std::string s = l.get<std::string>();
        CHECK((s[0] == 'u' || s[0] == 'v'));
    }
}
