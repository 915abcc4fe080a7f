#include "flowvol/error.hpp"
#include "flowvol/parse.hpp"
#include "flowvol/report.hpp"

#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

using namespace flowvol;

TEST_CASE("builtin graph tokens") {
    CHECK(parse_graph("k4") == complete_graph(4));
    CHECK(parse_graph("ps3") == pitman_stanley_graph(3));
    CHECK(parse_graph("pic:2,1") == pi_c_graph({2, 1}));
    CHECK_THROWS_AS(parse_graph("k1"), Error);
    CHECK_THROWS_AS(parse_graph("qq7"), Error);
}

TEST_CASE("inline graph specifications") {
    const MultiDigraph expected = make_graph(2, {{1, 2}, {1, 2}, {2, 3}, {2, 3}});
    CHECK(parse_graph("n=2;edges=(1,2),(1,2),(2,3),(2,3)") == expected);
    CHECK(parse_graph("n=2;edges=1-2,1-2,2-3,2-3") == expected);
    CHECK(parse_graph(" n=2; edges=1-2, 1-2, 2-3, 2-3 ") == expected);
    CHECK_THROWS_AS(parse_graph("n=2;edges="), Error);
    CHECK_THROWS_AS(parse_graph("n=;edges=1-2"), Error);
    CHECK_THROWS_AS(parse_graph("n=2"), Error);
    CHECK_THROWS_AS(parse_graph("n=2;edges=(1,2"), Error);
    CHECK_THROWS_AS(parse_graph("n=x;edges=1-2"), Error);
}

TEST_CASE("file graph specifications") {
    const std::string json_path = "parse_test_graph.json";
    {
        std::ofstream file(json_path);
        file << "{\"n\": 2, \"edges\": [[1, 2], [1, 3], [2, 3]]}\n";
    }
    CHECK(parse_graph("@" + json_path) == make_graph(2, {{1, 2}, {1, 3}, {2, 3}}));
    std::remove(json_path.c_str());

    const std::string inline_path = "parse_test_graph.txt";
    {
        std::ofstream file(inline_path);
        file << "n=3;edges=1-2,2-3,3-4\n";
    }
    CHECK(parse_graph("@" + inline_path) == make_graph(3, {{1, 2}, {2, 3}, {3, 4}}));
    std::remove(inline_path.c_str());

    CHECK_THROWS_AS(parse_graph("@no_such_file_here.json"), Error);
}

TEST_CASE("integer and netflow parsing") {
    CHECK(parse_integers("1,-1,0") == std::vector<long long>{1, -1, 0});
    CHECK(parse_integers(" 2, 3 ") == std::vector<long long>{2, 3});
    CHECK_THROWS_AS(parse_integers("1,,2"), Error);
    CHECK_THROWS_AS(parse_integers("1,a"), Error);
    CHECK_THROWS_AS(parse_integers(""), Error);

    const Netflow a = parse_netflow("1,1,1", 3);
    CHECK(a.entries() == std::vector<long long>{1, 1, 1});
    CHECK_THROWS_AS(parse_netflow("1,1", 3), Error);
}

TEST_CASE("report rendering") {
    RunReport report;
    report.command = "volume";
    report.request.emplace_back("graph", "k4");
    report.request.emplace_back("netflow", "1,1,1");
    report.results.emplace_back("lidskii", "4");
    report.results.emplace_back("oracle", "4");
    report.tables.push_back(ReportTable{"terms", {"j", "value"}, {{"(2,1,0)", "3"}, {"(3,0,0)", "1"}}});
    report.agreement_applicable = true;
    report.agreement = true;
    report.timings_ms.emplace_back("lidskii", 1.25);
    report.notes.push_back("sample note");

    const std::string human = render_human(report, false);
    CHECK(human.find("lidskii: 4") != std::string::npos);
    CHECK(human.find("agreement: yes") != std::string::npos);
    CHECK(human.find("(2,1,0)") != std::string::npos);
    CHECK(human.find("sample note") != std::string::npos);
    CHECK(human.find("time[") == std::string::npos);  // timings only on request
    CHECK(render_human(report, true).find("time[lidskii]") != std::string::npos);

    const std::string json = render_json(report, false);
    CHECK(json.find("\"flowvol/1\"") != std::string::npos);
    CHECK(json.find("\"agreement\": true") != std::string::npos);
    CHECK(json.find("\"timings_ms\"") == std::string::npos);
    CHECK(json == render_json(report, false));  // byte-for-byte deterministic
    CHECK(render_json(report, true).find("\"timings_ms\"") != std::string::npos);

    report.agreement = false;
    CHECK(render_human(report, false).find("agreement: NO") != std::string::npos);
    CHECK(render_json(report, false).find("\"agreement\": false") != std::string::npos);
}
