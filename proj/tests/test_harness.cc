#include <matchgraph/enumerate.hh>
#include <matchgraph/harness.hh>

#include <doctest.h>

#include <sstream>

using namespace matchgraph;

namespace
{
    auto without_timing(const Report & r) -> json
    {
        auto j = r.to_json();
        j.erase("timing");
        return j;
    }

    auto lines(const std::string & text) -> std::vector<json>
    {
        std::vector<json> out;
        std::istringstream in(text);
        for (std::string line ; std::getline(in, line) ; )
            out.push_back(json::parse(line));
        return out;
    }
}

TEST_CASE("schrijver command")
{
    auto five = cmd_schrijver(5, 2);
    CHECK(five.exit_code == exit_certified);
    CHECK(five.report.results["chromatic"]["chi"] == 3);
    CHECK(five.report.results["formula"] == 3);
    CHECK(five.report.results["agrees"] == true);

    auto seven = cmd_schrijver(7, 3);
    CHECK(seven.report.results["chromatic"]["chi"] == 3);
    CHECK(seven.report.results["matching_graph"]["vertices"] == 7);

    CHECK_THROWS_AS(cmd_schrijver(4, 2), std::invalid_argument);
}

TEST_CASE("permutation command")
{
    auto a = cmd_permutation(2, 2, 2);
    CHECK(a.report.results["chromatic"]["chi"] == 2);
    CHECK(a.report.results["even_m"] == true);
    CHECK(cmd_permutation(4, 2, 2).report.results["chromatic"]["chi"] == 4);

    auto b = cmd_permutation(4, 3, 2);
    CHECK(b.exit_code == exit_certified);
    CHECK(b.report.results["chromatic"]["chi"] == 8);
    CHECK(b.report.results["matching_graph"]["vertices"] == 36);
    CHECK(b.report.results["euler_bound"]["bound"] == 8);

    CHECK_THROWS_AS(cmd_permutation(2, 3, 2), std::invalid_argument);
}

TEST_CASE("scan command")
{
    std::ostringstream out;
    auto r = cmd_scan(ScanOptions{ -1, 4, false }, 2, {}, out);
    CHECK(r.exit_code == exit_certified);
    CHECK(r.report.results["graphs"] == 6);
    CHECK(r.report.results["violations"] == 0);
    auto records = lines(out.str());
    REQUIRE(records.size() == 7);
    CHECK(records.back().contains("summary"));
    for (std::size_t i = 0 ; i + 1 < records.size() ; ++i) {
        CHECK(records[i]["complete"] == true);
        CHECK(records[i]["equality"] == true);
    }

    std::ostringstream k2;
    auto single = cmd_scan(ScanOptions{ -1, 2, false }, 1, {}, k2);
    auto rec = lines(k2.str());
    REQUIRE(rec.size() == 2);
    CHECK(rec[0]["chi"] == 1);
    CHECK(rec[0]["formula"] == 1);
    CHECK(single.report.results["graphs"] == 1);
}

TEST_CASE("disconnected graphs are flagged, not counted as violations")
{
    auto rec = scan_graph(make_disjoint_matching(4), 2);
    CHECK(rec.complete);
    CHECK_FALSE(rec.connected);
    CHECK(rec.chi == 2);
    CHECK(rec.graph.edge_count() - rec.ex == 3);
    CHECK(rec.known_inequality);
    CHECK_FALSE(rec.violation());

    std::ostringstream out;
    auto r = cmd_scan(ScanOptions{ 4, 4, true }, 2, {}, out);
    CHECK(r.report.results["graphs"] == 11);
    CHECK(r.report.results["violations"] == 0);
}

TEST_CASE("violations carry both certificates and exit code 3")
{
    // a spider with three legs of length two: no two 3-matchings are disjoint
    Graph spider(7, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 6 }, { 2, 5 }, { 3, 4 } });
    auto rec = scan_graph(spider, 3);
    CHECK(rec.complete);
    CHECK(rec.chi == 1);
    CHECK(rec.ex == 4);
    CHECK(rec.violation());
    CHECK(rec.certificates.contains("chromatic"));
    CHECK(rec.certificates.contains("turan"));
    CHECK(rec.certificates["turan"]["extremal_edges"].size() == 4);

    std::ostringstream out;
    auto r = cmd_scan(ScanOptions{ 7, 7, false }, 3, {}, out);
    CHECK(r.exit_code == exit_violation);
}

TEST_CASE("analyze command")
{
    auto c5 = cmd_analyze(make_cycle(5), 2);
    CHECK(c5.exit_code == exit_certified);
    CHECK(c5.report.results["chromatic"]["chi"] == 3);
    CHECK(c5.report.results["matching"]["nu"] == 2);
    for (auto & [key, value] : c5.report.results["audits"].items())
        CHECK_MESSAGE(value == true, key);

    HarnessOptions euler;
    auto k43 = cmd_analyze(make_complete_bipartite(4, 3), 2, euler);
    CHECK(k43.report.results["alternation"]["alt_bound"] == 8);
    CHECK(k43.report.results["chromatic"]["chi"] == 8);

    HarnessOptions identity;
    identity.ordering = parse_ordering_choice("identity");
    auto id = cmd_analyze(make_cycle(5), 2, identity);
    CHECK(id.report.results["alternation"]["ordering"] == std::vector<int>{ 0, 1, 2, 3, 4 });

    CHECK_THROWS_AS(parse_ordering_choice("random"), std::invalid_argument);
    CHECK(parse_ordering_choice("file:/tmp/x").path == "/tmp/x");
}

TEST_CASE("reports are deterministic apart from timing")
{
    auto a = cmd_permutation(4, 3, 2);
    auto b = cmd_permutation(4, 3, 2);
    CHECK(without_timing(a.report).dump() == without_timing(b.report).dump());
    CHECK(a.report.digest() == b.report.digest());
    b.report.seconds += 5;
    CHECK(a.report.digest() == b.report.digest());
    b.report.results["formula"] = 0;
    CHECK(a.report.digest() != b.report.digest());
    CHECK(a.report.to_json()["schema"] == report_schema_version);
}

TEST_CASE("scan output does not depend on the thread count")
{
    auto graphs = connected_graphs(5);
    HarnessOptions one, many;
    one.threads = 1;
    many.threads = 4;
    auto a = run_scan(graphs, 2, one);
    auto b = run_scan(graphs, 2, many);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0 ; i < a.records.size() ; ++i)
        CHECK(a.records[i].to_json() == b.records[i].to_json());
}

TEST_CASE("certificates round-trip through JSON")
{
    auto g = make_petersen();
    CHECK(graph_from_json(to_json(g)) == g);
    auto d = c4_monogamous(6, 6);
    auto back = c4_from_json(to_json(*d.decomposition));
    CHECK(back.blocks == d.decomposition->blocks);
    CHECK(graph_hash(g) == graph_hash(make_petersen()));
    CHECK(graph_hash(g) != graph_hash(make_cycle(10)));
}
