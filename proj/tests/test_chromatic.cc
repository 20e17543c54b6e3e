#include "oracles.hh"

#include <matchgraph/chromatic.hh>
#include <matchgraph/errors.hh>
#include <matchgraph/hypergraph.hh>
#include <matchgraph/turan.hh>

#include <doctest.h>

using namespace matchgraph;

TEST_CASE("chromatic numbers of small graphs")
{
    auto c5 = chromatic_number(make_cycle(5));
    CHECK(c5.chi == 3);
    CHECK(c5.exact);
    CHECK(is_proper(make_cycle(5), c5.coloring));

    auto sg72 = chromatic_number(matching_graph(make_cycle(7), 2).graph);
    CHECK(sg72.chi == 5);
    CHECK(sg72.exact);

    auto k42 = chromatic_number(matching_graph(make_disjoint_matching(4), 2).graph);
    CHECK(k42.chi == 2);
    CHECK(k42.chi == oracle::chromatic_number(matching_graph(make_disjoint_matching(4), 2).graph));

    auto petersen = chromatic_number(make_petersen());
    CHECK(petersen.chi == 3);
    CHECK(std::holds_alternative<ExhaustiveWitness>(petersen.lower_witness));

    auto empty = chromatic_number(Graph(0, {}));
    CHECK(empty.chi == 0);
    CHECK(empty.exact);
    CHECK(chromatic_number(Graph(4, {})).chi == 1);
}

TEST_CASE("chromatic solver agrees with plain backtracking")
{
    oracle::Random rng(3001);
    for (int i = 0 ; i < 500 ; ++i) {
        auto g = rng.graph(1 + rng.below(9), 0.15 * (1 + rng.below(6)));
        auto cert = chromatic_number(g);
        REQUIRE(cert.exact);
        CHECK(cert.chi == oracle::chromatic_number(g));
        CHECK(is_proper(g, cert.coloring));
        CHECK(color_count(cert.coloring) == cert.chi);
        CHECK(cert.lower == cert.upper);
    }
}

TEST_CASE("an exhausted budget yields an honest interval")
{
    // Kneser K(7,2): chi 5, clique 3
    std::vector<std::vector<int>> pairs;
    for (int a = 0 ; a < 7 ; ++a)
        for (int b = a + 1 ; b < 7 ; ++b)
            pairs.push_back({ a, b });
    auto g = general_kneser(Hypergraph(7, pairs)).graph;
    ChromaticOptions tight;
    tight.max_nodes = 1;
    auto cert = chromatic_number(g, tight);
    CHECK(cert.lower <= 5);
    CHECK(cert.upper >= 5);
    CHECK(is_proper(g, cert.coloring));
    if (! cert.exact)
        CHECK(cert.lower < cert.upper);

    auto full = chromatic_number(g);
    CHECK(full.exact);
    CHECK(full.chi == 5);
}

TEST_CASE("proper colorings")
{
    CHECK(is_proper(make_cycle(4), std::vector<int>{ 0, 1, 0, 1 }));
    CHECK_FALSE(is_proper(make_complete(3), std::vector<int>{ 0, 1, 0 }));
    CHECK(is_proper(Graph(3, {}), std::vector<int>{ 0, 0, 0 }));
    CHECK_THROWS_AS(is_proper(make_cycle(4), std::vector<int>{ 0, 1 }), std::invalid_argument);
    CHECK(canonical_coloring(std::vector<int>{ 4, 2, 4, 7 }) == std::vector<int>{ 0, 1, 0, 2 });
}

TEST_CASE("colorings from extremal sets")
{
    auto c5 = make_cycle(5);
    auto kg = matching_graph(c5, 2).graph;
    auto col = coloring_from_extremal(c5, 2, std::vector<int>{ 0, 1 });
    CHECK(is_proper(kg, col));
    CHECK(color_count(col) == 3);

    auto k43 = make_complete_bipartite(4, 3);
    std::vector<int> right_star;
    for (int e = 0 ; e < k43.edge_count() ; ++e)
        if (k43.edge(e).v == 4)
            right_star.push_back(e);
    REQUIRE(right_star.size() == 4);
    auto col43 = coloring_from_extremal(k43, 2, right_star);
    CHECK(is_proper(matching_graph(k43, 2).graph, col43));
    CHECK(color_count(col43) == 8);

    // a left star has only 3 edges, still matching-free, giving 9 colors
    auto col_left = coloring_from_extremal(k43, 2, std::vector<int>{ 0, 1, 2 });
    CHECK(color_count(col_left) == 9);

    // the empty set is 1K_2-free, so it is accepted with r = 1
    CHECK(color_count(coloring_from_extremal(c5, 1, std::vector<int>{})) == 5);
    // a single edge is a 1-matching
    CHECK_THROWS_AS(coloring_from_extremal(c5, 1, std::vector<int>{ 0 }), CertificateError);
    CHECK_THROWS_AS(coloring_from_extremal(c5, 2, std::vector<int>{ 0, 2 }), CertificateError);
}

TEST_CASE("extremal colorings are proper and bound chi from above")
{
    oracle::Random rng(77);
    for (int i = 0 ; i < 150 ; ++i) {
        auto g = rng.graph(3 + rng.below(5), 0.5);
        int r = 1 + rng.below(3);
        auto kg = matching_graph(g, r).graph;
        auto t = turan_matchings(g, r);
        auto col = coloring_from_extremal(g, r, t.extremal_edges);
        CHECK(is_proper(kg, col));
        if (kg.vertex_count() > 0) {
            CHECK(color_count(col) <= g.edge_count() - t.ex_value);
            CHECK(chromatic_number(kg).chi <= g.edge_count() - t.ex_value);
        }
    }
}
