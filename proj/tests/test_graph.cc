#include "oracles.hh"

#include <matchgraph/errors.hh>
#include <matchgraph/graph.hh>
#include <matchgraph/matching.hh>

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace matchgraph;

namespace
{
    // closed walk from start over every edge exactly once, checked without the library predicate
    auto valid_tour(const MultiGraphView & g, int start, const std::vector<int> & tour) -> bool
    {
        if (static_cast<int>(tour.size()) != g.edge_count())
            return false;
        std::vector<int> seen(g.edge_count(), 0);
        int at = start;
        for (int e : tour) {
            if (e < 0 || e >= g.edge_count() || seen[e]++)
                return false;
            auto & ends = g.endpoints(e);
            if (ends.u != at && ends.v != at)
                return false;
            at = ends.u == at ? ends.v : ends.u;
        }
        return at == start;
    }
}

TEST_CASE("generators use the documented indexing")
{
    auto c5 = make_cycle(5);
    CHECK(c5.vertex_count() == 5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0 ; v < 5 ; ++v)
        CHECK(c5.degree(v) == 2);
    CHECK(c5.edge(4) == Edge{ 0, 4 });
    CHECK(c5.edge(2) == Edge{ 2, 3 });

    auto k43 = make_complete_bipartite(4, 3);
    CHECK(k43.edge_count() == 12);
    CHECK(k43.edge(0) == Edge{ 0, 4 });
    CHECK(k43.edge(4) == Edge{ 1, 5 });

    auto m4 = make_disjoint_matching(4);
    CHECK(m4.vertex_count() == 8);
    CHECK(m4.edge_count() == 4);
    CHECK(max_matching(m4).size() == 4);

    CHECK(make_complete(6).edge_count() == 15);
    CHECK(make_star(5).degree(0) == 5);

    auto p = make_petersen();
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    for (int v = 0 ; v < 10 ; ++v)
        CHECK(p.degree(v) == 3);
}

TEST_CASE("graph construction rejects loops, duplicates and bad endpoints")
{
    CHECK_THROWS_AS(Graph(3, { { 1, 1 } }), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, { { 0, 1 }, { 1, 0 } }), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, { { 0, 3 } }), std::invalid_argument);
    Graph g(3, { { 2, 0 } });
    CHECK(g.edge(0) == Edge{ 0, 2 });
    CHECK(g.edge_index(2, 0) == 0);
    CHECK_FALSE(g.edge_index(0, 1).has_value());
}

TEST_CASE("odd components")
{
    std::vector<bool> none(6, false);
    CHECK(odd_components(make_path(3), std::vector<int>{ 1 }) == 2);
    CHECK(odd_components(make_cycle(6), none) == 0);
    CHECK(odd_components(make_star(3), std::vector<int>{ 0 }) == 3);

    oracle::Random rng(11);
    for (int i = 0 ; i < 200 ; ++i) {
        int n = 1 + rng.below(9);
        auto g = rng.graph(n, 0.3);
        int odd = odd_components(g, std::vector<bool>(n, false));
        CHECK(odd % 2 == n % 2);
        CHECK(odd == oracle::odd_components(g, 0));
    }
}

TEST_CASE("odd girth")
{
    CHECK(odd_girth(make_cycle(5)) == 5);
    CHECK_FALSE(odd_girth(make_complete_bipartite(3, 3)).has_value());
    CHECK(odd_girth(make_petersen()) == oracle::odd_girth(make_petersen()));
    CHECK(odd_girth(make_petersen()) == 5);

    oracle::Random rng(5);
    for (int i = 0 ; i < 300 ; ++i) {
        auto g = rng.graph(2 + rng.below(8), 0.35);
        auto got = odd_girth(g);
        CHECK(got == oracle::odd_girth(g));
        CHECK(got.has_value() != oracle::two_colorable(g));
    }
}

TEST_CASE("eulerian tours")
{
    MultiGraphView c4(make_cycle(4));
    auto tour = eulerian_tour(c4, 0);
    CHECK(tour == std::vector<int>{ 0, 1, 2, 3 });

    MultiGraphView k5(make_complete(5));
    auto t5 = eulerian_tour(k5, 0);
    CHECK(t5.size() == 10);
    CHECK(valid_tour(k5, 0, t5));
    CHECK(is_eulerian_tour(k5, 0, t5));
    CHECK(t5 == eulerian_tour(k5, 0));

    MultiGraphView p3(make_path(3));
    try {
        eulerian_tour(p3, 0);
        FAIL("expected NotEulerianError");
    }
    catch (const NotEulerianError & e) {
        CHECK((e.vertex() == 0 || e.vertex() == 2));
    }

    // isolated vertices and parallel edges
    MultiGraphView multi(Graph(5, { { 0, 1 } }), 1);
    multi.add_edge(0, 1);
    multi.add_edge(1, 5);
    multi.add_edge(1, 5);
    auto tm = eulerian_tour(multi, 5);
    CHECK(valid_tour(multi, 5, tm));

    // two separate cycles cannot be toured
    MultiGraphView split(disjoint_union(make_cycle(3), make_cycle(3)));
    CHECK_THROWS_AS(eulerian_tour(split, 0), NotEulerianError);
}

TEST_CASE("eulerian tours on random even graphs")
{
    oracle::Random rng(21);
    int tested = 0;
    for (int i = 0 ; i < 400 && tested < 100 ; ++i) {
        auto g = rng.connected_graph(3 + rng.below(7), 0.5);
        MultiGraphView view(g, 1);
        for (int v = 0 ; v < g.vertex_count() ; ++v)
            if (g.degree(v) % 2)
                view.add_edge(v, g.vertex_count());
        int start = rng.below(g.vertex_count());
        auto tour = eulerian_tour(view, start);
        CHECK(valid_tour(view, start, tour));
        ++tested;
    }
    CHECK(tested == 100);
}

TEST_CASE("degree orders")
{
    auto c7 = make_cycle(7);
    auto o = degree_order(c7, 2);
    REQUIRE(o.has_value());
    CHECK_FALSE(c7.adjacent(o->perm[0], o->perm[1]));

    CHECK_FALSE(degree_order(make_complete(4), 2).has_value());

    auto k43 = make_complete_bipartite(4, 3);
    auto first = degree_order(k43, 1);
    REQUIRE(first.has_value());
    CHECK(k43.degree(first->perm[0]) == 4);

    oracle::Random rng(3);
    for (int i = 0 ; i < 200 ; ++i) {
        auto g = rng.graph(1 + rng.below(8), 0.4);
        auto plain = degree_order(g);
        for (std::size_t j = 1 ; j < plain.perm.size() ; ++j) {
            CHECK(g.degree(plain.perm[j - 1]) >= g.degree(plain.perm[j]));
            if (g.degree(plain.perm[j - 1]) == g.degree(plain.perm[j]))
                CHECK(plain.perm[j - 1] < plain.perm[j]);
        }
        int k = rng.below(4);
        if (k > g.vertex_count())
            continue;
        auto ind = degree_order(g, k);
        if (! ind)
            continue;
        auto sorted = ind->perm;
        std::sort(sorted.begin(), sorted.end());
        for (int v = 0 ; v < g.vertex_count() ; ++v)
            CHECK(sorted[v] == v);
        for (std::size_t j = 0 ; j < ind->perm.size() ; ++j)
            CHECK(g.degree(ind->perm[j]) == g.degree(plain.perm[j]));
        for (int a = 0 ; a < k ; ++a)
            for (int b = a + 1 ; b < k ; ++b)
                CHECK_FALSE(g.adjacent(ind->perm[a], ind->perm[b]));
    }
}

TEST_CASE("isomorphism and connectivity")
{
    CHECK(isomorphic(make_cycle(5), Graph(5, { { 0, 2 }, { 2, 4 }, { 4, 1 }, { 1, 3 }, { 3, 0 } })));
    CHECK_FALSE(isomorphic(make_cycle(6), disjoint_union(make_cycle(3), make_cycle(3))));
    CHECK(is_connected(make_petersen()));
    CHECK_FALSE(is_connected(make_disjoint_matching(2)));

    oracle::Random rng(8);
    for (int i = 0 ; i < 100 ; ++i) {
        auto g = rng.graph(1 + rng.below(8), 0.3);
        CHECK(is_connected(g) == (oracle::component_count(g) == 1));
        auto perm = rng.permutation(g.vertex_count());
        std::vector<Edge> moved;
        for (auto & e : g.edges())
            moved.push_back({ perm[e.u], perm[e.v] });
        CHECK(isomorphic(g, Graph(g.vertex_count(), moved)));
    }
}
