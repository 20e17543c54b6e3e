#include "oracles.hh"

#include <matchgraph/enumerate.hh>

#include <doctest.h>

#include <set>

using namespace matchgraph;

TEST_CASE("graph counts up to isomorphism")
{
    std::vector<std::size_t> all{ 1, 2, 4, 11, 34, 156, 1044 };
    std::vector<std::size_t> connected{ 1, 1, 2, 6, 21, 112, 853 };
    for (int n = 1 ; n <= 7 ; ++n) {
        CHECK(all_graphs(n).size() == all[n - 1]);
        CHECK(connected_graphs(n).size() == connected[n - 1]);
    }
    for (int n = 1 ; n <= 5 ; ++n) {
        auto [a, c] = oracle::isomorphism_class_counts(n);
        CHECK(static_cast<std::size_t>(a) == all[n - 1]);
        CHECK(static_cast<std::size_t>(c) == connected[n - 1]);
    }
}

TEST_CASE("canonical forms are isomorphism invariants")
{
    oracle::Random rng(91);
    for (int i = 0 ; i < 200 ; ++i) {
        int n = 1 + rng.below(8);
        auto g = rng.graph(n, 0.4);
        auto perm = rng.permutation(n);
        std::vector<Edge> moved;
        for (auto & e : g.edges())
            moved.push_back({ perm[e.u], perm[e.v] });
        Graph h(n, moved);
        auto a = canonical_form(g), b = canonical_form(h);
        CHECK(a.code == b.code);
        CHECK(a.graph == b.graph);
        CHECK(isomorphic(a.graph, g));
    }
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic and connected")
{
    auto six = connected_graphs(6);
    std::set<std::uint64_t> codes;
    for (auto & g : six) {
        CHECK(is_connected(g));
        codes.insert(canonical_form(g).code);
    }
    CHECK(codes.size() == six.size());
    for (std::size_t i = 0 ; i < 30 ; ++i)
        for (std::size_t j = i + 1 ; j < 30 ; ++j)
            CHECK_FALSE(isomorphic(six[i], six[j]));

    CHECK(connected_graphs_between(1, 4).size() == 10);
}
