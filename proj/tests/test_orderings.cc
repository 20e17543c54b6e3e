#include "oracles.hh"

#include <matchgraph/alternation.hh>
#include <matchgraph/c4.hh>
#include <matchgraph/chromatic.hh>
#include <matchgraph/errors.hh>
#include <matchgraph/hypergraph.hh>
#include <matchgraph/orderings.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace matchgraph;

namespace
{
    auto is_permutation_of(const EdgeOrdering & sigma, int m) -> bool
    {
        auto p = sigma.perm();
        std::sort(p.begin(), p.end());
        std::vector<int> want(m);
        std::iota(want.begin(), want.end(), 0);
        return p == want;
    }

    // at each vertex, edges in even and in odd positions differ by at most one beyond the ceiling
    auto half_degree_holds(const Graph & g, const EdgeOrdering & sigma, int skip) -> bool
    {
        std::vector<int> position(g.edge_count());
        for (int j = 0 ; j < sigma.size() ; ++j)
            position[sigma[j]] = j;
        for (int x = 0 ; x < g.vertex_count() ; ++x) {
            if (x == skip)
                continue;
            int even = 0, odd = 0;
            for (auto & inc : g.incident(x))
                (position[inc.edge] % 2 ? odd : even)++;
            int cap = (g.degree(x) + 1) / 2;
            if (even > cap || odd > cap)
                return false;
        }
        return true;
    }

    // K_7 split into the triangles {i, i+1, i+3} mod 7, each rooted at i
    auto fano_certificate() -> LocallyEulerianCertificate
    {
        LocallyEulerianCertificate cert{ make_complete(7), {}, {}, 2, 0 };
        for (int i = 0 ; i < 7 ; ++i) {
            int a = i, b = (i + 1) % 7, c = (i + 3) % 7;
            cert.roots.push_back(i);
            std::vector<int> edges{ *cert.host.edge_index(a, b), *cert.host.edge_index(b, c), *cert.host.edge_index(a, c) };
            std::sort(edges.begin(), edges.end());
            cert.subgraphs.push_back(edges);
        }
        return cert;
    }

    auto closed_walk(const MultiGraphView & g, int start, const std::vector<int> & tour) -> bool
    {
        std::vector<int> used(g.edge_count(), 0);
        int at = start;
        for (int e : tour) {
            if (used[e]++)
                return false;
            auto & ends = g.endpoints(e);
            if (ends.u != at && ends.v != at)
                return false;
            at = ends.other(at);
        }
        return at == start && std::all_of(used.begin(), used.end(), [] (int u) { return u == 1; });
    }
}

TEST_CASE("grk2 hypotheses")
{
    auto c7 = grk2_conditions(make_cycle(7), 3);
    CHECK(c7.applicable);
    CHECK(c7.odd_girth == 7);
    CHECK(c7.formula_value == 3);

    auto k4 = grk2_conditions(make_complete(4), 2);
    CHECK_FALSE(k4.applicable);
    CHECK(k4.independent_prefix);
    CHECK_FALSE(k4.inequality);
    CHECK_FALSE(k4.parity);

    auto k43 = grk2_conditions(make_complete_bipartite(4, 3), 2);
    CHECK(k43.applicable);
    CHECK(k43.top_degrees == std::vector<int>{ 4 });
    CHECK(k43.formula_value == 8);

    CHECK_FALSE(grk2_conditions(make_disjoint_matching(3), 2).applicable);
    CHECK_FALSE(grk2_conditions(make_cycle(5), 1).applicable);
    CHECK_FALSE(grk2_conditions(make_petersen(), 2).parity);
}

TEST_CASE("euler orderings")
{
    auto cycle = make_cycle(5);
    auto c5 = euler_ordering(cycle);
    CHECK(is_permutation_of(c5, 5));
    for (int j = 0 ; j < 5 ; ++j) {
        auto & a = cycle.edge(c5[j]);
        auto & b = cycle.edge(c5[(j + 1) % 5]);
        CHECK((a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v));
    }

    CHECK(is_permutation_of(euler_ordering(make_star(3)), 3));

    auto k43 = make_complete_bipartite(4, 3);
    auto sigma = euler_ordering(k43);
    CHECK(is_permutation_of(sigma, 12));
    CHECK(half_degree_holds(k43, sigma, -1));

    CHECK_THROWS_AS(euler_ordering(make_disjoint_matching(2)), std::invalid_argument);
}

TEST_CASE("euler orderings split every vertex's edges evenly")
{
    oracle::Random rng(600);
    for (int i = 0 ; i < 200 ; ++i) {
        auto g = rng.connected_graph(2 + rng.below(8), 0.4);
        auto order = degree_order(g);
        auto sigma = euler_ordering(g, order);
        CHECK(is_permutation_of(sigma, g.edge_count()));
        bool even = std::all_of(order.perm.begin(), order.perm.end(), [&] (int v) { return g.degree(v) % 2 == 0; });
        CHECK(half_degree_holds(g, sigma, even ? order.perm.back() : -1));
    }
}

TEST_CASE("grk2 pipeline on small applicable graphs")
{
    std::vector<std::pair<Graph, int>> cases{
        { make_cycle(5), 2 }, { make_cycle(7), 2 }, { make_cycle(7), 3 }, { make_cycle(9), 3 },
        { make_complete_bipartite(4, 2), 2 }, { make_complete_bipartite(4, 3), 2 }, { make_path(5), 2 }
    };
    oracle::Random rng(8080);
    while (cases.size() < 40) {
        auto g = rng.connected_graph(3 + rng.below(5), 0.3);
        int r = 2 + rng.below(2);
        if (g.edge_count() <= 11 && grk2_conditions(g, r).applicable)
            cases.emplace_back(g, r);
    }

    for (auto & [g, r] : cases) {
        auto report = grk2_conditions(g, r);
        REQUIRE(report.applicable);
        auto sigma = euler_ordering(g, *report.order);
        bool all_even = std::all_of(report.top_degrees.begin(), report.top_degrees.end(), [] (int d) { return d % 2 == 0; });
        if (all_even)
            CHECK(ex_salt_sigma(g, r, sigma) <= 1 + report.degree_sum);
        else
            CHECK(ex_alt_sigma(g, r, sigma) <= report.degree_sum);

        auto kg = matching_graph(g, r);
        auto cert = chromatic_number(kg.graph);
        REQUIRE(cert.exact);
        CHECK(cert.chi == report.formula_value);
        auto w = alternation_witness(kg.source, sigma);
        CHECK(w.bound() == report.formula_value);
    }
}

TEST_CASE("locally Eulerian certificates")
{
    auto good = fano_certificate();
    CHECK(verify_locally_eulerian(good).ok);

    auto overlap = good;
    overlap.subgraphs[1] = overlap.subgraphs[0];
    CHECK(verify_locally_eulerian(overlap).clause == "edge-disjoint");

    auto empty = good;
    empty.subgraphs[3].clear();
    CHECK(verify_locally_eulerian(empty).clause == "nontrivial");

    auto missing = good;
    missing.roots[6] = 0;
    CHECK(verify_locally_eulerian(missing).clause == "roots-cover");

    auto strict = good;
    strict.c = 1;
    CHECK(verify_locally_eulerian(strict).clause == "degree-dominance");

    auto path = good;
    path.subgraphs[0] = { *good.host.edge_index(0, 1) };
    CHECK(verify_locally_eulerian(path).clause == "even-degree");
}

TEST_CASE("dense orderings")
{
    auto cert = fano_certificate();
    auto walk = dense_tour(cert);
    CHECK(closed_walk(walk.multigraph, walk.apex, walk.tour));
    CHECK_FALSE(walk.parity_vertex.has_value());
    CHECK(walk.tour.front() == 21);
    CHECK(walk.tour.back() == 21 + 13);

    auto all = dense_ordering(cert.host, cert.host, cert);
    CHECK(is_permutation_of(all, 21));

    auto k6 = make_complete(6);
    auto sub = dense_ordering(k6, cert.host, cert);
    CHECK(is_permutation_of(sub, 15));

    auto bad = cert;
    bad.roots[6] = 0;
    CHECK_THROWS_AS(dense_ordering(k6, cert.host, bad), CertificateError);
    bad = cert;
    bad.subgraphs[1] = bad.subgraphs[0];
    try {
        dense_tour(bad);
        FAIL("expected CertificateError");
    }
    catch (const CertificateError & e) {
        CHECK(e.clause() == "edge-disjoint");
    }
    CHECK_THROWS_AS(dense_ordering(make_complete(8), cert.host, cert), std::invalid_argument);
}

TEST_CASE("monogamous C4-decompositions")
{
    auto two = c4_monogamous(2, 2);
    REQUIRE(two.status == C4Status::found);
    CHECK(two.decomposition->blocks.size() == 1);

    auto four = c4_monogamous(4, 4, C4Options{ 500'000'000, true, 100'000 });
    CHECK(four.status == C4Status::none);
    CHECK_FALSE(four.trace.empty());
    CHECK_FALSE(four.trace_truncated);

    for (auto [m, n] : std::vector<std::pair<int, int>>{ { 6, 6 }, { 6, 8 }, { 8, 6 }, { 10, 6 }, { 8, 8 } }) {
        auto r = c4_monogamous(m, n);
        REQUIRE(r.status == C4Status::found);
        CHECK(r.decomposition->blocks.size() == static_cast<std::size_t>(m * n / 4));
        CHECK(verify_c4_decomposition(*r.decomposition).ok());
    }
    for (auto [m, n] : std::vector<std::pair<int, int>>{ { 4, 2 }, { 6, 4 }, { 12, 6 } })
        CHECK(c4_monogamous(m, n).status == C4Status::none);

    CHECK_THROWS_AS(c4_monogamous(3, 4), std::invalid_argument);
    CHECK(c4_monogamous(16, 16, C4Options{ 50, false, 0 }).status == C4Status::indeterminate);
}

TEST_CASE("the C4 verifier checks partition and monogamy independently")
{
    C4Decomposition twice{ 2, 2, { { 0, 1, 0, 1 }, { 0, 1, 0, 1 } } };
    CHECK_FALSE(verify_c4_decomposition(twice).partition);

    // four blocks covering K_{4,4} where left pair {0,1} meets twice
    C4Decomposition repeat{ 4, 4, { { 0, 1, 0, 1 }, { 0, 1, 2, 3 }, { 2, 3, 0, 1 }, { 2, 3, 2, 3 } } };
    auto check = verify_c4_decomposition(repeat);
    CHECK(check.partition);
    CHECK_FALSE(check.monogamous);
}

TEST_CASE("locally Eulerian families from C4 blocks")
{
    auto eleven = locally_eulerian_from_c4(11, 11, 2, 0);
    REQUIRE(eleven.status == ConstructionStatus::built);
    REQUIRE(eleven.certificate.has_value());
    CHECK(eleven.verification->ok);
    CHECK(eleven.copies_floor == 1);
    for (int v = 0 ; v < 22 ; ++v)
        CHECK(eleven.certificate->subgraphs[v].size() == 4);

    CHECK_FALSE(locally_eulerian_from_c4(11, 11, 2, 1).verification->ok);
    CHECK(locally_eulerian_from_c4(11, 11, 1, 2).verification->ok);

    // the leftover edges of K_{11,11} include odd vertices, so the parity vertex appears
    auto walk = dense_tour(*eleven.certificate);
    CHECK(closed_walk(walk.multigraph, walk.apex, walk.tour));
    auto sigma = dense_ordering(eleven.certificate->host, eleven.certificate->host, *eleven.certificate);
    CHECK(is_permutation_of(sigma, 121));

    auto small = locally_eulerian_from_c4(5, 5, 2, 0);
    CHECK(small.status == ConstructionStatus::infeasible);
    CHECK(small.copies_floor == 0);
    CHECK(small.copies_ceil == 1);
    REQUIRE(small.ceil_reading_feasible.has_value());

    auto budget = locally_eulerian_from_c4(19, 19, 2, 0, std::nullopt, C4Options{ 1000, false, 0 });
    CHECK(budget.status == ConstructionStatus::indeterminate);

    C4Decomposition broken{ 12, 12, {} };
    CHECK_THROWS_AS(locally_eulerian_from_c4(11, 11, 2, 0, broken), CertificateError);
    auto supplied = c4_monogamous(12, 12);
    REQUIRE(supplied.decomposition.has_value());
    CHECK(locally_eulerian_from_c4(11, 11, 2, 0, supplied.decomposition).status == ConstructionStatus::built);
}
