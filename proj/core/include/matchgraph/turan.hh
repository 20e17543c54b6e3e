#pragma once

#include <matchgraph/graph.hh>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace matchgraph
{
    enum class TuranMethod
    {
        exhaustive,
        star_construction,
        branch_bound
    };

    auto to_string(TuranMethod m) -> std::string;

    struct TuranCertificate
    {
        /// ex(G, rK_2) when exact; otherwise the best value found (a lower bound).
        int ex_value = 0;
        /// Upper bound on ex(G, rK_2); equals ex_value when exact.
        int upper = 0;
        bool exact = false;
        /// rK_2-free spanning subgraph with ex_value edges, lexicographically smallest among maximum ones when exact.
        std::vector<int> extremal_edges;
        TuranMethod method = TuranMethod::exhaustive;
        std::uint64_t nodes = 0;
    };

    struct TuranOptions
    {
        /// Graphs with at most this many edges are searched to completion regardless of node count.
        int exhaustive_edge_bound = 24;
        std::uint64_t max_nodes = 50'000'000;
    };

    /**
     * Generalised Turán number ex(G, rK_2) with an extremal witness. Edges are
     * branched in ascending index order, include-first, and a branch is pruned
     * when its size plus the remaining edges cannot beat the best so far, or
     * when adding an edge would complete an r-matching.
     */
    auto turan_matchings(const Graph & g, int r, const TuranOptions & options = {}) -> TuranCertificate;

    struct StarBound
    {
        int value = 0;
        std::vector<int> centres;
        std::vector<int> edges;
    };

    /// Best set of r-1 vertices by number of edges meeting them; those edges are rK_2-free.
    auto star_lower_bound(const Graph & g, int r) -> StarBound;

    /// Whether the spanning subgraph on edges has matching number at most r-1.
    auto is_f_free(std::span<const int> edges, const Graph & g, int r) -> bool;
}
