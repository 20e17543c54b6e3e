#pragma once

#include <matchgraph/graph.hh>

#include <cstdint>
#include <vector>

namespace matchgraph
{
    struct CanonicalGraph
    {
        /// Relabelled copy with edges in lexicographic order.
        Graph graph;
        /// Adjacency bits over pairs (i, j), i < j, in lexicographic order; equal iff isomorphic.
        std::uint64_t code = 0;
    };

    /**
     * Minimum adjacency code over vertex permutations that respect a refined
     * degree partition (degree, then sorted neighbour degrees). Up to 11
     * vertices so the code fits in 64 bits.
     */
    auto canonical_form(const Graph & g) -> CanonicalGraph;

    /// All graphs on exactly n vertices up to isomorphism, ordered by (edge count, code).
    auto all_graphs(int n) -> std::vector<Graph>;

    /// Connected graphs on exactly n vertices up to isomorphism, same order.
    auto connected_graphs(int n) -> std::vector<Graph>;

    /// Connected graphs on min_n..max_n vertices, by vertex count then as above.
    auto connected_graphs_between(int min_n, int max_n) -> std::vector<Graph>;
}
