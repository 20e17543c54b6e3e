#pragma once

#include <matchgraph/graph.hh>

#include <cstddef>
#include <vector>

namespace matchgraph
{
    /**
     * Hypergraph on the ground set [0, ground_n). Hyperedges are distinct,
     * non-empty, and stored as ascending element lists; a hyperedge's index is
     * its position in the list.
     */
    class Hypergraph
    {
        public:
            Hypergraph() = default;

            /// Sorts each hyperedge; throws std::invalid_argument on empty, duplicate or out-of-range hyperedges.
            Hypergraph(int ground_n, std::vector<std::vector<int>> hyperedges);

            auto ground_size() const -> int { return _ground_n; }
            auto hyperedge_count() const -> int { return static_cast<int>(_hyperedges.size()); }
            auto hyperedges() const -> const std::vector<std::vector<int>> & { return _hyperedges; }
            auto hyperedge(int i) const -> const std::vector<int> & { return _hyperedges[i]; }

            /// Hyperedges as element masks; requires ground_size() <= 64.
            auto masks() const -> const std::vector<Mask> &;

            /// Whether some hyperedge is a subset of the given element set.
            auto contains_hyperedge(Mask elements) const -> bool;

            friend auto operator== (const Hypergraph & a, const Hypergraph & b) -> bool
            {
                return a._ground_n == b._ground_n && a._hyperedges == b._hyperedges;
            }

        private:
            int _ground_n = 0;
            std::vector<std::vector<int>> _hyperedges;
            std::vector<Mask> _masks;
    };

    /// KG(H): vertex i is hyperedge i of source; adjacency is disjointness.
    struct KneserGraph
    {
        Graph graph;
        Hypergraph source;
    };

    auto general_kneser(const Hypergraph & h) -> KneserGraph;

    /// Ground set = edge indices of g, hyperedges = edge sets of all r-matchings in lexicographic order.
    auto matching_hypergraph(const Graph & g, int r) -> Hypergraph;

    /// KG(G, rK_2): r-matchings of g, adjacent when edge-disjoint.
    auto matching_graph(const Graph & g, int r) -> KneserGraph;

    inline constexpr std::size_t default_subgraph_cap = 1'000'000;

    /**
     * Hypergraph on E(g) whose hyperedges are the edge sets of subgraphs of g
     * isomorphic to pattern (isolated vertices of pattern are ignored). Candidate
     * edge subsets of size |E(pattern)| are tested by brute force; throws
     * CapacityError when there are more than cap of them.
     */
    auto f_subgraph_hypergraph(const Graph & g, const Graph & pattern, std::size_t cap = default_subgraph_cap) -> Hypergraph;
}
