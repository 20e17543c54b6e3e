#pragma once

#include <matchgraph/graph.hh>

#include <vector>

namespace matchgraph
{
    /// A set of pairwise vertex-disjoint edges, stored as sorted edge indices of its host graph.
    struct Matching
    {
        std::vector<int> edges;

        auto size() const -> int { return static_cast<int>(edges.size()); }

        friend auto operator== (const Matching &, const Matching &) -> bool = default;
        friend auto operator<=> (const Matching &, const Matching &) = default;
    };

    auto is_matching(const Graph & g, const std::vector<int> & edges) -> bool;

    /// Maximum-cardinality matching by Edmonds' blossom algorithm.
    auto max_matching(const Graph & g) -> Matching;

    auto matching_number(const Graph & g) -> int;

    /// Matching number of the spanning subgraph on the edges in mask (edge_count() <= 64).
    auto matching_number(const Graph & g, Mask edges) -> int;

    /// Whether the spanning subgraph on the edges in mask has a matching of size k.
    auto has_matching_of_size(const Graph & g, Mask edges, int k) -> bool;

    struct TutteBergeWitness
    {
        std::vector<int> s;
        int odd_components = 0;
        /// o(G - S) - |S|
        int deficiency = 0;
        int nu = 0;
    };

    inline constexpr int default_tutte_berge_bound = 20;

    /**
     * Tutte-Berge witness found by exhaustive minimisation over all 2^n vertex
     * subsets. Among subsets attaining the maximum deficiency the first in
     * subset-bitmask order is returned. The matching number implied by the
     * witness is cross-checked against max_matching. Throws CapacityError when
     * n exceeds max_vertices.
     */
    auto tutte_berge(const Graph & g, int max_vertices = default_tutte_berge_bound) -> TutteBergeWitness;

    /// All matchings with exactly r edges, each once, in lexicographic order of their edge-index sets.
    auto enumerate_matchings(const Graph & g, int r) -> std::vector<Matching>;

    auto has_r_matching(const Graph & g, int r) -> bool;
}
