#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace matchgraph
{
    /// Undirected edge, normalised so that u < v.
    struct Edge
    {
        int u = 0;
        int v = 0;

        auto other(int x) const -> int { return x == u ? v : u; }
        auto touches(int x) const -> bool { return x == u || x == v; }

        friend auto operator== (const Edge &, const Edge &) -> bool = default;
        friend auto operator<=> (const Edge &, const Edge &) = default;
    };

    struct Incidence
    {
        int neighbour;
        int edge;
    };

    /// Bit i set means edge i (or vertex i) is present. Searches that use masks require at most 64 elements.
    using Mask = std::uint64_t;

    inline constexpr auto bit(int i) -> Mask { return Mask{1} << i; }

    /**
     * Finite simple undirected graph. Edge indices are the positions in the
     * edge list given at construction and never change; every ordering, sign
     * vector and certificate in this library refers to them.
     */
    class Graph
    {
        public:
            Graph() = default;

            /// Throws std::invalid_argument on loops, duplicate edges or out-of-range endpoints.
            Graph(int n, std::vector<Edge> edges);

            auto vertex_count() const -> int { return _n; }
            auto edge_count() const -> int { return static_cast<int>(_edges.size()); }

            auto edges() const -> const std::vector<Edge> & { return _edges; }
            auto edge(int e) const -> const Edge & { return _edges[e]; }

            auto degree(int v) const -> int { return static_cast<int>(_incidence[v].size()); }
            auto max_degree() const -> int;

            /// Incident edges of v, sorted by neighbour then edge index.
            auto incident(int v) const -> std::span<const Incidence> { return _incidence[v]; }

            auto adjacent(int u, int v) const -> bool { return edge_index(u, v).has_value(); }
            auto edge_index(int u, int v) const -> std::optional<int>;

            /// Edges of the whole graph as a mask; requires edge_count() <= 64.
            auto all_edges_mask() const -> Mask;

            /// Mask of the edges incident to either endpoint of e (including e); requires edge_count() <= 64.
            auto touching_mask(int e) const -> Mask;

            friend auto operator== (const Graph & a, const Graph & b) -> bool
            {
                return a._n == b._n && a._edges == b._edges;
            }

        private:
            int _n = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<Incidence>> _incidence;
            std::vector<Mask> _touching;
    };

    /// C_n, n >= 3: vertices 0..n-1, edge i joins i and (i+1) mod n.
    auto make_cycle(int n) -> Graph;

    /// P_n, n >= 1: edge i joins i and i+1.
    auto make_path(int n) -> Graph;

    /// K_{m,n}: left vertices 0..m-1, right vertices m..m+n-1, edges lexicographic by (left, right).
    auto make_complete_bipartite(int m, int n) -> Graph;

    /// nK_2: edge i joins 2i and 2i+1.
    auto make_disjoint_matching(int n) -> Graph;

    /// K_n, edges lexicographic.
    auto make_complete(int n) -> Graph;

    /// K_{1,n} with centre 0.
    auto make_star(int n) -> Graph;

    /// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    auto make_petersen() -> Graph;

    /// Vertex-disjoint union; vertices and edges of b are shifted after those of a.
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;

    /// Spanning subgraph on the given edge indices, re-indexed in ascending order of the originals.
    auto spanning_subgraph(const Graph & g, std::span<const int> edges) -> Graph;

    auto is_connected(const Graph & g) -> bool;

    /// Component label per vertex, labels assigned in order of smallest vertex.
    auto connected_components(const Graph & g) -> std::vector<int>;

    /// Number of components of g - removed having an odd number of vertices.
    auto odd_components(const Graph & g, const std::vector<bool> & removed) -> int;
    auto odd_components(const Graph & g, std::span<const int> removed) -> int;

    /// Length of a shortest odd cycle; nullopt when g is bipartite.
    auto odd_girth(const Graph & g) -> std::optional<int>;

    /**
     * A graph extended with extra vertices and extra (possibly parallel) edges,
     * used for the auxiliary multigraphs that Eulerian orderings are read from.
     * Base edges keep indices 0..m-1; extra edges are numbered from m in the
     * order they are added.
     */
    class MultiGraphView
    {
        public:
            explicit MultiGraphView(Graph base, int extra_vertices = 0);

            auto add_edge(int u, int v) -> int;

            auto base() const -> const Graph & { return _base; }
            auto vertex_count() const -> int { return _n; }
            auto edge_count() const -> int { return static_cast<int>(_ends.size()); }
            auto endpoints(int e) const -> const Edge & { return _ends[e]; }
            auto is_extra(int e) const -> bool { return e >= _base.edge_count(); }
            auto degree(int v) const -> int;

        private:
            Graph _base;
            int _n;
            std::vector<Edge> _ends;
    };

    /**
     * Eulerian circuit from start, as a sequence of edge indices. Neighbours are
     * scanned in ascending vertex order, then ascending edge index, so the tour
     * is a deterministic function of the input. An edgeless input gives an empty
     * tour. Throws NotEulerianError on an odd vertex or when some edge is not
     * reachable from start.
     */
    auto eulerian_tour(const MultiGraphView & g, int start) -> std::vector<int>;

    /// Checks that tour is a closed walk from start using every edge exactly once.
    auto is_eulerian_tour(const MultiGraphView & g, int start, std::span<const int> tour) -> bool;

    struct DegreeOrder
    {
        /// perm[i] is the vertex placed i-th; degrees are non-increasing along perm.
        std::vector<int> perm;
        std::string tie_policy;
    };

    /// Non-increasing degree order, ties by ascending vertex index.
    auto degree_order(const Graph & g) -> DegreeOrder;

    /**
     * A non-increasing degree order whose first k vertices are pairwise
     * non-adjacent, found by permuting only within classes of equal degree.
     * Returns nullopt when no such order exists.
     */
    auto degree_order(const Graph & g, int k) -> std::optional<DegreeOrder>;

    /// Brute-force isomorphism test with degree-sequence pruning; isolated vertices count.
    auto isomorphic(const Graph & a, const Graph & b) -> bool;
}
