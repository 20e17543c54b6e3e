#pragma once

#include <matchgraph/graph.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace matchgraph
{
    /// Pairwise adjacent vertices: chi >= size.
    struct CliqueWitness
    {
        std::vector<int> vertices;
    };

    /// Complete search showing no proper coloring with refuted_colors colors exists.
    struct ExhaustiveWitness
    {
        int refuted_colors = 0;
        std::uint64_t nodes = 0;
    };

    /**
     * Lower bound read off a sign-vector alternation number of a hypergraph
     * representation of the graph under a fixed ordering of its ground set:
     * chi >= ground - alt ("alt") or chi >= ground + 1 - salt ("salt").
     */
    struct AlternationWitness
    {
        std::string kind;
        std::vector<int> ordering;
        int ground_size = 0;
        int alternation = 0;

        auto bound() const -> int { return kind == "salt" ? ground_size + 1 - alternation : ground_size - alternation; }
    };

    using LowerWitness = std::variant<CliqueWitness, ExhaustiveWitness, AlternationWitness>;

    auto witness_name(const LowerWitness & w) -> std::string;

    struct ChromaticCertificate
    {
        /// Exact chromatic number when exact, otherwise equal to upper.
        int chi = 0;
        int lower = 0;
        int upper = 0;
        bool exact = false;
        /// Proper coloring with upper colors, renumbered by first occurrence.
        std::vector<int> coloring;
        /// Justifies lower.
        LowerWitness lower_witness;
        std::uint64_t nodes = 0;
    };

    inline constexpr std::uint64_t default_max_nodes = 10'000'000;

    struct ChromaticOptions
    {
        std::uint64_t max_nodes = default_max_nodes;
        /// A lower bound established elsewhere, used when it beats the clique bound.
        std::optional<AlternationWitness> lower_hint;
        /// A proper coloring established elsewhere, used when it beats the greedy bound.
        std::optional<std::vector<int>> upper_hint;
    };

    /**
     * Exact chromatic number by DSATUR branch and bound. A greedy clique gives
     * the initial lower bound and is pre-coloured during search; k-colorability
     * is then refuted for decreasing k from the best known coloring. When the
     * node budget runs out the certificate carries the interval [lower, upper]
     * with exact == false; it never claims an exact value it has not proved.
     */
    auto chromatic_number(const Graph & g, const ChromaticOptions & options = {}) -> ChromaticCertificate;

    /// Throws std::invalid_argument when coloring does not assign a non-negative color to every vertex.
    auto is_proper(const Graph & g, std::span<const int> coloring) -> bool;

    auto color_count(std::span<const int> coloring) -> int;

    /// Colors renumbered 0, 1, ... in order of first occurrence along the vertices.
    auto canonical_coloring(std::span<const int> coloring) -> std::vector<int>;

    auto greedy_clique(const Graph & g) -> std::vector<int>;

    /// Exhaustive k-colorability test; intended for small graphs and as a cross-check.
    auto is_k_colorable(const Graph & g, int k) -> bool;

    /**
     * Coloring of matching_graph(g, r): each r-matching receives the rank,
     * among edges outside extremal, of its smallest edge outside extremal. Uses
     * at most |E(g)| - |extremal| colors. Throws CertificateError when extremal
     * contains an r-matching.
     */
    auto coloring_from_extremal(const Graph & g, int r, std::span<const int> extremal) -> std::vector<int>;
}
