#pragma once

#include <matchgraph/chromatic.hh>
#include <matchgraph/graph.hh>
#include <matchgraph/hypergraph.hh>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace matchgraph
{
    /// Entries in {-1, 0, +1}; position j refers to the element placed j-th by an ordering.
    class SignVector
    {
        public:
            SignVector() = default;
            explicit SignVector(std::vector<int> entries);

            auto size() const -> int { return static_cast<int>(_entries.size()); }
            auto entries() const -> const std::vector<int> & { return _entries; }
            auto operator[] (int j) const -> int { return _entries[j]; }

        private:
            std::vector<int> _entries;
    };

    /// Length of a longest alternating subsequence of the non-zero entries; 0 for the zero vector.
    auto alt(const SignVector & x) -> int;

    /// A linear order of [0, n): perm[j] is the element in position j.
    class EdgeOrdering
    {
        public:
            EdgeOrdering() = default;
            /// Throws std::invalid_argument unless perm is a bijection on [0, perm.size()).
            explicit EdgeOrdering(std::vector<int> perm);

            static auto identity(int n) -> EdgeOrdering;

            auto size() const -> int { return static_cast<int>(_perm.size()); }
            auto perm() const -> const std::vector<int> & { return _perm; }
            auto operator[] (int j) const -> int { return _perm[j]; }

            friend auto operator== (const EdgeOrdering &, const EdgeOrdering &) -> bool = default;

        private:
            std::vector<int> _perm;
    };

    /// X^+_sigma and X^-_sigma as element masks.
    auto plus_set(const SignVector & x, const EdgeOrdering & sigma) -> Mask;
    auto minus_set(const SignVector & x, const EdgeOrdering & sigma) -> Mask;

    enum class AlternationMode
    {
        /// neither X^+ nor X^- contains a hyperedge
        alt,
        /// at most one of X^+ and X^- contains a hyperedge
        salt
    };

    struct AlternationOptions
    {
        std::uint64_t max_nodes = 200'000'000;
    };

    struct AlternationResult
    {
        int value = 0;
        /// A sign vector attaining value.
        SignVector witness;
        std::uint64_t nodes = 0;
    };

    /**
     * Maximum alt(X) over sign vectors admissible for mode, by depth-first
     * search over positions in sigma order. Only strictly alternating
     * supports are explored: dropping redundant non-zero entries never breaks
     * admissibility and leaves alt(X) unchanged. Throws CapacityError when the
     * ground set exceeds 64 elements or the node budget runs out.
     */
    auto alternation_search(const Hypergraph & h, const EdgeOrdering & sigma, AlternationMode mode,
            const AlternationOptions & options = {}) -> AlternationResult;

    auto alt_sigma(const Hypergraph & h, const EdgeOrdering & sigma, const AlternationOptions & options = {}) -> int;
    auto salt_sigma(const Hypergraph & h, const EdgeOrdering & sigma, const AlternationOptions & options = {}) -> int;

    struct MinimisedAlternation
    {
        int value = 0;
        EdgeOrdering ordering;
        /// True when every ordering was examined; otherwise value is only an upper bound on the minimum.
        bool certified = false;
    };

    struct MinimiseOptions
    {
        /// Orderings are enumerated exhaustively up to this ground-set size.
        int exhaustive_limit = 8;
        bool allow_heuristic = false;
        int heuristic_samples = 200;
        unsigned seed = 1;
        AlternationOptions search;
    };

    auto alt_min(const Hypergraph & h, const MinimiseOptions & options = {}) -> MinimisedAlternation;
    auto salt_min(const Hypergraph & h, const MinimiseOptions & options = {}) -> MinimisedAlternation;

    struct TuranAltOptions
    {
        std::uint64_t max_nodes = 200'000'000;
    };

    /**
     * Largest number of edges that can be 2-colored alternately along sigma so
     * that both color classes (ex_alt) or at least one (ex_salt) have no
     * r-matching. Works on the graph directly; target sizes are tried from an
     * a-priori bound downwards and the first feasible one is returned.
     */
    auto ex_alt_sigma(const Graph & g, int r, const EdgeOrdering & sigma, const TuranAltOptions & options = {}) -> int;
    auto ex_salt_sigma(const Graph & g, int r, const EdgeOrdering & sigma, const TuranAltOptions & options = {}) -> int;

    /// (|V(h)| - alt_sigma(h), |V(h)| + 1 - salt_sigma(h)); the second bounds chi(KG(h)) only when h has a hyperedge.
    auto chi_lower_bounds(const Hypergraph & h, const EdgeOrdering & sigma, const AlternationOptions & options = {})
        -> std::pair<int, int>;

    /// The stronger valid bound under sigma, packaged for a ChromaticCertificate.
    auto alternation_witness(const Hypergraph & h, const EdgeOrdering & sigma, const AlternationOptions & options = {})
        -> AlternationWitness;
}
