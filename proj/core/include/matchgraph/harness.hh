#pragma once

#include <matchgraph/alternation.hh>
#include <matchgraph/chromatic.hh>
#include <matchgraph/hypergraph.hh>
#include <matchgraph/report.hh>
#include <matchgraph/turan.hh>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace matchgraph
{
    inline constexpr int exit_certified = 0;
    inline constexpr int exit_interval = 2;
    inline constexpr int exit_violation = 3;

    struct OrderingChoice
    {
        enum class Kind
        {
            euler,
            identity,
            file
        };

        Kind kind = Kind::euler;
        std::string path;

        auto name() const -> std::string;
    };

    /// "euler", "identity" or "file:PATH"; throws std::invalid_argument otherwise.
    auto parse_ordering_choice(const std::string & text) -> OrderingChoice;

    /// Falls back to the identity for a disconnected graph under the euler choice.
    auto resolve_ordering(const Graph & g, const OrderingChoice & choice) -> EdgeOrdering;

    struct HarnessOptions
    {
        std::uint64_t max_nodes = default_max_nodes;
        OrderingChoice ordering;
        /// Orderings tried for an alternation lower bound after euler and identity.
        int sampled_orderings = 32;
        unsigned seed = 1;
        /// 0 means hardware concurrency.
        int threads = 0;
    };

    /**
     * chi(KG(g, rK_2)) with every certificate attached. The upper bound comes
     * from the extremal coloring and DSATUR; alternation bounds under euler,
     * identity and sampled orderings are tried as lower-bound witnesses before
     * the exhaustive search.
     */
    struct MatchingChromatic
    {
        KneserGraph kneser;
        TuranCertificate turan;
        ChromaticCertificate chromatic;
    };

    auto certify_matching_chromatic(const Graph & g, int r, const HarnessOptions & options = {}) -> MatchingChromatic;

    struct CommandResult
    {
        Report report;
        int exit_code = exit_certified;
    };

    /// KG(C_n, rK_2) against n - 2r + 2. Throws std::invalid_argument unless n >= 2r + 1 and r >= 1.
    auto cmd_schrijver(int n, int r, const HarnessOptions & options = {}) -> CommandResult;

    /// KG(K_{m,n}, rK_2) against m(n - r + 1). Throws std::invalid_argument unless m >= n >= r >= 1.
    auto cmd_permutation(int m, int n, int r, const HarnessOptions & options = {}) -> CommandResult;

    struct ScanRecord
    {
        Graph graph;
        int r = 0;
        bool connected = true;
        bool complete = false;
        int chi = 0;
        int ex = 0;
        bool equality = false;
        /// A violation on a disconnected graph, where equality is not expected.
        bool known_inequality = false;
        json certificates = json::object();
        std::string error;

        auto violation() const -> bool { return complete && ! equality && connected; }
        auto to_json() const -> json;
    };

    auto scan_graph(const Graph & g, int r, const HarnessOptions & options = {}) -> ScanRecord;

    struct ScanOptions
    {
        int min_n = -1;  ///< default 2r
        int max_n = 7;
        bool include_disconnected = false;
    };

    struct ScanSummary
    {
        int graphs = 0;
        int complete = 0;
        int violations = 0;
        int known_inequalities = 0;
        int failures = 0;
        std::vector<ScanRecord> records;
    };

    /// Graphs for the scan: connected (or all) graphs on min_n..max_n vertices in canonical order.
    auto scan_graphs(const ScanOptions & scan) -> std::vector<Graph>;

    auto run_scan(const std::vector<Graph> & graphs, int r, const HarnessOptions & options = {}) -> ScanSummary;

    /// Writes one JSON line per record, in input order, then a summary line.
    auto cmd_scan(const ScanOptions & scan, int r, const HarnessOptions & options, std::ostream & records) -> CommandResult;

    /// Every computable quantity for (g, r) under the chosen ordering, with audits.
    auto cmd_analyze(const Graph & g, int r, const HarnessOptions & options = {}) -> CommandResult;
}
