#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace matchgraph
{
    /**
     * A 4-cycle of K_{m,n} given by two left vertices and two right vertices;
     * its edges are (a,x), (a,y), (b,x), (b,y). Right vertices are numbered
     * 0..n-1 on their own side.
     */
    struct C4Block
    {
        int a = 0, b = 0;
        int x = 0, y = 0;

        auto edges() const -> std::vector<std::pair<int, int>>
        {
            return { { a, x }, { a, y }, { b, x }, { b, y } };
        }

        friend auto operator== (const C4Block &, const C4Block &) -> bool = default;
    };

    struct C4Decomposition
    {
        int m = 0, n = 0;
        std::vector<C4Block> blocks;
    };

    struct C4Check
    {
        bool partition = false;
        bool monogamous = false;
        std::string detail;

        auto ok() const -> bool { return partition && monogamous; }
    };

    /// Checks that blocks partition E(K_{m,n}) and no vertex pair shares two blocks.
    auto verify_c4_decomposition(const C4Decomposition & d) -> C4Check;

    enum class C4Status
    {
        found,
        none,
        indeterminate
    };

    auto to_string(C4Status s) -> std::string;

    struct C4Options
    {
        std::uint64_t max_nodes = 500'000'000;
        bool record_trace = false;
        std::size_t trace_limit = 100'000;
    };

    struct C4Result
    {
        C4Status status = C4Status::indeterminate;
        std::optional<C4Decomposition> decomposition;
        std::uint64_t nodes = 0;
        /// Placement and backtrack events in search order, when requested.
        std::vector<std::string> trace;
        bool trace_truncated = false;
    };

    /**
     * Backtracking search for a monogamous C_4-decomposition of K_{m,n}, m and
     * n even. The first uncovered edge in lexicographic order is always
     * covered next; partners that are still completely untouched are tried
     * only once, as they are interchangeable. A completed search with no
     * decomposition is a refutation (status none).
     */
    auto c4_monogamous(int m, int n, const C4Options & options = {}) -> C4Result;
}
