#pragma once

#include <matchgraph/alternation.hh>
#include <matchgraph/graph.hh>
#include <matchgraph/hypergraph.hh>

#include <iosfwd>
#include <string>

namespace matchgraph
{
    /**
     * Text formats. Graphs: "n m" then m lines "u v" with u < v; hypergraphs:
     * "n k" then k lines of ascending indices; orderings: one line of
     * space-separated indices. Lines starting with '#' are skipped everywhere.
     * Readers throw ParseError carrying the 1-based line number.
     */
    auto read_graph(std::istream & in) -> Graph;
    auto read_graph_file(const std::string & path) -> Graph;
    auto write_graph(std::ostream & out, const Graph & g) -> void;
    auto graph_to_string(const Graph & g) -> std::string;

    auto read_hypergraph(std::istream & in) -> Hypergraph;
    auto write_hypergraph(std::ostream & out, const Hypergraph & h) -> void;

    /// expected_size < 0 skips the length check.
    auto read_ordering(std::istream & in, int expected_size = -1) -> EdgeOrdering;
    auto read_ordering_file(const std::string & path, int expected_size = -1) -> EdgeOrdering;
    auto write_ordering(std::ostream & out, const EdgeOrdering & sigma) -> void;

    /// DIMACS edge format, vertices numbered from 1.
    auto write_dimacs(std::ostream & out, const Graph & g, const std::string & comment = "") -> void;
}
