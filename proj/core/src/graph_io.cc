#include <matchgraph/graph_io.hh>
#include <matchgraph/errors.hh>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

using std::string;
using std::vector;

namespace matchgraph
{
    namespace
    {
        struct LineReader
        {
            std::istream & in;
            int line_no = 0;

            // Next non-comment line, or false at end of input.
            auto next(string & line) -> bool
            {
                while (std::getline(in, line)) {
                    ++line_no;
                    if (! line.empty() && line.back() == '\r')
                        line.pop_back();
                    if (! line.empty() && line.front() == '#')
                        continue;
                    return true;
                }
                return false;
            }
        };

        auto integers(const string & line, int line_no) -> vector<int>
        {
            vector<int> values;
            const char * p = line.data();
            const char * end = p + line.size();
            while (p != end) {
                if (*p == ' ' || *p == '\t') {
                    ++p;
                    continue;
                }
                int value = 0;
                auto [next, ec] = std::from_chars(p, end, value);
                if (ec != std::errc{} || (next != end && *next != ' ' && *next != '\t')) {
                    const char * stop = p;
                    while (stop != end && *stop != ' ' && *stop != '\t')
                        ++stop;
                    throw ParseError("expected an integer, got '" + string(p, stop) + "'", line_no);
                }
                values.push_back(value);
                p = next;
            }
            return values;
        }

        auto header(LineReader & reader, const char * what) -> std::pair<int, int>
        {
            string line;
            if (! reader.next(line))
                throw ParseError(string("missing ") + what + " header", reader.line_no + 1);
            auto values = integers(line, reader.line_no);
            if (values.size() != 2 || values[0] < 0 || values[1] < 0)
                throw ParseError(string("header must be two non-negative integers for ") + what, reader.line_no);
            return { values[0], values[1] };
        }

        auto open(const string & path) -> std::ifstream
        {
            std::ifstream in(path);
            if (! in)
                throw std::runtime_error("cannot open " + path);
            return in;
        }
    }

    auto read_graph(std::istream & in) -> Graph
    {
        LineReader reader{ in };
        auto [n, m] = header(reader, "graph");
        vector<Edge> edges;
        edges.reserve(m);
        string line;
        for (int i = 0 ; i < m ; ++i) {
            if (! reader.next(line))
                throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i), reader.line_no + 1);
            auto values = integers(line, reader.line_no);
            if (values.size() != 2)
                throw ParseError("edge line must have two vertices", reader.line_no);
            int u = values[0], v = values[1];
            if (u < 0 || v >= n || u >= v)
                throw ParseError("edge must satisfy 0 <= u < v < n", reader.line_no);
            edges.push_back(Edge{ u, v });
        }
        while (reader.next(line))
            if (line.find_first_not_of(" \t") != string::npos)
                throw ParseError("trailing content after edge list", reader.line_no);
        try {
            return Graph(n, std::move(edges));
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(e.what(), reader.line_no);
        }
    }

    auto read_graph_file(const string & path) -> Graph
    {
        auto in = open(path);
        return read_graph(in);
    }

    auto write_graph(std::ostream & out, const Graph & g) -> void
    {
        out << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (auto & e : g.edges())
            out << e.u << ' ' << e.v << '\n';
    }

    auto graph_to_string(const Graph & g) -> string
    {
        std::ostringstream out;
        write_graph(out, g);
        return out.str();
    }

    auto read_hypergraph(std::istream & in) -> Hypergraph
    {
        LineReader reader{ in };
        auto [n, k] = header(reader, "hypergraph");
        vector<vector<int>> edges;
        string line;
        for (int i = 0 ; i < k ; ++i) {
            if (! reader.next(line))
                throw ParseError("expected " + std::to_string(k) + " hyperedges, found " + std::to_string(i), reader.line_no + 1);
            auto values = integers(line, reader.line_no);
            for (std::size_t j = 1 ; j < values.size() ; ++j)
                if (values[j - 1] >= values[j])
                    throw ParseError("hyperedge indices must be strictly ascending", reader.line_no);
            edges.push_back(std::move(values));
        }
        try {
            return Hypergraph(n, std::move(edges));
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(e.what(), reader.line_no);
        }
    }

    auto write_hypergraph(std::ostream & out, const Hypergraph & h) -> void
    {
        out << h.ground_size() << ' ' << h.hyperedge_count() << '\n';
        for (auto & e : h.hyperedges()) {
            for (std::size_t i = 0 ; i < e.size() ; ++i)
                out << (i ? " " : "") << e[i];
            out << '\n';
        }
    }

    auto read_ordering(std::istream & in, int expected_size) -> EdgeOrdering
    {
        LineReader reader{ in };
        string line;
        vector<int> perm;
        if (reader.next(line))
            perm = integers(line, reader.line_no);
        if (expected_size >= 0 && static_cast<int>(perm.size()) != expected_size)
            throw ParseError("ordering has " + std::to_string(perm.size()) + " entries, expected "
                    + std::to_string(expected_size), std::max(reader.line_no, 1));
        try {
            return EdgeOrdering(std::move(perm));
        }
        catch (const std::invalid_argument & e) {
            throw ParseError(e.what(), std::max(reader.line_no, 1));
        }
    }

    auto read_ordering_file(const string & path, int expected_size) -> EdgeOrdering
    {
        auto in = open(path);
        return read_ordering(in, expected_size);
    }

    auto write_ordering(std::ostream & out, const EdgeOrdering & sigma) -> void
    {
        for (int i = 0 ; i < sigma.size() ; ++i)
            out << (i ? " " : "") << sigma.perm()[i];
        out << '\n';
    }

    auto write_dimacs(std::ostream & out, const Graph & g, const string & comment) -> void
    {
        if (! comment.empty())
            out << "c " << comment << '\n';
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (auto & e : g.edges())
            out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    }
}
