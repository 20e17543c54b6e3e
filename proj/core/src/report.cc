#include <matchgraph/report.hh>
#include <matchgraph/graph_io.hh>

#include <algorithm>
#include <cstdio>
#include <sstream>

using std::string;

namespace matchgraph
{
    auto to_string(Exactness e) -> string
    {
        switch (e) {
            case Exactness::certified: return "certified";
            case Exactness::interval: return "interval";
            case Exactness::heuristic: return "heuristic";
        }
        return "unknown";
    }

    auto fnv1a(const string & bytes) -> std::uint64_t
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return h;
    }

    auto hex64(std::uint64_t value) -> string
    {
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
        return buf;
    }

    auto graph_hash(const Graph & g) -> string
    {
        return hex64(fnv1a(graph_to_string(g)));
    }

    auto to_json(const Graph & g) -> json
    {
        json edges = json::array();
        for (auto & e : g.edges())
            edges.push_back({ e.u, e.v });
        return { { "n", g.vertex_count() }, { "edges", edges } };
    }

    auto graph_from_json(const json & j) -> Graph
    {
        std::vector<Edge> edges;
        for (auto & e : j.at("edges"))
            edges.push_back(Edge{ e.at(0).get<int>(), e.at(1).get<int>() });
        return Graph(j.at("n").get<int>(), std::move(edges));
    }

    auto to_json(const LowerWitness & w) -> json
    {
        json j{ { "kind", witness_name(w) } };
        if (auto c = std::get_if<CliqueWitness>(&w))
            j["vertices"] = c->vertices;
        else if (auto e = std::get_if<ExhaustiveWitness>(&w)) {
            j["refuted_colors"] = e->refuted_colors;
            j["nodes"] = e->nodes;
        }
        else if (auto a = std::get_if<AlternationWitness>(&w)) {
            j["mode"] = a->kind;
            j["ordering"] = a->ordering;
            j["ground_size"] = a->ground_size;
            j["alternation"] = a->alternation;
            j["bound"] = a->bound();
        }
        return j;
    }

    auto to_json(const ChromaticCertificate & c) -> json
    {
        return {
            { "chi", c.chi },
            { "lower", c.lower },
            { "upper", c.upper },
            { "exactness", to_string(c.exact ? Exactness::certified : Exactness::interval) },
            { "coloring", c.coloring },
            { "lower_witness", to_json(c.lower_witness) },
            { "nodes", c.nodes }
        };
    }

    auto to_json(const TuranCertificate & c) -> json
    {
        return {
            { "ex", c.ex_value },
            { "upper", c.upper },
            { "exactness", to_string(c.exact ? Exactness::certified : Exactness::interval) },
            { "extremal_edges", c.extremal_edges },
            { "method", to_string(c.method) },
            { "nodes", c.nodes }
        };
    }

    auto to_json(const TutteBergeWitness & w) -> json
    {
        return {
            { "s", w.s },
            { "odd_components", w.odd_components },
            { "deficiency", w.deficiency },
            { "nu", w.nu }
        };
    }

    auto to_json(const C4Decomposition & d) -> json
    {
        json blocks = json::array();
        for (auto & b : d.blocks) {
            json cycle = json::array();
            for (auto [l, r] : b.edges())
                cycle.push_back({ l, r });
            blocks.push_back(cycle);
        }
        return { { "m", d.m }, { "n", d.n }, { "blocks", blocks } };
    }

    auto c4_from_json(const json & j) -> C4Decomposition
    {
        C4Decomposition d;
        d.m = j.at("m").get<int>();
        d.n = j.at("n").get<int>();
        for (auto & cycle : j.at("blocks")) {
            if (cycle.size() != 4)
                throw std::invalid_argument("a block must list four edges");
            std::vector<int> lefts, rights;
            for (auto & e : cycle) {
                lefts.push_back(e.at(0).get<int>());
                rights.push_back(e.at(1).get<int>());
            }
            std::sort(lefts.begin(), lefts.end());
            std::sort(rights.begin(), rights.end());
            C4Block b{ lefts[0], lefts[3], rights[0], rights[3] };
            // the four edges must be exactly {a,b} x {x,y}
            auto want = b.edges();
            std::vector<std::pair<int, int>> got;
            for (auto & e : cycle)
                got.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
            std::sort(want.begin(), want.end());
            std::sort(got.begin(), got.end());
            if (b.a == b.b || b.x == b.y || want != got)
                throw std::invalid_argument("block edges do not form a 4-cycle");
            d.blocks.push_back(b);
        }
        return d;
    }

    auto to_json(const LocallyEulerianCertificate & c) -> json
    {
        return {
            { "host", to_json(c.host) },
            { "roots", c.roots },
            { "subgraphs", c.subgraphs },
            { "r", c.r },
            { "c", c.c }
        };
    }

    auto to_json(const Grk2Report & r) -> json
    {
        json j{
            { "r", r.r },
            { "connected", r.connected },
            { "odd_girth", r.odd_girth ? json(*r.odd_girth) : json("infinite") },
            { "independent_prefix", r.independent_prefix },
            { "top_degrees", r.top_degrees },
            { "degree_sum", r.degree_sum },
            { "inequality", r.inequality },
            { "parity", r.parity },
            { "applicable", r.applicable },
            { "formula_value", r.formula_value },
            { "failures", r.failures }
        };
        if (r.order)
            j["order"] = r.order->perm;
        return j;
    }

    auto Report::to_json() const -> json
    {
        json j{
            { "schema", report_schema_version },
            { "command", command },
            { "inputs", inputs },
            { "results", results }
        };
        j["digest"] = hex64(fnv1a(j.dump()));
        j["timing"] = { { "seconds", seconds } };
        return j;
    }

    auto Report::digest() const -> string
    {
        return to_json().at("digest").get<string>();
    }

    auto Report::dump() const -> string
    {
        return to_json().dump(2);
    }

    auto Report::table() const -> string
    {
        std::ostringstream out;
        auto rows = [&] (const string & prefix, const json & obj) {
            for (auto & [key, value] : obj.items())
                if (value.is_primitive())
                    out << prefix << key << '\t' << value.dump() << '\n';
        };
        out << "command\t" << command << '\n';
        rows("inputs.", inputs);
        rows("", results);
        for (auto & [key, value] : results.items())
            if (value.is_object())
                rows(key + ".", value);
        out << "digest\t" << digest() << '\n';
        return out.str();
    }
}
