#include <matchgraph/harness.hh>
#include <matchgraph/enumerate.hh>
#include <matchgraph/errors.hh>
#include <matchgraph/graph_io.hh>
#include <matchgraph/matching.hh>
#include <matchgraph/orderings.hh>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

using std::string;
using std::vector;

namespace matchgraph
{
    namespace
    {
        class Stopwatch
        {
            public:
                auto seconds() const -> double
                {
                    return std::chrono::duration<double>(std::chrono::steady_clock::now() - _start).count();
                }

            private:
                std::chrono::steady_clock::time_point _start = std::chrono::steady_clock::now();
        };

        auto exit_for(bool exact, bool violated) -> int
        {
            return violated ? exit_violation : exact ? exit_certified : exit_interval;
        }

        auto try_alternation(const Hypergraph & h, const EdgeOrdering & sigma, std::uint64_t max_nodes)
            -> std::optional<AlternationWitness>
        {
            try {
                return alternation_witness(h, sigma, AlternationOptions{ max_nodes });
            }
            catch (const CapacityError &) {
                return std::nullopt;
            }
        }
    }

    auto OrderingChoice::name() const -> string
    {
        switch (kind) {
            case Kind::euler: return "euler";
            case Kind::identity: return "identity";
            case Kind::file: return "file:" + path;
        }
        return "unknown";
    }

    auto parse_ordering_choice(const string & text) -> OrderingChoice
    {
        if (text == "euler")
            return { OrderingChoice::Kind::euler, "" };
        if (text == "identity")
            return { OrderingChoice::Kind::identity, "" };
        if (text.rfind("file:", 0) == 0 && text.size() > 5)
            return { OrderingChoice::Kind::file, text.substr(5) };
        throw std::invalid_argument("ordering must be euler, identity or file:PATH, got '" + text + "'");
    }

    auto resolve_ordering(const Graph & g, const OrderingChoice & choice) -> EdgeOrdering
    {
        switch (choice.kind) {
            case OrderingChoice::Kind::euler:
                return is_connected(g) ? euler_ordering(g) : EdgeOrdering::identity(g.edge_count());
            case OrderingChoice::Kind::identity:
                return EdgeOrdering::identity(g.edge_count());
            case OrderingChoice::Kind::file:
                return read_ordering_file(choice.path, g.edge_count());
        }
        throw std::logic_error("unknown ordering choice");
    }

    auto certify_matching_chromatic(const Graph & g, int r, const HarnessOptions & options) -> MatchingChromatic
    {
        MatchingChromatic result{ matching_graph(g, r), turan_matchings(g, r), {} };
        auto & kg = result.kneser.graph;

        ChromaticOptions chromatic{ options.max_nodes, std::nullopt, std::nullopt };
        int target = kg.vertex_count();
        if (kg.vertex_count() > 0) {
            chromatic.upper_hint = coloring_from_extremal(g, r, result.turan.extremal_edges);
            target = color_count(*chromatic.upper_hint);
        }

        int clique = static_cast<int>(greedy_clique(kg).size());
        if (kg.vertex_count() > 0 && clique < target && g.edge_count() <= 64) {
            vector<EdgeOrdering> candidates;
            if (is_connected(g))
                candidates.push_back(euler_ordering(g));
            candidates.push_back(EdgeOrdering::identity(g.edge_count()));
            std::mt19937 rng(options.seed);
            for (int i = 0 ; i < options.sampled_orderings ; ++i) {
                auto perm = EdgeOrdering::identity(g.edge_count()).perm();
                std::shuffle(perm.begin(), perm.end(), rng);
                candidates.emplace_back(std::move(perm));
            }

            for (auto & sigma : candidates) {
                auto witness = try_alternation(result.kneser.source, sigma, options.max_nodes);
                if (witness && (! chromatic.lower_hint || witness->bound() > chromatic.lower_hint->bound()))
                    chromatic.lower_hint = witness;
                if (chromatic.lower_hint && chromatic.lower_hint->bound() >= target)
                    break;
            }
        }

        result.chromatic = chromatic_number(kg, chromatic);
        return result;
    }

    auto cmd_schrijver(int n, int r, const HarnessOptions & options) -> CommandResult
    {
        if (r < 1 || n < 2 * r + 1)
            throw std::invalid_argument("schrijver needs r >= 1 and n >= 2r + 1");
        Stopwatch clock;
        auto g = make_cycle(n);
        auto mc = certify_matching_chromatic(g, r, options);
        int formula = n - 2 * r + 2;

        CommandResult out;
        auto & rep = out.report;
        rep.command = "schrijver";
        rep.inputs = { { "n", n }, { "r", r }, { "graph_hash", graph_hash(g) }, { "max_nodes", options.max_nodes } };
        rep.results["matching_graph"] = { { "vertices", mc.kneser.graph.vertex_count() }, { "edges", mc.kneser.graph.edge_count() } };
        rep.results["chromatic"] = to_json(mc.chromatic);
        rep.results["turan"] = to_json(mc.turan);
        rep.results["formula"] = formula;

        auto euler = try_alternation(mc.kneser.source, euler_ordering(g), options.max_nodes);
        if (euler) {
            rep.results["euler_bound"] = to_json(LowerWitness{ *euler });
            rep.results["euler_bound_matches"] = euler->bound() == formula;
        }
        else
            rep.results["euler_bound"] = nullptr;

        bool agrees = mc.chromatic.exact && mc.chromatic.chi == formula;
        rep.results["agrees"] = agrees;
        rep.seconds = clock.seconds();
        out.exit_code = exit_for(mc.chromatic.exact, mc.chromatic.exact && ! agrees);
        return out;
    }

    auto cmd_permutation(int m, int n, int r, const HarnessOptions & options) -> CommandResult
    {
        if (r < 1 || n < r || m < n)
            throw std::invalid_argument("permutation needs m >= n >= r >= 1");
        Stopwatch clock;
        auto g = make_complete_bipartite(m, n);
        auto mc = certify_matching_chromatic(g, r, options);
        int formula = m * (n - r + 1);

        CommandResult out;
        auto & rep = out.report;
        rep.command = "permutation";
        rep.inputs = { { "m", m }, { "n", n }, { "r", r }, { "graph_hash", graph_hash(g) }, { "max_nodes", options.max_nodes } };
        rep.results["matching_graph"] = { { "vertices", mc.kneser.graph.vertex_count() }, { "edges", mc.kneser.graph.edge_count() } };
        rep.results["chromatic"] = to_json(mc.chromatic);
        rep.results["turan"] = to_json(mc.turan);
        rep.results["formula"] = formula;
        rep.results["even_m"] = m % 2 == 0;
        rep.results["grk2"] = to_json(grk2_conditions(g, r));

        auto euler = try_alternation(mc.kneser.source, euler_ordering(g), options.max_nodes);
        rep.results["euler_bound"] = euler ? to_json(LowerWitness{ *euler }) : json(nullptr);

        bool agrees = mc.chromatic.exact && mc.chromatic.chi == formula;
        rep.results["agrees"] = agrees;
        rep.seconds = clock.seconds();
        out.exit_code = exit_for(mc.chromatic.exact, mc.chromatic.exact && ! agrees);
        return out;
    }

    auto ScanRecord::to_json() const -> json
    {
        json j{
            { "graph", matchgraph::to_json(graph) },
            { "r", r },
            { "connected", connected },
            { "complete", complete },
            { "chi", chi },
            { "ex", ex },
            { "formula", graph.edge_count() - ex },
            { "equality", equality },
            { "violation", violation() },
            { "known_inequality", known_inequality },
            { "certificates", certificates }
        };
        if (! error.empty())
            j["error"] = error;
        return j;
    }

    auto scan_graph(const Graph & g, int r, const HarnessOptions & options) -> ScanRecord
    {
        ScanRecord rec;
        rec.graph = g;
        rec.r = r;
        rec.connected = is_connected(g);
        try {
            auto mc = certify_matching_chromatic(g, r, options);
            rec.chi = mc.chromatic.chi;
            rec.ex = mc.turan.ex_value;
            rec.complete = mc.chromatic.exact && mc.turan.exact;
            rec.equality = rec.chi == g.edge_count() - rec.ex;
            rec.known_inequality = rec.complete && ! rec.equality && ! rec.connected;
            rec.certificates = {
                { "chromatic", to_json(mc.chromatic) },
                { "turan", to_json(mc.turan) }
            };
            if (! mc.chromatic.exact)
                rec.error = "chromatic number only bounded: [" + std::to_string(mc.chromatic.lower) + ", "
                    + std::to_string(mc.chromatic.upper) + "]";
            else if (! mc.turan.exact)
                rec.error = "Turan number only bounded: [" + std::to_string(mc.turan.ex_value) + ", "
                    + std::to_string(mc.turan.upper) + "]";
        }
        catch (const std::exception & e) {
            rec.error = e.what();
        }
        return rec;
    }

    auto scan_graphs(const ScanOptions & scan) -> vector<Graph>
    {
        vector<Graph> graphs;
        for (int n = std::max(scan.min_n, 1) ; n <= scan.max_n ; ++n)
            for (auto & g : scan.include_disconnected ? all_graphs(n) : connected_graphs(n))
                graphs.push_back(std::move(g));
        return graphs;
    }

    auto run_scan(const vector<Graph> & graphs, int r, const HarnessOptions & options) -> ScanSummary
    {
        ScanSummary summary;
        summary.graphs = static_cast<int>(graphs.size());
        summary.records.resize(graphs.size());

        unsigned threads = options.threads > 0 ? static_cast<unsigned>(options.threads)
            : std::max(1u, std::thread::hardware_concurrency());
        threads = std::min<unsigned>(threads, std::max<std::size_t>(graphs.size(), 1));

        std::atomic<std::size_t> next{ 0 };
        auto worker = [&] {
            for (std::size_t i ; (i = next++) < graphs.size() ; )
                summary.records[i] = scan_graph(graphs[i], r, options);
        };
        vector<std::thread> pool;
        for (unsigned t = 1 ; t < threads ; ++t)
            pool.emplace_back(worker);
        worker();
        for (auto & t : pool)
            t.join();

        for (auto & rec : summary.records) {
            summary.complete += rec.complete;
            summary.violations += rec.violation();
            summary.known_inequalities += rec.known_inequality;
            summary.failures += ! rec.complete;
        }
        return summary;
    }

    auto cmd_scan(const ScanOptions & scan_in, int r, const HarnessOptions & options, std::ostream & records) -> CommandResult
    {
        if (r < 1)
            throw std::invalid_argument("r must be positive");
        Stopwatch clock;
        auto scan = scan_in;
        if (scan.min_n < 0)
            scan.min_n = 2 * r;
        auto summary = run_scan(scan_graphs(scan), r, options);

        json violating = json::array(), failed = json::array();
        for (auto & rec : summary.records) {
            records << rec.to_json().dump() << '\n';
            if (rec.violation())
                violating.push_back(to_json(rec.graph));
            if (! rec.complete)
                failed.push_back({ { "graph", to_json(rec.graph) }, { "error", rec.error } });
        }

        CommandResult out;
        auto & rep = out.report;
        rep.command = "scan";
        rep.inputs = {
            { "r", r }, { "min_n", scan.min_n }, { "max_n", scan.max_n },
            { "include_disconnected", scan.include_disconnected }, { "max_nodes", options.max_nodes }
        };
        rep.results = {
            { "graphs", summary.graphs },
            { "complete", summary.complete },
            { "violations", summary.violations },
            { "known_inequalities", summary.known_inequalities },
            { "failures", summary.failures },
            { "violating_graphs", violating },
            { "failed_graphs", failed },
            { "exactness", to_string(summary.failures ? Exactness::interval : Exactness::certified) }
        };
        records << json{ { "summary", rep.results } }.dump() << '\n';
        rep.seconds = clock.seconds();
        out.exit_code = exit_for(summary.failures == 0, summary.violations > 0);
        return out;
    }

    auto cmd_analyze(const Graph & g, int r, const HarnessOptions & options) -> CommandResult
    {
        if (r < 1)
            throw std::invalid_argument("r must be positive");
        Stopwatch clock;
        CommandResult out;
        auto & rep = out.report;
        rep.command = "analyze";
        rep.inputs = {
            { "graph", to_json(g) }, { "graph_hash", graph_hash(g) }, { "r", r },
            { "ordering", options.ordering.name() }, { "max_nodes", options.max_nodes }
        };

        json audits = json::object();
        bool exact = true;

        int nu = matching_number(g);
        json matching{ { "nu", nu }, { "maximum_matching", max_matching(g).edges } };
        if (g.vertex_count() <= default_tutte_berge_bound) {
            auto tb = tutte_berge(g);
            matching["tutte_berge"] = to_json(tb);
            audits["tutte_berge"] = tb.nu == nu;
        }
        rep.results["matching"] = matching;

        auto mc = certify_matching_chromatic(g, r, options);
        int m = g.edge_count();
        exact = exact && mc.chromatic.exact && mc.turan.exact;
        rep.results["turan"] = to_json(mc.turan);
        auto star = star_lower_bound(g, r);
        rep.results["star_bound"] = { { "value", star.value }, { "centres", star.centres } };
        rep.results["matching_graph"] = { { "vertices", mc.kneser.graph.vertex_count() }, { "edges", mc.kneser.graph.edge_count() } };
        rep.results["chromatic"] = to_json(mc.chromatic);
        rep.results["formula"] = m - mc.turan.ex_value;
        if (mc.chromatic.exact && mc.turan.exact) {
            audits["chi_equals_formula"] = mc.chromatic.chi == m - mc.turan.ex_value;
            rep.results["connected"] = is_connected(g);
        }

        auto sigma = resolve_ordering(g, options.ordering);
        json alternation{ { "ordering", sigma.perm() } };
        auto & h = mc.kneser.source;
        try {
            AlternationOptions ao{ options.max_nodes };
            int a = alt_sigma(h, sigma, ao), s = salt_sigma(h, sigma, ao);
            alternation["alt"] = a;
            alternation["salt"] = s;
            alternation["alt_bound"] = m - a;
            alternation["salt_bound"] = m + 1 - s;
            if (h.hyperedge_count() > 0) {
                audits["alt_bound_below_chi"] = m - a <= mc.chromatic.upper;
                audits["salt_bound_below_chi"] = m + 1 - s <= mc.chromatic.upper;
            }

            TuranAltOptions to{ options.max_nodes };
            int ea = ex_alt_sigma(g, r, sigma, to), es = ex_salt_sigma(g, r, sigma, to);
            alternation["ex_alt"] = ea;
            alternation["ex_salt"] = es;
            audits["alt_equals_ex_alt"] = a == ea;
            audits["salt_equals_ex_salt"] = s == es;
            if (mc.turan.exact)
                audits["sandwich"] = mc.turan.ex_value <= ea && ea <= 2 * mc.turan.ex_value;
        }
        catch (const CapacityError & e) {
            alternation["error"] = e.what();
            exact = false;
        }
        rep.results["alternation"] = alternation;

        auto grk2 = grk2_conditions(g, r);
        rep.results["grk2"] = to_json(grk2);
        if (grk2.applicable && mc.chromatic.exact)
            audits["grk2_formula"] = mc.chromatic.chi == grk2.formula_value;

        bool violated = false;
        for (auto & [key, value] : audits.items())
            if (! value.get<bool>() && ! (key == "chi_equals_formula" && ! is_connected(g)))
                violated = true;
        rep.results["audits"] = audits;
        rep.results["exactness"] = to_string(exact ? Exactness::certified : Exactness::interval);
        rep.seconds = clock.seconds();
        out.exit_code = exit_for(exact, violated);
        return out;
    }
}
