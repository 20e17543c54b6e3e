#include <matchgraph/c4.hh>
#include <matchgraph/errors.hh>
#include <matchgraph/graph_io.hh>
#include <matchgraph/harness.hh>
#include <matchgraph/hypergraph.hh>
#include <matchgraph/report.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

using namespace matchgraph;

namespace
{
    struct Common
    {
        int r = 2;
        std::string ordering = "euler";
        std::uint64_t max_nodes = default_max_nodes;
        std::string out;
        std::string format = "json";
        int threads = 0;

        auto harness() const -> HarnessOptions
        {
            HarnessOptions h;
            h.max_nodes = max_nodes;
            h.ordering = parse_ordering_choice(ordering);
            h.threads = threads;
            return h;
        }
    };

    auto add_common(CLI::App * cmd, Common & c, bool with_r = true) -> void
    {
        if (with_r)
            cmd->add_option("--r", c.r, "matching size r")->check(CLI::PositiveNumber);
        cmd->add_option("--max-nodes", c.max_nodes, "search node budget per solver call");
        cmd->add_option("--out", c.out, "write output to this file instead of stdout");
        cmd->add_option("--format", c.format, "json or table")->check(CLI::IsMember({ "json", "table" }));
    }

    // stdout unless a path was given
    auto sink(const std::string & path) -> std::unique_ptr<std::ostream, void (*)(std::ostream *)>
    {
        if (path.empty())
            return { &std::cout, [] (std::ostream *) { } };
        auto file = new std::ofstream(path);
        if (! *file) {
            delete file;
            throw std::runtime_error("cannot write " + path);
        }
        return { file, [] (std::ostream * p) { delete p; } };
    }

    auto emit(const CommandResult & result, const Common & c) -> int
    {
        auto out = sink(c.out);
        if (c.format == "table")
            *out << result.report.table();
        else
            *out << result.report.dump() << '\n';
        return result.exit_code;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{ "Chromatic numbers of matching graphs, Turan numbers and alternation bounds" };
    app.require_subcommand(1);
    Common common;

    int n = 0, m = 0;
    auto schrijver = app.add_subcommand("schrijver", "chi(KG(C_n, rK_2)) against n - 2r + 2");
    schrijver->add_option("--n", n, "cycle length")->required();
    add_common(schrijver, common);

    auto permutation = app.add_subcommand("permutation", "chi(KG(K_{m,n}, rK_2)) against m(n - r + 1)");
    permutation->add_option("--m", m, "larger side")->required();
    permutation->add_option("--n", n, "smaller side")->required();
    add_common(permutation, common);

    ScanOptions scan_opts;
    std::string scan_input;
    auto scan = app.add_subcommand("scan", "check chi(KG(G, rK_2)) = |E| - ex(G, rK_2) over small graphs");
    scan->add_option("--max-n", scan_opts.max_n, "largest vertex count")->check(CLI::Range(1, 9));
    scan->add_option("--min-n", scan_opts.min_n, "smallest vertex count (default 2r)");
    scan->add_flag("--include-disconnected", scan_opts.include_disconnected, "also scan disconnected graphs");
    scan->add_option("--input", scan_input, "scan the single graph in this file instead of enumerating");
    scan->add_option("--threads", common.threads, "worker threads (0 = all cores)");
    add_common(scan, common);

    std::string graph_file;
    auto analyze = app.add_subcommand("analyze", "full report for one graph");
    analyze->add_option("graph", graph_file, "graph file")->required()->check(CLI::ExistingFile);
    analyze->add_option("--ordering", common.ordering, "euler, identity or file:PATH");
    add_common(analyze, common);

    bool matching_graph_export = false;
    auto dimacs = app.add_subcommand("dimacs", "export a graph, or its matching graph with --matching-graph, as DIMACS");
    dimacs->add_option("graph", graph_file, "graph file")->required()->check(CLI::ExistingFile);
    dimacs->add_flag("--matching-graph", matching_graph_export, "export KG(G, rK_2) instead of G");
    dimacs->add_option("--r", common.r, "matching size r")->check(CLI::PositiveNumber);
    dimacs->add_option("--out", common.out, "output file");

    std::string trace_file;
    auto c4 = app.add_subcommand("c4", "search for a monogamous C4-decomposition of K_{m,n}");
    c4->add_option("--m", m, "left side")->required();
    c4->add_option("--n", n, "right side")->required();
    c4->add_option("--trace", trace_file, "write the search trace here");
    add_common(c4, common, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*schrijver)
            return emit(cmd_schrijver(n, common.r, common.harness()), common);

        if (*permutation)
            return emit(cmd_permutation(m, n, common.r, common.harness()), common);

        if (*scan) {
            auto records = sink(common.out);
            CommandResult result;
            if (! scan_input.empty()) {
                auto g = read_graph_file(scan_input);
                auto summary = run_scan({ g }, common.r, common.harness());
                auto & rec = summary.records.front();
                *records << rec.to_json().dump() << '\n';
                result.exit_code = rec.violation() ? exit_violation : rec.complete ? exit_certified : exit_interval;
                if (rec.known_inequality)
                    std::cerr << "known inequality: graph is disconnected\n";
                return result.exit_code;
            }
            result = cmd_scan(scan_opts, common.r, common.harness(), *records);
            if (common.format == "table")
                std::cerr << result.report.table();
            return result.exit_code;
        }

        if (*analyze)
            return emit(cmd_analyze(read_graph_file(graph_file), common.r, common.harness()), common);

        if (*dimacs) {
            auto g = read_graph_file(graph_file);
            auto out = sink(common.out);
            if (matching_graph_export)
                write_dimacs(*out, matching_graph(g, common.r).graph, "matching graph, r = " + std::to_string(common.r));
            else
                write_dimacs(*out, g);
            return 0;
        }

        if (*c4) {
            C4Options options;
            options.max_nodes = common.max_nodes == default_max_nodes ? C4Options{}.max_nodes : common.max_nodes;
            options.record_trace = ! trace_file.empty();
            auto result = c4_monogamous(m, n, options);
            Report rep;
            rep.command = "c4";
            rep.inputs = { { "m", m }, { "n", n }, { "max_nodes", options.max_nodes } };
            rep.results = { { "status", to_string(result.status) }, { "nodes", result.nodes } };
            if (result.decomposition) {
                rep.results["decomposition"] = to_json(*result.decomposition);
                auto check = verify_c4_decomposition(*result.decomposition);
                rep.results["verified"] = check.ok();
            }
            if (! trace_file.empty()) {
                auto trace = sink(trace_file);
                for (auto & line : result.trace)
                    *trace << line << '\n';
                rep.results["trace_truncated"] = result.trace_truncated;
            }
            CommandResult cr{ rep, result.status == C4Status::indeterminate ? exit_interval : exit_certified };
            return emit(cr, common);
        }
    }
    catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
