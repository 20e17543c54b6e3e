#pragma once

#include <matchgraph/c4.hh>
#include <matchgraph/chromatic.hh>
#include <matchgraph/graph.hh>
#include <matchgraph/matching.hh>
#include <matchgraph/orderings.hh>
#include <matchgraph/turan.hh>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

namespace matchgraph
{
    using json = nlohmann::json;

    inline constexpr int report_schema_version = 1;

    enum class Exactness
    {
        certified,
        interval,
        heuristic
    };

    auto to_string(Exactness e) -> std::string;

    /// FNV-1a over the text serialisation, as 16 hex digits.
    auto graph_hash(const Graph & g) -> std::string;
    auto fnv1a(const std::string & bytes) -> std::uint64_t;
    auto hex64(std::uint64_t value) -> std::string;

    auto to_json(const Graph & g) -> json;
    auto graph_from_json(const json & j) -> Graph;
    auto to_json(const LowerWitness & w) -> json;
    auto to_json(const ChromaticCertificate & c) -> json;
    auto to_json(const TuranCertificate & c) -> json;
    auto to_json(const TutteBergeWitness & w) -> json;
    auto to_json(const C4Decomposition & d) -> json;
    auto c4_from_json(const json & j) -> C4Decomposition;
    auto to_json(const LocallyEulerianCertificate & c) -> json;
    auto to_json(const Grk2Report & r) -> json;

    /**
     * A command's output. Keys serialise in sorted order, so the same inputs
     * give byte-identical JSON apart from the timing field, which the digest
     * leaves out.
     */
    struct Report
    {
        std::string command;
        json inputs = json::object();
        json results = json::object();
        double seconds = 0.0;

        auto digest() const -> std::string;
        auto to_json() const -> json;
        auto dump() const -> std::string;
        /// Two-column text rendering of the scalar inputs and results.
        auto table() const -> std::string;
    };
}
