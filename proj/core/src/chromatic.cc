#include <matchgraph/chromatic.hh>
#include <matchgraph/errors.hh>
#include <matchgraph/matching.hh>

#include <algorithm>
#include <numeric>
#include <stdexcept>

using std::vector;

namespace matchgraph
{
    auto witness_name(const LowerWitness & w) -> std::string
    {
        struct Visitor
        {
            auto operator() (const CliqueWitness &) const -> std::string { return "clique"; }
            auto operator() (const ExhaustiveWitness &) const -> std::string { return "exhaustive"; }
            auto operator() (const AlternationWitness & a) const -> std::string { return "alternation-" + a.kind; }
        };
        return std::visit(Visitor{}, w);
    }

    auto is_proper(const Graph & g, std::span<const int> coloring) -> bool
    {
        if (static_cast<int>(coloring.size()) != g.vertex_count())
            throw std::invalid_argument("coloring does not cover every vertex");
        if (std::any_of(coloring.begin(), coloring.end(), [] (int c) { return c < 0; }))
            throw std::invalid_argument("coloring leaves a vertex uncolored");
        for (auto & e : g.edges())
            if (coloring[e.u] == coloring[e.v])
                return false;
        return true;
    }

    auto color_count(std::span<const int> coloring) -> int
    {
        vector<int> sorted(coloring.begin(), coloring.end());
        std::sort(sorted.begin(), sorted.end());
        return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
    }

    auto canonical_coloring(std::span<const int> coloring) -> vector<int>
    {
        vector<int> result(coloring.size());
        vector<std::pair<int, int>> seen;
        for (std::size_t v = 0 ; v < coloring.size() ; ++v) {
            auto it = std::find_if(seen.begin(), seen.end(), [&] (auto & p) { return p.first == coloring[v]; });
            if (it == seen.end()) {
                seen.emplace_back(coloring[v], static_cast<int>(seen.size()));
                result[v] = seen.back().second;
            }
            else
                result[v] = it->second;
        }
        return result;
    }

    auto greedy_clique(const Graph & g) -> vector<int>
    {
        vector<int> order(g.vertex_count());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });

        vector<int> best;
        for (int seed : order) {
            if (g.degree(seed) + 1 <= static_cast<int>(best.size()))
                break;
            vector<int> clique{ seed };
            for (int v : order)
                if (v != seed && std::all_of(clique.begin(), clique.end(), [&] (int c) { return g.adjacent(c, v); }))
                    clique.push_back(v);
            if (clique.size() > best.size())
                best = std::move(clique);
        }
        std::sort(best.begin(), best.end());
        return best;
    }

    namespace
    {
        /// DSATUR search for a proper k-coloring.
        class KColoringSearch
        {
            public:
                enum class Outcome { colorable, not_colorable, aborted };

                KColoringSearch(const Graph & g, int k, const vector<int> & clique, std::uint64_t budget) :
                    _g(g),
                    _n(g.vertex_count()),
                    _k(k),
                    _budget(budget),
                    _color(_n, -1),
                    _forbid(static_cast<std::size_t>(_n) * k, 0),
                    _sat(_n, 0),
                    _clique(clique)
                {
                }

                auto run() -> Outcome
                {
                    if (static_cast<int>(_clique.size()) > _k)
                        return Outcome::not_colorable;
                    int coloured = 0;
                    for (int i = 0 ; i < static_cast<int>(_clique.size()) ; ++i) {
                        if (! assign(_clique[i], i)) {
                            return Outcome::not_colorable;
                        }
                        ++coloured;
                    }
                    bool found = search(coloured, static_cast<int>(_clique.size()) - 1);
                    if (_aborted)
                        return Outcome::aborted;
                    return found ? Outcome::colorable : Outcome::not_colorable;
                }

                auto coloring() const -> const vector<int> & { return _solution; }
                auto nodes() const -> std::uint64_t { return _nodes; }

            private:
                const Graph & _g;
                int _n, _k;
                std::uint64_t _budget, _nodes = 0;
                bool _aborted = false;
                vector<int> _color;
                vector<int> _forbid;
                vector<int> _sat;
                vector<int> _clique;
                vector<int> _solution;

                auto forbid(int v, int c) -> int & { return _forbid[static_cast<std::size_t>(v) * _k + c]; }

                // Colors v with c; returns false if some uncoloured neighbour has no color left.
                // The caller must call unassign even when false is returned.
                auto assign(int v, int c) -> bool
                {
                    _color[v] = c;
                    bool ok = true;
                    for (auto & i : _g.incident(v)) {
                        int w = i.neighbour;
                        if (forbid(w, c)++ == 0) {
                            ++_sat[w];
                            if (_color[w] == -1 && _sat[w] == _k)
                                ok = false;
                        }
                    }
                    return ok;
                }

                auto unassign(int v) -> void
                {
                    int c = _color[v];
                    for (auto & i : _g.incident(v))
                        if (--forbid(i.neighbour, c) == 0)
                            --_sat[i.neighbour];
                    _color[v] = -1;
                }

                auto select() const -> int
                {
                    int best = -1;
                    for (int v = 0 ; v < _n ; ++v) {
                        if (_color[v] != -1)
                            continue;
                        if (best == -1 || _sat[v] > _sat[best] || (_sat[v] == _sat[best] && _g.degree(v) > _g.degree(best)))
                            best = v;
                    }
                    return best;
                }

                auto search(int coloured, int max_used) -> bool
                {
                    if (coloured == _n) {
                        _solution = _color;
                        return true;
                    }
                    if (++_nodes > _budget) {
                        _aborted = true;
                        return false;
                    }

                    int v = select();
                    int limit = std::min(_k - 1, max_used + 1);
                    for (int c = 0 ; c <= limit ; ++c) {
                        if (forbid(v, c) != 0)
                            continue;
                        bool ok = assign(v, c);
                        if (ok && search(coloured + 1, std::max(max_used, c))) {
                            unassign(v);
                            return true;
                        }
                        unassign(v);
                        if (_aborted)
                            return false;
                    }
                    return false;
                }
        };

        auto dsatur_greedy(const Graph & g) -> vector<int>
        {
            int n = g.vertex_count();
            vector<int> color(n, -1);
            vector<vector<bool>> seen(n);
            vector<int> sat(n, 0);
            for (int step = 0 ; step < n ; ++step) {
                int v = -1;
                for (int u = 0 ; u < n ; ++u)
                    if (color[u] == -1 && (v == -1 || sat[u] > sat[v] || (sat[u] == sat[v] && g.degree(u) > g.degree(v))))
                        v = u;
                int c = 0;
                while (c < static_cast<int>(seen[v].size()) && seen[v][c])
                    ++c;
                color[v] = c;
                for (auto & i : g.incident(v)) {
                    auto & s = seen[i.neighbour];
                    if (static_cast<int>(s.size()) <= c)
                        s.resize(c + 1, false);
                    if (! s[c]) {
                        s[c] = true;
                        ++sat[i.neighbour];
                    }
                }
            }
            return color;
        }
    }

    auto chromatic_number(const Graph & g, const ChromaticOptions & options) -> ChromaticCertificate
    {
        ChromaticCertificate cert;
        if (g.vertex_count() == 0) {
            cert.exact = true;
            cert.lower_witness = CliqueWitness{};
            return cert;
        }

        auto clique = greedy_clique(g);
        cert.lower = static_cast<int>(clique.size());
        cert.lower_witness = CliqueWitness{ clique };
        if (options.lower_hint && options.lower_hint->bound() > cert.lower) {
            cert.lower = options.lower_hint->bound();
            cert.lower_witness = *options.lower_hint;
        }

        cert.coloring = canonical_coloring(dsatur_greedy(g));
        if (options.upper_hint && is_proper(g, *options.upper_hint)
                && color_count(*options.upper_hint) < color_count(cert.coloring))
            cert.coloring = canonical_coloring(*options.upper_hint);
        cert.upper = color_count(cert.coloring);

        std::uint64_t remaining = options.max_nodes;
        bool aborted = false;
        while (cert.upper > cert.lower) {
            int k = cert.upper - 1;
            KColoringSearch search(g, k, clique, remaining);
            auto outcome = search.run();
            cert.nodes += search.nodes();
            remaining -= std::min(remaining, search.nodes());
            if (outcome == KColoringSearch::Outcome::colorable) {
                cert.coloring = canonical_coloring(search.coloring());
                cert.upper = color_count(cert.coloring);
            }
            else if (outcome == KColoringSearch::Outcome::not_colorable) {
                cert.lower = k + 1;
                cert.lower_witness = ExhaustiveWitness{ k, search.nodes() };
            }
            else {
                aborted = true;
                break;
            }
        }

        cert.exact = ! aborted && cert.lower == cert.upper;
        cert.chi = cert.upper;
        return cert;
    }

    auto is_k_colorable(const Graph & g, int k) -> bool
    {
        if (g.vertex_count() == 0)
            return true;
        if (k <= 0)
            return false;
        KColoringSearch search(g, k, {}, ~std::uint64_t{0});
        return search.run() == KColoringSearch::Outcome::colorable;
    }

    auto coloring_from_extremal(const Graph & g, int r, std::span<const int> extremal) -> vector<int>
    {
        if (r < 1)
            throw std::invalid_argument("r must be at least 1");
        vector<bool> in_extremal(g.edge_count(), false);
        for (int e : extremal) {
            if (e < 0 || e >= g.edge_count())
                throw CertificateError("edge-range", "extremal edge " + std::to_string(e) + " is not an edge of the graph");
            in_extremal[e] = true;
        }

        vector<int> kept;
        for (int e = 0 ; e < g.edge_count() ; ++e)
            if (in_extremal[e])
                kept.push_back(e);
        if (matching_number(spanning_subgraph(g, kept)) >= r)
            throw CertificateError("matching-free", "extremal set contains a matching of size " + std::to_string(r));

        vector<int> rank(g.edge_count(), -1);
        int next = 0;
        for (int e = 0 ; e < g.edge_count() ; ++e)
            if (! in_extremal[e])
                rank[e] = next++;

        vector<int> coloring;
        for (auto & m : enumerate_matchings(g, r)) {
            auto it = std::find_if(m.edges.begin(), m.edges.end(), [&] (int e) { return ! in_extremal[e]; });
            coloring.push_back(rank[*it]);
        }
        return coloring;
    }
}
