#include <matchgraph/enumerate.hh>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

using std::vector;

namespace matchgraph
{
    namespace
    {
        auto pair_bit(int i, int j, int n) -> int
        {
            // position of (i, j), i < j, in lexicographic order of pairs
            return i * n - i * (i + 1) / 2 + (j - i - 1);
        }

        auto code_of(const Graph & g, const vector<int> & label) -> std::uint64_t
        {
            int n = g.vertex_count();
            std::uint64_t code = 0;
            for (auto & e : g.edges()) {
                int a = label[e.u], b = label[e.v];
                if (a > b)
                    std::swap(a, b);
                // the highest bit belongs to the first pair, so smaller codes put edges late
                code |= std::uint64_t{1} << (n * (n - 1) / 2 - 1 - pair_bit(a, b, n));
            }
            return code;
        }
    }

    auto canonical_form(const Graph & g) -> CanonicalGraph
    {
        int n = g.vertex_count();
        if (n > 11)
            throw std::invalid_argument("canonical_form supports at most 11 vertices");

        vector<std::pair<int, vector<int>>> invariant(n);
        for (int v = 0 ; v < n ; ++v) {
            invariant[v].first = -g.degree(v);
            for (auto & inc : g.incident(v))
                invariant[v].second.push_back(-g.degree(inc.neighbour));
            std::sort(invariant[v].second.begin(), invariant[v].second.end());
        }

        vector<int> by_class(n);
        std::iota(by_class.begin(), by_class.end(), 0);
        std::stable_sort(by_class.begin(), by_class.end(), [&] (int a, int b) { return invariant[a] < invariant[b]; });

        // Positions [start, end) of each class within by_class.
        vector<std::pair<int, int>> classes;
        for (int i = 0 ; i < n ; ) {
            int j = i;
            while (j < n && invariant[by_class[j]] == invariant[by_class[i]])
                ++j;
            classes.emplace_back(i, j);
            i = j;
        }

        // Odometer over permutations within each class.
        vector<int> slots = by_class;
        for (auto [s, e] : classes)
            std::sort(slots.begin() + s, slots.begin() + e);

        vector<int> label(n), best_label;
        std::uint64_t best = ~std::uint64_t{0};
        bool first = true;
        while (true) {
            for (int pos = 0 ; pos < n ; ++pos)
                label[slots[pos]] = pos;
            auto code = code_of(g, label);
            if (first || code < best) {
                best = code;
                best_label = label;
                first = false;
            }
            std::size_t c = 0;
            for ( ; c < classes.size() ; ++c) {
                auto [s, e] = classes[c];
                if (std::next_permutation(slots.begin() + s, slots.begin() + e))
                    break;
            }
            if (c == classes.size())
                break;
        }

        vector<Edge> edges;
        for (auto & e : g.edges())
            edges.push_back(Edge{ std::min(best_label[e.u], best_label[e.v]), std::max(best_label[e.u], best_label[e.v]) });
        std::sort(edges.begin(), edges.end());
        return CanonicalGraph{ Graph(n, std::move(edges)), best };
    }

    auto all_graphs(int n) -> vector<Graph>
    {
        if (n < 0)
            throw std::invalid_argument("vertex count must be non-negative");
        vector<Graph> result;
        std::map<std::uint64_t, Graph> level;
        auto empty = canonical_form(Graph(n, {}));
        level.emplace(empty.code, empty.graph);

        while (! level.empty()) {
            std::map<std::uint64_t, Graph> next;
            for (auto & [code, g] : level) {
                result.push_back(g);
                for (int u = 0 ; u < n ; ++u)
                    for (int v = u + 1 ; v < n ; ++v) {
                        if (g.adjacent(u, v))
                            continue;
                        auto edges = g.edges();
                        edges.push_back(Edge{ u, v });
                        auto canon = canonical_form(Graph(n, std::move(edges)));
                        next.try_emplace(canon.code, std::move(canon.graph));
                    }
            }
            level = std::move(next);
        }
        return result;
    }

    auto connected_graphs(int n) -> vector<Graph>
    {
        vector<Graph> result;
        for (auto & g : all_graphs(n))
            if (n > 0 && is_connected(g))
                result.push_back(g);
        return result;
    }

    auto connected_graphs_between(int min_n, int max_n) -> vector<Graph>
    {
        vector<Graph> result;
        for (int n = std::max(min_n, 1) ; n <= max_n ; ++n)
            for (auto & g : connected_graphs(n))
                result.push_back(std::move(g));
        return result;
    }
}
