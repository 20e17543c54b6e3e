#include <matchgraph/hypergraph.hh>
#include <matchgraph/matching.hh>
#include <matchgraph/errors.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

using std::vector;

namespace matchgraph
{
    Hypergraph::Hypergraph(int ground_n, vector<vector<int>> hyperedges) :
        _ground_n(ground_n),
        _hyperedges(std::move(hyperedges))
    {
        if (ground_n < 0)
            throw std::invalid_argument("negative ground set size");

        std::set<vector<int>> seen;
        for (auto & h : _hyperedges) {
            if (h.empty())
                throw std::invalid_argument("empty hyperedge");
            std::sort(h.begin(), h.end());
            if (std::adjacent_find(h.begin(), h.end()) != h.end())
                throw std::invalid_argument("hyperedge repeats an element");
            if (h.front() < 0 || h.back() >= ground_n)
                throw std::invalid_argument("hyperedge element out of range");
            if (! seen.insert(h).second)
                throw std::invalid_argument("duplicate hyperedge");
        }

        if (ground_n <= 64)
            for (auto & h : _hyperedges) {
                Mask m = 0;
                for (int x : h)
                    m |= bit(x);
                _masks.push_back(m);
            }
    }

    auto Hypergraph::masks() const -> const vector<Mask> &
    {
        if (_ground_n > 64)
            throw CapacityError("hyperedge masks need a ground set of at most 64 elements");
        return _masks;
    }

    auto Hypergraph::contains_hyperedge(Mask elements) const -> bool
    {
        for (auto m : masks())
            if ((m & ~elements) == 0)
                return true;
        return false;
    }

    auto general_kneser(const Hypergraph & h) -> KneserGraph
    {
        int k = h.hyperedge_count();
        vector<Edge> edges;
        if (h.ground_size() <= 64) {
            auto & m = h.masks();
            for (int i = 0 ; i < k ; ++i)
                for (int j = i + 1 ; j < k ; ++j)
                    if ((m[i] & m[j]) == 0)
                        edges.push_back({ i, j });
        }
        else {
            for (int i = 0 ; i < k ; ++i)
                for (int j = i + 1 ; j < k ; ++j) {
                    auto & a = h.hyperedge(i);
                    auto & b = h.hyperedge(j);
                    vector<int> common;
                    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
                    if (common.empty())
                        edges.push_back({ i, j });
                }
        }
        return { Graph(k, std::move(edges)), h };
    }

    auto matching_hypergraph(const Graph & g, int r) -> Hypergraph
    {
        vector<vector<int>> hyperedges;
        for (auto & m : enumerate_matchings(g, r))
            hyperedges.push_back(m.edges);
        return Hypergraph(g.edge_count(), std::move(hyperedges));
    }

    auto matching_graph(const Graph & g, int r) -> KneserGraph
    {
        return general_kneser(matching_hypergraph(g, r));
    }

    namespace
    {
        auto without_isolated(const Graph & g) -> Graph
        {
            vector<int> rename(g.vertex_count(), -1);
            int next = 0;
            for (int v = 0 ; v < g.vertex_count() ; ++v)
                if (g.degree(v) > 0)
                    rename[v] = next++;
            vector<Edge> edges;
            for (auto & e : g.edges())
                edges.push_back({ rename[e.u], rename[e.v] });
            return Graph(next, std::move(edges));
        }

        auto binomial(std::size_t n, std::size_t k) -> long double
        {
            long double r = 1;
            for (std::size_t i = 1 ; i <= k ; ++i)
                r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
            return r;
        }
    }

    auto f_subgraph_hypergraph(const Graph & g, const Graph & pattern, std::size_t cap) -> Hypergraph
    {
        int k = pattern.edge_count();
        if (k == 0)
            throw std::invalid_argument("pattern must have at least one edge");
        if (binomial(g.edge_count(), k) > static_cast<long double>(cap))
            throw CapacityError("f_subgraph_hypergraph: more than " + std::to_string(cap) + " candidate edge subsets");

        auto target = without_isolated(pattern);
        vector<vector<int>> hyperedges;
        vector<int> chosen;
        std::function<void (int)> choose = [&] (int from) {
            if (static_cast<int>(chosen.size()) == k) {
                vector<Edge> es;
                for (int e : chosen)
                    es.push_back(g.edge(e));
                std::map<int, int> rename;
                for (auto & e : es)
                    for (int x : { e.u, e.v })
                        rename.emplace(x, 0);
                if (static_cast<int>(rename.size()) != target.vertex_count())
                    return;
                int next = 0;
                for (auto & [_, id] : rename)
                    id = next++;
                for (auto & e : es)
                    e = { rename[e.u], rename[e.v] };
                if (isomorphic(Graph(next, std::move(es)), target))
                    hyperedges.push_back(chosen);
                return;
            }
            for (int e = from ; e + (k - static_cast<int>(chosen.size())) <= g.edge_count() ; ++e) {
                chosen.push_back(e);
                choose(e + 1);
                chosen.pop_back();
            }
        };
        choose(0);
        return Hypergraph(g.edge_count(), std::move(hyperedges));
    }
}
