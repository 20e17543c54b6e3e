#include <matchgraph/matching.hh>
#include <matchgraph/errors.hh>

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>
#include <stdexcept>

using std::vector;

namespace matchgraph
{
    auto is_matching(const Graph & g, const vector<int> & edges) -> bool
    {
        vector<bool> used(g.vertex_count(), false);
        for (int e : edges) {
            if (e < 0 || e >= g.edge_count())
                return false;
            auto & [u, v] = g.edge(e);
            if (used[u] || used[v])
                return false;
            used[u] = used[v] = true;
        }
        return true;
    }

    namespace
    {
        class Blossom
        {
            public:
                explicit Blossom(const Graph & g) :
                    _g(g),
                    _n(g.vertex_count()),
                    _match(_n, -1),
                    _parent(_n),
                    _base(_n),
                    _used(_n),
                    _blossom(_n)
                {
                }

                auto run() -> vector<int>
                {
                    // Greedy start keeps the number of augmenting searches small.
                    for (auto & e : _g.edges())
                        if (_match[e.u] == -1 && _match[e.v] == -1) {
                            _match[e.u] = e.v;
                            _match[e.v] = e.u;
                        }

                    for (int v = 0 ; v < _n ; ++v)
                        if (_match[v] == -1) {
                            int end = find_path(v);
                            while (end != -1) {
                                int pv = _parent[end], ppv = _match[pv];
                                _match[end] = pv;
                                _match[pv] = end;
                                end = ppv;
                            }
                        }
                    return _match;
                }

            private:
                const Graph & _g;
                int _n;
                vector<int> _match, _parent, _base;
                vector<bool> _used, _blossom;

                auto lca(int a, int b) -> int
                {
                    vector<bool> seen(_n, false);
                    while (true) {
                        a = _base[a];
                        seen[a] = true;
                        if (_match[a] == -1)
                            break;
                        a = _parent[_match[a]];
                    }
                    while (true) {
                        b = _base[b];
                        if (seen[b])
                            return b;
                        b = _parent[_match[b]];
                    }
                }

                auto mark_path(int v, int b, int child) -> void
                {
                    while (_base[v] != b) {
                        _blossom[_base[v]] = _blossom[_base[_match[v]]] = true;
                        _parent[v] = child;
                        child = _match[v];
                        v = _parent[_match[v]];
                    }
                }

                auto find_path(int root) -> int
                {
                    std::fill(_used.begin(), _used.end(), false);
                    std::fill(_parent.begin(), _parent.end(), -1);
                    for (int i = 0 ; i < _n ; ++i)
                        _base[i] = i;

                    _used[root] = true;
                    std::queue<int> q;
                    q.push(root);
                    while (! q.empty()) {
                        int v = q.front();
                        q.pop();
                        for (auto & inc : _g.incident(v)) {
                            int to = inc.neighbour;
                            if (_base[v] == _base[to] || _match[v] == to)
                                continue;
                            if (to == root || (_match[to] != -1 && _parent[_match[to]] != -1)) {
                                int cur = lca(v, to);
                                std::fill(_blossom.begin(), _blossom.end(), false);
                                mark_path(v, cur, to);
                                mark_path(to, cur, v);
                                for (int i = 0 ; i < _n ; ++i)
                                    if (_blossom[_base[i]]) {
                                        _base[i] = cur;
                                        if (! _used[i]) {
                                            _used[i] = true;
                                            q.push(i);
                                        }
                                    }
                            }
                            else if (_parent[to] == -1) {
                                _parent[to] = v;
                                if (_match[to] == -1)
                                    return to;
                                _used[_match[to]] = true;
                                q.push(_match[to]);
                            }
                        }
                    }
                    return -1;
                }
        };
    }

    auto max_matching(const Graph & g) -> Matching
    {
        auto mate = Blossom(g).run();
        Matching result;
        for (int v = 0 ; v < g.vertex_count() ; ++v)
            if (mate[v] > v)
                result.edges.push_back(*g.edge_index(v, mate[v]));
        std::sort(result.edges.begin(), result.edges.end());
        return result;
    }

    auto matching_number(const Graph & g) -> int
    {
        return max_matching(g).size();
    }

    namespace
    {
        auto vertices_of(const Graph & g, Mask edges) -> int
        {
            Mask seen = 0;
            int count = 0;
            for (Mask m = edges ; m ; m &= m - 1) {
                auto & [u, v] = g.edge(std::countr_zero(m));
                for (int x : { u, v }) {
                    // vertices past 63 are counted once per incidence, which only overestimates
                    if (x < 64) {
                        if (! (seen & bit(x))) {
                            seen |= bit(x);
                            ++count;
                        }
                    }
                    else
                        ++count;
                }
            }
            return count;
        }

        auto has_k(const Graph & g, Mask edges, int k) -> bool
        {
            if (k <= 0)
                return true;
            if (std::popcount(edges) < k || vertices_of(g, edges) < 2 * k)
                return false;
            int e = std::countr_zero(edges);
            if (has_k(g, edges & ~g.touching_mask(e), k - 1))
                return true;
            return has_k(g, edges & ~bit(e), k);
        }
    }

    auto has_matching_of_size(const Graph & g, Mask edges, int k) -> bool
    {
        if (g.edge_count() > 64)
            throw CapacityError("edge masks need at most 64 edges");
        return has_k(g, edges, k);
    }

    auto matching_number(const Graph & g, Mask edges) -> int
    {
        if (g.edge_count() > 64)
            throw CapacityError("edge masks need at most 64 edges");
        int k = 0;
        while (has_k(g, edges, k + 1))
            ++k;
        return k;
    }

    auto tutte_berge(const Graph & g, int max_vertices) -> TutteBergeWitness
    {
        int n = g.vertex_count();
        if (n > max_vertices || n > 30)
            throw CapacityError("tutte_berge: " + std::to_string(n) + " vertices exceeds the exhaustive bound of "
                    + std::to_string(std::min(max_vertices, 30)));

        vector<std::uint32_t> adj(n, 0);
        for (auto & e : g.edges()) {
            adj[e.u] |= std::uint32_t{1} << e.v;
            adj[e.v] |= std::uint32_t{1} << e.u;
        }
        std::uint32_t all = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;

        auto odd_count = [&] (std::uint32_t removed) {
            std::uint32_t left = all & ~removed;
            int odd = 0;
            while (left) {
                std::uint32_t comp = left & (~left + 1), frontier = comp;
                while (frontier) {
                    int v = std::countr_zero(frontier);
                    frontier &= frontier - 1;
                    std::uint32_t fresh = adj[v] & left & ~comp;
                    comp |= fresh;
                    frontier |= fresh;
                }
                left &= ~comp;
                odd += std::popcount(comp) % 2;
            }
            return odd;
        };

        TutteBergeWitness best;
        best.deficiency = -1;
        for (std::uint64_t s = 0 ; s < (std::uint64_t{1} << n) ; ++s) {
            auto set = static_cast<std::uint32_t>(s);
            int odd = odd_count(set);
            int def = odd - std::popcount(set);
            if (def > best.deficiency) {
                best.deficiency = def;
                best.odd_components = odd;
                best.s.clear();
                for (int v = 0 ; v < n ; ++v)
                    if (set & (std::uint32_t{1} << v))
                        best.s.push_back(v);
            }
        }
        best.nu = (n - best.deficiency) / 2;

        if (best.nu != matching_number(g))
            throw std::logic_error("tutte_berge: witness disagrees with the maximum matching");
        return best;
    }

    auto enumerate_matchings(const Graph & g, int r) -> vector<Matching>
    {
        if (r < 1)
            throw std::invalid_argument("enumerate_matchings: r must be at least 1");

        vector<Matching> result;
        vector<bool> used(g.vertex_count(), false);
        vector<int> current;
        std::function<void (int)> extend = [&] (int from) {
            if (static_cast<int>(current.size()) == r) {
                result.push_back({ current });
                return;
            }
            int still_needed = r - static_cast<int>(current.size());
            for (int e = from ; e + still_needed <= g.edge_count() ; ++e) {
                auto & [u, v] = g.edge(e);
                if (used[u] || used[v])
                    continue;
                used[u] = used[v] = true;
                current.push_back(e);
                extend(e + 1);
                current.pop_back();
                used[u] = used[v] = false;
            }
        };
        extend(0);
        return result;
    }

    auto has_r_matching(const Graph & g, int r) -> bool
    {
        return matching_number(g) >= r;
    }
}
