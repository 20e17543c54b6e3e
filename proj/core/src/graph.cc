#include <matchgraph/graph.hh>
#include <matchgraph/errors.hh>

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

using std::vector;

namespace matchgraph
{
    Graph::Graph(int n, vector<Edge> edges) :
        _n(n),
        _edges(std::move(edges)),
        _incidence(n < 0 ? 0 : n)
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");

        std::set<std::pair<int, int>> seen;
        for (int e = 0 ; e < edge_count() ; ++e) {
            auto & [u, v] = _edges[e];
            if (u > v)
                std::swap(u, v);
            if (u == v)
                throw std::invalid_argument("loop at vertex " + std::to_string(u));
            if (u < 0 || v >= n)
                throw std::invalid_argument("edge " + std::to_string(e) + " has an endpoint out of range");
            if (! seen.emplace(u, v).second)
                throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            _incidence[u].push_back({ v, e });
            _incidence[v].push_back({ u, e });
        }

        for (auto & inc : _incidence)
            std::sort(inc.begin(), inc.end(), [] (const Incidence & a, const Incidence & b) {
                    return a.neighbour != b.neighbour ? a.neighbour < b.neighbour : a.edge < b.edge;
                    });

        if (edge_count() <= 64) {
            _touching.resize(edge_count());
            for (int e = 0 ; e < edge_count() ; ++e) {
                Mask m = 0;
                for (int x : { _edges[e].u, _edges[e].v })
                    for (auto & i : _incidence[x])
                        m |= bit(i.edge);
                _touching[e] = m;
            }
        }
    }

    auto Graph::max_degree() const -> int
    {
        int best = 0;
        for (int v = 0 ; v < _n ; ++v)
            best = std::max(best, degree(v));
        return best;
    }

    auto Graph::edge_index(int u, int v) const -> std::optional<int>
    {
        if (u < 0 || v < 0 || u >= _n || v >= _n)
            return std::nullopt;
        auto & inc = _incidence[u];
        auto it = std::lower_bound(inc.begin(), inc.end(), v, [] (const Incidence & i, int x) { return i.neighbour < x; });
        if (it != inc.end() && it->neighbour == v)
            return it->edge;
        return std::nullopt;
    }

    auto Graph::all_edges_mask() const -> Mask
    {
        if (edge_count() > 64)
            throw CapacityError("edge masks need at most 64 edges");
        return edge_count() == 64 ? ~Mask{0} : bit(edge_count()) - 1;
    }

    auto Graph::touching_mask(int e) const -> Mask
    {
        if (edge_count() > 64)
            throw CapacityError("edge masks need at most 64 edges");
        return _touching[e];
    }

    auto make_cycle(int n) -> Graph
    {
        if (n < 3)
            throw std::invalid_argument("cycle needs at least 3 vertices");
        vector<Edge> edges;
        for (int i = 0 ; i < n ; ++i)
            edges.push_back({ i, (i + 1) % n });
        return Graph(n, std::move(edges));
    }

    auto make_path(int n) -> Graph
    {
        if (n < 1)
            throw std::invalid_argument("path needs at least 1 vertex");
        vector<Edge> edges;
        for (int i = 0 ; i + 1 < n ; ++i)
            edges.push_back({ i, i + 1 });
        return Graph(n, std::move(edges));
    }

    auto make_complete_bipartite(int m, int n) -> Graph
    {
        if (m < 1 || n < 1)
            throw std::invalid_argument("complete bipartite graph needs non-empty sides");
        vector<Edge> edges;
        for (int a = 0 ; a < m ; ++a)
            for (int b = 0 ; b < n ; ++b)
                edges.push_back({ a, m + b });
        return Graph(m + n, std::move(edges));
    }

    auto make_disjoint_matching(int n) -> Graph
    {
        if (n < 1)
            throw std::invalid_argument("matching needs at least 1 edge");
        vector<Edge> edges;
        for (int i = 0 ; i < n ; ++i)
            edges.push_back({ 2 * i, 2 * i + 1 });
        return Graph(2 * n, std::move(edges));
    }

    auto make_complete(int n) -> Graph
    {
        if (n < 1)
            throw std::invalid_argument("complete graph needs at least 1 vertex");
        vector<Edge> edges;
        for (int a = 0 ; a < n ; ++a)
            for (int b = a + 1 ; b < n ; ++b)
                edges.push_back({ a, b });
        return Graph(n, std::move(edges));
    }

    auto make_star(int n) -> Graph
    {
        if (n < 1)
            throw std::invalid_argument("star needs at least 1 leaf");
        vector<Edge> edges;
        for (int i = 1 ; i <= n ; ++i)
            edges.push_back({ 0, i });
        return Graph(n + 1, std::move(edges));
    }

    auto make_petersen() -> Graph
    {
        vector<Edge> edges;
        for (int i = 0 ; i < 5 ; ++i)
            edges.push_back({ i, (i + 1) % 5 });
        for (int i = 0 ; i < 5 ; ++i)
            edges.push_back({ 5 + i, 5 + (i + 2) % 5 });
        for (int i = 0 ; i < 5 ; ++i)
            edges.push_back({ i, i + 5 });
        return Graph(10, std::move(edges));
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        auto edges = a.edges();
        for (auto & e : b.edges())
            edges.push_back({ e.u + a.vertex_count(), e.v + a.vertex_count() });
        return Graph(a.vertex_count() + b.vertex_count(), std::move(edges));
    }

    auto spanning_subgraph(const Graph & g, std::span<const int> edges) -> Graph
    {
        vector<int> sorted(edges.begin(), edges.end());
        std::sort(sorted.begin(), sorted.end());
        vector<Edge> kept;
        for (int e : sorted)
            kept.push_back(g.edge(e));
        return Graph(g.vertex_count(), std::move(kept));
    }

    namespace
    {
        auto components_avoiding(const Graph & g, const vector<bool> & removed) -> vector<int>
        {
            vector<int> label(g.vertex_count(), -1);
            int next = 0;
            vector<int> stack;
            for (int s = 0 ; s < g.vertex_count() ; ++s) {
                if (label[s] != -1 || removed[s])
                    continue;
                label[s] = next;
                stack.push_back(s);
                while (! stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (auto & i : g.incident(v))
                        if (label[i.neighbour] == -1 && ! removed[i.neighbour]) {
                            label[i.neighbour] = next;
                            stack.push_back(i.neighbour);
                        }
                }
                ++next;
            }
            return label;
        }
    }

    auto connected_components(const Graph & g) -> vector<int>
    {
        return components_avoiding(g, vector<bool>(g.vertex_count(), false));
    }

    auto is_connected(const Graph & g) -> bool
    {
        auto label = connected_components(g);
        return std::all_of(label.begin(), label.end(), [] (int l) { return l == 0; });
    }

    auto odd_components(const Graph & g, const vector<bool> & removed) -> int
    {
        if (static_cast<int>(removed.size()) != g.vertex_count())
            throw std::invalid_argument("removed set has the wrong size");
        auto label = components_avoiding(g, removed);
        vector<int> size;
        for (int l : label)
            if (l >= 0) {
                if (l >= static_cast<int>(size.size()))
                    size.resize(l + 1, 0);
                ++size[l];
            }
        return static_cast<int>(std::count_if(size.begin(), size.end(), [] (int s) { return s % 2 == 1; }));
    }

    auto odd_components(const Graph & g, std::span<const int> removed) -> int
    {
        vector<bool> mask(g.vertex_count(), false);
        for (int v : removed) {
            if (v < 0 || v >= g.vertex_count())
                throw std::invalid_argument("removed vertex out of range");
            mask[v] = true;
        }
        return odd_components(g, mask);
    }

    auto odd_girth(const Graph & g) -> std::optional<int>
    {
        // From each root, an edge joining two vertices at equal BFS depth d closes an
        // odd walk of length 2d+1; minimised over roots this is the shortest odd cycle.
        std::optional<int> best;
        vector<int> dist(g.vertex_count());
        for (int s = 0 ; s < g.vertex_count() ; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            std::queue<int> q;
            dist[s] = 0;
            q.push(s);
            while (! q.empty()) {
                int v = q.front();
                q.pop();
                if (best && 2 * dist[v] + 1 >= *best)
                    break;
                for (auto & i : g.incident(v)) {
                    if (dist[i.neighbour] == -1) {
                        dist[i.neighbour] = dist[v] + 1;
                        q.push(i.neighbour);
                    }
                    else if (dist[i.neighbour] == dist[v]) {
                        int len = 2 * dist[v] + 1;
                        if (! best || len < *best)
                            best = len;
                    }
                }
            }
        }
        return best;
    }

    MultiGraphView::MultiGraphView(Graph base, int extra_vertices) :
        _base(std::move(base)),
        _n(_base.vertex_count() + extra_vertices),
        _ends(_base.edges())
    {
        if (extra_vertices < 0)
            throw std::invalid_argument("negative extra vertex count");
    }

    auto MultiGraphView::add_edge(int u, int v) -> int
    {
        if (u > v)
            std::swap(u, v);
        if (u == v || u < 0 || v >= _n)
            throw std::invalid_argument("invalid extra edge");
        _ends.push_back({ u, v });
        return edge_count() - 1;
    }

    auto MultiGraphView::degree(int v) const -> int
    {
        int d = 0;
        for (auto & e : _ends)
            if (e.touches(v))
                ++d;
        return d;
    }

    namespace
    {
        auto sorted_incidence(const MultiGraphView & g) -> vector<vector<Incidence>>
        {
            vector<vector<Incidence>> inc(g.vertex_count());
            for (int e = 0 ; e < g.edge_count() ; ++e) {
                auto & [u, v] = g.endpoints(e);
                inc[u].push_back({ v, e });
                inc[v].push_back({ u, e });
            }
            for (auto & i : inc)
                std::sort(i.begin(), i.end(), [] (const Incidence & a, const Incidence & b) {
                        return a.neighbour != b.neighbour ? a.neighbour < b.neighbour : a.edge < b.edge;
                        });
            return inc;
        }
    }

    auto eulerian_tour(const MultiGraphView & g, int start) -> vector<int>
    {
        if (start < 0 || start >= g.vertex_count())
            throw std::invalid_argument("start vertex out of range");

        auto inc = sorted_incidence(g);
        for (int v = 0 ; v < g.vertex_count() ; ++v)
            if (inc[v].size() % 2 != 0)
                throw NotEulerianError("vertex " + std::to_string(v) + " has odd degree", v);

        if (g.edge_count() == 0)
            return {};
        if (inc[start].empty())
            throw NotEulerianError("start vertex " + std::to_string(start) + " has no edges", start);

        // Iterative Hierholzer: edges are emitted in reverse as the walk backs out.
        vector<std::size_t> next(g.vertex_count(), 0);
        vector<bool> used(g.edge_count(), false);
        vector<std::pair<int, int>> stack{ { start, -1 } };
        vector<int> tour;
        tour.reserve(g.edge_count());
        while (! stack.empty()) {
            int v = stack.back().first;
            auto & i = next[v];
            while (i < inc[v].size() && used[inc[v][i].edge])
                ++i;
            if (i == inc[v].size()) {
                if (stack.back().second != -1)
                    tour.push_back(stack.back().second);
                stack.pop_back();
            }
            else {
                auto [w, e] = inc[v][i];
                used[e] = true;
                stack.emplace_back(w, e);
            }
        }

        if (static_cast<int>(tour.size()) != g.edge_count()) {
            for (int e = 0 ; e < g.edge_count() ; ++e)
                if (! used[e])
                    throw NotEulerianError("edges at vertex " + std::to_string(g.endpoints(e).u)
                            + " are not reachable from the start", g.endpoints(e).u);
        }

        std::reverse(tour.begin(), tour.end());
        return tour;
    }

    auto is_eulerian_tour(const MultiGraphView & g, int start, std::span<const int> tour) -> bool
    {
        if (static_cast<int>(tour.size()) != g.edge_count())
            return false;
        vector<bool> seen(g.edge_count(), false);
        int at = start;
        for (int e : tour) {
            if (e < 0 || e >= g.edge_count() || seen[e])
                return false;
            seen[e] = true;
            auto & ends = g.endpoints(e);
            if (! ends.touches(at))
                return false;
            at = ends.other(at);
        }
        return at == start;
    }

    auto degree_order(const Graph & g) -> DegreeOrder
    {
        vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::stable_sort(perm.begin(), perm.end(), [&] (int a, int b) { return g.degree(a) > g.degree(b); });
        return { std::move(perm), "degree-desc,index-asc" };
    }

    auto degree_order(const Graph & g, int k) -> std::optional<DegreeOrder>
    {
        auto base = degree_order(g);
        if (k <= 0)
            return base;
        if (k > g.vertex_count())
            return std::nullopt;

        auto & perm = base.perm;
        // The first k positions hold every vertex of the tie classes lying wholly inside the
        // prefix plus a choice of vertices from the class straddling position k.
        int boundary_degree = g.degree(perm[k - 1]);
        vector<int> fixed, candidates, rest;
        for (int v : perm) {
            if (g.degree(v) > boundary_degree)
                fixed.push_back(v);
            else if (g.degree(v) == boundary_degree)
                candidates.push_back(v);
            else
                rest.push_back(v);
        }

        for (std::size_t i = 0 ; i < fixed.size() ; ++i)
            for (std::size_t j = i + 1 ; j < fixed.size() ; ++j)
                if (g.adjacent(fixed[i], fixed[j]))
                    return std::nullopt;

        int need = k - static_cast<int>(fixed.size());
        vector<int> chosen;
        std::function<bool (std::size_t)> pick = [&] (std::size_t from) -> bool {
            if (static_cast<int>(chosen.size()) == need)
                return true;
            for (std::size_t i = from ; i < candidates.size() ; ++i) {
                if (static_cast<int>(candidates.size() - i) < need - static_cast<int>(chosen.size()))
                    return false;
                int c = candidates[i];
                bool ok = std::none_of(fixed.begin(), fixed.end(), [&] (int f) { return g.adjacent(f, c); })
                    && std::none_of(chosen.begin(), chosen.end(), [&] (int f) { return g.adjacent(f, c); });
                if (! ok)
                    continue;
                chosen.push_back(c);
                if (pick(i + 1))
                    return true;
                chosen.pop_back();
            }
            return false;
        };
        if (! pick(0))
            return std::nullopt;

        DegreeOrder result{ fixed, "degree-desc,independent-prefix,index-asc" };
        result.perm.insert(result.perm.end(), chosen.begin(), chosen.end());
        for (int c : candidates)
            if (std::find(chosen.begin(), chosen.end(), c) == chosen.end())
                result.perm.push_back(c);
        result.perm.insert(result.perm.end(), rest.begin(), rest.end());
        return result;
    }

    auto isomorphic(const Graph & a, const Graph & b) -> bool
    {
        int n = a.vertex_count();
        if (n != b.vertex_count() || a.edge_count() != b.edge_count())
            return false;

        auto degrees = [] (const Graph & g) {
            vector<int> d(g.vertex_count());
            for (int v = 0 ; v < g.vertex_count() ; ++v)
                d[v] = g.degree(v);
            return d;
        };
        auto da = degrees(a), db = degrees(b);
        {
            auto sa = da, sb = db;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            if (sa != sb)
                return false;
        }

        vector<int> map(n, -1);
        vector<bool> taken(n, false);
        std::function<bool (int)> extend = [&] (int v) -> bool {
            if (v == n)
                return true;
            for (int w = 0 ; w < n ; ++w) {
                if (taken[w] || da[v] != db[w])
                    continue;
                bool ok = true;
                for (int u = 0 ; u < v && ok ; ++u)
                    ok = a.adjacent(u, v) == b.adjacent(map[u], w);
                if (! ok)
                    continue;
                map[v] = w;
                taken[w] = true;
                if (extend(v + 1))
                    return true;
                taken[w] = false;
            }
            map[v] = -1;
            return false;
        };
        return extend(0);
    }
}
