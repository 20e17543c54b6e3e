#include <matchgraph/orderings.hh>
#include <matchgraph/errors.hh>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

using std::vector;

namespace matchgraph
{
    auto grk2_conditions(const Graph & g, int r) -> Grk2Report
    {
        Grk2Report report;
        report.r = r;
        report.connected = is_connected(g);
        report.odd_girth = odd_girth(g);
        report.r_at_least_two = r >= 2;
        if (! report.connected)
            report.failures.push_back("graph is not connected");
        if (! report.r_at_least_two)
            report.failures.push_back("r must be at least 2");

        int k = std::max(r - 1, 0);
        if (k > g.vertex_count()) {
            report.failures.push_back("fewer than r-1 vertices");
            report.formula_value = g.edge_count();
            return report;
        }

        report.order = degree_order(g, k);
        report.independent_prefix = report.order.has_value();
        if (! report.independent_prefix)
            report.failures.push_back("no degree order has an independent prefix of size r-1");
        auto perm = report.order ? report.order->perm : degree_order(g).perm;

        for (int i = 0 ; i < k ; ++i)
            report.top_degrees.push_back(g.degree(perm[i]));
        report.degree_sum = std::accumulate(report.top_degrees.begin(), report.top_degrees.end(), 0);
        report.formula_value = g.edge_count() - report.degree_sum;

        if (k >= 1) {
            int d = g.degree(perm[k - 1]);
            // r <= max(g/2, (d+1)/4), compared in integers; bipartite graphs have infinite odd girth.
            bool girth_ok = ! report.odd_girth || 2 * r <= *report.odd_girth;
            bool degree_ok = 4 * r <= d + 1;
            report.inequality = girth_ok || degree_ok;
            int next = k < g.vertex_count() ? g.degree(perm[k]) : -1;
            report.parity = d % 2 == 0 || d > next;
        }
        if (! report.inequality)
            report.failures.push_back("r exceeds max(odd girth / 2, (deg v_{r-1} + 1) / 4)");
        if (! report.parity)
            report.failures.push_back("deg v_{r-1} is odd and equals deg v_r");

        report.applicable = report.connected && report.r_at_least_two && report.independent_prefix
            && report.inequality && report.parity;
        return report;
    }

    auto euler_ordering(const Graph & g) -> EdgeOrdering
    {
        return euler_ordering(g, degree_order(g));
    }

    auto euler_ordering(const Graph & g, const DegreeOrder & order) -> EdgeOrdering
    {
        if (! is_connected(g))
            throw std::invalid_argument("euler_ordering needs a connected graph");
        if (g.edge_count() == 0)
            return EdgeOrdering{};

        vector<int> odd;
        for (int v = 0 ; v < g.vertex_count() ; ++v)
            if (g.degree(v) % 2 == 1)
                odd.push_back(v);

        vector<int> tour;
        if (odd.empty()) {
            MultiGraphView view(g);
            tour = eulerian_tour(view, order.perm.back());
        }
        else {
            MultiGraphView view(g, 1);
            int w = g.vertex_count();
            for (int v : odd)
                view.add_edge(w, v);
            for (int e : eulerian_tour(view, w))
                if (! view.is_extra(e))
                    tour.push_back(e);
        }
        return EdgeOrdering(std::move(tour));
    }

    auto verify_locally_eulerian(const LocallyEulerianCertificate & cert) -> VerifyResult
    {
        auto fail = [] (std::string clause, std::string detail) {
            return VerifyResult{ false, std::move(clause), std::move(detail) };
        };
        auto & host = cert.host;
        int n = host.vertex_count();

        if (static_cast<int>(cert.roots.size()) != n || static_cast<int>(cert.subgraphs.size()) != n)
            return fail("root-count", "expected one root and one subgraph per host vertex");

        vector<bool> rooted(n, false);
        for (int u : cert.roots) {
            if (u < 0 || u >= n || rooted[u])
                return fail("roots-cover", "roots must list every host vertex exactly once");
            rooted[u] = true;
        }

        vector<int> owner(host.edge_count(), -1);
        for (int i = 0 ; i < n ; ++i)
            for (int e : cert.subgraphs[i]) {
                if (e < 0 || e >= host.edge_count())
                    return fail("edge-range", "subgraph " + std::to_string(i) + " uses edge " + std::to_string(e));
                if (owner[e] != -1)
                    return fail("edge-disjoint", "edge " + std::to_string(e) + " is in subgraphs "
                            + std::to_string(owner[e]) + " and " + std::to_string(i));
                owner[e] = i;
            }

        for (int i = 0 ; i < n ; ++i) {
            auto & edges = cert.subgraphs[i];
            auto tag = "subgraph " + std::to_string(i);
            if (edges.empty())
                return fail("nontrivial", tag + " has no edges");

            auto sub = spanning_subgraph(host, edges);
            int u = cert.roots[i];
            if (sub.degree(u) == 0)
                return fail("root-membership", tag + " does not contain its root " + std::to_string(u));

            for (int v = 0 ; v < n ; ++v)
                if (sub.degree(v) % 2 != 0)
                    return fail("even-degree", tag + " has odd degree at vertex " + std::to_string(v));

            auto label = connected_components(sub);
            for (int v = 0 ; v < n ; ++v)
                if (sub.degree(v) > 0 && label[v] != label[u])
                    return fail("connected", tag + " is not connected");

            for (int v = 0 ; v < n ; ++v)
                if (v != u && sub.degree(v) > 0 && sub.degree(u) < (cert.r - 1) * sub.degree(v) + cert.c)
                    return fail("degree-dominance", tag + ": root degree " + std::to_string(sub.degree(u))
                            + " < " + std::to_string(cert.r - 1) + "*" + std::to_string(sub.degree(v))
                            + "+" + std::to_string(cert.c) + " at vertex " + std::to_string(v));
        }
        return { true, "", "" };
    }

    namespace
    {
        auto tour_of(const MultiGraphView & whole, const vector<int> & edges, int start) -> vector<int>
        {
            MultiGraphView part(Graph(whole.vertex_count(), {}));
            for (int e : edges)
                part.add_edge(whole.endpoints(e).u, whole.endpoints(e).v);
            vector<int> result;
            for (int local : eulerian_tour(part, start))
                result.push_back(edges[local]);
            return result;
        }
    }

    auto dense_tour(const LocallyEulerianCertificate & cert) -> DenseTour
    {
        auto check = verify_locally_eulerian(cert);
        if (! check.ok)
            throw CertificateError(check.clause, check.detail);

        auto & host = cert.host;
        int n = host.vertex_count();
        int m = host.edge_count();

        vector<int> odd;
        for (int v = 0 ; v < n ; ++v)
            if (host.degree(v) % 2 == 1)
                odd.push_back(v);

        DenseTour result{ MultiGraphView(host, odd.empty() ? 1 : 2), n, std::nullopt, {}, {} };
        auto & mg = result.multigraph;
        for (int i = 0 ; i < n ; ++i) {
            mg.add_edge(result.apex, cert.roots[i]);
            mg.add_edge(result.apex, cert.roots[i]);
        }
        vector<int> z_edges;
        if (! odd.empty()) {
            result.parity_vertex = n + 1;
            for (int v : odd)
                z_edges.push_back(mg.add_edge(*result.parity_vertex, v));
        }

        // Leftover: host edges outside every H_i, plus the z edges.
        vector<bool> in_family(m, false);
        for (auto & s : cert.subgraphs)
            for (int e : s)
                in_family[e] = true;
        vector<int> leftover;
        for (int e = 0 ; e < m ; ++e)
            if (! in_family[e])
                leftover.push_back(e);
        leftover.insert(leftover.end(), z_edges.begin(), z_edges.end());

        int total = mg.vertex_count();
        vector<int> parent(total);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int (int)> find = [&] (int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
        for (int e : leftover)
            parent[find(mg.endpoints(e).u)] = find(mg.endpoints(e).v);

        vector<int> component_of_root(total, -1);
        for (int e : leftover) {
            int root = find(mg.endpoints(e).u);
            if (component_of_root[root] == -1) {
                component_of_root[root] = static_cast<int>(result.leftover_components.size());
                result.leftover_components.emplace_back();
            }
            result.leftover_components[component_of_root[root]].push_back(e);
        }
        vector<vector<int>> components_at(total);
        for (std::size_t j = 0 ; j < result.leftover_components.size() ; ++j)
            for (int e : result.leftover_components[j])
                for (int v : { mg.endpoints(e).u, mg.endpoints(e).v })
                    if (components_at[v].empty() || components_at[v].back() != static_cast<int>(j))
                        components_at[v].push_back(static_cast<int>(j));

        vector<bool> traversed(result.leftover_components.size(), false);
        for (int i = 0 ; i < n ; ++i) {
            int u = cert.roots[i];
            result.tour.push_back(m + 2 * i);
            auto part = tour_of(mg, cert.subgraphs[i], u);
            result.tour.insert(result.tour.end(), part.begin(), part.end());
            for (int j : components_at[u])
                if (! traversed[j]) {
                    traversed[j] = true;
                    auto more = tour_of(mg, result.leftover_components[j], u);
                    result.tour.insert(result.tour.end(), more.begin(), more.end());
                    break;
                }
            result.tour.push_back(m + 2 * i + 1);
        }
        return result;
    }

    auto dense_ordering(const Graph & g, const Graph & host, const LocallyEulerianCertificate & cert) -> EdgeOrdering
    {
        if (! (cert.host == host))
            throw CertificateError("host", "certificate is for a different host graph");
        if (g.vertex_count() > host.vertex_count())
            throw std::invalid_argument("g has more vertices than the host");
        vector<int> to_g(host.edge_count(), -1);
        for (int e = 0 ; e < g.edge_count() ; ++e) {
            auto h = host.edge_index(g.edge(e).u, g.edge(e).v);
            if (! h)
                throw std::invalid_argument("g is not a subgraph of the host");
            to_g[*h] = e;
        }

        auto walk = dense_tour(cert);
        vector<int> order;
        for (int e : walk.tour)
            if (e < host.edge_count() && to_g[e] != -1)
                order.push_back(to_g[e]);
        return EdgeOrdering(std::move(order));
    }

    auto to_string(ConstructionStatus s) -> std::string
    {
        switch (s) {
            case ConstructionStatus::built: return "built";
            case ConstructionStatus::infeasible: return "infeasible";
            case ConstructionStatus::indeterminate: return "indeterminate";
        }
        return "unknown";
    }

    namespace
    {
        // Kuhn's augmenting paths; returns the block assigned to each left copy, or -1.
        auto saturating_assignment(const vector<vector<int>> & adjacency, int right_count) -> vector<int>
        {
            int left_count = static_cast<int>(adjacency.size());
            vector<int> match_right(right_count, -1), match_left(left_count, -1);
            vector<int> seen(right_count, -1);
            std::function<bool (int, int)> augment = [&] (int l, int stamp) -> bool {
                for (int r : adjacency[l]) {
                    if (seen[r] == stamp)
                        continue;
                    seen[r] = stamp;
                    if (match_right[r] == -1 || augment(match_right[r], stamp)) {
                        match_right[r] = l;
                        match_left[l] = r;
                        return true;
                    }
                }
                return false;
            };
            for (int l = 0 ; l < left_count ; ++l)
                augment(l, l);
            return match_left;
        }

        auto copies_adjacency(const vector<vector<int>> & blocks_of_vertex, int copies) -> vector<vector<int>>
        {
            vector<vector<int>> adjacency;
            for (auto & blocks : blocks_of_vertex)
                for (int c = 0 ; c < copies ; ++c)
                    adjacency.push_back(blocks);
            return adjacency;
        }
    }

    auto locally_eulerian_from_c4(int t, int t_prime, int r, int c, const std::optional<C4Decomposition> & supplied,
            const C4Options & search) -> LocallyEulerianConstruction
    {
        if (t < 1 || t_prime < 1)
            throw std::invalid_argument("side sizes must be positive");

        LocallyEulerianConstruction result;
        int big_t = t + t % 2, big_t_prime = t_prime + t_prime % 2;
        result.copies_floor = t >= 3 ? (t - 3) / 8 : 0;
        result.copies_ceil = t >= 3 ? (t - 3 + 7) / 8 : 0;

        C4Decomposition decomposition;
        if (supplied) {
            if (supplied->m != big_t || supplied->n != big_t_prime)
                throw CertificateError("decomposition-size", "expected a decomposition of K_{"
                        + std::to_string(big_t) + "," + std::to_string(big_t_prime) + "}");
            auto check = verify_c4_decomposition(*supplied);
            if (! check.ok())
                throw CertificateError(check.partition ? "monogamous" : "partition", check.detail);
            decomposition = *supplied;
        }
        else {
            auto found = c4_monogamous(big_t, big_t_prime, search);
            if (found.status == C4Status::indeterminate) {
                result.detail = "no monogamous decomposition of K_{" + std::to_string(big_t) + "," + std::to_string(big_t_prime)
                    + "} found within the search budget";
                return result;
            }
            if (found.status == C4Status::none) {
                result.status = ConstructionStatus::infeasible;
                result.detail = "K_{" + std::to_string(big_t) + "," + std::to_string(big_t_prime)
                    + "} has no monogamous C4-decomposition";
                return result;
            }
            decomposition = *found.decomposition;
        }

        // Host vertices: left 0..t-1, right t..t+t'-1.
        vector<C4Block> inside;
        for (auto & blk : decomposition.blocks)
            if (std::max(blk.a, blk.b) < t && std::max(blk.x, blk.y) < t_prime)
                inside.push_back(blk);
        result.blocks_inside = static_cast<int>(inside.size());

        vector<vector<int>> blocks_of_vertex(t + t_prime);
        for (int i = 0 ; i < static_cast<int>(inside.size()) ; ++i) {
            auto & blk = inside[i];
            for (int v : { blk.a, blk.b, t + blk.x, t + blk.y })
                blocks_of_vertex[v].push_back(i);
        }

        int block_count = static_cast<int>(inside.size());
        auto assign = [&] (int copies) {
            return saturating_assignment(copies_adjacency(blocks_of_vertex, copies), block_count);
        };

        if (result.copies_ceil != result.copies_floor) {
            auto alt = assign(result.copies_ceil);
            result.ceil_reading_feasible = std::none_of(alt.begin(), alt.end(), [] (int b) { return b == -1; });
        }

        if (result.copies_floor < 1) {
            result.status = ConstructionStatus::infeasible;
            result.detail = "floor((t-3)/8) is zero, so no vertex receives a block";
            return result;
        }

        auto assignment = assign(result.copies_floor);
        if (std::any_of(assignment.begin(), assignment.end(), [] (int b) { return b == -1; })) {
            result.status = ConstructionStatus::infeasible;
            result.detail = "no block assignment saturates every vertex copy";
            return result;
        }

        LocallyEulerianCertificate cert;
        cert.host = make_complete_bipartite(t, t_prime);
        cert.r = r;
        cert.c = c;
        for (int v = 0 ; v < t + t_prime ; ++v) {
            cert.roots.push_back(v);
            vector<int> edges;
            for (int k = 0 ; k < result.copies_floor ; ++k) {
                auto & blk = inside[assignment[v * result.copies_floor + k]];
                for (auto [left, right] : blk.edges())
                    edges.push_back(*cert.host.edge_index(left, t + right));
            }
            std::sort(edges.begin(), edges.end());
            cert.subgraphs.push_back(std::move(edges));
        }

        result.verification = verify_locally_eulerian(cert);
        result.certificate = std::move(cert);
        result.status = ConstructionStatus::built;
        return result;
    }
}
