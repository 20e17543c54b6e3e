#include <matchgraph/turan.hh>
#include <matchgraph/errors.hh>
#include <matchgraph/matching.hh>

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

using std::vector;

namespace matchgraph
{
    auto to_string(TuranMethod m) -> std::string
    {
        switch (m) {
            case TuranMethod::exhaustive: return "exhaustive";
            case TuranMethod::star_construction: return "star-construction";
            case TuranMethod::branch_bound: return "branch-bound";
        }
        return "unknown";
    }

    auto is_f_free(std::span<const int> edges, const Graph & g, int r) -> bool
    {
        for (int e : edges)
            if (e < 0 || e >= g.edge_count())
                throw std::invalid_argument("edge index out of range");
        if (r <= 0)
            return false;
        return matching_number(spanning_subgraph(g, edges)) <= r - 1;
    }

    auto star_lower_bound(const Graph & g, int r) -> StarBound
    {
        if (r < 1)
            throw std::invalid_argument("r must be at least 1");
        int k = std::min(r - 1, g.vertex_count());
        StarBound best;
        best.value = -1;

        vector<int> chosen;
        std::function<void (int)> choose = [&] (int from) {
            if (static_cast<int>(chosen.size()) == k) {
                int value = 0;
                for (int e = 0 ; e < g.edge_count() ; ++e)
                    if (std::any_of(chosen.begin(), chosen.end(), [&] (int c) { return g.edge(e).touches(c); }))
                        ++value;
                if (value > best.value) {
                    best.value = value;
                    best.centres = chosen;
                }
                return;
            }
            for (int v = from ; v + (k - static_cast<int>(chosen.size())) <= g.vertex_count() ; ++v) {
                chosen.push_back(v);
                choose(v + 1);
                chosen.pop_back();
            }
        };
        choose(0);

        for (int e = 0 ; e < g.edge_count() ; ++e)
            if (std::any_of(best.centres.begin(), best.centres.end(), [&] (int c) { return g.edge(e).touches(c); }))
                best.edges.push_back(e);
        return best;
    }

    namespace
    {
        auto binomial2(int x) -> int { return x < 2 ? 0 : x * (x - 1) / 2; }

        struct Search
        {
            const Graph & g;
            int r;
            std::uint64_t budget;
            bool bounded;
            std::uint64_t nodes = 0;
            bool aborted = false;
            int best_size;
            Mask best = 0;

            auto run(int e, Mask current, int size) -> void
            {
                if (aborted)
                    return;
                if (bounded && ++nodes > budget) {
                    aborted = true;
                    return;
                }
                else if (! bounded)
                    ++nodes;

                int m = g.edge_count();
                if (size + (m - e) <= best_size)
                    return;
                if (e == m) {
                    best_size = size;
                    best = current;
                    return;
                }

                // Adding e closes an r-matching iff the rest already has an (r-1)-matching avoiding e's ends.
                if (! has_matching_of_size(g, current & ~g.touching_mask(e), r - 1))
                    run(e + 1, current | bit(e), size + 1);
                run(e + 1, current, size);
            }
        };
    }

    auto turan_matchings(const Graph & g, int r, const TuranOptions & options) -> TuranCertificate
    {
        if (r < 1)
            throw std::invalid_argument("r must be at least 1");
        if (g.edge_count() > 64)
            throw CapacityError("turan_matchings: more than 64 edges");

        auto star = star_lower_bound(g, r);
        bool bounded = g.edge_count() > options.exhaustive_edge_bound;
        Search search{ g, r, options.max_nodes, bounded, 0, false, star.value - 1, 0 };
        search.run(0, 0, 0);

        TuranCertificate cert;
        cert.nodes = search.nodes;
        if (search.aborted) {
            // Best verified set so far, with the Tutte-Berge edge bound as the upper end.
            cert.exact = false;
            cert.method = TuranMethod::star_construction;
            cert.ex_value = star.value;
            cert.extremal_edges = star.edges;
            if (search.best_size > star.value) {
                cert.method = TuranMethod::branch_bound;
                cert.ex_value = search.best_size;
                cert.extremal_edges.clear();
                for (Mask m = search.best ; m ; m &= m - 1)
                    cert.extremal_edges.push_back(std::countr_zero(m));
            }
            cert.upper = std::min(g.edge_count(), (r - 1) * g.max_degree() + binomial2(2 * r - 1));
            return cert;
        }

        cert.exact = true;
        cert.method = bounded ? TuranMethod::branch_bound : TuranMethod::exhaustive;
        cert.ex_value = search.best_size;
        cert.upper = cert.ex_value;
        for (Mask m = search.best ; m ; m &= m - 1)
            cert.extremal_edges.push_back(std::countr_zero(m));
        return cert;
    }
}
