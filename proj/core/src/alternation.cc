#include <matchgraph/alternation.hh>
#include <matchgraph/errors.hh>
#include <matchgraph/matching.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>
#include <stdexcept>

using std::vector;

namespace matchgraph
{
    SignVector::SignVector(vector<int> entries) :
        _entries(std::move(entries))
    {
        for (int x : _entries)
            if (x < -1 || x > 1)
                throw std::invalid_argument("sign vector entries must be -1, 0 or +1");
    }

    auto alt(const SignVector & x) -> int
    {
        int length = 0, last = 0;
        for (int v : x.entries())
            if (v != 0 && v != last) {
                ++length;
                last = v;
            }
        return length;
    }

    EdgeOrdering::EdgeOrdering(vector<int> perm) :
        _perm(std::move(perm))
    {
        vector<bool> seen(_perm.size(), false);
        for (int p : _perm) {
            if (p < 0 || p >= static_cast<int>(_perm.size()) || seen[p])
                throw std::invalid_argument("ordering is not a permutation");
            seen[p] = true;
        }
    }

    auto EdgeOrdering::identity(int n) -> EdgeOrdering
    {
        vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        return EdgeOrdering(std::move(perm));
    }

    namespace
    {
        auto signed_set(const SignVector & x, const EdgeOrdering & sigma, int sign) -> Mask
        {
            if (x.size() != sigma.size())
                throw std::invalid_argument("sign vector and ordering differ in length");
            if (x.size() > 64)
                throw CapacityError("sets need at most 64 elements");
            Mask m = 0;
            for (int j = 0 ; j < x.size() ; ++j)
                if (x[j] == sign)
                    m |= bit(sigma[j]);
            return m;
        }
    }

    auto plus_set(const SignVector & x, const EdgeOrdering & sigma) -> Mask
    {
        return signed_set(x, sigma, +1);
    }

    auto minus_set(const SignVector & x, const EdgeOrdering & sigma) -> Mask
    {
        return signed_set(x, sigma, -1);
    }

    namespace
    {
        // Positions are visited in sigma order. Class 0 collects +1 entries, class 1 collects -1.
        class SignSearch
        {
            public:
                SignSearch(const Hypergraph & h, const EdgeOrdering & sigma, bool constrain_plus, bool constrain_minus,
                        std::uint64_t budget) :
                    _n(h.ground_size()),
                    _sigma(sigma),
                    _containing(_n),
                    _constrained{ constrain_plus, constrain_minus },
                    _budget(budget),
                    _current(_n, 0)
                {
                    for (auto m : h.masks())
                        for (Mask rest = m ; rest ; rest &= rest - 1)
                            _containing[std::countr_zero(rest)].push_back(m);
                }

                auto run(int lower) -> void
                {
                    _best = lower;
                    dfs(0, -1, 0, { 0, 0 });
                }

                auto best() const -> int { return _best; }
                auto witness() const -> const vector<int> & { return _witness; }
                auto nodes() const -> std::uint64_t { return _nodes; }

            private:
                int _n;
                const EdgeOrdering & _sigma;
                vector<vector<Mask>> _containing;
                bool _constrained[2];
                std::uint64_t _budget, _nodes = 0;
                int _best = -1;
                vector<int> _current, _witness;

                auto admissible(int cls, Mask set, int element) const -> bool
                {
                    if (! _constrained[cls])
                        return true;
                    Mask grown = set | bit(element);
                    for (auto m : _containing[element])
                        if ((m & ~grown) == 0)
                            return false;
                    return true;
                }

                auto dfs(int pos, int last, int length, std::array<Mask, 2> sets) -> void
                {
                    if (++_nodes > _budget)
                        throw CapacityError("alternation search exceeded its node budget");
                    if (length + (_n - pos) <= _best)
                        return;
                    if (pos == _n) {
                        _best = length;
                        _witness = _current;
                        return;
                    }

                    int element = _sigma[pos];
                    for (int cls : { 0, 1 }) {
                        if (cls == last || ! admissible(cls, sets[cls], element))
                            continue;
                        auto grown = sets;
                        grown[cls] |= bit(element);
                        _current[pos] = cls == 0 ? +1 : -1;
                        dfs(pos + 1, cls, length + 1, grown);
                        _current[pos] = 0;
                    }
                    dfs(pos + 1, last, length, sets);
                }
        };
    }

    auto alternation_search(const Hypergraph & h, const EdgeOrdering & sigma, AlternationMode mode,
            const AlternationOptions & options) -> AlternationResult
    {
        if (sigma.size() != h.ground_size())
            throw std::invalid_argument("ordering length differs from the ground set size");
        if (h.ground_size() > 64)
            throw CapacityError("alternation search needs a ground set of at most 64 elements");

        AlternationResult result;
        result.witness = SignVector(vector<int>(h.ground_size(), 0));
        auto budget = options.max_nodes;

        auto run = [&] (bool plus, bool minus) {
            SignSearch search(h, sigma, plus, minus, budget);
            search.run(result.value);
            result.nodes += search.nodes();
            budget -= std::min(budget, search.nodes());
            if (search.best() > result.value) {
                result.value = search.best();
                result.witness = SignVector(search.witness());
            }
        };

        if (mode == AlternationMode::alt)
            run(true, true);
        else {
            run(true, false);
            run(false, true);
        }
        return result;
    }

    auto alt_sigma(const Hypergraph & h, const EdgeOrdering & sigma, const AlternationOptions & options) -> int
    {
        return alternation_search(h, sigma, AlternationMode::alt, options).value;
    }

    auto salt_sigma(const Hypergraph & h, const EdgeOrdering & sigma, const AlternationOptions & options) -> int
    {
        return alternation_search(h, sigma, AlternationMode::salt, options).value;
    }

    namespace
    {
        auto minimise(const Hypergraph & h, AlternationMode mode, const MinimiseOptions & options) -> MinimisedAlternation
        {
            int n = h.ground_size();
            MinimisedAlternation best;
            best.value = -1;
            auto consider = [&] (const vector<int> & perm) {
                EdgeOrdering sigma(perm);
                int v = alternation_search(h, sigma, mode, options.search).value;
                if (best.value == -1 || v < best.value) {
                    best.value = v;
                    best.ordering = std::move(sigma);
                }
            };

            vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            if (n <= options.exhaustive_limit) {
                do
                    consider(perm);
                while (std::next_permutation(perm.begin(), perm.end()));
                best.certified = true;
                return best;
            }
            if (! options.allow_heuristic)
                throw CapacityError("exhaustive minimisation over orderings is limited to "
                        + std::to_string(options.exhaustive_limit) + " elements");

            std::mt19937 rng(options.seed);
            consider(perm);
            for (int i = 0 ; i < options.heuristic_samples ; ++i) {
                std::shuffle(perm.begin(), perm.end(), rng);
                consider(perm);
            }
            best.certified = false;
            return best;
        }
    }

    auto alt_min(const Hypergraph & h, const MinimiseOptions & options) -> MinimisedAlternation
    {
        return minimise(h, AlternationMode::alt, options);
    }

    auto salt_min(const Hypergraph & h, const MinimiseOptions & options) -> MinimisedAlternation
    {
        return minimise(h, AlternationMode::salt, options);
    }

    namespace
    {
        auto binomial2(int x) -> int { return x < 2 ? 0 : x * (x - 1) / 2; }

        // Looks for an alternating coloring of exactly target edges along sigma.
        class ColoringSearch
        {
            public:
                ColoringSearch(const Graph & g, int r, const EdgeOrdering & sigma, bool free_red, bool free_blue,
                        std::uint64_t & budget) :
                    _g(g),
                    _r(r),
                    _sigma(sigma),
                    _free{ free_red, free_blue },
                    _budget(budget)
                {
                }

                auto feasible(int target) -> bool
                {
                    _target = target;
                    return dfs(0, -1, 0, { 0, 0 });
                }

            private:
                const Graph & _g;
                int _r;
                const EdgeOrdering & _sigma;
                bool _free[2];
                std::uint64_t & _budget;
                int _target = 0;

                auto dfs(int pos, int last, int coloured, std::array<Mask, 2> classes) -> bool
                {
                    if (coloured == _target)
                        return true;
                    if (coloured + (_g.edge_count() - pos) < _target)
                        return false;
                    if (_budget == 0)
                        throw CapacityError("alternating Turán search exceeded its node budget");
                    --_budget;

                    int e = _sigma[pos];
                    for (int cls : { 0, 1 }) {
                        if (cls == last)
                            continue;
                        if (_free[cls] && has_matching_of_size(_g, classes[cls] & ~_g.touching_mask(e), _r - 1))
                            continue;
                        auto grown = classes;
                        grown[cls] |= bit(e);
                        if (dfs(pos + 1, cls, coloured + 1, grown))
                            return true;
                    }
                    return dfs(pos + 1, last, coloured, classes);
                }
        };

        auto ex_alternating(const Graph & g, int r, const EdgeOrdering & sigma, bool strong, const TuranAltOptions & options) -> int
        {
            if (r < 1)
                throw std::invalid_argument("r must be at least 1");
            if (sigma.size() != g.edge_count())
                throw std::invalid_argument("ordering length differs from the edge count");
            if (g.edge_count() > 64)
                throw CapacityError("alternating Turán search needs at most 64 edges");

            // An rK_2-free class has at most (r-1) max-degree + C(2r-1, 2) edges.
            int per_class = (r - 1) * g.max_degree() + binomial2(2 * r - 1);
            int start = std::min(g.edge_count(), strong ? 2 * per_class + 1 : 2 * per_class);

            std::uint64_t budget = options.max_nodes;
            for (int target = start ; target > 0 ; --target) {
                bool ok = false;
                if (strong) {
                    ok = ColoringSearch(g, r, sigma, true, false, budget).feasible(target)
                        || ColoringSearch(g, r, sigma, false, true, budget).feasible(target);
                }
                else
                    ok = ColoringSearch(g, r, sigma, true, true, budget).feasible(target);
                if (ok)
                    return target;
            }
            return 0;
        }
    }

    auto ex_alt_sigma(const Graph & g, int r, const EdgeOrdering & sigma, const TuranAltOptions & options) -> int
    {
        return ex_alternating(g, r, sigma, false, options);
    }

    auto ex_salt_sigma(const Graph & g, int r, const EdgeOrdering & sigma, const TuranAltOptions & options) -> int
    {
        return ex_alternating(g, r, sigma, true, options);
    }

    auto chi_lower_bounds(const Hypergraph & h, const EdgeOrdering & sigma, const AlternationOptions & options)
        -> std::pair<int, int>
    {
        int n = h.ground_size();
        return { n - alt_sigma(h, sigma, options), n + 1 - salt_sigma(h, sigma, options) };
    }

    auto alternation_witness(const Hypergraph & h, const EdgeOrdering & sigma, const AlternationOptions & options)
        -> AlternationWitness
    {
        int n = h.ground_size();
        int a = alt_sigma(h, sigma, options);
        if (h.hyperedge_count() == 0)
            return { "alt", sigma.perm(), n, a };
        int s = salt_sigma(h, sigma, options);
        if (n + 1 - s > n - a)
            return { "salt", sigma.perm(), n, s };
        return { "alt", sigma.perm(), n, a };
    }
}
