#include <matchgraph/c4.hh>

#include <algorithm>
#include <set>
#include <stdexcept>

using std::vector;

namespace matchgraph
{
    auto to_string(C4Status s) -> std::string
    {
        switch (s) {
            case C4Status::found: return "found";
            case C4Status::none: return "none";
            case C4Status::indeterminate: return "indeterminate";
        }
        return "unknown";
    }

    auto verify_c4_decomposition(const C4Decomposition & d) -> C4Check
    {
        C4Check check;
        vector<int> covered(static_cast<std::size_t>(d.m) * d.n, 0);
        std::set<std::pair<int, int>> left_pairs, right_pairs;
        bool partition = true, monogamous = true;

        for (std::size_t i = 0 ; i < d.blocks.size() ; ++i) {
            auto & blk = d.blocks[i];
            if (blk.a == blk.b || blk.x == blk.y || std::min(blk.a, blk.b) < 0 || std::max(blk.a, blk.b) >= d.m
                    || std::min(blk.x, blk.y) < 0 || std::max(blk.x, blk.y) >= d.n) {
                check.detail = "block " + std::to_string(i) + " is not a 4-cycle of K_{m,n}";
                return check;
            }
            for (auto [l, r] : blk.edges())
                if (++covered[static_cast<std::size_t>(l) * d.n + r] > 1 && partition) {
                    partition = false;
                    check.detail = "edge (" + std::to_string(l) + "," + std::to_string(r) + ") lies in two blocks";
                }
            // Mixed pairs are edges, already covered by the partition check.
            if (! left_pairs.emplace(std::min(blk.a, blk.b), std::max(blk.a, blk.b)).second && monogamous) {
                monogamous = false;
                if (check.detail.empty())
                    check.detail = "left pair " + std::to_string(blk.a) + "," + std::to_string(blk.b) + " shares two blocks";
            }
            if (! right_pairs.emplace(std::min(blk.x, blk.y), std::max(blk.x, blk.y)).second && monogamous) {
                monogamous = false;
                if (check.detail.empty())
                    check.detail = "right pair " + std::to_string(blk.x) + "," + std::to_string(blk.y) + " shares two blocks";
            }
        }
        if (partition && std::any_of(covered.begin(), covered.end(), [] (int c) { return c == 0; })) {
            partition = false;
            check.detail = "some edge is in no block";
        }
        check.partition = partition;
        check.monogamous = monogamous;
        return check;
    }

    namespace
    {
        class C4Search
        {
            public:
                C4Search(int m, int n, const C4Options & options) :
                    _m(m),
                    _n(n),
                    _options(options),
                    _covered(static_cast<std::size_t>(m) * n, false),
                    _left_pair(static_cast<std::size_t>(m) * m, false),
                    _right_pair(static_cast<std::size_t>(n) * n, false),
                    _left_remaining(m, n),
                    _right_remaining(n, m)
                {
                }

                auto run(C4Result & result) -> void
                {
                    _result = &result;
                    bool found = search();
                    result.nodes = _nodes;
                    if (found) {
                        result.status = C4Status::found;
                        result.decomposition = C4Decomposition{ _m, _n, _blocks };
                    }
                    else
                        result.status = _aborted ? C4Status::indeterminate : C4Status::none;
                }

            private:
                int _m, _n;
                const C4Options & _options;
                vector<bool> _covered, _left_pair, _right_pair;
                vector<int> _left_remaining, _right_remaining;
                vector<C4Block> _blocks;
                std::uint64_t _nodes = 0;
                bool _aborted = false;
                C4Result * _result = nullptr;

                auto covered(int a, int x) -> std::vector<bool>::reference { return _covered[static_cast<std::size_t>(a) * _n + x]; }
                auto left_pair(int a, int b) -> std::vector<bool>::reference { return _left_pair[static_cast<std::size_t>(a) * _m + b]; }
                auto right_pair(int x, int y) -> std::vector<bool>::reference { return _right_pair[static_cast<std::size_t>(x) * _n + y]; }

                auto log(const std::string & line) -> void
                {
                    if (! _options.record_trace)
                        return;
                    if (_result->trace.size() >= _options.trace_limit) {
                        _result->trace_truncated = true;
                        return;
                    }
                    _result->trace.push_back(line);
                }

                // Every vertex still needs remaining/2 further blocks, each with a distinct unused partner.
                auto partners_suffice() -> bool
                {
                    for (int a = 0 ; a < _m ; ++a) {
                        if (_left_remaining[a] == 0)
                            continue;
                        int available = 0;
                        for (int b = 0 ; b < _m ; ++b)
                            if (b != a && _left_remaining[b] > 0 && ! left_pair(a, b))
                                ++available;
                        if (available < _left_remaining[a] / 2)
                            return false;
                    }
                    for (int x = 0 ; x < _n ; ++x) {
                        if (_right_remaining[x] == 0)
                            continue;
                        int available = 0;
                        for (int y = 0 ; y < _n ; ++y)
                            if (y != x && _right_remaining[y] > 0 && ! right_pair(x, y))
                                ++available;
                        if (available < _right_remaining[x] / 2)
                            return false;
                    }
                    return true;
                }

                auto untouched_left(int b) const -> bool { return _left_remaining[b] == _n; }
                auto untouched_right(int y) const -> bool { return _right_remaining[y] == _m; }

                auto place(const C4Block & blk, bool on) -> void
                {
                    for (auto [l, r] : blk.edges()) {
                        covered(l, r) = on;
                        _left_remaining[l] += on ? -1 : 1;
                        _right_remaining[r] += on ? -1 : 1;
                    }
                    left_pair(blk.a, blk.b) = left_pair(blk.b, blk.a) = on;
                    right_pair(blk.x, blk.y) = right_pair(blk.y, blk.x) = on;
                }

                auto search() -> bool
                {
                    if (++_nodes > _options.max_nodes) {
                        _aborted = true;
                        return false;
                    }

                    int a = -1, x = -1;
                    for (int i = 0 ; i < _m && a == -1 ; ++i)
                        for (int j = 0 ; j < _n ; ++j)
                            if (! covered(i, j)) {
                                a = i;
                                x = j;
                                break;
                            }
                    if (a == -1)
                        return true;

                    // Rows before a and columns before x in row a are covered, so b > a and y > x.
                    bool tried_fresh_b = false;
                    for (int b = a + 1 ; b < _m ; ++b) {
                        if (covered(b, x) || left_pair(a, b))
                            continue;
                        if (untouched_left(b)) {
                            if (tried_fresh_b)
                                continue;
                            tried_fresh_b = true;
                        }
                        bool tried_fresh_y = false;
                        for (int y = x + 1 ; y < _n ; ++y) {
                            if (covered(a, y) || covered(b, y) || right_pair(x, y))
                                continue;
                            if (untouched_right(y)) {
                                if (tried_fresh_y)
                                    continue;
                                tried_fresh_y = true;
                            }
                            C4Block blk{ a, b, x, y };
                            place(blk, true);
                            _blocks.push_back(blk);
                            log("place " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(x) + " " + std::to_string(y));
                            if (partners_suffice() && search())
                                return true;
                            _blocks.pop_back();
                            place(blk, false);
                            log("undo " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(x) + " " + std::to_string(y));
                            if (_aborted)
                                return false;
                        }
                    }
                    return false;
                }
        };
    }

    auto c4_monogamous(int m, int n, const C4Options & options) -> C4Result
    {
        if (m < 2 || n < 2 || m % 2 != 0 || n % 2 != 0)
            throw std::invalid_argument("c4_monogamous needs even side sizes of at least 2");
        C4Result result;
        C4Search(m, n, options).run(result);
        return result;
    }
}
