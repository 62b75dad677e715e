#include <ccs/orbits.hh>
#include <ccs/search.hh>

#include <algorithm>

using std::int64_t;
using std::size_t;
using std::uint64_t;
using std::vector;

namespace ccs
{
    namespace
    {
        struct OrbitType
        {
            int edges;           // p = m/d
            int64_t step;        // k = n/d, the orbit length
            vector<Residue> ends;
        };

        struct Abort
        {
        };

        class CoverSearch
        {
        public:
            CoverSearch(Order n, int m, const vector<Length> & lengths, const SearchLimits & limits) :
                _n(n), _m(m), _limits(limits), _allowed(n.half() + 1, false), _used(n.half() + 1, false),
                _remaining(0), _start(std::chrono::steady_clock::now())
            {
                for (auto l : lengths) {
                    if (l < 1 || l >= n.half() + (n.even() ? 0 : 1))
                        throw DomainError("search length out of range");
                    if (! _allowed[l])
                        ++_remaining;
                    _allowed[l] = true;
                }

                auto g = gcd(m, n.value());
                for (auto d : divisors(g)) {
                    OrbitType type{int(m / d), n.value() / d, {}};
                    for (int64_t x = 0; x < d; ++x)
                        if (gcd(x, d) == 1)
                            type.ends.push_back(n.reduce(type.step * x));
                    std::ranges::sort(type.ends);
                    _types.push_back(std::move(type));
                }
                std::ranges::stable_sort(_types, {}, &OrbitType::edges);
            }

            auto run() -> SearchResult
            {
                SearchResult result{SearchOutcome::Exhausted, {}, 0};
                try {
                    if (cover())
                        result.outcome = SearchOutcome::Found;
                }
                catch (const Abort &) {
                    result.outcome = SearchOutcome::LimitReached;
                }
                result.nodes = _nodes;
                if (result.outcome == SearchOutcome::Found)
                    result.cycles = _found;
                return result;
            }

        private:
            Order _n;
            int _m;
            SearchLimits _limits;
            vector<char> _allowed, _used;
            int64_t _remaining;
            vector<OrbitType> _types;
            vector<RotCycle> _found;
            vector<Residue> _path;
            uint64_t _nodes = 0;
            std::chrono::steady_clock::time_point _start;

            auto tick() -> void
            {
                ++_nodes;
                if (_limits.node_limit && _nodes > _limits.node_limit)
                    throw Abort{};
                if (_limits.budget.count() && (_nodes & 0xfff) == 0
                    && std::chrono::steady_clock::now() - _start > _limits.budget)
                    throw Abort{};
            }

            auto free(Length l) const -> bool
            {
                return l >= 1 && l < int64_t(_allowed.size()) && _allowed[l] && ! _used[l];
            }

            auto cover() -> bool
            {
                if (_remaining == 0)
                    return true;
                Length first = 1;
                while (! free(first))
                    ++first;

                for (auto & type : _types) {
                    if (type.edges > _remaining)
                        continue;
                    if (type.edges == 1) {
                        if (std::ranges::binary_search(type.ends, _n.reduce(first))
                            && place_and_continue(type, {0, first}))
                            return true;
                        continue;
                    }
                    if (first % type.step == 0)
                        continue;
                    _path = {0, _n.reduce(first)};
                    _used[first] = true;
                    --_remaining;
                    auto done = extend(type);
                    _used[first] = false;
                    ++_remaining;
                    if (done)
                        return true;
                }
                return false;
            }

            auto distinct_class(Residue w, int64_t k) const -> bool
            {
                for (auto u : _path)
                    if ((w - u) % k == 0)
                        return false;
                return true;
            }

            auto extend(const OrbitType & type) -> bool
            {
                tick();
                auto i = int(_path.size()) - 1;
                auto last = _path.back();
                if (i == type.edges - 1) {
                    for (auto e : type.ends) {
                        auto diff = _n.reduce(e - last);
                        if (diff == 0)
                            continue;
                        auto l = mod_length(diff, _n);
                        if (! free(l))
                            continue;
                        auto path = _path;
                        path.push_back(e);
                        _used[l] = true;
                        --_remaining;
                        auto saved = _path;
                        auto done = place_and_continue(type, path);
                        _path = std::move(saved);
                        _used[l] = false;
                        ++_remaining;
                        if (done)
                            return true;
                    }
                    return false;
                }

                for (Length l = 1; l < int64_t(_allowed.size()); ++l) {
                    if (! free(l))
                        continue;
                    for (int sign : {+1, -1}) {
                        auto w = _n.reduce(last + sign * l);
                        if (sign == -1 && 2 * l == _n.value())
                            continue;
                        if (! distinct_class(w, type.step))
                            continue;
                        _path.push_back(w);
                        _used[l] = true;
                        --_remaining;
                        auto done = extend(type);
                        _used[l] = false;
                        ++_remaining;
                        _path.pop_back();
                        if (done)
                            return true;
                    }
                }
                return false;
            }

            // The path's lengths are already marked used (apart from the p = 1 case).
            auto place_and_continue(const OrbitType & type, const vector<Residue> & path) -> bool
            {
                if (type.edges == 1) {
                    auto l = mod_length(path[1], _n);
                    _used[l] = true;
                    --_remaining;
                    _found.push_back(cycle_from_path(BasePath{path}, _n));
                    auto done = cover();
                    if (! done) {
                        _found.pop_back();
                        _used[l] = false;
                        ++_remaining;
                    }
                    return done;
                }
                if (type.edges == _m)
                    _found.emplace_back(_n, vector<int64_t>(path.begin(), path.end() - 1));
                else
                    _found.push_back(cycle_from_path(BasePath{path}, _n));
                auto done = cover();
                if (! done)
                    _found.pop_back();
                return done;
            }
        };
    }

    auto search_cyclic_cover(Order n, int m, const vector<Length> & lengths, const SearchLimits & limits) -> SearchResult
    {
        if (m < 3 || m > n.value())
            throw DomainError("cycle length must lie in [3, n]");
        return CoverSearch{n, m, lengths, limits}.run();
    }
}
