#include <ccs/core.hh>

#include <algorithm>
#include <numeric>

using std::int64_t;
using std::string;
using std::to_string;
using std::vector;

namespace ccs
{
    Order::Order(int64_t n) : _n(n)
    {
        if (n < 3)
            throw DomainError("order must be at least 3, got " + to_string(n));
    }

    auto Order::reduce(int64_t x) const -> Residue
    {
        auto r = x % _n;
        return r < 0 ? r + _n : r;
    }

    auto mod_length(int64_t x, Order n) -> Length
    {
        auto r = n.reduce(x);
        if (r == 0)
            throw DomainError("length of " + to_string(x) + " ≡ 0 (mod " + to_string(n.value()) + ")");
        return std::min(r, n.value() - r);
    }

    auto Edge::make(int64_t x, int64_t y, Order n) -> Edge
    {
        auto a = n.reduce(x), b = n.reduce(y);
        if (a == b)
            throw DomainError("edge endpoints coincide at " + to_string(a));
        return a < b ? Edge{a, b} : Edge{b, a};
    }

    CirculantSpec::CirculantSpec(Order n, vector<Length> lengths) : _n(n), _lengths(std::move(lengths))
    {
        std::ranges::sort(_lengths);
        for (auto l : _lengths)
            if (l < 1 || l > n.half())
                throw DomainError("length " + to_string(l) + " outside [1, " + to_string(n.half()) + "]");
        if (std::ranges::adjacent_find(_lengths) != _lengths.end())
            throw DomainError("repeated length in circulant spec");
    }

    auto kn_minus_i_spec(Order n) -> CirculantSpec
    {
        if (! n.even())
            throw DomainError("K_n − I needs even n, got " + to_string(n.value()));
        vector<Length> lengths(n.half() - 1);
        std::iota(lengths.begin(), lengths.end(), 1);
        return CirculantSpec{n, std::move(lengths)};
    }

    auto edges_of(const CirculantSpec & spec) -> vector<Edge>
    {
        auto n = spec.order();
        vector<Edge> result;
        for (auto l : spec.lengths()) {
            // the half-length class has only n/2 distinct edges
            auto starts = (n.even() && l == n.half()) ? n.half() : n.value();
            for (int64_t g = 0; g < starts; ++g)
                result.push_back(Edge::make(g, g + l, n));
        }
        std::ranges::sort(result);
        return result;
    }

    RotCycle::RotCycle(Order n, const vector<int64_t> & vertices) : _n(n)
    {
        if (vertices.size() < 3)
            throw DomainError("a cycle needs at least 3 vertices");
        _vertices.reserve(vertices.size());
        for (auto v : vertices)
            _vertices.push_back(n.reduce(v));
        auto sorted = _vertices;
        std::ranges::sort(sorted);
        if (auto d = std::ranges::adjacent_find(sorted); d != sorted.end())
            throw DomainError("cycle repeats vertex " + to_string(*d));
    }

    auto RotCycle::edges() const -> vector<Edge>
    {
        vector<Edge> result;
        result.reserve(size());
        for (std::size_t i = 0; i < size(); ++i)
            result.push_back(Edge::make(_vertices[i], _vertices[(i + 1) % size()], _n));
        return result;
    }

    auto RotCycle::translated(int64_t by) const -> RotCycle
    {
        auto vs = _vertices;
        for (auto & v : vs)
            v += by;
        return RotCycle{_n, vs};
    }

    auto RotCycle::scaled(int64_t factor, Order target) const -> RotCycle
    {
        auto vs = _vertices;
        for (auto & v : vs)
            v *= factor;
        return RotCycle{target, vs};
    }

    auto length_multiset(const RotCycle & c) -> vector<Length>
    {
        vector<Length> result;
        for (auto & e : c.edges())
            result.push_back(e.length(c.order()));
        std::ranges::sort(result);
        return result;
    }

    auto length_set(const RotCycle & c) -> vector<Length>
    {
        auto result = length_multiset(c);
        auto [first, last] = std::ranges::unique(result);
        result.erase(first, last);
        return result;
    }

    auto gcd(int64_t a, int64_t b) -> int64_t
    {
        return std::gcd(a, b);
    }

    auto divisors(int64_t n) -> vector<int64_t>
    {
        vector<int64_t> small, large;
        for (int64_t d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                small.push_back(d);
                if (d * d != n)
                    large.push_back(n / d);
            }
        small.insert(small.end(), large.rbegin(), large.rend());
        return small;
    }
}
