#include <ccs/orbits.hh>

#include <algorithm>
#include <map>
#include <ranges>
#include <set>

using std::int64_t;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace ccs
{
    namespace
    {
        auto sorted_edges(const RotCycle & c, int64_t shift) -> vector<Edge>
        {
            auto n = c.order();
            auto & v = c.vertices();
            vector<Edge> result;
            result.reserve(v.size());
            for (size_t i = 0; i < v.size(); ++i)
                result.push_back(Edge::make(v[i] + shift, v[(i + 1) % v.size()] + shift, n));
            std::ranges::sort(result);
            return result;
        }
    }

    auto orbit_length(const RotCycle & c) -> int64_t
    {
        auto n = c.order().value();
        auto base = sorted_edges(c, 0);
        for (auto k : divisors(n))
            if (k == n || sorted_edges(c, k) == base)
                return k;
        return n;
    }

    auto expand_orbit(const RotCycle & c) -> vector<RotCycle>
    {
        auto k = orbit_length(c);
        vector<RotCycle> result;
        result.reserve(k);
        for (int64_t j = 0; j < k; ++j)
            result.push_back(c.translated(j));
        return result;
    }

    auto cycle_from_path(const BasePath & p, Order n) -> RotCycle
    {
        if (p.vertices.size() < 2)
            throw DomainError("base path needs at least one edge");
        if (n.reduce(p.vertices.front()) != 0)
            throw DomainError("base path must start at 0");
        auto e = n.reduce(p.vertices.back());
        if (e == 0)
            throw DomainError("base path ends at 0; use a difference tuple instead");
        auto s = n.value() / gcd(e, n.value());
        vector<int64_t> vertices;
        std::set<Residue> seen;
        for (int64_t j = 0; j < s; ++j)
            for (size_t i = 0; i + 1 < p.vertices.size(); ++i) {
                auto v = n.reduce(p.vertices[i] + j * e);
                if (! seen.insert(v).second)
                    throw TranslateCollision("translate collision at residue " + to_string(v) + " (step " + to_string(e)
                            + ", n = " + to_string(n.value()) + ")", v);
                vertices.push_back(v);
            }
        return RotCycle{n, vertices};
    }

    auto lemma21_check(const RotCycle & input, int m) -> PropertyReport
    {
        auto n = input.order();
        auto nv = n.value();
        PropertyReport report;
        auto fail = [&](int property, string detail) { report.failures.push_back({property, std::move(detail)}); };

        if (int64_t(input.size()) != m) {
            fail(1, "cycle has " + to_string(input.size()) + " vertices, expected " + to_string(m));
            return report;
        }

        auto k = orbit_length(input);
        auto d = nv / k; // number of times each length occurs
        report.orbit_length = k;

        auto lengths = length_multiset(input);
        std::map<Length, int64_t> count;
        for (auto l : lengths)
            ++count[l];

        report.checked.push_back(1);
        if (int64_t(count.size()) * nv != int64_t(m) * k)
            fail(1, "|ℓ(C)| = " + to_string(count.size()) + " but mk/n = " + to_string(double(m) * k / nv));

        report.checked.push_back(2);
        for (auto & [l, c] : count)
            if (c != d)
                fail(2, "length " + to_string(l) + " occurs " + to_string(c) + " times, expected " + to_string(d));

        report.checked.push_back(3);
        if (gcd(m, nv) % d != 0)
            fail(3, "n/k = " + to_string(d) + " does not divide gcd(m, n) = " + to_string(gcd(m, nv)));

        for (auto & [l, c] : count)
            if (l % k == 0) {
                report.checked.push_back(4);
                if (m != nv / gcd(l, nv))
                    fail(4, "k | " + to_string(l) + " but m ≠ n / gcd(" + to_string(l) + ", n)");
                break;
            }

        if (k == nv || ! report.failures.empty())
            return report;

        // Translate so that the cycle passes through 0, then read the subpath leaving 0.
        auto shift = input[0];
        auto c = input.translated(-shift);
        auto p = size_t(m / d);
        vector<Residue> path;
        for (size_t i = 0; i <= p; ++i)
            path.push_back(c[i % c.size()]);

        report.checked.push_back(5);
        auto end = path.back();
        if (end % k != 0 || gcd(end / k, d) != 1)
            fail(5, "subpath ends at " + to_string(end) + ", not kx with gcd(x, n/k) = 1");

        report.checked.push_back(6);
        std::set<Residue> classes;
        for (size_t i = 0; i < p; ++i)
            if (! classes.insert(path[i] % k).second)
                fail(6, "subpath vertex " + to_string(path[i]) + " repeats a class mod " + to_string(k));

        report.checked.push_back(7);
        std::set<Length> path_lengths;
        for (size_t i = 0; i < p; ++i)
            path_lengths.insert(mod_length(path[i + 1] - path[i], n));
        if (! std::ranges::equal(path_lengths, count | std::views::keys))
            fail(7, "ℓ(P) ≠ ℓ(C)");

        report.checked.push_back(8);
        std::multiset<Edge> covered;
        for (int64_t j = 0; j < d; ++j)
            for (size_t i = 0; i < p; ++i)
                covered.insert(Edge::make(path[i] + j * k, path[i + 1] + j * k, n));
        auto own = sorted_edges(c, 0);
        if (! std::ranges::equal(covered, own))
            fail(8, "translates ρ^{jk}(P) do not partition E(C)");

        return report;
    }

    auto canonical_form(const RotCycle & c) -> vector<Residue>
    {
        auto & v = c.vertices();
        auto m = v.size();
        vector<Residue> best, candidate(m);
        for (int dir : {1, -1})
            for (size_t start = 0; start < m; ++start) {
                for (size_t i = 0; i < m; ++i)
                    candidate[i] = v[(start + m + dir * int64_t(i) % int64_t(m)) % m];
                if (best.empty() || candidate < best)
                    best = candidate;
            }
        return best;
    }

    auto translate_class_key(const RotCycle & c) -> vector<Residue>
    {
        auto k = orbit_length(c);
        vector<Residue> best;
        for (int64_t j = 0; j < k; ++j) {
            auto form = canonical_form(c.translated(-j));
            if (best.empty() || form < best)
                best = std::move(form);
        }
        return best;
    }
}
