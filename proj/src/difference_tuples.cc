#include <ccs/difference_tuples.hh>

#include <algorithm>
#include <map>

using std::int64_t;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace ccs
{
    auto TupleReport::failed(int condition) const -> bool
    {
        return std::ranges::any_of(failures, [&](const TupleFailure & f) { return f.condition == condition; });
    }

    auto validate_tuple(const DifferenceTuple & t) -> TupleReport
    {
        auto n = t.n;
        TupleReport report;
        if (t.d.size() < 3 || int64_t(t.d.size()) > n.value()) {
            report.failures.push_back({1, {}, "tuple size " + to_string(t.d.size()) + " outside [3, n]"});
            return report;
        }

        std::map<Length, size_t> first_with_length;
        for (size_t i = 0; i < t.d.size(); ++i) {
            if (n.reduce(t.d[i]) == 0) {
                report.failures.push_back({2, {i}, "entry " + to_string(t.d[i]) + " ≡ 0"});
                continue;
            }
            auto l = mod_length(t.d[i], n);
            if (n.even() && l == n.half())
                report.failures.push_back({2, {i}, "entry " + to_string(t.d[i]) + " has length n/2"});
            else if (auto [it, fresh] = first_with_length.emplace(l, i); ! fresh)
                report.failures.push_back({2, {it->second, i}, "repeated length " + to_string(l)});
        }

        int64_t sum = 0;
        for (auto x : t.d)
            sum += x;
        if (n.reduce(sum) != 0)
            report.failures.push_back({3, {}, "sum " + to_string(sum) + " ≢ 0"});

        std::map<Residue, size_t> first_with_prefix;
        int64_t prefix = 0;
        for (size_t r = 0; r < t.d.size(); ++r) {
            prefix += t.d[r];
            if (auto [it, fresh] = first_with_prefix.emplace(n.reduce(prefix), r); ! fresh)
                report.failures.push_back({4, {it->second, r}, "partial sums coincide at " + to_string(n.reduce(prefix))});
        }
        return report;
    }

    auto tuple_to_cycle(const DifferenceTuple & t) -> RotCycle
    {
        auto report = validate_tuple(t);
        if (! report.ok()) {
            auto & f = report.failures.front();
            throw InvalidTuple("difference tuple violates condition (" + to_string(f.condition) + "): " + f.detail);
        }
        vector<int64_t> vertices{0};
        for (size_t i = 0; i + 1 < t.d.size(); ++i)
            vertices.push_back(vertices.back() + t.d[i]);
        return RotCycle{t.n, vertices};
    }

    auto apply_pattern(const ArrayRow & row, const TuplePattern & p, Order n) -> PatternedTuple
    {
        if (row.size() != p.size())
            throw DomainError("row has " + to_string(row.size()) + " entries, pattern has " + to_string(p.size()));
        vector<int64_t> d;
        d.reserve(p.size());
        for (auto & e : p) {
            if (e.column < 1 || size_t(e.column) > row.size())
                throw DomainError("pattern column " + to_string(e.column) + " out of range");
            d.push_back(e.sign * row[e.column - 1]);
        }
        DifferenceTuple tuple{std::move(d), n};
        auto report = validate_tuple(tuple);
        return PatternedTuple{std::move(tuple), std::move(report)};
    }

    auto pattern_p1(int m) -> TuplePattern
    {
        if (m < 4 || m % 4 != 0)
            throw DomainError("pattern P1 needs m ≡ 0 (mod 4), got " + to_string(m));
        TuplePattern p;
        for (int c = 1; c < m; c += 2)
            p.push_back({c, (c / 2) % 2 == 0 ? +1 : -1});
        for (int c = m - 2; c >= 2; c -= 2)
            p.push_back({c, (c / 2) % 2 == 1 ? -1 : +1});
        p.push_back({m, +1});
        return p;
    }

    auto pattern_p2(int m) -> TuplePattern
    {
        if (m < 6 || m % 4 != 2)
            throw DomainError("pattern P2 needs m ≡ 2 (mod 4), m ≥ 6, got " + to_string(m));
        TuplePattern p{{1, +1}, {2, +1}};
        for (int c = 4; c <= m - 2; c += 2)
            p.push_back({c, c % 4 == 0 ? -1 : +1});
        p.push_back({m, -1});
        for (int c = m - 3; c >= 3; c -= 2)
            p.push_back({c, c % 4 == 3 ? +1 : -1});
        p.push_back({m - 1, +1});
        return p;
    }

    auto pattern_p3(int m) -> TuplePattern
    {
        if (m < 6 || m % 4 != 2)
            throw DomainError("pattern P3 needs m ≡ 2 (mod 4), m ≥ 6, got " + to_string(m));
        TuplePattern p{{1, +1}, {2, -1}};
        for (int c = 3; c < m; c += 2)
            p.push_back({c, c % 4 == 3 ? +1 : -1});
        for (int c = m - 2; c >= 4; c -= 2)
            p.push_back({c, c % 4 == 0 ? -1 : +1});
        p.push_back({m, +1});
        return p;
    }

    auto pattern_p3_6() -> TuplePattern
    {
        return {{1, +1}, {2, -1}, {3, +1}, {4, -1}, {5, -1}, {6, +1}};
    }

    namespace
    {
        // Columns j ≡ 0,1 (mod 4) on one side, j ≡ 2,3 on the other, over [from, m].
        auto balanced(const ArrayRow & a, size_t from) -> int64_t
        {
            int64_t diff = 0;
            for (size_t j = from; j <= a.size(); ++j)
                diff += (j % 4 == 0 || j % 4 == 1) ? a[j - 1] : -a[j - 1];
            return diff;
        }
    }

    auto row_condition(const ArrayRow & a, RowSum kind) -> bool
    {
        auto m = a.size();
        switch (kind) {
            case RowSum::P1:
                return balanced(a, 1) == 0;
            case RowSum::P2: {
                if (m < 6)
                    return false;
                auto at = [&](size_t j) { return a[j - 1]; };
                for (size_t j = 3; j + 3 <= m; j += 4)
                    if (at(j) + at(j + 3) != at(j + 1) + at(j + 2))
                        return false;
                return at(1) + at(2) + at(m - 3) + at(m - 1) == at(m - 2) + at(m);
            }
            case RowSum::P3:
                if (m < 3)
                    return false;
                return a[1] + balanced(a, 3) == a[0];
        }
        return false;
    }
}
