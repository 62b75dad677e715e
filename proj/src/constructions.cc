#include <ccs/constructions.hh>
#include <ccs/difference_tuples.hh>
#include <ccs/orbits.hh>
#include <ccs/search.hh>
#include <ccs/verifier.hh>

#include <algorithm>
#include <functional>
#include <numeric>
#include <ranges>
#include <set>

using std::int64_t;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace ccs
{
    ConstructionError::ConstructionError(string f, string c, const string & detail) :
        std::runtime_error(f + " [" + c + "]: " + detail), family(std::move(f)), check(std::move(c))
    {
    }

    auto lift_by_factor(const GeneratingSet & x, int64_t f) -> GeneratingSet
    {
        if (f < 1)
            throw DomainError("lift factor must be positive");
        Order target{x.n.value() * f};
        GeneratingSet result{target, x.m, {}};
        for (auto & b : x.cycles)
            result.cycles.push_back({b.cycle.scaled(f, target), "lift×" + to_string(f) + "/" + b.provenance});
        return result;
    }

    namespace
    {
        auto join(const vector<int64_t> & xs) -> string
        {
            string s = "(";
            for (size_t i = 0; i < xs.size(); ++i)
                s += (i ? "," : "") + to_string(xs[i]);
            return s + ")";
        }

        auto range(int64_t from, int64_t to) -> vector<int64_t>
        {
            vector<int64_t> r;
            for (auto x = from; x <= to; ++x)
                r.push_back(x);
            return r;
        }

        // Accumulates base cycles for one family, checking each piece as it goes.
        class Builder
        {
        public:
            Builder(string family, int64_t n, int m) : _family(std::move(family)), _set{Order{n}, m, {}} {}

            auto n() const -> Order { return _set.n; }
            auto family() const -> const string & { return _family; }

            [[noreturn]] auto fail(const string & check, const string & detail) const -> void
            {
                throw ConstructionError(_family, check, detail);
            }

            auto require(bool condition, const string & check, const string & detail) const -> void
            {
                if (! condition)
                    fail(check, detail);
            }

            auto add(RotCycle c, const string & piece) -> void
            {
                for (auto l : length_set(c))
                    _covered.insert(l);
                _set.cycles.push_back({std::move(c), _family + ":" + piece});
            }

            auto add_path(const vector<int64_t> & path, const string & piece) -> void
            {
                try {
                    add(cycle_from_path(BasePath{path}, n()), piece);
                }
                catch (const TranslateCollision & e) {
                    fail(piece, "path " + join(path) + ": " + e.what());
                }
            }

            auto add_tuple(const vector<int64_t> & d, const string & piece) -> void
            {
                int64_t sum = std::accumulate(d.begin(), d.end(), int64_t{0});
                require(sum == 0, piece, "tuple " + join(d) + " sums to " + to_string(sum));
                try {
                    add(tuple_to_cycle(DifferenceTuple{d, n()}), piece);
                }
                catch (const InvalidTuple & e) {
                    fail(piece, "tuple " + join(d) + ": " + e.what());
                }
            }

            auto add_row(const ArrayRow & row, const TuplePattern & pattern, RowSum sum, const string & piece) -> void
            {
                require(row.size() == pattern.size(), piece, "row " + join(row) + " has the wrong width");
                require(row.front() > 0, piece, "row " + join(row) + " has a non-positive entry");
                require(std::ranges::adjacent_find(row, std::greater_equal<>{}) == row.end(), piece,
                    "row " + join(row) + " is not strictly increasing");
                require(row_condition(row, sum), piece, "row " + join(row) + " fails its sum identity");
                auto applied = apply_pattern(row, pattern, n());
                add_tuple(applied.tuple.d, piece);
            }

            auto add_all(const GeneratingSet & x) -> void
            {
                for (auto & b : x.cycles) {
                    for (auto l : length_set(b.cycle))
                        _covered.insert(l);
                    _set.cycles.push_back(b);
                }
            }

            // Lengths in {1, ..., (n−2)/2} not yet covered, ascending.
            auto uncovered() const -> vector<int64_t>
            {
                vector<int64_t> result;
                for (int64_t l = 1; l < n().half(); ++l)
                    if (! _covered.contains(l))
                        result.push_back(l);
                return result;
            }

            auto covered_count() const -> size_t { return _covered.size(); }

            auto take() -> GeneratingSet { return std::move(_set); }

        private:
            string _family;
            GeneratingSet _set;
            std::set<int64_t> _covered;
        };

        // Splits an ascending list into runs of two consecutive integers; returns the run starts.
        auto consecutive_pairs(const Builder & b, const vector<int64_t> & xs) -> vector<int64_t>
        {
            vector<int64_t> starts;
            for (size_t i = 0; i < xs.size(); i += 2) {
                b.require(i + 1 < xs.size() && xs[i + 1] == xs[i] + 1, "pairing",
                    "leftover length " + to_string(xs[i]) + " has no consecutive partner");
                starts.push_back(xs[i]);
            }
            return starts;
        }

        auto expand_pairs(vector<int64_t> row, const vector<int64_t> & starts, size_t from, size_t count) -> vector<int64_t>
        {
            for (size_t i = from; i < from + count; ++i) {
                row.push_back(starts[i]);
                row.push_back(starts[i] + 1);
            }
            return row;
        }

        // First six columns of row i in the 2s-row arrays of the t ≡ 1, 3 (mod 4) families.
        auto leading_columns(int64_t i, int64_t s) -> vector<int64_t>
        {
            auto u = (i + 1) / 2;
            auto c5 = 8 * s + 4 * (u - 1) + 1 + (1 - i % 2);
            return {4 * i - 3, 4 * i - 2, 4 * i - 1, 4 * i, c5, c5 + 2};
        }

        auto require_class(bool ok, const string & family, int m, int t) -> void
        {
            if (! ok)
                throw DomainError(family + " does not cover (m, t) = (" + to_string(m) + ", " + to_string(t) + ")");
        }

        auto require_feasible(int m, int t) -> void
        {
            auto verdict = feasible(Params::make(m, t));
            if (! verdict.feasible)
                throw InfeasibleError(verdict);
        }

        auto ham(int m, const HamOptions & options) -> GeneratingSet
        {
            return ham_system(m, options).generating_set;
        }

        // t = 2: a half-length path doubled, the length-2 cycle, and 2r−1 two-edge paths.
        auto m0mod8_t2(int m) -> GeneratingSet
        {
            int64_t r = m / 8, n = 2 * m;
            Builder b{"m0mod8-t2", n, m};
            vector<int64_t> p{0};
            auto zigzag = [&] {
                for (int64_t j = 1; j <= r; ++j) {
                    p.push_back(-(4 * j - 1));
                    p.push_back(4 * j - 1);
                }
            };
            if (r == 1)
                p = {0, -3, 3, 7, 8};
            else if (r == 2)
                p = {0, -3, 3, -7, 7, -1, -5, -4, 16};
            else if (r % 2 == 1) {
                // Edge lengths 3, 6, 10, ..., 8r−2, 4r, 4, 1, 8, ..., 4r−4, 4r+8, ..., 8r−4, 4r+4.
                zigzag();
                for (auto v : {8 * r - 1, 8 * r - 5, 8 * r - 4})
                    p.push_back(v);
                for (int64_t i = 1; i <= r - 2; ++i)
                    p.push_back(i % 2 ? 8 * r + 2 * (i + 1) : 8 * r - 4 - 2 * i);
                for (int64_t j = 0; j <= (r - 3) / 2; ++j) {
                    p.push_back(6 * r - 10 - 4 * j);
                    if (j <= (r - 5) / 2)
                        p.push_back(10 * r + 2 + 4 * j);
                }
                p.push_back(8 * r);
            }
            else {
                zigzag();
                for (auto v : {-1, -5, -4})
                    p.push_back(v);
                for (int64_t j = 1;; ++j) {
                    p.push_back(4 * j);
                    if (4 * j == 2 * r - 4)
                        break;
                    p.push_back(-4 * (j + 1));
                }
                for (int64_t j = 0;; ++j) {
                    p.push_back(-(2 * r + 4 * j));
                    if (2 * r + 4 * j == 4 * r - 4)
                        break;
                    p.push_back(2 * r + 8 + 4 * j);
                }
                p.push_back(8 * r);
            }
            b.require(int64_t(p.size()) == 4 * r + 1, "half-path", "path has " + to_string(p.size() - 1) + " edges");
            b.add_path(p, "half-path");

            vector<int64_t> evens;
            for (int64_t v = 0; v < n; v += 2)
                evens.push_back(v);
            b.add(RotCycle{b.n(), evens}, "length-2");

            for (int64_t i = 0; i <= r - 2; ++i) {
                b.add_path({0, 9 + 8 * i, 4}, "pair-path");
                b.add_path({0, 11 + 8 * i, 4}, "pair-path");
            }
            b.add_path({0, 8 * r - 3, -4}, "top-pair-path");
            return b.take();
        }

        // t = 4: one difference tuple, the length-4 cycle, and two-edge paths ending at ±8.
        auto m2mod4_t4(int m, bool patch_m6_gap) -> GeneratingSet
        {
            int64_t n = 4 * m;
            Builder b{"m2mod4-t4", n, m};
            vector<int64_t> d{1};
            int sign = -1;
            for (int64_t v = 2; v <= 2 * m - 2; v += 4, sign = -sign)
                d.push_back(sign * v);
            d.push_back(-3);
            sign = +1;
            for (int64_t v = 8; v <= 2 * m - 8; v += 4, sign = -sign)
                d.push_back(sign * v);
            d.push_back(2 * m - 4);
            b.require(int64_t(d.size()) == m, "tuple", "unrolled tuple has " + to_string(d.size()) + " entries");
            b.add_tuple(d, "tuple");

            vector<int64_t> fours;
            for (int64_t v = 0; v < n; v += 4)
                fours.push_back(v);
            b.add(RotCycle{b.n(), fours}, "length-4");

            auto k = m / 8, tail = m % 8;
            if (k == 0) {
                b.add_path({0, 13, 8}, "pair-path");
                if (patch_m6_gap)
                    b.add_path({0, 2 * m - 3, -8}, "gap-patch");
                return b.take();
            }
            for (int64_t i = 0; i < k; ++i)
                for (int64_t o : {13, 15, 17, 19})
                    b.add_path({0, o + 16 * i, 8}, "pair-path");
            if (tail == 6) {
                b.add_path({0, 2 * m - 1, -8}, "pair-path");
                b.add_path({0, 2 * m - 3, -8}, "pair-path");
            }
            return b.take();
        }

        // m = 10, t = 4s+1.
        auto m10_t1mod4(int t) -> GeneratingSet
        {
            int64_t s = (t - 1) / 4, n = 10 * t;
            Builder b{"m10-t1mod4", n, 10};
            b.add_path({0, 5 * t - 1, 2 * t}, "pair-path");
            b.add_path({0, 5 * t - 2, 2 * t}, "pair-path");
            for (int64_t i = 1; i <= 2 * s; ++i) {
                auto row = leading_columns(i, s);
                for (int64_t c = 0; c < 4; ++c)
                    row.push_back(12 * s + 3 + 4 * (i - 1) + c);
                b.add_row(row, pattern_p3(10), RowSum::P3, "array-row");
            }
            return b.take();
        }

        // Shared tail of the t ≡ 1, 3 (mod 4) families: once the paths have covered a
        // set of lengths, the leftovers are {1, ..., 12s} plus consecutive pairs, which
        // fill 2s P3-pattern rows.
        auto fill_rows(Builder & b, int m, int64_t s) -> void
        {
            auto rest = b.uncovered();
            auto lead = 12 * s;
            b.require(int64_t(rest.size()) >= lead && std::ranges::equal(rest | std::views::take(lead), range(1, lead)),
                "leftover", "lengths 1.." + to_string(lead) + " are not all left for the array");
            vector<int64_t> tail(rest.begin() + lead, rest.end());
            auto starts = consecutive_pairs(b, tail);
            size_t per_row = (m - 6) / 2;
            b.require(starts.size() == size_t(2 * s) * per_row, "leftover",
                to_string(starts.size()) + " leftover pairs for " + to_string(2 * s) + " rows");
            for (int64_t i = 1; i <= 2 * s; ++i)
                b.add_row(expand_pairs(leading_columns(i, s), starts, (i - 1) * per_row, per_row), pattern_p3(m),
                    RowSum::P3, "array-row");
        }

        // m = 8r+2 ≥ 18, t = 5: paths ending at 5·2^a cover 4r lengths.
        auto m2mod8_t5(int m) -> GeneratingSet
        {
            int64_t r = (m - 2) / 8, n = 5 * m;
            Builder b{"m2mod8-t5", n, m};
            auto q = (2 * r - 4) / 6, rem = (2 * r - 4) % 6;
            int64_t a = 1;
            while ((int64_t{1} << (a - 1)) < q + 2)
                ++a;
            b.require((int64_t{1} << (a - 1)) <= 5 * q + 2, "exponent", "no admissible exponent");
            auto e = 5 * (int64_t{1} << a);
            auto add = [&](int64_t i, int64_t j) { b.add_path({0, 10 * (2 * r - i) + j, e}, "pair-path"); };
            for (int64_t j = 1; j <= 4; ++j)
                add(0, j);
            for (int64_t i = 1; i <= q; ++i)
                for (int64_t j = 1; j <= 6; ++j)
                    add(i, j);
            for (int64_t j = 6 - rem + 1; j <= 6; ++j)
                add(q + 1, j);
            b.require(int64_t(b.covered_count()) == 4 * r, "pair-path",
                "paths cover " + to_string(b.covered_count()) + " lengths, expected " + to_string(4 * r));
            fill_rows(b, m, 1);
            return b.take();
        }

        // m = 8r+2, t = 4s+1 with r, s ≥ 2: paths ending at 4t cover 4r lengths.
        auto m2mod8_t1mod4(int m, int t) -> GeneratingSet
        {
            int64_t r = (m - 2) / 8, s = (t - 1) / 4, n = int64_t(m) * t;
            Builder b{"m2mod8-t1mod4", n, m};
            auto w = r / 2, odd = r % 2;
            auto q = w / s, rem = w % s;
            auto add = [&](int64_t i, int64_t j) { b.add_path({0, 4 * (r - 2 * i) * t + j, 4 * t}, "pair-path"); };
            for (int64_t i = 0; i < q; ++i)
                for (int64_t j = 1; j < t; ++j)
                    add(i, j);
            for (int64_t j = t - 4 * rem - 2 * odd; j < t; ++j)
                add(q, j);
            b.require(int64_t(b.covered_count()) == 4 * r, "pair-path",
                "paths cover " + to_string(b.covered_count()) + " lengths, expected " + to_string(4 * r));
            fill_rows(b, m, s);
            return b.take();
        }

        // m = 6, t = 4s+3 with s ≥ 1.
        auto m6_t3mod4(int t) -> GeneratingSet
        {
            int64_t s = (t - 3) / 4, n = 6 * t;
            Builder b{"m6-t3mod4", n, 6};
            for (int64_t i = 1; i <= 4; ++i)
                b.add_path({0, 3 * t - i, 2 * t}, "pair-path");
            auto lead = range(1, 4 * s - 2);
            for (auto x : range(4 * s + 3, 8 * s + 4))
                lead.push_back(x);
            for (int64_t i = 1; i <= 2 * s; ++i) {
                auto u = (i + 1) / 2;
                auto c5 = 8 * s + 4 * (u - 1) + 5 + (1 - i % 2);
                vector<int64_t> row(lead.begin() + 4 * (i - 1), lead.begin() + 4 * i);
                row.push_back(c5);
                row.push_back(c5 + 2);
                b.add_row(row, pattern_p3_6(), RowSum::P3, "array-row");
            }
            return b.take();
        }

        // (6, 3): the family above degenerates at s = 0 (its third path closes on
        // itself); the 8 lengths are covered by a complete cyclic-cover search instead.
        auto m6_t3() -> GeneratingSet
        {
            Builder b{"m6-t3", 18, 6};
            auto found = search_cyclic_cover(Order{18}, 6, range(1, 8));
            b.require(found.outcome == SearchOutcome::Found, "cover-search", "no cover of {1..8} found");
            for (auto & c : found.cycles)
                b.add(c, "cover-search");
            return b.take();
        }

        // Assigns the leftover lengths to rows whose first columns are fixed, by
        // lexicographic search over which entries each row takes.
        auto split_rows(Builder & b, int m, const vector<vector<int64_t>> & heads, const vector<int64_t> & rest) -> void
        {
            auto pattern = pattern_p3(m);
            size_t width = m - heads.front().size();
            vector<vector<int64_t>> chosen;
            vector<char> taken(rest.size(), 0);

            auto valid = [&](const vector<int64_t> & row) {
                if (std::ranges::adjacent_find(row, std::greater_equal<>{}) != row.end() || ! row_condition(row, RowSum::P3))
                    return false;
                return apply_pattern(row, pattern, b.n()).report.ok();
            };

            std::function<bool(size_t)> assign = [&](size_t r) -> bool {
                if (r == heads.size())
                    return true;
                vector<size_t> pick;
                std::function<bool(size_t)> choose = [&](size_t from) -> bool {
                    if (pick.size() == width) {
                        auto row = heads[r];
                        for (auto i : pick)
                            row.push_back(rest[i]);
                        if (! valid(row))
                            return false;
                        for (auto i : pick)
                            taken[i] = 1;
                        chosen.push_back(row);
                        if (assign(r + 1))
                            return true;
                        chosen.pop_back();
                        for (auto i : pick)
                            taken[i] = 0;
                        return false;
                    }
                    for (auto i = from; i < rest.size(); ++i) {
                        if (taken[i])
                            continue;
                        pick.push_back(i);
                        if (choose(i + 1))
                            return true;
                        pick.pop_back();
                    }
                    return false;
                };
                return choose(0);
            };

            b.require(rest.size() == width * heads.size(), "row-split", "leftover count does not fill the rows");
            b.require(assign(0), "row-split", "no assignment of leftover lengths to rows");
            for (auto & row : chosen)
                b.add_row(row, pattern, RowSum::P3, "array-row");
        }

        // m = 14, t = 4s+3 with s ≥ 1: ten paths ending at 2t, then 2s P3 rows.
        auto m14_t3mod4(int t) -> GeneratingSet
        {
            int64_t s = (t - 3) / 4, n = 14 * t;
            Builder b{"m14-t3mod4", n, 14};
            // Path i is degenerate when 7t − i ≡ 0 (mod 2t), i.e. i = t; index 11 takes its place.
            vector<int64_t> indices;
            for (int64_t i = 1; i <= 10; ++i)
                if (i != t)
                    indices.push_back(i);
            bool replaced = indices.size() < 10;
            if (replaced)
                indices.push_back(11);
            for (auto i : indices)
                b.add_path({0, 7 * t - i, 2 * t}, replaced && i == 11 ? "replacement-path" : "pair-path");

            if (! replaced) {
                for (int64_t i = 1; i <= 2 * s; ++i) {
                    auto row = leading_columns(i, s);
                    for (int64_t c = 0; c < 4; ++c)
                        row.push_back(12 * s + 1 + 4 * (i - 1) + c);
                    for (int64_t c = 0; c < 4; ++c)
                        row.push_back(i == 1 ? 20 * s + 1 + c : 20 * s + 15 + 4 * (i - 2) + c);
                    b.add_row(row, pattern_p3(14), RowSum::P3, "array-row");
                }
                return b.take();
            }

            auto rest = b.uncovered();
            auto lead = 12 * s;
            b.require(std::ranges::equal(rest | std::views::take(lead), range(1, lead)), "leftover",
                "lengths 1.." + to_string(lead) + " are not all left for the array");
            vector<vector<int64_t>> heads;
            for (int64_t i = 1; i <= 2 * s; ++i)
                heads.push_back(leading_columns(i, s));
            split_rows(b, 14, heads, vector<int64_t>(rest.begin() + lead, rest.end()));
            return b.take();
        }

        // m = 8r+6, t = 3: paths ending at 3·2^a, one difference tuple, and the
        // cycle from the path 0, 2, 6.
        auto m6mod8_t3(int m) -> GeneratingSet
        {
            int64_t r = (m - 6) / 8, n = 3 * m;
            Builder b{"m6mod8-t3", n, m};
            auto q = (2 * r - 2) / 4, rem = (2 * r - 2) % 4;
            int64_t a = 1;
            while ((int64_t{1} << (a - 1)) < q + 1)
                ++a;
            b.require(6 * (int64_t{1} << (a - 1)) <= 18 * q + 9 + 5 * rem, "exponent", "no admissible exponent");
            auto e = 3 * (int64_t{1} << a);
            auto add = [&](int64_t i, int64_t j) { b.add_path({0, 6 * (2 * r - i) + j, e}, "pair-path"); };
            add(0, 7);
            add(0, 8);
            for (int64_t i = 0; i < q; ++i)
                for (int64_t j = 1; j <= 4; ++j)
                    add(i, j);
            for (int64_t j = 5 - rem; j <= 4; ++j)
                add(q, j);
            b.require(int64_t(b.covered_count()) == 4 * r, "pair-path",
                "paths cover " + to_string(b.covered_count()) + " lengths, expected " + to_string(4 * r));

            auto rest = b.uncovered();
            b.require(rest.size() >= 8 && std::ranges::equal(rest | std::views::take(8), range(1, 8)), "leftover",
                "lengths 1..8 are not all left");
            auto starts = consecutive_pairs(b, vector<int64_t>(rest.begin() + 8, rest.end()));
            auto count = int64_t(starts.size());
            vector<int64_t> d{1, -3, 6, -7};
            for (int64_t i = 1; i <= count; ++i)
                d.push_back(i % 2 ? starts[i - 1] : -starts[i - 1]);
            for (int64_t i = count - 1; i >= 1; --i)
                d.push_back((count - 1 - i) % 2 == 0 ? -(starts[i - 1] + 1) : starts[i - 1] + 1);
            d.push_back(8);
            d.push_back(-5);
            d.push_back(starts[count - 1] + 1);
            b.require(int64_t(d.size()) == m, "tuple", "tuple has " + to_string(d.size()) + " entries");
            b.add_tuple(d, "tuple");
            b.add_path({0, 2, 6}, "length-2-4");
            return b.take();
        }

        // m = 8r+6 ≥ 22, t = 4s+3 ≥ 7.
        auto m6mod8_t3mod4(int m, int t) -> GeneratingSet
        {
            int64_t r = (m - 6) / 8, s = (t - 3) / 4, n = int64_t(m) * t;
            Builder b{"m6mod8-t3mod4", n, m};
            int64_t wide = 6 * r + 4 < t - 1 ? 0 : 1;
            auto budget = 6 * r + 4 - (t - 1) * wide;
            auto q = budget / (2 * t - 2), rem = budget % (2 * t - 2);
            auto add = [&](int64_t i, int64_t j) {
                b.add_path({0, 2 * t * (2 * r - 2 * i - 1) + j, 2 * t}, "pair-path");
            };
            if (wide)
                for (int64_t j = 1; j <= t - 1; ++j)
                    add(-1, j);
            for (int64_t i = 0; i < q; ++i)
                for (int64_t j = 1; j <= 2 * t - 2; ++j)
                    add(i, j);
            for (int64_t j = 2 * t - 1 - rem; j <= 2 * t - 2; ++j)
                add(q, j);
            b.require(int64_t(b.covered_count()) == 12 * r + 8, "pair-path",
                "paths cover " + to_string(b.covered_count()) + " lengths, expected " + to_string(12 * r + 8));
            fill_rows(b, m, s);
            return b.take();
        }
    }

    auto construct_mod8_0(int m, int t) -> GeneratingSet
    {
        require_class(m % 8 == 0 && m >= 8, "construct_mod8_0", m, t);
        require_feasible(m, t);
        auto base = m0mod8_t2(m);
        if (t == 2)
            return base;

        int64_t k = t / 2, n = int64_t(2) * m * k;
        Builder b{"m0mod8-teven", n, m};
        b.add_all(lift_by_factor(base, k));
        for (int64_t i = 1; i <= k - 1; ++i) {
            ArrayRow row;
            for (int64_t j = 1; j <= m; ++j)
                row.push_back((j - 1) * k + i);
            b.add_row(row, pattern_p1(m), RowSum::P1, "array-row");
        }
        return b.take();
    }

    auto construct_mod8_4(int m, int t, const HamOptions & options) -> GeneratingSet
    {
        require_class(m % 8 == 4, "construct_mod8_4", m, t);
        require_feasible(m, t);
        if (t == 1)
            return ham(m, options);

        int64_t n = int64_t(m) * t;
        if (t % 2 == 1) {
            int64_t k = (t - 1) / 2;
            Builder b{"m4mod8-todd", n, m};
            b.add_all(lift_by_factor(ham(m, options), t));
            for (int64_t i = 1; i <= k; ++i) {
                ArrayRow row;
                for (int64_t j = 1; j <= m; ++j)
                    row.push_back((j - 1) * k + (j - 1) / 2 + i);
                b.add_row(row, pattern_p1(m), RowSum::P1, "array-row");
            }
            return b.take();
        }

        int64_t k = t / 2, r = m / 4;
        Builder b{"m4mod8-teven", n, m};
        b.add_all(lift_by_factor(ham(m, options), t));
        for (int64_t i = 1; i <= k - 1; ++i) {
            ArrayRow row;
            for (int64_t j = 1; j <= m; ++j) {
                auto u = (j - 1) / 4;
                int64_t column[] = {4 * u * k + 1 + i, (4 * u + 1) * k + i, (4 * u + 2) * k + i, (4 * u + 3) * k - 1 + i};
                row.push_back(column[(j - 1) % 4]);
            }
            b.add_row(row, pattern_p1(m), RowSum::P1, "array-row");
        }
        // The remaining lengths pair up as d_{2i−1} = 4(i−1)k+1 and d_{2i} = 4ik−1.
        auto d = [&](int64_t j) { return j % 2 ? 4 * ((j + 1) / 2 - 1) * k + 1 : 4 * (j / 2) * k - 1; };
        for (int64_t i = 1; i <= r; ++i) {
            int64_t x;
            if (r % 2 == 0)
                x = i % 2 ? d(2 * i + 1) : d(2 * i);
            else if (i == 1)
                x = 1;
            else
                x = i % 2 == 0 ? d(2 * i + 1) : d(2 * i);
            b.add_path({0, x, 4 * k}, "pair-path");
        }
        return b.take();
    }

    auto construct_mod4_2_t0mod4(int m, int t, const T0Mod4Options & options) -> GeneratingSet
    {
        require_class(m % 4 == 2 && m >= 6 && t % 4 == 0, "construct_mod4_2_t0mod4", m, t);
        require_feasible(m, t);
        auto base = m2mod4_t4(m, options.patch_m6_gap);
        if (t == 4)
            return base;

        int64_t k = t / 4, n = int64_t(4) * m * k;
        Builder b{"m2mod4-t0mod4", n, m};
        b.add_all(lift_by_factor(base, k));
        for (int64_t i = 1; i <= 2 * k - 1; ++i) {
            if (i == k)
                continue;
            ArrayRow row{i, 4 * k - i};
            for (int64_t j = 3; j <= m; ++j)
                row.push_back(2 * k * (j - 1) + i);
            b.add_row(row, pattern_p2(m), RowSum::P2, "array-row");
        }
        return b.take();
    }

    auto construct_mod8_2_t1mod4(int m, int t, const HamOptions & options) -> GeneratingSet
    {
        require_class(m % 8 == 2 && t % 4 == 1, "construct_mod8_2_t1mod4", m, t);
        require_feasible(m, t);
        if (t == 1)
            return ham(m, options);
        if (m == 10)
            return m10_t1mod4(t);
        if (t == 5)
            return m2mod8_t5(m);
        return m2mod8_t1mod4(m, t);
    }

    auto construct_mod8_6_t3mod4(int m, int t) -> GeneratingSet
    {
        require_class(m % 8 == 6 && t % 4 == 3, "construct_mod8_6_t3mod4", m, t);
        require_feasible(m, t);
        if (m == 6)
            return t == 3 ? m6_t3() : m6_t3mod4(t);
        if (t == 3)
            return m6mod8_t3(m);
        if (m == 14)
            return m14_t3mod4(t);
        return m6mod8_t3mod4(m, t);
    }

    auto dispatch(const Params & p, const HamOptions & options) -> GeneratingSet
    {
        auto verdict = feasible(p);
        if (! verdict.feasible)
            throw InfeasibleError(verdict);
        auto [m, t] = p;
        auto x = m % 8 == 0     ? construct_mod8_0(m, t)
            : m % 8 == 4        ? construct_mod8_4(m, t, options)
            : t % 4 == 0        ? construct_mod4_2_t0mod4(m, t)
            : m % 8 == 2        ? construct_mod8_2_t1mod4(m, t, options)
                                : construct_mod8_6_t3mod4(m, t);
        auto report = verify(x);
        if (! report.ok)
            throw ConstructionError(x.cycles.empty() ? "dispatch" : x.cycles.front().provenance, "verification",
                report.summary());
        return x;
    }
}
