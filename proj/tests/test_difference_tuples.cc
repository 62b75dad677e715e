#include <ccs/difference_tuples.hh>

#include <doctest.h>

#include <random>

using namespace ccs;
using std::int64_t;
using std::vector;

namespace
{
    auto prefix_cycle(const vector<int64_t> & d, int64_t n) -> vector<Residue>
    {
        vector<Residue> v{0};
        for (size_t i = 0; i + 1 < d.size(); ++i)
            v.push_back(((v.back() + d[i]) % n + n) % n);
        return v;
    }

    auto signed_sum(const ArrayRow & row, const TuplePattern & p) -> int64_t
    {
        int64_t s = 0;
        for (auto & e : p)
            s += e.sign * row[e.column - 1];
        return s;
    }

    auto as_list(const TuplePattern & p) -> vector<int>
    {
        vector<int> r;
        for (auto & e : p)
            r.push_back(e.sign * e.column);
        return r;
    }
}

TEST_CASE("validate_tuple reports each condition")
{
    CHECK(validate_tuple({{1, -2, 6, -10, -3, 8}, Order{24}}).ok());
    CHECK(validate_tuple({{1, 2, -3}, Order{9}}).ok());

    auto bad = validate_tuple({{1, -1, 2}, Order{8}});
    CHECK(bad.failed(2));
    REQUIRE(! bad.failures.empty());
    CHECK(bad.failures.front().indices == vector<size_t>{0, 1});

    CHECK(validate_tuple({{1, 2, 4}, Order{9}}).failed(3));
    CHECK(validate_tuple({{1, 3, -2, -5, 3}, Order{20}}).failed(2));
    // partial sums 1, 3, 0, 1: repeat
    CHECK(validate_tuple({{1, 2, -3, 1, -1}, Order{9}}).failed(4));
    // n/2 is the removed 1-factor
    CHECK(validate_tuple({{4, 1, 3}, Order{8}}).failed(2));
}

TEST_CASE("tuple_to_cycle traces prefix sums")
{
    CHECK(tuple_to_cycle({{1, 2, -3}, Order{9}}).vertices() == vector<Residue>{0, 1, 3});

    vector<int64_t> d{1, -2, 6, -10, -3, 8};
    auto expected = prefix_cycle(d, 24);
    CHECK(expected == vector<Residue>{0, 1, 23, 5, 19, 16});
    auto c = tuple_to_cycle({d, Order{24}});
    CHECK(c.vertices() == expected);
    CHECK(length_set(c) == vector<Length>{1, 2, 3, 6, 8, 10});

    CHECK_THROWS_AS(tuple_to_cycle({{1, -1, 2}, Order{8}}), InvalidTuple);
    try {
        tuple_to_cycle({{1, 2, 4}, Order{9}});
    }
    catch (const InvalidTuple & e) {
        CHECK(std::string(e.what()).find("(3)") != std::string::npos);
    }
}

TEST_CASE("built-in patterns unroll as expected")
{
    CHECK(as_list(pattern_p1(8)) == vector<int>{1, -3, 5, -7, -6, 4, -2, 8});
    CHECK(as_list(pattern_p3(10)) == vector<int>{1, -2, 3, -5, 7, -9, -8, 6, -4, 10});
    CHECK(as_list(pattern_p2(6)) == vector<int>{1, 2, -4, -6, 3, 5});
    CHECK(as_list(pattern_p3_6()) == vector<int>{1, -2, 3, -4, -5, 6});
    CHECK_THROWS_AS(pattern_p1(6), DomainError);
    CHECK_THROWS_AS(pattern_p3(8), DomainError);

    for (int m : {4, 8, 12, 16, 20, 40})
        CHECK(pattern_p1(m).size() == size_t(m));
    for (int m : {6, 10, 14, 18, 22, 42}) {
        for (auto p : {pattern_p2(m), pattern_p3(m)}) {
            vector<int> seen(m + 1, 0);
            for (auto & e : p)
                ++seen[e.column];
            CHECK(std::count(seen.begin() + 1, seen.end(), 1) == m);
        }
    }
}

TEST_CASE("apply_pattern on a P3 row")
{
    ArrayRow row{1, 2, 3, 4, 9, 11, 15, 16, 17, 18};
    auto applied = apply_pattern(row, pattern_p3(10), Order{50});
    CHECK(applied.tuple.d == vector<int64_t>{1, -2, 3, -9, 15, -17, -16, 11, -4, 18});
    CHECK(applied.report.ok());
    CHECK(signed_sum(row, pattern_p3(10)) == 0);
    auto c = tuple_to_cycle(applied.tuple);
    CHECK(c.vertices() == prefix_cycle(applied.tuple.d, 50));
    CHECK(c.vertices() == vector<Residue>{0, 1, 49, 2, 43, 8, 41, 25, 36, 32});

    CHECK_THROWS_AS(apply_pattern({1, 2, 3}, pattern_p1(4), Order{20}), DomainError);
}

TEST_CASE("apply_pattern on a P2 row of the t = 4k array")
{
    // m = 6, k = 2: row i = 1 is (i, 4k − i, 2k·2 + i, ..., 2k·5 + i)
    ArrayRow row{1, 7, 9, 13, 17, 21};
    CHECK(row_condition(row, RowSum::P2));
    auto applied = apply_pattern(row, pattern_p2(6), Order{48});
    CHECK(applied.report.ok());
    CHECK(signed_sum(row, pattern_p2(6)) == 0);
}

TEST_CASE("row_condition")
{
    CHECK(row_condition({1, 2, 3, 4, 9, 11, 15, 16, 17, 18}, RowSum::P3));
    CHECK(row_condition({1, 2, 3, 4}, RowSum::P1));
    CHECK(! row_condition({1, 2, 3, 5}, RowSum::P1));
}

TEST_CASE("row conditions make the matching pattern sum to zero")
{
    std::mt19937_64 rng(7);
    int hits = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        int m = 4 + 2 * int(rng() % 5);
        ArrayRow row;
        int64_t v = 0;
        for (int j = 0; j < m; ++j)
            row.push_back(v += 1 + int64_t(rng() % 3));
        if (m % 4 == 0 && row_condition(row, RowSum::P1)) {
            ++hits;
            CHECK(signed_sum(row, pattern_p1(m)) == 0);
        }
        if (m % 4 == 2 && m >= 6) {
            if (row_condition(row, RowSum::P3)) {
                ++hits;
                CHECK(signed_sum(row, pattern_p3(m)) == 0);
            }
            if (row_condition(row, RowSum::P2)) {
                ++hits;
                CHECK(signed_sum(row, pattern_p2(m)) == 0);
            }
        }
    }
    CHECK(hits > 100);
}

TEST_CASE("the unrolled t = 4 tuple at m = 6 is a difference tuple")
{
    auto report = validate_tuple({{1, -2, 6, -10, -3, 8}, Order{24}});
    CHECK(report.ok());
}
