#include <ccs/core.hh>

#include <doctest.h>

#include <algorithm>

#include <set>

using namespace ccs;
using std::int64_t;
using std::vector;

TEST_CASE("mod_length picks the representative in [1, n/2]")
{
    CHECK(mod_length(7, Order{10}) == 3);
    CHECK(mod_length(5, Order{10}) == 5);
    CHECK(mod_length(13, Order{16}) == 3);
    CHECK(mod_length(-3, Order{16}) == 3);
    CHECK_THROWS_AS(mod_length(20, Order{10}), DomainError);

    for (int64_t n = 3; n <= 30; ++n)
        for (int64_t x = -2 * n; x <= 2 * n; ++x) {
            if (x % n == 0)
                continue;
            auto l = mod_length(x, Order{n});
            CHECK(l == mod_length(-x, Order{n}));
            CHECK(l == mod_length(x + n, Order{n}));
            CHECK(l >= 1);
            CHECK(2 * l <= n);
            CHECK(((x - l) % n == 0 || (x + l) % n == 0));
        }
}

TEST_CASE("Order rejects tiny values")
{
    CHECK_THROWS_AS(Order{2}, DomainError);
    CHECK(Order{10}.reduce(-3) == 7);
}

TEST_CASE("kn_minus_i_spec lists every length below n/2")
{
    CHECK(kn_minus_i_spec(Order{16}).lengths() == vector<Length>{1, 2, 3, 4, 5, 6, 7});
    CHECK(kn_minus_i_spec(Order{4}).lengths() == vector<Length>{1});
    CHECK(kn_minus_i_spec(Order{24}).lengths().size() == 11);
    CHECK(kn_minus_i_spec(Order{24}).lengths().back() == 11);
    CHECK_THROWS_AS(kn_minus_i_spec(Order{15}), DomainError);
}

TEST_CASE("CirculantSpec validates its lengths")
{
    CHECK_THROWS_AS(CirculantSpec(Order{8}, {5}), DomainError);
    CHECK_THROWS_AS(CirculantSpec(Order{8}, {0}), DomainError);
    CHECK_THROWS_AS(CirculantSpec(Order{8}, {2, 2}), DomainError);
}

TEST_CASE("edges_of counts full and half length classes")
{
    CHECK(edges_of(CirculantSpec{Order{8}, {2}}).size() == 8);
    CHECK(edges_of(CirculantSpec{Order{8}, {4}}).size() == 4);

    // oracle: all pairs i < j whose difference is not n/2
    std::set<Edge> expected;
    for (int64_t i = 0; i < 16; ++i)
        for (int64_t j = i + 1; j < 16; ++j)
            if (j - i != 8)
                expected.insert(Edge{i, j});
    auto got = edges_of(kn_minus_i_spec(Order{16}));
    CHECK(got.size() == 112);
    CHECK(std::set<Edge>(got.begin(), got.end()) == expected);
}

TEST_CASE("length classes partition K_n")
{
    for (int64_t n = 4; n <= 40; n += 2) {
        Order order{n};
        CHECK(int64_t(edges_of(kn_minus_i_spec(order)).size()) == n * (n - 2) / 2);
        std::set<Edge> all;
        size_t total = 0;
        for (Length l = 1; l <= n / 2; ++l) {
            auto es = edges_of(CirculantSpec{order, {l}});
            total += es.size();
            all.insert(es.begin(), es.end());
        }
        CHECK(total == all.size());
        CHECK(int64_t(all.size()) == n * (n - 1) / 2);
    }
}

TEST_CASE("length_multiset reads one length per edge")
{
    RotCycle c{Order{16}, {0, 13, 3, 7, 8, 5, 11, 15}};
    // oracle: differences of consecutive vertices, folded by hand
    vector<Length> expected;
    auto & v = c.vertices();
    for (size_t i = 0; i < v.size(); ++i) {
        auto d = ((v[(i + 1) % v.size()] - v[i]) % 16 + 16) % 16;
        expected.push_back(d <= 8 ? d : 16 - d);
    }
    std::ranges::sort(expected);
    CHECK(expected == vector<Length>{1, 1, 3, 3, 4, 4, 6, 6});
    CHECK(length_multiset(c) == expected);
    CHECK(length_set(c) == vector<Length>{1, 3, 4, 6});

    CHECK(length_multiset(RotCycle{Order{16}, {0, 2, 4, 6, 8, 10, 12, 14}}) == vector<Length>(8, 2));
    CHECK(length_multiset(RotCycle{Order{4}, {0, 1, 2, 3}}) == vector<Length>{1, 1, 1, 1});
}

TEST_CASE("RotCycle keeps reduced distinct vertices")
{
    RotCycle c{Order{16}, {0, -3, 3, 7}};
    CHECK(c.vertices() == vector<Residue>{0, 13, 3, 7});
    CHECK_THROWS_AS((RotCycle{Order{16}, {0, 1, 17}}), DomainError);
    CHECK_THROWS_AS((RotCycle{Order{16}, {0, 1}}), DomainError);
    CHECK(c.translated(3).vertices() == vector<Residue>{3, 0, 6, 10});
    CHECK(Edge::make(13, 3, Order{16}) == Edge{3, 13});
    CHECK_THROWS_AS(Edge::make(1, 17, Order{16}), DomainError);
}

TEST_CASE("divisors ascend")
{
    CHECK(divisors(12) == vector<int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(16) == vector<int64_t>{1, 2, 4, 8, 16});
}
