#include <ccs/orbits.hh>

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace ccs;
using std::int64_t;
using std::vector;

namespace
{
    const RotCycle half_path_cycle{Order{16}, {0, 13, 3, 7, 8, 5, 11, 15}};
    const RotCycle even_cycle{Order{16}, {0, 2, 4, 6, 8, 10, 12, 14}};

    // oracle: least k with C + k equal to C up to rotation and reflection
    auto orbit_by_forms(const RotCycle & c) -> int64_t
    {
        auto n = c.order().value();
        auto base = canonical_form(c);
        for (int64_t k = 1; k <= n; ++k)
            if (canonical_form(c.translated(k)) == base)
                return k;
        return -1;
    }
}

TEST_CASE("orbit_length")
{
    CHECK(orbit_length(even_cycle) == 2);
    CHECK(orbit_length(half_path_cycle) == 8);
    CHECK(orbit_length(RotCycle{Order{4}, {0, 1, 2, 3}}) == 1);
}

TEST_CASE("orbit_length divides n and matches the canonical-form oracle")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        int64_t n = 6 + int64_t(rng() % 20);
        int m = 3 + int(rng() % (n - 3));
        vector<int64_t> all(n);
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        RotCycle c{Order{n}, vector<int64_t>(all.begin(), all.begin() + m)};
        auto k = orbit_length(c);
        CHECK(n % k == 0);
        CHECK(k == orbit_by_forms(c));
    }
    // a genuinely symmetric cycle: cycle_from_path builds one
    auto c = cycle_from_path(BasePath{{0, 5, 12}}, Order{16});
    CHECK(orbit_length(c) == orbit_by_forms(c));
}

TEST_CASE("expand_orbit")
{
    CHECK(expand_orbit(RotCycle{Order{4}, {0, 1, 2, 3}}).size() == 1);
    CHECK(expand_orbit(even_cycle).size() == 2);

    auto orbit = expand_orbit(half_path_cycle);
    CHECK(orbit.size() == 8);
    std::map<Length, int> per_length;
    std::set<Edge> distinct;
    int edges = 0;
    for (auto & c : orbit)
        for (auto & e : c.edges()) {
            ++edges;
            distinct.insert(e);
            auto d = e.b - e.a;
            ++per_length[d <= 8 ? d : 16 - d];
        }
    CHECK(edges == 64);
    CHECK(distinct.size() == 64);
    CHECK(per_length == std::map<Length, int>{{1, 16}, {3, 16}, {4, 16}, {6, 16}});
}

TEST_CASE("cycle_from_path")
{
    auto c = cycle_from_path(BasePath{{0, 5, 12}}, Order{16});
    CHECK(c.vertices() == vector<Residue>{0, 5, 12, 1, 8, 13, 4, 9});
    CHECK(length_multiset(c) == vector<Length>{5, 5, 5, 5, 7, 7, 7, 7});

    auto d = cycle_from_path(BasePath{{0, 24, 10}}, Order{50});
    CHECK(d.size() == 10);
    CHECK(length_multiset(d) == vector<Length>{14, 14, 14, 14, 14, 24, 24, 24, 24, 24});

    CHECK(cycle_from_path(BasePath{{0, 13, 8}}, Order{24}).vertices() == vector<Residue>{0, 13, 8, 21, 16, 5});

    CHECK_THROWS_AS(cycle_from_path(BasePath{{0, 8, 4}}, Order{16}), TranslateCollision);
    try {
        cycle_from_path(BasePath{{0, 8, 4}}, Order{16});
    }
    catch (const TranslateCollision & e) {
        CHECK(e.duplicate == 8);
    }
    CHECK_THROWS_AS(cycle_from_path(BasePath{{0, 5, 16}}, Order{16}), DomainError);
}

TEST_CASE("lemma21_check")
{
    auto r = lemma21_check(half_path_cycle, 8);
    CHECK(r.ok());
    CHECK(r.orbit_length == 8);
    for (int p : {1, 2, 3, 5, 6, 7, 8})
        CHECK(std::ranges::count(r.checked, p) == 1);

    auto e = lemma21_check(even_cycle, 8);
    CHECK(e.ok());
    CHECK(e.orbit_length == 2);
    CHECK(std::ranges::count(e.checked, 4) == 1); // k = 2 divides the length 2

    RotCycle swapped{Order{16}, {0, 3, 13, 7, 8, 5, 11, 15}};
    CHECK(! lemma21_check(swapped, 8).ok());

    CHECK(! lemma21_check(half_path_cycle, 6).ok());

    // a full-orbit cycle only has properties (1)–(3) to check
    auto full = lemma21_check(RotCycle{Order{9}, {0, 1, 3}}, 3);
    CHECK(full.ok());
    CHECK(full.orbit_length == 9);
}

TEST_CASE("cycle_from_path output passes the counting properties")
{
    for (auto path : vector<vector<int64_t>>{{0, 5, 12}, {0, 9, 4}, {0, 11, 4}, {0, 13, -4}})
        for (int64_t n : {16, 32, 48}) {
            try {
                auto c = cycle_from_path(BasePath{path}, Order{n});
                CHECK(lemma21_check(c, int(c.size())).ok());
            }
            catch (const TranslateCollision &) {
            }
        }
}

TEST_CASE("canonical forms")
{
    RotCycle a{Order{10}, {3, 7, 1, 5}};
    RotCycle b{Order{10}, {5, 1, 7, 3}};
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) == vector<Residue>{1, 5, 3, 7});
    CHECK(translate_class_key(a) == translate_class_key(a.translated(4)));
    CHECK(translate_class_key(half_path_cycle) == translate_class_key(half_path_cycle.translated(5)));
    CHECK(translate_class_key(half_path_cycle) != translate_class_key(even_cycle));
}
