#include <ccs/document.hh>
#include <ccs/ham_base.hh>
#include <ccs/orbits.hh>
#include <ccs/verifier.hh>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ccs;
using std::string;
using std::vector;

namespace
{
    auto slurp(const string & path) -> string
    {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    auto scratch(const string & name) -> string
    {
        auto p = std::filesystem::temp_directory_path() / ("ccs_test_" + name);
        std::filesystem::remove(p);
        return p.string();
    }
}

TEST_CASE("ham_system for K_4 − I is the 4-cycle")
{
    auto h = ham_system(4);
    REQUIRE(h.generating_set.cycles.size() == 1);
    CHECK(h.generating_set.cycles[0].cycle.vertices() == vector<Residue>{0, 1, 2, 3});
    CHECK(orbit_length(h.generating_set.cycles[0].cycle) == 1);
}

TEST_CASE("ham_system for m = 12 gives 5 hamiltonian cycles")
{
    auto h = ham_system(12);
    auto r = verify(h.generating_set);
    CHECK(r.ok);
    CHECK(r.cycle_count == 5);
    for (auto & b : h.generating_set.cycles)
        CHECK(b.cycle.size() == 12);
}

TEST_CASE("ham_system refuses impossible orders")
{
    for (int m : {8, 10, 16, 18, 6, 14, 26})
        CHECK_THROWS_AS(ham_system(m), NoHamSystem);
    CHECK(ham_refusal(8)->find("no cyclic hamiltonian system exists") != string::npos);
    CHECK(ham_refusal(10)->find("2p^α") != string::npos);
    CHECK(! ham_refusal(42).has_value());
    CHECK(! ham_refusal(36).has_value());
}

TEST_CASE("ham_system reports an exhausted budget as a resource error")
{
    CHECK_THROWS_AS(search_ham_system(66, std::chrono::milliseconds{1}), ResourceError);
}

TEST_CASE("shipped hamiltonian systems verify and regenerate identically")
{
    auto path = string(CCS_DATA_DIR) + "/ham_systems.json";
    auto doc = nlohmann::json::parse(slurp(path));
    for (int m : {4, 12, 20, 28}) {
        CAPTURE(m);
        auto stored = load_ham_cache(path, m);
        REQUIRE(stored.has_value());
        CHECK(verify(*stored).ok);
        auto fresh = search_ham_system(m, std::chrono::milliseconds{60'000});
        CHECK(to_json(fresh.generating_set) == doc["systems"][std::to_string(m)]);
    }
}

TEST_CASE("ham cache round trip ignores corrupt data")
{
    auto path = scratch("cache.json");
    auto h = search_ham_system(12, std::chrono::milliseconds{60'000});
    store_ham_cache(path, h);
    store_ham_cache(path, search_ham_system(4, std::chrono::milliseconds{60'000}));
    auto back = load_ham_cache(path, 12);
    REQUIRE(back.has_value());
    CHECK(render_document(*back) == render_document(h.generating_set));
    CHECK(load_ham_cache(path, 4).has_value());
    CHECK(! load_ham_cache(path, 20).has_value());

    // tamper: swap two vertices of a stored cycle
    auto doc = nlohmann::json::parse(slurp(path));
    auto & v = doc["systems"]["12"]["generating_set"][0]["vertices"];
    std::swap(v[1], v[2]);
    std::ofstream(path) << doc.dump();
    CHECK(! load_ham_cache(path, 12).has_value());

    std::ofstream(path) << "not json";
    CHECK(! load_ham_cache(path, 12).has_value());
    std::filesystem::remove(path);
}

TEST_CASE("ham_system is deterministic")
{
    auto a = render_document(search_ham_system(20, std::chrono::milliseconds{60'000}).generating_set);
    auto b = render_document(search_ham_system(20, std::chrono::milliseconds{60'000}).generating_set);
    CHECK(a == b);
    CHECK(render_document(ham_system(20).generating_set) == a);
}
