#include <ccs/cli.hh>
#include <ccs/document.hh>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ccs;
using std::string;

namespace
{
    struct Run
    {
        int code;
        string out, err;
    };

    auto run(std::vector<string> args) -> Run
    {
        args.insert(args.begin(), "ccs");
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return {code, out.str(), err.str()};
    }

    auto scratch(const string & name) -> string
    {
        auto p = std::filesystem::temp_directory_path() / ("ccs_cli_" + name);
        std::filesystem::remove(p);
        return p.string();
    }
}

TEST_CASE("generate writes a verified document")
{
    auto r = run({"generate", "-m", "8", "-t", "2"});
    CHECK(r.code == exit_ok);
    auto x = parse_document(r.out);
    CHECK(x.cycles.size() == 3);

    auto path = scratch("doc.json");
    CHECK(run({"generate", "-m", "8", "-t", "2", "-o", path}).code == exit_ok);
    auto v = run({"verify", path});
    CHECK(v.code == exit_ok);
    CHECK(v.out.find("ok") != string::npos);
    std::filesystem::remove(path);

    auto e = run({"generate", "-m", "6", "-t", "4", "--expand"});
    CHECK(e.code == exit_ok);
    CHECK(nlohmann::json::parse(e.out)["expanded"].size() == 44);
}

TEST_CASE("generate refuses infeasible and invalid parameters")
{
    auto r = run({"generate", "-m", "6", "-t", "2"});
    CHECK(r.code == exit_negative);
    CHECK(r.out.empty());
    CHECK(r.err.find("no cyclic 6-cycle system") != string::npos);

    CHECK(run({"generate", "-m", "7", "-t", "2"}).code == exit_usage);
    CHECK(run({"generate", "-m", "8"}).code == exit_usage);
    CHECK(run({"generate", "-m", "x", "-t", "1"}).code == exit_usage);
    CHECK(run({"bogus"}).code == exit_usage);
    CHECK(run({}).code == exit_usage);
}

TEST_CASE("verify reports failures and malformed input")
{
    auto path = scratch("broken.json");
    auto doc = nlohmann::json::parse(run({"generate", "-m", "8", "-t", "2"}).out);
    doc["generating_set"].erase(doc["generating_set"].begin());
    std::ofstream(path) << doc.dump();
    auto r = run({"verify", path});
    CHECK(r.code == exit_negative);
    CHECK(r.out.find("missing_edges") != string::npos);

    std::ofstream(path) << "{\"n\": 3}";
    auto bad = run({"verify", path});
    CHECK(bad.code == exit_usage);
    CHECK(bad.err.find("validation error") != string::npos);
    std::filesystem::remove(path);

    CHECK(run({"verify", scratch("absent.json")}).code == exit_usage);
}

TEST_CASE("feasible")
{
    auto yes = run({"feasible", "-m", "8", "-t", "2"});
    CHECK(yes.code == exit_ok);
    CHECK(yes.out.starts_with("feasible: true\n"));

    auto no = run({"feasible", "-m", "10", "-t", "1", "--explain"});
    CHECK(no.code == exit_negative);
    CHECK(no.out.find("feasible: false") != string::npos);
    CHECK(no.out.find("2p^α requires t > 1") != string::npos);
    CHECK(no.out.find("parity:") != string::npos);

    auto parity = run({"feasible", "-m", "6", "-t", "2", "--explain"});
    CHECK(parity.code == exit_negative);
    CHECK(parity.out.find("t must be") != string::npos);

    CHECK(run({"feasible", "-m", "5", "-t", "1"}).code == exit_usage);
}

TEST_CASE("table")
{
    auto r = run({"table", "--m-max", "10", "--t-max", "4"});
    CHECK(r.code == exit_ok);
    std::istringstream in(r.out);
    string header, m4, m6, m8, m10;
    std::getline(in, header);
    std::getline(in, m4);
    std::getline(in, m6);
    std::getline(in, m8);
    std::getline(in, m10);
    CHECK(header == "m \\ t   1  2  3  4");
    CHECK(m4 == "m=4     ✓  ✓  ✓  ✓");
    CHECK(m6 == "m=6     ✗  ✗  ✓  ✓");
    CHECK(m8 == "m=8     ✗  ✓  ✗  ✓");
    CHECK(m10 == "m=10    ✗  ✗  ✗  ✓");

    auto c = run({"table", "--m-max", "12", "--t-max", "6", "--check", "--jobs", "2"});
    CHECK(c.code == exit_ok);
    CHECK(c.out.find(" 0 failed, 0 resource-limited") != string::npos);

    CHECK(run({"table", "--m-max", "2", "--t-max", "4"}).code == exit_usage);
}

TEST_CASE("search")
{
    auto found = run({"search", "-m", "4", "-n", "8"});
    CHECK(found.code == exit_ok);
    CHECK(parse_document(found.out).cycles.size() >= 1);

    auto none = run({"search", "-m", "6", "-n", "12"});
    CHECK(none.code == exit_negative);
    CHECK(none.out.starts_with("none:"));

    auto big = run({"search", "-m", "6", "-n", "30"});
    CHECK(big.code == exit_resource);
}
