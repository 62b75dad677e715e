#include <ccs/document.hh>
#include <ccs/feasibility.hh>
#include <ccs/ham_base.hh>
#include <ccs/search.hh>
#include <ccs/verifier.hh>

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

using nlohmann::json;
using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace ccs
{
    namespace
    {
        std::mutex cache_mutex;
        std::map<int, GeneratingSet> memo;

        auto read_file(const string & path) -> optional<string>
        {
            std::ifstream in(path);
            if (! in)
                return std::nullopt;
            std::stringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
    }

    auto ham_refusal(int m) -> optional<string>
    {
        if (m < 4 || m % 2 != 0)
            return "m = " + to_string(m) + " is not an even integer ≥ 4";
        switch (m % 8) {
            case 4:
                // m = 4(2r+1) makes m/2 even, so m is never 2p^α here.
                if ((m / 2) % 2 != 0)
                    throw std::logic_error("m ≡ 4 (mod 8) with odd m/2");
                return std::nullopt;
            case 2:
                if (is_twice_odd_prime_power(m))
                    return "no cyclic hamiltonian system exists: m = " + to_string(m) + " = 2p^α";
                return std::nullopt;
            default:
                return "no cyclic hamiltonian system exists: m = " + to_string(m) + " ≡ " + to_string(m % 8) + " (mod 8)";
        }
    }

    auto search_ham_system(int m, std::chrono::milliseconds budget) -> HamSystem
    {
        if (auto why = ham_refusal(m))
            throw NoHamSystem(*why);
        Order n{m};
        vector<Length> lengths(n.half() - 1);
        std::iota(lengths.begin(), lengths.end(), 1);
        auto result = search_cyclic_cover(n, m, lengths, SearchLimits{budget, 0});
        if (result.outcome == SearchOutcome::LimitReached)
            throw ResourceError("hamiltonian base search for m = " + to_string(m) + " exceeded its budget of "
                + to_string(budget.count()) + " ms");
        if (result.outcome == SearchOutcome::Exhausted)
            throw std::logic_error("hamiltonian base search exhausted for m = " + to_string(m)
                + ", contradicting the known existence result");
        GeneratingSet x{n, m, {}};
        for (auto & c : result.cycles)
            x.cycles.push_back({c, "ham"});
        if (! verify(x).ok)
            throw std::logic_error("hamiltonian base search produced an unverified set");
        return HamSystem{m, std::move(x)};
    }

    auto load_ham_cache(const string & path, int m) -> optional<GeneratingSet>
    {
        auto text = read_file(path);
        if (! text)
            return std::nullopt;
        try {
            auto doc = json::parse(*text);
            auto key = to_string(m);
            if (! doc.contains("systems") || ! doc["systems"].contains(key))
                return std::nullopt;
            auto x = from_json(doc["systems"][key]);
            // stored data is never trusted
            if (x.m != m || x.n.value() != m || ! verify(x).ok)
                return std::nullopt;
            return x;
        }
        catch (const std::exception &) {
            return std::nullopt;
        }
    }

    auto store_ham_cache(const string & path, const HamSystem & h) -> void
    {
        json doc = {{"format_version", document_format_version}, {"systems", json::object()}};
        if (auto text = read_file(path)) {
            try {
                auto existing = json::parse(*text);
                if (existing.is_object() && existing.contains("systems") && existing["systems"].is_object())
                    doc["systems"] = existing["systems"];
            }
            catch (const json::parse_error &) {
            }
        }
        doc["systems"][to_string(h.m)] = to_json(h.generating_set);
        auto tmp = path + ".tmp";
        {
            std::ofstream out(tmp);
            if (! out)
                return;
            out << doc.dump(2) << "\n";
        }
        std::error_code ec;
        std::filesystem::rename(tmp, path, ec);
    }

    auto ham_system(int m, const HamOptions & options) -> HamSystem
    {
        if (auto why = ham_refusal(m))
            throw NoHamSystem(*why);

        std::lock_guard lock(cache_mutex);
        if (auto it = memo.find(m); it != memo.end())
            return HamSystem{m, it->second};

        if (options.cache_path)
            if (auto cached = load_ham_cache(*options.cache_path, m)) {
                memo.emplace(m, *cached);
                return HamSystem{m, std::move(*cached)};
            }

        auto h = search_ham_system(m, options.budget);
        memo.emplace(m, h.generating_set);
        if (options.cache_path)
            store_ham_cache(*options.cache_path, h);
        return h;
    }
}
