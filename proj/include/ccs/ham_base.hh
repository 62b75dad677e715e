#ifndef CCS_HAM_BASE_HH
#define CCS_HAM_BASE_HH 1

#include <ccs/core.hh>

#include <chrono>
#include <optional>
#include <string>

namespace ccs
{
    struct HamSystem
    {
        int m;
        GeneratingSet generating_set; // over Z_m, every cycle hamiltonian
    };

    struct HamOptions
    {
        std::chrono::milliseconds budget{60'000};
        std::optional<std::string> cache_path; // JSON file, read and updated
    };

    class NoHamSystem : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Why no cyclic hamiltonian system of K_m − I exists, or nullopt if one does.
    auto ham_refusal(int m) -> std::optional<std::string>;

    // Throws NoHamSystem when none exists and ResourceError when the search
    // exceeds its budget. Results are verified, and memoised per process.
    auto ham_system(int m, const HamOptions & = {}) -> HamSystem;

    // Bypasses every cache; used to regenerate shipped data.
    auto search_ham_system(int m, std::chrono::milliseconds budget) -> HamSystem;

    // Cache file: {"format_version": 1, "systems": {"<m>": <system document>}}.
    auto load_ham_cache(const std::string & path, int m) -> std::optional<GeneratingSet>;
    auto store_ham_cache(const std::string & path, const HamSystem &) -> void;
}

#endif
