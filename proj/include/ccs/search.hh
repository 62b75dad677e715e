#ifndef CCS_SEARCH_HH
#define CCS_SEARCH_HH 1

#include <ccs/core.hh>

#include <chrono>
#include <cstdint>
#include <vector>

namespace ccs
{
    struct SearchLimits
    {
        std::chrono::milliseconds budget{0}; // zero means unlimited
        std::uint64_t node_limit = 0;        // zero means unlimited
    };

    enum class SearchOutcome
    {
        Found,
        Exhausted,
        LimitReached
    };

    struct SearchResult
    {
        SearchOutcome outcome;
        std::vector<RotCycle> cycles;
        std::uint64_t nodes = 0;
    };

    // Backtracking search for m-cycles on Z_n whose rotation orbits partition the
    // circulant on `lengths`. Every cycle in a cyclic system arises from a path of
    // m/d edges (d | gcd(m, n)) with distinct lengths, vertices distinct mod n/d, and
    // endpoint (n/d)·x with gcd(x, d) = 1; the search enumerates such paths, always
    // placing the smallest uncovered length as the first edge 0 → ℓ. That removes the
    // rotation and reflection symmetry while keeping the search complete, so
    // Exhausted is a proof that no system exists.
    auto search_cyclic_cover(Order n, int m, const std::vector<Length> & lengths, const SearchLimits & = {})
        -> SearchResult;
}

#endif
