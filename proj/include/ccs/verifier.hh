#ifndef CCS_VERIFIER_HH
#define CCS_VERIFIER_HH 1

#include <ccs/core.hh>

#include <optional>
#include <string>
#include <vector>

namespace ccs
{
    struct EdgeIssue
    {
        Edge edge;
        int count;
        std::vector<std::size_t> base_cycles; // whose orbits contain the edge
    };

    struct CycleIssue
    {
        std::size_t base_cycle;
        std::string detail;
    };

    struct PropertyIssue
    {
        std::size_t base_cycle;
        int property;
        std::string detail;
    };

    struct MinimalityIssue
    {
        std::size_t first, second; // second is a translate of first
    };

    struct VerificationReport
    {
        bool ok = false;
        std::int64_t cycle_count = 0, edge_count = 0;
        std::int64_t expected_cycles = 0, expected_edges = 0;
        std::vector<EdgeIssue> duplicate_edges;
        std::vector<Edge> missing_edges;
        std::vector<EdgeIssue> foreign_edges; // the removed 1-factor
        std::vector<CycleIssue> non_simple_cycles;
        std::vector<PropertyIssue> lemma21_failures;
        std::vector<MinimalityIssue> minimality_violations;

        auto summary() const -> std::string;
    };

    // Expands every orbit and checks that the cycles partition E(K_n − I) exactly.
    auto verify(const GeneratingSet &) -> VerificationReport;

    struct ExhaustiveResult
    {
        std::optional<GeneratingSet> witness;
        std::uint64_t nodes = 0;

        auto exists() const -> bool { return witness.has_value(); }
    };

    inline constexpr std::int64_t default_exhaustive_bound = 24;

    // Complete search for a cyclic m-cycle system of K_n − I.
    auto exhaustive_search(int m, std::int64_t n, std::int64_t bound = default_exhaustive_bound) -> ExhaustiveResult;
}

#endif
