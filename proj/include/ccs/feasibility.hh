#ifndef CCS_FEASIBILITY_HH
#define CCS_FEASIBILITY_HH 1

#include <cstdint>
#include <optional>
#include <string>

namespace ccs
{
    struct Params
    {
        int m; // even, ≥ 4
        int t; // ≥ 1

        static auto make(std::int64_t m, std::int64_t t) -> Params;
        auto n() const -> std::int64_t { return std::int64_t(m) * t; }
    };

    enum class ParityConstraint
    {
        None,
        TEvenForced,
        TOddForced,
        Contradiction
    };

    // Counting argument on {1, ..., N}, N = (mt−2)/2: a length-ℓ orbit of full size
    // contributes an even sum, so an odd number of even (resp. odd) lengths pins t's parity.
    struct ParityNote
    {
        std::int64_t lengths;   // N
        std::int64_t evens, odds;
        ParityConstraint constraint;

        auto describe() const -> std::string;
    };

    auto parity_note(int m, int t) -> ParityNote;
    auto parity_constraint(int m, int t) -> ParityConstraint;
    auto consistent(ParityConstraint, int t) -> bool;

    auto is_twice_odd_prime_power(std::int64_t m) -> bool;

    struct FeasibilityVerdict
    {
        bool feasible;
        int clause;          // 1: m ≡ 0, 2: m ≡ 2, 3: m ≡ 4, 4: m ≡ 6 (mod 8)
        std::string reason;
        ParityNote parity;
    };

    auto feasible(const Params &) -> FeasibilityVerdict;

    class InfeasibleError : public std::exception
    {
    public:
        explicit InfeasibleError(FeasibilityVerdict v);
        auto what() const noexcept -> const char * override { return _what.c_str(); }

        FeasibilityVerdict verdict;

    private:
        std::string _what;
    };
}

#endif
