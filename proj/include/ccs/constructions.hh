#ifndef CCS_CONSTRUCTIONS_HH
#define CCS_CONSTRUCTIONS_HH 1

#include <ccs/core.hh>
#include <ccs/feasibility.hh>
#include <ccs/ham_base.hh>

#include <string>

namespace ccs
{
    // A construction step produced something that is not what the family promises.
    class ConstructionError : public std::runtime_error
    {
    public:
        ConstructionError(std::string family, std::string check, const std::string & detail);

        std::string family, check;
    };

    // Multiply every vertex by f: a system on Z_{n0} becomes one on the
    // multiples-of-f lengths of Z_{f·n0}.
    auto lift_by_factor(const GeneratingSet &, std::int64_t f) -> GeneratingSet;

    // m ≡ 0 (mod 8), t even.
    auto construct_mod8_0(int m, int t) -> GeneratingSet;

    // m ≡ 4 (mod 8), any t; builds on the hamiltonian system of K_m − I.
    auto construct_mod8_4(int m, int t, const HamOptions & = {}) -> GeneratingSet;

    struct T0Mod4Options
    {
        // At m = 6 the unrolled t = 4 family leaves lengths {7, 9} uncovered; the
        // patch adds the path 0, 9, 16 in line with the larger-m tail cases.
        bool patch_m6_gap = true;
    };

    // m ≡ 2 (mod 4), t ≡ 0 (mod 4).
    auto construct_mod4_2_t0mod4(int m, int t, const T0Mod4Options & = {}) -> GeneratingSet;

    // m ≡ 2 (mod 8), t ≡ 1 (mod 4).
    auto construct_mod8_2_t1mod4(int m, int t, const HamOptions & = {}) -> GeneratingSet;

    // m ≡ 6 (mod 8), t ≡ 3 (mod 4).
    auto construct_mod8_6_t3mod4(int m, int t) -> GeneratingSet;

    // Routes by (m mod 8, t mod 4). The result has passed verify(); infeasible
    // parameters raise InfeasibleError.
    auto dispatch(const Params &, const HamOptions & = {}) -> GeneratingSet;
}

#endif
