#ifndef CCS_ORBITS_HH
#define CCS_ORBITS_HH 1

#include <ccs/core.hh>

#include <string>
#include <vector>

namespace ccs
{
    // A path 0 = v_0, v_1, ..., v_p; the last vertex is the translate step.
    struct BasePath
    {
        std::vector<std::int64_t> vertices;
    };

    class TranslateCollision : public std::runtime_error
    {
    public:
        TranslateCollision(const std::string & what, Residue duplicate) :
            std::runtime_error(what), duplicate(duplicate)
        {
        }

        Residue duplicate;
    };

    // Least k with ρ^k(C) = C (as an edge set).
    auto orbit_length(const RotCycle &) -> std::int64_t;

    auto expand_orbit(const RotCycle &) -> std::vector<RotCycle>;

    // P ∪ ρ^e(P) ∪ ρ^{2e}(P) ∪ ... where e is the endpoint of P.
    auto cycle_from_path(const BasePath &, Order n) -> RotCycle;

    struct PropertyFailure
    {
        int property; // 1..8
        std::string detail;
    };

    struct PropertyReport
    {
        std::int64_t orbit_length = 0;
        std::vector<int> checked;
        std::vector<PropertyFailure> failures;

        auto ok() const -> bool { return failures.empty(); }
    };

    // The structural facts every cycle in a cyclic m-cycle system of Z_n satisfies:
    // (1) |ℓ(C)| = mk/n, (2) each length appears n/k times, (3) (n/k) | gcd(m, n),
    // (4) k | ℓ for some ℓ ∈ ℓ(C) forces m = n / gcd(ℓ, n), and for the subpath P of
    // mk/n edges leaving 0: (5) it ends at kx with gcd(x, n/k) = 1, (6) its vertices
    // are distinct mod k, (7) ℓ(P) = ℓ(C), (8) ρ^{jk}(P) partition E(C).
    auto lemma21_check(const RotCycle &, int m) -> PropertyReport;

    // Lexicographically least rotation/reflection of the vertex sequence.
    auto canonical_form(const RotCycle &) -> std::vector<Residue>;

    // Same value for C and every ρ-translate of C.
    auto translate_class_key(const RotCycle &) -> std::vector<Residue>;
}

#endif
