#include <ccs/core.hh>
#include <ccs/feasibility.hh>

using std::int64_t;
using std::string;
using std::to_string;

namespace ccs
{
    auto Params::make(int64_t m, int64_t t) -> Params
    {
        if (m < 4 || m % 2 != 0)
            throw DomainError("m must be even and at least 4, got " + to_string(m));
        if (t < 1)
            throw DomainError("t must be positive, got " + to_string(t));
        if (m > 1'000'000 || t > 1'000'000)
            throw DomainError("parameters out of supported range");
        return Params{int(m), int(t)};
    }

    auto ParityNote::describe() const -> string
    {
        auto parity = [](int64_t x) { return x % 2 ? "odd" : "even"; };
        string s = "{1.." + to_string(lengths) + "} has " + to_string(evens) + " even (" + parity(evens) + ") and "
            + to_string(odds) + " odd (" + parity(odds) + ") lengths";
        switch (constraint) {
            case ParityConstraint::None: return s + "; no parity constraint";
            case ParityConstraint::TEvenForced: return s + "; t must be even";
            case ParityConstraint::TOddForced: return s + "; t must be odd";
            case ParityConstraint::Contradiction: return s + "; t would have to be both even and odd";
        }
        return s;
    }

    auto parity_note(int m, int t) -> ParityNote
    {
        if (m % 2 != 0 || t < 1)
            throw DomainError("parity constraint needs even m and positive t");
        int64_t n = int64_t(m) * t;
        ParityNote note{};
        note.lengths = (n - 2) / 2;
        note.evens = note.lengths / 2;
        note.odds = note.lengths - note.evens;
        bool even_forced = note.evens % 2 == 1, odd_forced = note.odds % 2 == 1;
        note.constraint = even_forced && odd_forced ? ParityConstraint::Contradiction
            : even_forced                         ? ParityConstraint::TEvenForced
            : odd_forced                          ? ParityConstraint::TOddForced
                                                  : ParityConstraint::None;
        return note;
    }

    auto parity_constraint(int m, int t) -> ParityConstraint
    {
        return parity_note(m, t).constraint;
    }

    auto consistent(ParityConstraint c, int t) -> bool
    {
        switch (c) {
            case ParityConstraint::None: return true;
            case ParityConstraint::TEvenForced: return t % 2 == 0;
            case ParityConstraint::TOddForced: return t % 2 == 1;
            case ParityConstraint::Contradiction: return false;
        }
        return false;
    }

    auto is_twice_odd_prime_power(int64_t m) -> bool
    {
        if (m < 2 || m % 2 != 0)
            return false;
        auto h = m / 2;
        if (h % 2 == 0 || h == 1)
            return false;
        int64_t p = h;
        for (int64_t d = 3; d * d <= h; d += 2)
            if (h % d == 0) {
                p = d;
                break;
            }
        while (h % p == 0)
            h /= p;
        return h == 1;
    }

    auto feasible(const Params & p) -> FeasibilityVerdict
    {
        auto [m, t] = p;
        if (m % 2 != 0 || m < 4)
            throw DomainError("m must be even and at least 4, got " + to_string(m));
        FeasibilityVerdict v{true, 0, "", parity_note(m, t)};
        auto t4 = t % 4;
        switch (m % 8) {
            case 0:
                v.clause = 1;
                v.feasible = t4 == 0 || t4 == 2;
                v.reason = "m ≡ 0 (mod 8) requires t ≡ 0,2 (mod 4)";
                break;
            case 2:
                v.clause = 2;
                if (t4 != 0 && t4 != 1) {
                    v.feasible = false;
                    v.reason = "m ≡ 2 (mod 8) requires t ≡ 0,1 (mod 4)";
                }
                else if (t == 1 && is_twice_odd_prime_power(m)) {
                    v.feasible = false;
                    v.reason = "m = 2p^α requires t > 1";
                }
                else
                    v.reason = "m ≡ 2 (mod 8) admits t ≡ 0,1 (mod 4), with t > 1 when m = 2p^α";
                break;
            case 4:
                v.clause = 3;
                v.reason = "m ≡ 4 (mod 8) admits every t ≥ 1";
                break;
            case 6:
                v.clause = 4;
                v.feasible = t4 == 0 || t4 == 3;
                v.reason = "m ≡ 6 (mod 8) requires t ≡ 0,3 (mod 4)";
                break;
        }
        return v;
    }

    InfeasibleError::InfeasibleError(FeasibilityVerdict v) :
        verdict(std::move(v)),
        _what("no cyclic system exists (clause " + to_string(verdict.clause) + "): " + verdict.reason)
    {
    }
}
