#ifndef CCS_DIFFERENCE_TUPLES_HH
#define CCS_DIFFERENCE_TUPLES_HH 1

#include <ccs/core.hh>

#include <string>
#include <vector>

namespace ccs
{
    // Signed m-tuple whose prefix sums trace an m-cycle through 0 with full orbit.
    struct DifferenceTuple
    {
        std::vector<std::int64_t> d;
        Order n;
    };

    struct TupleFailure
    {
        int condition;                     // 1..4
        std::vector<std::size_t> indices;  // zero-based positions in the tuple
        std::string detail;
    };

    struct TupleReport
    {
        std::vector<TupleFailure> failures;

        auto ok() const -> bool { return failures.empty(); }
        auto failed(int condition) const -> bool;
    };

    class InvalidTuple : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Conditions: (1) entries are integers (structural here), (2) the modulo-n
    // lengths |d_i|_n are nonzero, distinct, and never n/2, (3) Σ d_i ≡ 0,
    // (4) the partial sums d_1 + ... + d_r are pairwise distinct mod n.
    auto validate_tuple(const DifferenceTuple &) -> TupleReport;

    auto tuple_to_cycle(const DifferenceTuple &) -> RotCycle;

    struct PatternEntry
    {
        int column; // 1-based
        int sign;   // +1 or -1

        auto operator==(const PatternEntry &) const -> bool = default;
    };

    // Which row entry goes where in the tuple, and with which sign.
    using TuplePattern = std::vector<PatternEntry>;

    // Strictly increasing positive entries.
    using ArrayRow = std::vector<std::int64_t>;

    struct PatternedTuple
    {
        DifferenceTuple tuple;
        TupleReport report;
    };

    auto apply_pattern(const ArrayRow &, const TuplePattern &, Order n) -> PatternedTuple;

    // (a1, −a3, a5, ..., ±a_{m−1}, then even columns m−2 down to 2, then a_m); m ≡ 0 (mod 4).
    auto pattern_p1(int m) -> TuplePattern;
    // (a1, a2, −a4, a6, ..., −a_m, then odd columns m−3 down to 3, then a_{m−1}); m ≡ 2 (mod 4).
    auto pattern_p2(int m) -> TuplePattern;
    // (a1, −a2, a3, −a5, ..., then even columns m−2 down to 4, then a_m); m ≡ 2 (mod 4).
    auto pattern_p3(int m) -> TuplePattern;
    // (a1, −a2, a3, −a4, −a5, a6).
    auto pattern_p3_6() -> TuplePattern;

    enum class RowSum
    {
        P1,
        P2,
        P3
    };

    // The linear identity on a row that makes the matching pattern sum to zero.
    auto row_condition(const ArrayRow &, RowSum) -> bool;
}

#endif
