#ifndef CCS_CORE_HH
#define CCS_CORE_HH 1

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccs
{
    using Residue = std::int64_t;
    using Length = std::int64_t;

    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // A search ran out of its time or node budget; never a negative answer.
    class ResourceError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Number of vertices of Z_n.
    class Order
    {
    public:
        explicit Order(std::int64_t n);

        auto value() const -> std::int64_t { return _n; }
        auto even() const -> bool { return _n % 2 == 0; }
        auto half() const -> std::int64_t { return _n / 2; }
        auto reduce(std::int64_t x) const -> Residue;

        auto operator<=>(const Order &) const = default;

    private:
        std::int64_t _n;
    };

    // |x|_n, the representative of ±x in [1, n/2].
    auto mod_length(std::int64_t x, Order n) -> Length;

    struct Edge
    {
        Residue a, b; // a < b, both reduced

        static auto make(std::int64_t x, std::int64_t y, Order n) -> Edge;
        auto length(Order n) const -> Length { return mod_length(b - a, n); }

        auto operator<=>(const Edge &) const = default;
    };

    class CirculantSpec
    {
    public:
        CirculantSpec(Order n, std::vector<Length> lengths);

        auto order() const -> Order { return _n; }
        auto lengths() const -> const std::vector<Length> & { return _lengths; }

    private:
        Order _n;
        std::vector<Length> _lengths; // sorted
    };

    // K_n − I as the circulant on {1, ..., n/2 − 1}.
    auto kn_minus_i_spec(Order n) -> CirculantSpec;

    auto edges_of(const CirculantSpec &) -> std::vector<Edge>;

    // A simple cycle on Z_n given by its vertex sequence.
    class RotCycle
    {
    public:
        RotCycle(Order n, const std::vector<std::int64_t> & vertices);

        auto order() const -> Order { return _n; }
        auto size() const -> std::size_t { return _vertices.size(); }
        auto vertices() const -> const std::vector<Residue> & { return _vertices; }
        auto operator[](std::size_t i) const -> Residue { return _vertices[i]; }

        auto edges() const -> std::vector<Edge>;  // in traversal order
        auto translated(std::int64_t by) const -> RotCycle;
        auto scaled(std::int64_t factor, Order target) const -> RotCycle;

        auto operator==(const RotCycle &) const -> bool = default;

    private:
        Order _n;
        std::vector<Residue> _vertices;
    };

    // One length per edge, sorted.
    auto length_multiset(const RotCycle &) -> std::vector<Length>;
    // Distinct lengths, sorted.
    auto length_set(const RotCycle &) -> std::vector<Length>;

    struct BaseCycle
    {
        RotCycle cycle;
        std::string provenance;
    };

    // Base cycles whose rotation orbits are claimed to form an m-cycle system.
    struct GeneratingSet
    {
        Order n;
        int m;
        std::vector<BaseCycle> cycles;

        auto t() const -> std::int64_t { return n.value() / m; }
    };

    auto gcd(std::int64_t a, std::int64_t b) -> std::int64_t;
    auto divisors(std::int64_t n) -> std::vector<std::int64_t>;
}

#endif
