#include <ccs/orbits.hh>
#include <ccs/search.hh>
#include <ccs/verifier.hh>

#include <algorithm>
#include <map>
#include <numeric>

using std::int64_t;
using std::size_t;
using std::string;
using std::to_string;
using std::vector;

namespace ccs
{
    auto VerificationReport::summary() const -> string
    {
        string s = ok ? "ok" : "FAILED";
        s += ": " + to_string(cycle_count) + " cycles (expected " + to_string(expected_cycles) + "), "
            + to_string(edge_count) + " edges (expected " + to_string(expected_edges) + ")";
        auto count = [&](const char * what, size_t k) {
            if (k)
                s += "; " + to_string(k) + " " + what;
        };
        count("duplicate edges", duplicate_edges.size());
        count("missing edges", missing_edges.size());
        count("edges of the removed 1-factor", foreign_edges.size());
        count("malformed cycles", non_simple_cycles.size());
        count("structural property failures", lemma21_failures.size());
        count("translate-equivalent base cycle pairs", minimality_violations.size());
        return s;
    }

    auto verify(const GeneratingSet & x) -> VerificationReport
    {
        auto n = x.n;
        auto nv = n.value();
        if (! n.even() || x.m < 3 || nv % x.m != 0)
            throw DomainError("verify needs even n divisible by m (n = " + to_string(nv) + ", m = " + to_string(x.m) + ")");
        auto t = nv / x.m;
        auto half = n.half();

        VerificationReport report;
        report.expected_cycles = t * (nv - 2) / 2;
        report.expected_edges = nv * (nv - 2) / 2;

        // Edge {g, g+ℓ} with ℓ < n/2 lives at slot g·half + ℓ; the 1-factor at ℓ = n/2.
        auto slot = [&](const Edge & e) -> size_t {
            auto l = e.length(n);
            auto g = n.reduce(e.b - e.a) == l ? e.a : e.b;
            return size_t(g * (half + 1) + l);
        };
        vector<int> counts(size_t(nv * (half + 1)), 0);

        vector<int64_t> orbit_lengths;
        for (size_t i = 0; i < x.cycles.size(); ++i) {
            auto & c = x.cycles[i].cycle;
            if (c.order() != n)
                throw DomainError("base cycle " + to_string(i) + " lives on a different order");
            if (int64_t(c.size()) != x.m)
                report.non_simple_cycles.push_back({i, "has " + to_string(c.size()) + " vertices, expected " + to_string(x.m)});
            auto k = orbit_length(c);
            orbit_lengths.push_back(k);
            report.cycle_count += k;
            auto edges = c.edges();
            for (int64_t j = 0; j < k; ++j)
                for (auto & e : edges) {
                    ++counts[slot(Edge::make(e.a + j, e.b + j, n))];
                    ++report.edge_count;
                }
        }

        std::map<size_t, size_t> trouble; // slot → index into duplicate/foreign lists
        for (Residue g = 0; g < nv; ++g)
            for (Length l = 1; l <= half; ++l) {
                if (l == half && g >= half)
                    continue;
                auto e = Edge::make(g, g + l, n);
                auto c = counts[slot(e)];
                if (l == half) {
                    if (c > 0) {
                        trouble[slot(e)] = report.foreign_edges.size();
                        report.foreign_edges.push_back({e, c, {}});
                    }
                }
                else if (c == 0)
                    report.missing_edges.push_back(e);
                else if (c > 1) {
                    trouble[slot(e)] = report.duplicate_edges.size();
                    report.duplicate_edges.push_back({e, c, {}});
                }
            }

        if (! trouble.empty())
            for (size_t i = 0; i < x.cycles.size(); ++i) {
                auto edges = x.cycles[i].cycle.edges();
                for (int64_t j = 0; j < orbit_lengths[i]; ++j)
                    for (auto & e : edges) {
                        auto moved = Edge::make(e.a + j, e.b + j, n);
                        if (auto it = trouble.find(slot(moved)); it != trouble.end()) {
                            auto & list = moved.length(n) == half ? report.foreign_edges : report.duplicate_edges;
                            auto & owners = list[it->second].base_cycles;
                            if (owners.empty() || owners.back() != i)
                                owners.push_back(i);
                        }
                    }
            }
        std::ranges::sort(report.missing_edges);
        std::ranges::sort(report.duplicate_edges, {}, &EdgeIssue::edge);
        std::ranges::sort(report.foreign_edges, {}, &EdgeIssue::edge);

        std::map<vector<Residue>, size_t> classes;
        for (size_t i = 0; i < x.cycles.size(); ++i) {
            auto & c = x.cycles[i].cycle;
            if (int64_t(c.size()) == x.m)
                for (auto & f : lemma21_check(c, x.m).failures)
                    report.lemma21_failures.push_back({i, f.property, f.detail});
            if (auto [it, fresh] = classes.emplace(translate_class_key(c), i); ! fresh)
                report.minimality_violations.push_back({it->second, i});
        }

        report.ok = report.duplicate_edges.empty() && report.missing_edges.empty() && report.foreign_edges.empty()
            && report.non_simple_cycles.empty() && report.lemma21_failures.empty()
            && report.minimality_violations.empty() && report.cycle_count == report.expected_cycles
            && report.edge_count == report.expected_edges;
        return report;
    }

    auto exhaustive_search(int m, int64_t n, int64_t bound) -> ExhaustiveResult
    {
        if (n > bound)
            throw ResourceError("exhaustive search bound is " + to_string(bound) + ", asked for n = " + to_string(n));
        Order order{n};
        if (! order.even() || m < 3 || n % m != 0)
            throw DomainError("exhaustive search needs even n divisible by m");
        vector<Length> lengths(order.half() - 1);
        std::iota(lengths.begin(), lengths.end(), 1);
        auto found = search_cyclic_cover(order, m, lengths);
        ExhaustiveResult result;
        result.nodes = found.nodes;
        if (found.outcome == SearchOutcome::Found) {
            GeneratingSet witness{order, m, {}};
            for (auto & c : found.cycles)
                witness.cycles.push_back({c, "exhaustive-search"});
            if (! verify(witness).ok)
                throw std::logic_error("exhaustive search produced a set the verifier rejects");
            result.witness = std::move(witness);
        }
        return result;
    }
}
