#include <ccs/document.hh>
#include <ccs/orbits.hh>

#include <algorithm>
#include <set>

using nlohmann::json;
using std::int64_t;
using std::size_t;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace ccs
{
    auto to_json(const GeneratingSet & x, bool expand) -> json
    {
        vector<std::pair<vector<Residue>, const BaseCycle *>> order;
        for (auto & b : x.cycles)
            order.emplace_back(canonical_form(b.cycle), &b);
        std::ranges::stable_sort(order, {}, &decltype(order)::value_type::first);

        json set = json::array();
        json expanded = json::array();
        for (auto & [form, b] : order) {
            set.push_back({{"vertices", b->cycle.vertices()},
                {"orbit_length", orbit_length(b->cycle)},
                {"lengths", length_set(b->cycle)},
                {"provenance", b->provenance}});
            if (expand)
                for (auto & c : expand_orbit(b->cycle))
                    expanded.push_back(c.vertices());
        }

        json doc = {{"format_version", document_format_version},
            {"n", x.n.value()},
            {"m", x.m},
            {"t", x.t()},
            {"generating_set", std::move(set)}};
        if (expand)
            doc["expanded"] = std::move(expanded);
        return doc;
    }

    auto render_document(const GeneratingSet & x, bool expand) -> string
    {
        return to_json(x, expand).dump(2) + "\n";
    }

    namespace
    {
        auto integer(const json & j, const string & what) -> int64_t
        {
            if (! j.is_number_integer())
                throw DocumentError(what + " must be an integer");
            return j.get<int64_t>();
        }

        auto field(const json & j, const char * key) -> const json &
        {
            if (! j.contains(key))
                throw DocumentError(string("missing field \"") + key + "\"");
            return j.at(key);
        }

        auto residues(const json & j, const string & what) -> vector<int64_t>
        {
            if (! j.is_array())
                throw DocumentError(what + " must be an array");
            vector<int64_t> result;
            for (auto & v : j)
                result.push_back(integer(v, what + " entry"));
            return result;
        }
    }

    auto from_json(const json & doc) -> GeneratingSet
    {
        if (! doc.is_object())
            throw DocumentError("document must be a JSON object");
        if (auto v = integer(field(doc, "format_version"), "format_version"); v != document_format_version)
            throw DocumentError("unsupported format_version " + to_string(v));
        auto n = integer(field(doc, "n"), "n");
        auto m = integer(field(doc, "m"), "m");
        auto t = integer(field(doc, "t"), "t");
        if (m < 3 || t < 1 || n != m * t)
            throw DocumentError("inconsistent parameters: n = " + to_string(n) + " but m·t = " + to_string(m) + "·" + to_string(t));
        if (n % 2 != 0)
            throw DocumentError("n must be even");

        auto & list = field(doc, "generating_set");
        if (! list.is_array())
            throw DocumentError("generating_set must be an array");

        GeneratingSet x{Order{n}, int(m), {}};
        for (size_t i = 0; i < list.size(); ++i) {
            auto & entry = list[i];
            auto where = "generating_set[" + to_string(i) + "]";
            if (! entry.is_object())
                throw DocumentError(where + " must be an object");
            auto vertices = residues(field(entry, "vertices"), where + ".vertices");
            for (auto v : vertices)
                if (v < 0 || v >= n)
                    throw DocumentError(where + ".vertices has " + to_string(v) + " outside [0, n)");
            auto provenance = field(entry, "provenance");
            if (! provenance.is_string())
                throw DocumentError(where + ".provenance must be a string");
            try {
                RotCycle c{x.n, vertices};
                if (integer(field(entry, "orbit_length"), where + ".orbit_length") != orbit_length(c))
                    throw DocumentError(where + ".orbit_length does not match the cycle");
                auto declared = residues(field(entry, "lengths"), where + ".lengths");
                if (declared != length_set(c))
                    throw DocumentError(where + ".lengths does not match the cycle");
                x.cycles.push_back({std::move(c), provenance.get<string>()});
            }
            catch (const DomainError & e) {
                throw DocumentError(where + ": " + e.what());
            }
        }

        if (doc.contains("expanded")) {
            auto & exp = doc.at("expanded");
            if (! exp.is_array())
                throw DocumentError("expanded must be an array");
            std::multiset<vector<Residue>> declared, derived;
            try {
                for (auto & c : exp)
                    declared.insert(canonical_form(RotCycle{x.n, residues(c, "expanded cycle")}));
            }
            catch (const DomainError & e) {
                throw DocumentError(string("expanded: ") + e.what());
            }
            for (auto & b : x.cycles)
                for (auto & c : expand_orbit(b.cycle))
                    derived.insert(canonical_form(c));
            if (declared != derived)
                throw DocumentError("expanded does not match the orbits of generating_set");
        }
        return x;
    }

    auto parse_document(string_view text) -> GeneratingSet
    {
        json doc;
        try {
            doc = json::parse(text);
        }
        catch (const json::parse_error & e) {
            throw DocumentError(string("not valid JSON: ") + e.what());
        }
        return from_json(doc);
    }
}
