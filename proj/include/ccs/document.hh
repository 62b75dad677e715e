#ifndef CCS_DOCUMENT_HH
#define CCS_DOCUMENT_HH 1

#include <ccs/core.hh>

#include <json.hpp>

#include <string>
#include <string_view>

namespace ccs
{
    inline constexpr int document_format_version = 1;

    class DocumentError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // {format_version, n, m, t, generating_set: [{vertices, orbit_length, lengths,
    // provenance}], expanded?}. Keys sorted, base cycles sorted by canonical form.
    auto to_json(const GeneratingSet &, bool expand = false) -> nlohmann::json;
    auto render_document(const GeneratingSet &, bool expand = false) -> std::string;

    // Structural validation only: the declared metadata must be consistent with
    // the cycles. Whether the cycles form a system is for verify() to decide.
    auto from_json(const nlohmann::json &) -> GeneratingSet;
    auto parse_document(std::string_view text) -> GeneratingSet;
}

#endif
