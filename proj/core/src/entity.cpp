#include "ecnet/entity.hpp"

#include <algorithm>
#include <cctype>

#include "ecnet/errors.hpp"

namespace ecnet {

std::string_view to_string(EntityType t) {
    switch (t) {
        case EntityType::Disease: return "DISEASE";
        case EntityType::Drug: return "DRUG";
        case EntityType::Gene: return "GENE";
    }
    return "?";
}

EntityType parse_entity_type(std::string_view token) {
    std::string upper(token);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "GENE") return EntityType::Gene;
    if (upper == "DRUG") return EntityType::Drug;
    if (upper == "DISEASE") return EntityType::Disease;
    throw DataError("unknown entity type: '" + std::string(token) + "'");
}

std::string format_entity_key(const EntityId& e) {
    std::string out(to_string(e.type));
    out += ':';
    out += e.canonical_id;
    return out;
}

EntityId parse_entity_key(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size())
        throw DataError("entity key must be TYPE:ID, got '" + std::string(text) + "'");
    EntityId e;
    e.type = parse_entity_type(text.substr(0, colon));
    e.canonical_id = std::string(text.substr(colon + 1));
    e.display_name = e.canonical_id;
    return e;
}

std::string format_entity_label(const EntityId& e) {
    std::string out(to_string(e.type));
    out += '_';
    out += e.display_name.empty() ? e.canonical_id : e.display_name;
    return out;
}

}  // namespace ecnet
