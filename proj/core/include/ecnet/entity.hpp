#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace ecnet {

// Ordered so that comparisons sort by type name: DISEASE < DRUG < GENE.
enum class EntityType : std::uint8_t { Disease = 0, Drug = 1, Gene = 2 };

std::string_view to_string(EntityType t);

// Case-insensitive; throws DataError on anything but GENE/DRUG/DISEASE.
EntityType parse_entity_type(std::string_view token);

// (type, canonical_id) is the identity; the display name is the preferred
// surface form and never participates in equality or ordering.
struct EntityId {
    EntityType type = EntityType::Disease;
    std::string canonical_id;
    std::string display_name;

    friend bool operator==(const EntityId& a, const EntityId& b) {
        return a.type == b.type && a.canonical_id == b.canonical_id;
    }
    friend std::strong_ordering operator<=>(const EntityId& a, const EntityId& b) {
        if (a.type != b.type) return a.type <=> b.type;
        return a.canonical_id <=> b.canonical_id;
    }
};

struct EntityIdHash {
    std::size_t operator()(const EntityId& e) const {
        const std::size_t h = std::hash<std::string>{}(e.canonical_id);
        return h * 31u + static_cast<std::size_t>(e.type);
    }
};

// "TYPE:ID" form used on the command line and in report keys.
std::string format_entity_key(const EntityId& e);
EntityId parse_entity_key(std::string_view text);

// "TYPE_name" form used in ranking tables; falls back to the canonical id
// when no display name is known.
std::string format_entity_label(const EntityId& e);

}  // namespace ecnet
