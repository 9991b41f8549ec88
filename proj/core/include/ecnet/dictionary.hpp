#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ecnet/entity.hpp"

namespace ecnet {

// One `surface-->TYPE_ID` dictionary line, e.g. "ACTA1-->GENE__P68133".
// One or more underscores may separate the type token from the id.
struct DictionaryEntry {
    std::string surface;  // normalized (lowercased, whitespace collapsed, trimmed)
    EntityId entity;      // display_name = the surface form as written, trimmed
};

DictionaryEntry parse_dictionary_line(std::string_view line);

// Two lines mapped the same normalized surface to different entities; the
// first mapping wins and the loser is reported here.
struct SurfaceCollision {
    std::string surface;
    EntityId kept;
    EntityId discarded;
    std::size_t line_number;  // 1-based line of the discarded mapping
};

// Immutable after load; matching is thread-safe.
class EntityDictionary {
public:
    // First mapping of a surface wins. Returns false on a collision (different
    // entity) or an exact duplicate (same entity).
    bool insert(const DictionaryEntry& entry);

    const EntityId* find(std::string_view normalized_surface) const;

    // Longest dictionary surface starting at `pos` in normalized text whose
    // end falls on a word boundary. length == 0 means no match. The caller is
    // responsible for the boundary check at `pos` itself.
    struct Match {
        std::size_t length = 0;
        const EntityId* entity = nullptr;
    };
    Match match_longest_at(std::string_view normalized_text, std::size_t pos) const;

    std::size_t surface_count() const { return surfaces_.size(); }
    std::size_t entity_count(EntityType t) const {
        return entity_counts_[static_cast<std::size_t>(t)];
    }
    std::size_t total_entity_count() const;
    std::size_t longest_surface_bytes() const { return longest_surface_; }

    const std::vector<SurfaceCollision>& collisions() const { return collisions_; }
    std::size_t duplicate_count() const { return duplicates_; }

private:
    friend EntityDictionary load_dictionary(const std::filesystem::path&);

    struct TrieNode {
        // Sorted by byte; dictionaries branch narrowly so linear scan wins.
        std::vector<std::pair<unsigned char, std::uint32_t>> children;
        std::int32_t entry = -1;  // index into entries_ when a surface ends here
    };

    std::uint32_t child(std::uint32_t node, unsigned char byte) const;

    std::unordered_map<std::string, std::uint32_t> surfaces_;  // surface -> entries_ index
    std::vector<EntityId> entries_;
    std::vector<TrieNode> trie_{1};  // node 0 is the root
    std::array<std::size_t, 3> entity_counts_{};
    std::unordered_set<std::string> distinct_entities_;  // "TYPE:ID" keys
    std::size_t longest_surface_ = 0;
    std::size_t duplicates_ = 0;
    std::vector<SurfaceCollision> collisions_;
};

// UTF-8 text, one entry per line; blank lines are skipped. Parse errors carry
// the 1-based line number. Surface collisions resolve first-wins and are
// recorded on the returned dictionary.
EntityDictionary load_dictionary(const std::filesystem::path& path);

}  // namespace ecnet
