#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ecnet/corpus.hpp"
#include "ecnet/dictionary.hpp"
#include "ecnet/entity.hpp"

namespace ecnet {

enum class TextField : std::uint8_t { Title, Abstract };

std::string_view to_string(TextField f);

// One dictionary hit; begin/end are byte offsets into the ORIGINAL text.
struct Chunk {
    EntityId entity;
    std::size_t begin = 0;
    std::size_t end = 0;
};

// Leftmost-longest exact matching on word boundaries over normalized text.
// Matches never overlap; output is sorted by start offset.
std::vector<Chunk> chunk_text(const EntityDictionary& dict, std::string_view text);

struct MentionSpan {
    TextField field;
    std::size_t begin = 0;
    std::size_t end = 0;
};

struct EntityOccurrence {
    EntityId entity;
    std::vector<MentionSpan> spans;  // non-overlapping within a field

    std::size_t mention_count() const { return spans.size(); }
};

// Union of chunk_text over title and abstract, grouped by entity with mention
// counts, sorted by (entity_type, canonical_id).
std::vector<EntityOccurrence> extract_entities(const EntityDictionary& dict,
                                               const PaperRecord& paper);

// The distinct entities of a paper, sorted — the per-paper sets fed to the
// graph builder.
std::vector<EntityId> distinct_entities(const std::vector<EntityOccurrence>& occurrences);

}  // namespace ecnet
