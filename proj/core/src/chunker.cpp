#include "ecnet/chunker.hpp"

#include <algorithm>
#include <map>

#include "ecnet/text.hpp"

namespace ecnet {

std::string_view to_string(TextField f) {
    return f == TextField::Title ? "title" : "abstract";
}

std::vector<Chunk> chunk_text(const EntityDictionary& dict, std::string_view text) {
    std::vector<Chunk> chunks;
    if (dict.surface_count() == 0) return chunks;

    const NormalizedText norm = normalize_text(text);
    const std::string_view t = norm.text;
    std::size_t pos = 0;
    while (pos < t.size()) {
        const bool token_start = is_word_byte(static_cast<unsigned char>(t[pos])) &&
                                 (pos == 0 || !is_word_byte(static_cast<unsigned char>(t[pos - 1])));
        if (!token_start) {
            ++pos;
            continue;
        }
        const auto m = dict.match_longest_at(t, pos);
        if (m.length == 0) {
            // Skip the rest of this token; a match cannot start mid-word.
            while (pos < t.size() && is_word_byte(static_cast<unsigned char>(t[pos]))) ++pos;
            continue;
        }
        const auto [begin, end] = norm.source_span(pos, pos + m.length);
        chunks.push_back({*m.entity, begin, end});
        pos += m.length;
    }
    return chunks;
}

std::vector<EntityOccurrence> extract_entities(const EntityDictionary& dict,
                                               const PaperRecord& paper) {
    std::map<EntityId, std::vector<MentionSpan>> grouped;
    for (const Chunk& c : chunk_text(dict, paper.title))
        grouped[c.entity].push_back({TextField::Title, c.begin, c.end});
    for (const Chunk& c : chunk_text(dict, paper.abstract))
        grouped[c.entity].push_back({TextField::Abstract, c.begin, c.end});

    std::vector<EntityOccurrence> out;
    out.reserve(grouped.size());
    for (auto& [entity, spans] : grouped) out.push_back({entity, std::move(spans)});
    return out;  // std::map iterates in (type, canonical_id) order
}

std::vector<EntityId> distinct_entities(const std::vector<EntityOccurrence>& occurrences) {
    std::vector<EntityId> out;
    out.reserve(occurrences.size());
    for (const auto& occ : occurrences) out.push_back(occ.entity);
    return out;
}

}  // namespace ecnet
