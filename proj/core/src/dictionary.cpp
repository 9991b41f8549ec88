#include "ecnet/dictionary.hpp"

#include <algorithm>
#include <fstream>

#include "ecnet/errors.hpp"
#include "ecnet/text.hpp"

namespace ecnet {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

}  // namespace

DictionaryEntry parse_dictionary_line(std::string_view line) {
    constexpr std::string_view kSeparator = "-->";
    const auto sep = line.find(kSeparator);
    if (sep == std::string_view::npos)
        throw ParseError("dictionary line missing '-->' separator");

    const std::string_view raw_surface = trim(line.substr(0, sep));
    const std::string surface = normalize_phrase(raw_surface);
    if (surface.empty()) throw ParseError("dictionary line has empty surface form");

    const std::string_view rhs = trim(line.substr(sep + kSeparator.size()));
    const auto underscore = rhs.find('_');
    if (underscore == std::string_view::npos || underscore == 0)
        throw ParseError("dictionary entity must be TYPE_ID: '" + std::string(rhs) + "'");
    const EntityType type = parse_entity_type(rhs.substr(0, underscore));

    std::size_t id_start = underscore;
    while (id_start < rhs.size() && rhs[id_start] == '_') ++id_start;
    if (id_start == rhs.size())
        throw ParseError("dictionary entity has empty id: '" + std::string(rhs) + "'");

    DictionaryEntry entry;
    entry.surface = surface;
    entry.entity.type = type;
    entry.entity.canonical_id = std::string(rhs.substr(id_start));
    entry.entity.display_name = std::string(raw_surface);
    return entry;
}

bool EntityDictionary::insert(const DictionaryEntry& entry) {
    const auto [it, fresh] =
        surfaces_.emplace(entry.surface, static_cast<std::uint32_t>(entries_.size()));
    if (!fresh) return false;

    entries_.push_back(entry.entity);

    std::uint32_t node = 0;
    for (const char c : entry.surface) {
        const auto byte = static_cast<unsigned char>(c);
        std::uint32_t next = child(node, byte);
        if (next == 0) {
            next = static_cast<std::uint32_t>(trie_.size());
            trie_.emplace_back();
            auto& children = trie_[node].children;
            children.insert(
                std::upper_bound(children.begin(), children.end(), byte,
                                 [](unsigned char b, const auto& kv) { return b < kv.first; }),
                {byte, next});
        }
        node = next;
    }
    trie_[node].entry = static_cast<std::int32_t>(it->second);

    if (distinct_entities_.insert(format_entity_key(entry.entity)).second)
        ++entity_counts_[static_cast<std::size_t>(entry.entity.type)];
    longest_surface_ = std::max(longest_surface_, entry.surface.size());
    return true;
}

std::uint32_t EntityDictionary::child(std::uint32_t node, unsigned char byte) const {
    for (const auto& [b, next] : trie_[node].children) {
        if (b == byte) return next;
        if (b > byte) break;
    }
    return 0;  // the root is never a child, so 0 doubles as "absent"
}

const EntityId* EntityDictionary::find(std::string_view normalized_surface) const {
    const auto it = surfaces_.find(std::string(normalized_surface));
    return it == surfaces_.end() ? nullptr : &entries_[it->second];
}

EntityDictionary::Match EntityDictionary::match_longest_at(std::string_view normalized_text,
                                                           std::size_t pos) const {
    Match best;
    std::uint32_t node = 0;
    for (std::size_t i = pos; i < normalized_text.size(); ++i) {
        node = child(node, static_cast<unsigned char>(normalized_text[i]));
        if (node == 0) break;
        if (trie_[node].entry >= 0) {
            const std::size_t end = i + 1;
            const bool boundary = end == normalized_text.size() ||
                                  !is_word_byte(static_cast<unsigned char>(normalized_text[end]));
            if (boundary) best = {end - pos, &entries_[trie_[node].entry]};
        }
    }
    return best;
}

std::size_t EntityDictionary::total_entity_count() const {
    return distinct_entities_.size();
}

EntityDictionary load_dictionary(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open dictionary file: " + path.string());

    EntityDictionary dict;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (trim(line).empty()) continue;
        DictionaryEntry entry;
        try {
            entry = parse_dictionary_line(line);
        } catch (const DataError& e) {
            throw ParseError(path.string() + ":" + std::to_string(line_number) + ": " + e.what());
        }
        if (!dict.insert(entry)) {
            const EntityId& kept = *dict.find(entry.surface);
            if (kept == entry.entity) {
                ++dict.duplicates_;
            } else {
                dict.collisions_.push_back({entry.surface, kept, entry.entity, line_number});
            }
        }
    }
    return dict;
}

}  // namespace ecnet
