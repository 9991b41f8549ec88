#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ecnet {

// ASCII letters and digits are word characters; bytes >= 0x80 are treated as
// word characters too so multi-byte UTF-8 sequences are never split.
// Everything else is a token boundary.
inline bool is_word_byte(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           c >= 0x80;
}

// Lowercased text with every whitespace run collapsed to a single space.
// source_offset[i] holds the byte offset in the original text of the byte
// that produced normalized byte i (a collapsed run maps to its first byte).
struct NormalizedText {
    std::string text;
    std::vector<std::size_t> source_offset;

    // Original [begin, end) byte span of the normalized range [from, to).
    // The range must not end on a collapsed space.
    std::pair<std::size_t, std::size_t> source_span(std::size_t from, std::size_t to) const {
        return {source_offset[from], source_offset[to - 1] + 1};
    }
};

NormalizedText normalize_text(std::string_view raw);

// Same normalization plus trimming of outer whitespace; used for dictionary
// surface forms and query phrases.
std::string normalize_phrase(std::string_view raw);

// True when `phrase` occurs in `text` starting and ending on word boundaries.
// Both arguments must already be normalized.
bool contains_phrase(std::string_view normalized_text, std::string_view normalized_phrase);

}  // namespace ecnet
