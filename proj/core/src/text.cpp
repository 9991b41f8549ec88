#include "ecnet/text.hpp"

namespace ecnet {

namespace {

bool is_space_byte(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

char lower_byte(unsigned char c) {
    if (c >= 'A' && c <= 'Z') return static_cast<char>(c - 'A' + 'a');
    return static_cast<char>(c);
}

}  // namespace

NormalizedText normalize_text(std::string_view raw) {
    NormalizedText out;
    out.text.reserve(raw.size());
    out.source_offset.reserve(raw.size() + 1);

    std::size_t i = 0;
    while (i < raw.size()) {
        const auto c = static_cast<unsigned char>(raw[i]);
        if (is_space_byte(c)) {
            const std::size_t run_start = i;
            while (i < raw.size() && is_space_byte(static_cast<unsigned char>(raw[i]))) ++i;
            out.text.push_back(' ');
            out.source_offset.push_back(run_start);
        } else {
            out.text.push_back(lower_byte(c));
            out.source_offset.push_back(i);
            ++i;
        }
    }
    out.source_offset.push_back(raw.size());
    return out;
}

std::string normalize_phrase(std::string_view raw) {
    std::string text = normalize_text(raw).text;
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && text[begin] == ' ') ++begin;
    while (end > begin && text[end - 1] == ' ') --end;
    return text.substr(begin, end - begin);
}

bool contains_phrase(std::string_view normalized_text, std::string_view normalized_phrase) {
    if (normalized_phrase.empty()) return false;
    std::size_t pos = 0;
    while ((pos = normalized_text.find(normalized_phrase, pos)) != std::string_view::npos) {
        const bool starts_on_boundary =
            pos == 0 || !is_word_byte(static_cast<unsigned char>(normalized_text[pos - 1]));
        const std::size_t end = pos + normalized_phrase.size();
        const bool ends_on_boundary =
            end == normalized_text.size() ||
            !is_word_byte(static_cast<unsigned char>(normalized_text[end]));
        if (starts_on_boundary && ends_on_boundary) return true;
        ++pos;
    }
    return false;
}

}  // namespace ecnet
