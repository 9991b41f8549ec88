#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecnet/date.hpp"

namespace ecnet {

struct PaperRecord {
    std::string paper_id;
    std::string title;
    std::string abstract;
    Date pub_date;
    // Outbound citations, deduplicated on ingest (first occurrence kept).
    std::vector<std::string> references;
};

// Immutable after load; safe for concurrent readers.
class Corpus {
public:
    const PaperRecord* find(const std::string& paper_id) const;
    const PaperRecord& at(const std::string& paper_id) const;  // throws DataError

    const std::map<std::string, PaperRecord>& papers() const { return papers_; }
    std::size_t size() const { return papers_.size(); }

    // Reference entries pointing at papers present in / absent from the corpus.
    std::size_t resolved_reference_count() const { return resolved_references_; }
    std::size_t unresolved_reference_count() const { return unresolved_references_; }

    // Lenient-mode ingest skips malformed lines and counts them here.
    std::size_t skipped_line_count() const { return skipped_lines_; }

private:
    friend Corpus load_corpus(const std::filesystem::path&, bool);

    std::map<std::string, PaperRecord> papers_;
    std::size_t resolved_references_ = 0;
    std::size_t unresolved_references_ = 0;
    std::size_t skipped_lines_ = 0;
};

// Line-delimited JSON, one paper per line:
//   {"id": "...", "title": "...", "abstract": "...", "date": "YYYY/MM/DD", "refs": ["...", ...]}
// In strict mode any malformed line aborts the load; in lenient mode such
// lines are counted and skipped. A duplicate paper id is always an error.
Corpus load_corpus(const std::filesystem::path& path, bool strict);

// Canonical serialization: papers ordered by id, fixed key order. Loading the
// result reproduces the corpus exactly.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);

// Cited records present in the corpus, ordered by paper id; unresolved
// references are omitted. Throws DataError for an unknown paper_id.
std::vector<const PaperRecord*> resolve_references(const Corpus& corpus,
                                                   const std::string& paper_id);

struct CorpusStats {
    std::size_t paper_count = 0;
    std::size_t resolved_references = 0;
    std::size_t unresolved_references = 0;
    std::optional<Date> first_date;
    std::optional<Date> last_date;
};

CorpusStats corpus_stats(const Corpus& corpus);

}  // namespace ecnet
