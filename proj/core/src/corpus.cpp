#include "ecnet/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "ecnet/errors.hpp"

namespace ecnet {

namespace {

PaperRecord parse_record_line(const std::string& line, std::size_t line_no) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid JSON: " + e.what());
    }
    if (!doc.is_object())
        throw ParseError("line " + std::to_string(line_no) + ": record is not a JSON object");

    const auto require = [&](const char* key) -> const nlohmann::json& {
        const auto it = doc.find(key);
        if (it == doc.end())
            throw ParseError("line " + std::to_string(line_no) + ": missing field '" +
                             key + "'");
        return *it;
    };

    PaperRecord rec;
    const auto& id = require("id");
    if (!id.is_string() || id.get<std::string>().empty())
        throw ParseError("line " + std::to_string(line_no) + ": 'id' must be a non-empty string");
    rec.paper_id = id.get<std::string>();

    const auto& title = require("title");
    const auto& abstract = require("abstract");
    if (!title.is_string() || !abstract.is_string())
        throw ParseError("line " + std::to_string(line_no) +
                         ": 'title' and 'abstract' must be strings");
    rec.title = title.get<std::string>();
    rec.abstract = abstract.get<std::string>();

    const auto& date = require("date");
    if (!date.is_string())
        throw ParseError("line " + std::to_string(line_no) + ": 'date' must be a string");
    try {
        rec.pub_date = parse_date(date.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }

    const auto& refs = require("refs");
    if (!refs.is_array())
        throw ParseError("line " + std::to_string(line_no) + ": 'refs' must be an array");
    std::unordered_set<std::string> seen;
    for (const auto& r : refs) {
        if (!r.is_string() || r.get<std::string>().empty())
            throw ParseError("line " + std::to_string(line_no) +
                             ": 'refs' entries must be non-empty strings");
        auto ref = r.get<std::string>();
        if (seen.insert(ref).second) rec.references.push_back(std::move(ref));
    }
    return rec;
}

}  // namespace

const PaperRecord* Corpus::find(const std::string& paper_id) const {
    const auto it = papers_.find(paper_id);
    return it == papers_.end() ? nullptr : &it->second;
}

const PaperRecord& Corpus::at(const std::string& paper_id) const {
    const auto* rec = find(paper_id);
    if (!rec) throw DataError("unknown paper id: '" + paper_id + "'");
    return *rec;
}

Corpus load_corpus(const std::filesystem::path& path, bool strict) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open corpus file: " + path.string());

    Corpus corpus;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        PaperRecord rec;
        try {
            rec = parse_record_line(line, line_no);
        } catch (const ParseError&) {
            if (strict) throw;
            ++corpus.skipped_lines_;
            continue;
        }
        const std::string id = rec.paper_id;
        if (!corpus.papers_.emplace(id, std::move(rec)).second)
            throw DataError("line " + std::to_string(line_no) + ": duplicate paper id: '" + id +
                            "'");
    }

    for (const auto& [id, rec] : corpus.papers_) {
        for (const auto& ref : rec.references) {
            if (corpus.papers_.count(ref))
                ++corpus.resolved_references_;
            else
                ++corpus.unresolved_references_;
        }
    }
    return corpus;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write corpus file: " + path.string());
    for (const auto& [id, rec] : corpus.papers()) {
        nlohmann::ordered_json doc;
        doc["id"] = rec.paper_id;
        doc["title"] = rec.title;
        doc["abstract"] = rec.abstract;
        doc["date"] = format_date(rec.pub_date);
        doc["refs"] = rec.references;
        out << doc.dump() << '\n';
    }
    if (!out) throw DataError("write failed: " + path.string());
}

std::vector<const PaperRecord*> resolve_references(const Corpus& corpus,
                                                   const std::string& paper_id) {
    const auto& rec = corpus.at(paper_id);
    std::vector<const PaperRecord*> cited;
    cited.reserve(rec.references.size());
    for (const auto& ref : rec.references) {
        if (const auto* target = corpus.find(ref)) cited.push_back(target);
    }
    std::sort(cited.begin(), cited.end(), [](const PaperRecord* a, const PaperRecord* b) {
        return a->paper_id < b->paper_id;
    });
    return cited;
}

CorpusStats corpus_stats(const Corpus& corpus) {
    CorpusStats stats;
    stats.paper_count = corpus.size();
    stats.resolved_references = corpus.resolved_reference_count();
    stats.unresolved_references = corpus.unresolved_reference_count();
    for (const auto& [id, rec] : corpus.papers()) {
        if (!stats.first_date || rec.pub_date < *stats.first_date) stats.first_date = rec.pub_date;
        if (!stats.last_date || *stats.last_date < rec.pub_date) stats.last_date = rec.pub_date;
    }
    return stats;
}

}  // namespace ecnet
