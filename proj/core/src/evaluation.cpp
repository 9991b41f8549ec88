#include "ecnet/evaluation.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <tuple>

#include "ecnet/errors.hpp"

namespace ecnet {

namespace {

std::string pair_key(const EntityId& subject, const EntityId& object) {
    return format_entity_key(subject) + "|" + format_entity_key(object);
}

}  // namespace

const CuratedInteraction* CuratedDb::find(const EntityId& subject, const EntityId& object) const {
    const auto it = by_key_.find(pair_key(subject, object));
    return it == by_key_.end() ? nullptr : &interactions_[it->second];
}

std::size_t CuratedDb::count_with_subject(const EntityId& subject) const {
    return static_cast<std::size_t>(
        std::count_if(interactions_.begin(), interactions_.end(),
                      [&](const CuratedInteraction& i) { return i.subject == subject; }));
}

void CuratedDb::add(CuratedInteraction&& interaction) {
    if (interaction.subject == interaction.object)
        throw DataError("curated interaction with subject == object: " +
                        format_entity_key(interaction.subject));
    const auto [it, fresh] =
        by_key_.emplace(pair_key(interaction.subject, interaction.object), interactions_.size());
    if (!fresh)
        throw DataError("duplicate curated interaction: " + it->first);
    ++object_type_counts_[static_cast<std::size_t>(interaction.object.type)];
    interactions_.push_back(std::move(interaction));
}

CuratedDb load_curated_db(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open curated database: " + path.string());

    CuratedDb db;
    // curated_rank must be unique within each (subject, object-type) group.
    std::set<std::tuple<std::string, EntityType, std::uint32_t>> ranks_seen;

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const auto fail = [&](const std::string& why) -> ParseError {
            return ParseError(path.string() + ":" + std::to_string(line_number) + ": " + why);
        };

        std::vector<std::string_view> field;
        std::string_view rest = line;
        while (true) {
            const auto tab = rest.find('\t');
            if (tab == std::string_view::npos) {
                field.push_back(rest);
                break;
            }
            field.push_back(rest.substr(0, tab));
            rest.remove_prefix(tab + 1);
        }
        if (field.size() != 7) throw fail("expected 7 tab-separated fields");
        if (field[1].empty() || field[3].empty()) throw fail("empty entity id");

        CuratedInteraction row;
        row.subject = {parse_entity_type(field[0]), std::string(field[1]), std::string(field[1])};
        row.object = {parse_entity_type(field[2]), std::string(field[3]), std::string(field[3])};
        row.relation = std::string(field[4]);
        if (!field[5].empty()) {
            double score = 0.0;
            const auto [p, ec] =
                std::from_chars(field[5].data(), field[5].data() + field[5].size(), score);
            if (ec != std::errc() || p != field[5].data() + field[5].size())
                throw fail("malformed inference score: '" + std::string(field[5]) + "'");
            row.inference_score = score;
        }
        if (!field[6].empty()) {
            std::uint32_t rank = 0;
            const auto [p, ec] = std::from_chars(field[6].data(), field[6].data() + field[6].size(), rank);
            if (ec != std::errc() || p != field[6].data() + field[6].size() || rank == 0)
                throw fail("curated rank must be a positive integer");
            row.curated_rank = rank;
            if (!ranks_seen.emplace(format_entity_key(row.subject), row.object.type, rank).second)
                throw fail("duplicate curated rank " + std::to_string(rank) + " for subject " +
                           format_entity_key(row.subject) + " and object type " +
                           std::string(to_string(row.object.type)));
        }
        try {
            db.add(std::move(row));
        } catch (const DataError& e) {
            throw fail(e.what());
        }
    }
    return db;
}

std::string_view to_string(RankBucket b) {
    switch (b) {
        case RankBucket::Top10: return "top10";
        case RankBucket::R11To100: return "11-100";
        case RankBucket::Above100: return "101+";
        case RankBucket::MatchedUnranked: return "matched-unranked";
        case RankBucket::Unmatched: return "unmatched";
    }
    return "?";
}

RankBucket bucket_for_rank(std::uint32_t curated_rank) {
    if (curated_rank <= 10) return RankBucket::Top10;
    if (curated_rank <= 100) return RankBucket::R11To100;
    return RankBucket::Above100;
}

RankComparison match_rankings(const CentralityScores& scores, const EntityCitationGraph& g,
                              const CuratedDb& db, const EntityId& anchor, std::size_t k,
                              std::optional<EntityType> type_filter) {
    // Rank over k+1 candidates so the anchor, if present, can be dropped
    // without shrinking the table below k.
    std::vector<RankedRow> ranked = top_k(scores, g, k + 1, type_filter);
    std::erase_if(ranked, [&](const RankedRow& r) { return g.nodes[r.node] == anchor; });
    if (ranked.size() > k) ranked.resize(k);

    RankComparison out;
    out.measure = scores.measure;
    out.rows.reserve(ranked.size());
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        const EntityId& entity = g.nodes[ranked[i].node];
        RankComparisonRow row;
        row.entity = entity;
        row.our_rank = static_cast<std::uint32_t>(i + 1);
        row.score = ranked[i].score;
        if (const CuratedInteraction* hit = db.find(anchor, entity)) {
            row.matched = true;
            row.bucket = hit->curated_rank ? bucket_for_rank(*hit->curated_rank)
                                           : RankBucket::MatchedUnranked;
            row.curated_rank = hit->curated_rank;
            row.inference_score = hit->inference_score;
            row.relation = hit->relation;
            ++out.match_count;
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

std::vector<NoveltyRow> novelty_report(const std::vector<RankComparison>& comparisons) {
    std::map<EntityId, NoveltyRow> rows;
    std::set<EntityId> matched_somewhere;
    for (const RankComparison& comp : comparisons) {
        for (const RankComparisonRow& row : comp.rows) {
            if (row.matched) {
                matched_somewhere.insert(row.entity);
                continue;
            }
            auto& entry = rows[row.entity];
            if (entry.measure_ranks.empty()) {
                entry.entity = row.entity;
                entry.best_rank = row.our_rank;
            }
            entry.best_rank = std::min(entry.best_rank, row.our_rank);
            entry.measure_ranks.emplace_back(comp.measure, row.our_rank);
        }
    }

    std::vector<NoveltyRow> out;
    for (auto& [entity, row] : rows) {
        if (!matched_somewhere.contains(entity)) out.push_back(std::move(row));
    }
    std::stable_sort(out.begin(), out.end(), [](const NoveltyRow& a, const NoveltyRow& b) {
        if (a.best_rank != b.best_rank) return a.best_rank < b.best_rank;
        return a.entity < b.entity;
    });
    return out;
}

}  // namespace ecnet
