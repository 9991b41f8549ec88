#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ecnet/citation_graph.hpp"
#include "ecnet/entity.hpp"
#include "ecnet/metrics.hpp"

namespace ecnet {

// One curated (subject, object) interaction, e.g. a CTD-style drug-disease
// association with its precomputed inference score and rank.
struct CuratedInteraction {
    EntityId subject;
    EntityId object;
    std::string relation;
    std::optional<double> inference_score;
    std::optional<std::uint32_t> curated_rank;
};

class CuratedDb {
public:
    const CuratedInteraction* find(const EntityId& subject, const EntityId& object) const;

    std::size_t size() const { return interactions_.size(); }
    const std::vector<CuratedInteraction>& interactions() const { return interactions_; }
    std::size_t object_type_count(EntityType t) const {
        return object_type_counts_[static_cast<std::size_t>(t)];
    }
    std::size_t count_with_subject(const EntityId& subject) const;

private:
    friend CuratedDb load_curated_db(const std::filesystem::path&);

    void add(CuratedInteraction&& interaction);  // throws DataError on duplicates

    std::vector<CuratedInteraction> interactions_;
    std::unordered_map<std::string, std::size_t> by_key_;  // "subject|object" -> index
    std::array<std::size_t, 3> object_type_counts_{};
};

// TSV, no header:
//   subject_type  subject_id  object_type  object_id  relation  inference_score  curated_rank
// The two trailing fields may be empty. Rejected: malformed rows, subject ==
// object, duplicate (subject, object) keys, duplicate curated_rank within one
// (subject, object-type) group.
CuratedDb load_curated_db(const std::filesystem::path& path);

enum class RankBucket : std::uint8_t {
    Top10,          // curated_rank <= 10
    R11To100,       // 11 <= curated_rank <= 100
    Above100,       // curated_rank > 100
    MatchedUnranked,// interaction found but carries no curated_rank
    Unmatched,
};

std::string_view to_string(RankBucket b);

// Threshold rule only; callers handle matched-without-rank separately.
RankBucket bucket_for_rank(std::uint32_t curated_rank);

struct RankComparisonRow {
    EntityId entity;
    std::uint32_t our_rank = 0;
    double score = 0.0;
    bool matched = false;
    RankBucket bucket = RankBucket::Unmatched;
    std::optional<std::uint32_t> curated_rank;
    std::optional<double> inference_score;
    std::string relation;
};

struct RankComparison {
    std::string measure;
    std::vector<RankComparisonRow> rows;  // ascending our_rank
    std::size_t match_count = 0;
};

// Looks up (anchor, entity) for each of our top-k entities by the given
// scores; the anchor itself never competes in its own ranking.
RankComparison match_rankings(const CentralityScores& scores, const EntityCitationGraph& g,
                              const CuratedDb& db, const EntityId& anchor, std::size_t k,
                              std::optional<EntityType> type_filter = std::nullopt);

struct NoveltyRow {
    EntityId entity;
    std::uint32_t best_rank = 0;
    // (measure, our_rank) pairs, in the order the comparisons were given.
    std::vector<std::pair<std::string, std::uint32_t>> measure_ranks;
};

// Entities ranked in at least one comparison and curated-matched in none,
// sorted by best rank attained (ties by entity key).
std::vector<NoveltyRow> novelty_report(const std::vector<RankComparison>& comparisons);

}  // namespace ecnet
