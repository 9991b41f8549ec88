#include <doctest.h>

#include <string>
#include <vector>

#include "ecnet/errors.hpp"
#include "ecnet/evaluation.hpp"
#include "test_support.hpp"

using namespace ecnet;
using testsup::TempFile;

namespace {

const char* kDb =
    "DRUG\tDB00331\tDISEASE\tD003920\ttreats\t89.96\t1\n"
    "DRUG\tDB00331\tDISEASE\tD009765\ttreats\t45.25\t7\n"
    "DRUG\tDB00331\tDISEASE\tD002318\tmarker\t12.1\t74\n"
    "DRUG\tDB00331\tDISEASE\tD009336\tmarker\t\t102\n"
    "DRUG\tDB00331\tGENE\tP01375\tmodulates\t33.0\t3\n"
    "DRUG\tDB00331\tGENE\tP41159\tincreases\t\t\n"
    "\n";

CuratedDb load_db(const std::string& body = kDb) {
    TempFile file(body, "curated");
    return load_curated_db(file.path);
}

// Anchor DRUG:DB00331 plus four candidates; scores make the ranking obvious.
EntityCitationGraph eval_graph() {
    EntityCitationGraph g;
    g.nodes = {{EntityType::Disease, "D003920", "Diabetes"},
               {EntityType::Disease, "D009765", "Obesity"},
               {EntityType::Drug, "DB00331", "Metformin"},
               {EntityType::Gene, "P01375", "TNF"},
               {EntityType::Gene, "QX", "Novel"}};
    return g;
}

CentralityScores eval_scores() { return {"in_degree", {9.0, 8.0, 100.0, 7.0, 6.0}}; }

const EntityId kAnchor{EntityType::Drug, "DB00331", ""};

}  // namespace

TEST_CASE("load_curated_db parses optional fields and counts object types") {
    const CuratedDb db = load_db();
    CHECK(db.size() == 6);
    CHECK(db.object_type_count(EntityType::Disease) == 4);
    CHECK(db.object_type_count(EntityType::Gene) == 2);
    CHECK(db.count_with_subject(kAnchor) == 6);

    const auto* hit = db.find(kAnchor, {EntityType::Disease, "D009765", ""});
    REQUIRE(hit != nullptr);
    CHECK(hit->relation == "treats");
    CHECK(hit->inference_score == 45.25);
    CHECK(hit->curated_rank == 7);

    const auto* unranked = db.find(kAnchor, {EntityType::Gene, "P41159", ""});
    REQUIRE(unranked != nullptr);
    CHECK_FALSE(unranked->inference_score.has_value());
    CHECK_FALSE(unranked->curated_rank.has_value());

    CHECK(db.find({EntityType::Drug, "other", ""}, {EntityType::Gene, "P01375", ""}) == nullptr);
}

TEST_CASE("load_curated_db rejects malformed and inconsistent rows") {
    CHECK_THROWS_AS(load_db("DRUG\tA\tGENE\tB\trel\t1.0\n"), DataError);          // 6 fields
    CHECK_THROWS_AS(load_db("DRUG\tA\tGENE\tB\trel\t1.0\t1\tx\n"), DataError);    // 8 fields
    CHECK_THROWS_AS(load_db("DRUG\tA\tDRUG\tA\trel\t\t\n"), DataError);           // self pair
    CHECK_THROWS_AS(load_db("DRUG\tA\tGENE\tB\trel\t\t\nDRUG\tA\tGENE\tB\tother\t\t\n"),
                    DataError);                                                   // duplicate pair
    CHECK_THROWS_AS(load_db("DRUG\tA\tGENE\tB\trel\t\t0\n"), DataError);          // rank 0
    CHECK_THROWS_AS(load_db("DRUG\tA\tGENE\tB\trel\t\t-3\n"), DataError);
    CHECK_THROWS_AS(load_db("DRUG\tA\tGENE\tB\trel\tabc\t1\n"), DataError);       // bad score
    // Same rank for two objects of one type under one subject.
    CHECK_THROWS_AS(load_db("DRUG\tA\tGENE\tB\trel\t\t5\nDRUG\tA\tGENE\tC\trel\t\t5\n"),
                    DataError);
    // ...but the same rank is fine across object types or subjects.
    CHECK(load_db("DRUG\tA\tGENE\tB\trel\t\t5\nDRUG\tA\tDISEASE\tC\trel\t\t5\n").size() == 2);
    CHECK(load_db("DRUG\tA\tGENE\tB\trel\t\t5\nDRUG\tZ\tGENE\tC\trel\t\t5\n").size() == 2);
}

TEST_CASE("bucket thresholds") {
    CHECK(bucket_for_rank(1) == RankBucket::Top10);
    CHECK(bucket_for_rank(10) == RankBucket::Top10);
    CHECK(bucket_for_rank(11) == RankBucket::R11To100);
    CHECK(bucket_for_rank(100) == RankBucket::R11To100);
    CHECK(bucket_for_rank(101) == RankBucket::Above100);
    CHECK(bucket_for_rank(439) == RankBucket::Above100);
    CHECK(to_string(RankBucket::Top10) == "top10");
    CHECK(to_string(RankBucket::R11To100) == "11-100");
    CHECK(to_string(RankBucket::Above100) == "101+");
    CHECK(to_string(RankBucket::MatchedUnranked) == "matched-unranked");
    CHECK(to_string(RankBucket::Unmatched) == "unmatched");
}

TEST_CASE("match_rankings excludes the anchor and joins curated data") {
    const CuratedDb db = load_db();
    const EntityCitationGraph g = eval_graph();
    const RankComparison cmp = match_rankings(eval_scores(), g, db, kAnchor, 4);

    CHECK(cmp.measure == "in_degree");
    REQUIRE(cmp.rows.size() == 4);  // anchor held rank 1 by score but is gone
    CHECK(cmp.rows[0].entity.canonical_id == "D003920");
    CHECK(cmp.rows[0].our_rank == 1);
    CHECK(cmp.rows[0].matched);
    CHECK(cmp.rows[0].bucket == RankBucket::Top10);
    CHECK(cmp.rows[0].curated_rank == 1);

    CHECK(cmp.rows[1].entity.canonical_id == "D009765");
    CHECK(cmp.rows[1].bucket == RankBucket::Top10);

    CHECK(cmp.rows[2].entity.canonical_id == "P01375");
    CHECK(cmp.rows[2].our_rank == 3);
    CHECK(cmp.rows[2].bucket == RankBucket::Top10);
    CHECK(cmp.rows[2].relation == "modulates");

    CHECK(cmp.rows[3].entity.canonical_id == "QX");
    CHECK_FALSE(cmp.rows[3].matched);
    CHECK(cmp.rows[3].bucket == RankBucket::Unmatched);
    CHECK_FALSE(cmp.rows[3].curated_rank.has_value());

    CHECK(cmp.match_count == 3);
}

TEST_CASE("matched interactions without a rank land in matched-unranked") {
    const CuratedDb db = load_db();
    EntityCitationGraph g = eval_graph();
    g.nodes[4] = {EntityType::Gene, "P41159", "LEP"};  // curated but rankless
    const RankComparison cmp = match_rankings(eval_scores(), g, db, kAnchor, 10);
    REQUIRE(cmp.rows.size() == 4);
    CHECK(cmp.rows[3].entity.canonical_id == "P41159");
    CHECK(cmp.rows[3].matched);
    CHECK(cmp.rows[3].bucket == RankBucket::MatchedUnranked);
    CHECK(cmp.match_count == 4);
}

TEST_CASE("match_rankings respects k and the type filter") {
    const CuratedDb db = load_db();
    const EntityCitationGraph g = eval_graph();
    CHECK(match_rankings(eval_scores(), g, db, kAnchor, 2).rows.size() == 2);
    const RankComparison diseases =
        match_rankings(eval_scores(), g, db, kAnchor, 10, EntityType::Disease);
    REQUIRE(diseases.rows.size() == 2);
    CHECK(diseases.rows[0].entity.type == EntityType::Disease);
    CHECK(diseases.rows[1].entity.type == EntityType::Disease);
}

TEST_CASE("match_count is monotonic in k") {
    const CuratedDb db = load_db();
    const EntityCitationGraph g = eval_graph();
    std::size_t previous = 0;
    for (std::size_t k = 1; k <= g.node_count(); ++k) {
        const std::size_t count = match_rankings(eval_scores(), g, db, kAnchor, k).match_count;
        CHECK(count >= previous);
        previous = count;
    }
}

TEST_CASE("novelty report collects entities matched in no measure") {
    const CuratedDb db = load_db();
    const EntityCitationGraph g = eval_graph();
    const CentralityScores second{"closeness", {1.0, 2.0, 50.0, 5.0, 4.0}};
    const std::vector<RankComparison> comparisons{
        match_rankings(eval_scores(), g, db, kAnchor, 4),
        match_rankings(second, g, db, kAnchor, 4),
    };
    const auto novel = novelty_report(comparisons);
    REQUIRE(novel.size() == 1);
    CHECK(novel[0].entity.canonical_id == "QX");
    CHECK(novel[0].best_rank == 2);  // rank 4 by in_degree, rank 2 by closeness
    REQUIRE(novel[0].measure_ranks.size() == 2);
    CHECK(novel[0].measure_ranks[0].first == "in_degree");
    CHECK(novel[0].measure_ranks[0].second == 4);
    CHECK(novel[0].measure_ranks[1].first == "closeness");
    CHECK(novel[0].measure_ranks[1].second == 2);
}
