#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ecnet/corpus.hpp"
#include "ecnet/entity.hpp"

namespace ecnet {

struct Edge {
    std::uint32_t source = 0;
    std::uint32_t target = 0;
    std::uint64_t weight = 0;
};

// Weighted directed entity-entity citation graph. Nodes are sorted by
// (entity_type, canonical_id) and addressed by index; edges are collapsed per
// (source, target) pair and sorted the same way. Loops are kept.
struct EntityCitationGraph {
    std::vector<EntityId> nodes;
    std::vector<Edge> edges;
    std::size_t loop_count = 0;
    std::uint64_t total_weight = 0;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); }

    // Node index, or -1 when the entity is not in the graph.
    std::int64_t find_node(const EntityId& e) const;
};

// Accumulates citing-entity × cited-entity pairings. One accumulator per
// worker; partial accumulators merge commutatively, so any sharding of the
// input produces the same finished graph.
class EdgeAccumulator {
public:
    // Cross product of the two DISTINCT entity sets; every pairing increments
    // its edge weight by one. Loops (same entity on both sides) are recorded.
    void add_paper_citation(std::span<const EntityId> citing_entities,
                            std::span<const EntityId> cited_entities);

    void merge(const EdgeAccumulator& other);

    // Nodes sorted, edges sorted, loop and weight totals computed.
    EntityCitationGraph finish() const;

    std::uint64_t total_weight() const { return total_weight_; }

private:
    std::uint32_t intern(const EntityId& e);

    std::unordered_map<EntityId, std::uint32_t, EntityIdHash> index_;
    std::vector<EntityId> entities_;
    std::unordered_map<std::uint64_t, std::uint64_t> weights_;  // source<<32 | target
    std::uint64_t total_weight_ = 0;
};

// Folds add_paper_citation over every (citing paper, resolved reference) pair.
// entity_sets maps paper_id to that paper's entities (duplicates tolerated and
// collapsed; papers absent from the map count as empty). Entities only enter
// the node set through at least one pairing. Throws DataError for a citing id
// missing from the corpus.
EntityCitationGraph build_graph(const Corpus& corpus, const std::vector<std::string>& citing_ids,
                                const std::map<std::string, std::vector<EntityId>>& entity_sets);

// |non-loop edges| / (n·(n−1)). Throws DataError when n < 2.
double density(const EntityCitationGraph& g);

// TSV `source_type  source_id  target_type  target_id  weight`, one edge per
// line, no header, sorted by (source, target). Import of the result yields an
// identical graph, and export→import→export is byte-identical.
void export_edge_list(const EntityCitationGraph& g, const std::filesystem::path& path);
EntityCitationGraph import_edge_list(const std::filesystem::path& path);

// GraphML for external visualization; nodes carry type, id and display name.
void export_graphml(const EntityCitationGraph& g, const std::filesystem::path& path);

}  // namespace ecnet
