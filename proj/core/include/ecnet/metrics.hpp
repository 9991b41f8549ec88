#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecnet/citation_graph.hpp"
#include "ecnet/entity.hpp"

namespace ecnet {

// Simple undirected loop-free projection: edge {u,v} iff u→v or v→u, u ≠ v.
// All distance-, triangle-, component- and core-based metrics run on this
// view; degree histograms and degree centrality use the directed graph.
struct UndirectedView {
    std::size_t node_count = 0;
    std::vector<std::vector<std::uint32_t>> adjacency;  // sorted, no loops, no duplicates
    std::size_t edge_count = 0;

    std::size_t degree(std::uint32_t v) const { return adjacency[v].size(); }
};

UndirectedView undirected_view(const EntityCitationGraph& g);

// Convenience for tests and metrics-only runs: build a view straight from
// undirected edge pairs over nodes 0..n-1 (loops and duplicates collapse).
UndirectedView view_from_edges(std::size_t n,
                               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

struct ComponentLabels {
    std::vector<std::uint32_t> label;  // node -> component id; id 0 is the largest component
    std::vector<std::size_t> sizes;    // descending; ties keep discovery (min node) order

    std::size_t count() const { return sizes.size(); }
};

ComponentLabels weak_components(const UndirectedView& view);

struct BiComponentSet {
    std::vector<std::vector<std::uint32_t>> components;  // node sets, each sorted;
                                                         // list sorted lexicographically
    std::vector<std::uint32_t> articulation_points;      // sorted
};

// Maximal 2-connected subgraphs (edge partition); a bridge forms a 2-node
// bi-component. Isolated nodes belong to no bi-component.
BiComponentSet bicomponents(const UndirectedView& view);

struct CoreDecomposition {
    std::vector<std::uint32_t> core_number;  // per node
    std::uint32_t max_k = 0;
    std::vector<std::uint32_t> max_core_members;  // nodes with core_number == max_k, sorted
};

CoreDecomposition k_core_decomposition(const UndirectedView& view);

struct DistanceSummary {
    // Σ d_ij over unordered pairs divided by ½·N·(N+1) — the source formula,
    // whose denominator counts i = j pairs — and by the conventional ½·N·(N−1).
    double mean_paper_formula = 0.0;
    double mean_conventional = 0.0;
    std::uint32_t diameter = 0;
    std::pair<std::uint32_t, std::uint32_t> diameter_endpoints{0, 0};
    std::size_t pair_count = 0;  // unordered pairs measured (exact) or source·(N−1) (sampled)
    std::size_t node_count = 0;  // N used in the formulas
    bool exact = true;           // false → sampled sources; diameter is a lower bound
    bool connected_input = true; // false → computed on the largest component only
};

// All-pairs BFS when the (component) size is ≤ exact_threshold, otherwise
// seeded uniform sampling of sample_size distinct sources. Disconnected input
// is reduced to its largest component and flagged. Throws DataError on an
// empty graph.
DistanceSummary distance_summary(const UndirectedView& view, std::size_t exact_threshold,
                                 std::size_t sample_size, std::uint64_t seed,
                                 unsigned threads = 1);

enum class Direction : std::uint8_t { In, Out, Undirected };

std::string_view to_string(Direction d);

struct DegreeHistogram {
    Direction direction = Direction::Undirected;
    std::map<std::uint32_t, std::size_t> counts;  // degree -> node count
};

// Distinct-neighbor degrees, loops excluded; Σ counts == node count.
std::pair<DegreeHistogram, DegreeHistogram> degree_histograms(const EntityCitationGraph& g);

struct PowerLawFit {
    double gamma = 0.0;  // p(k) ~ k^-gamma
    std::uint32_t k_min = 1;
    std::uint32_t k_max = 1;
    double r_squared = 0.0;
};

// Least-squares line through (log k, log count) over bins with k ≥ k_min and
// count > 0; gamma is the negated slope. Throws DataError with fewer than 3
// usable bins.
PowerLawFit fit_power_law(const DegreeHistogram& h, std::uint32_t k_min = 1);

// 3·triangles / connected triples; 0 when the view has no triples.
double global_clustering_coefficient(const UndirectedView& view);

struct CentralityScores {
    std::string measure;  // "in_degree", "out_degree", "closeness", "betweenness"
    std::vector<double> score;  // per node index
};

CentralityScores degree_centrality(const EntityCitationGraph& g, Direction direction);

// The source formula verbatim: C_c(v) = Σ_u 1/d(v,u) with 1/∞ := 0
// (reciprocal-sum / harmonic closeness).
CentralityScores closeness_centrality(const UndirectedView& view, unsigned threads = 1);

// Unnormalized Freeman betweenness via per-source shortest-path DAG
// accumulation; deterministic for every thread count.
CentralityScores betweenness_centrality(const UndirectedView& view, unsigned threads = 1);

struct RankedRow {
    std::uint32_t node = 0;
    double score = 0.0;
    std::uint32_t rank = 0;  // 1-based
};

// Top k by score descending; ties broken by (entity_type, canonical_id)
// ascending, which is node-index order. Optional filter keeps one entity type.
std::vector<RankedRow> top_k(const CentralityScores& scores, const EntityCitationGraph& g,
                             std::size_t k, std::optional<EntityType> type_filter = std::nullopt);

}  // namespace ecnet
