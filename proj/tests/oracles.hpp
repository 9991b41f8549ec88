// Naive reference implementations and deterministic input generators used to
// cross-check the optimized library code. Everything here favors obviousness
// over speed: plain BFS, explicit path enumeration, literal peeling.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ecnet/dictionary.hpp"
#include "ecnet/metrics.hpp"
#include "ecnet/query.hpp"

namespace oracle {

// mt19937_64 raw output is fully specified by the standard, so every value
// derived below is portable. Modulo bias is irrelevant for test inputs.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

// G(n, p) with a deterministic edge order.
std::vector<std::pair<std::uint32_t, std::uint32_t>> random_graph(std::mt19937_64& rng,
                                                                  std::size_t n, double p);

// Plain queue BFS; -1 marks unreachable nodes.
std::vector<int> bfs_distances(const ecnet::UndirectedView& view, std::uint32_t source);

// Reciprocal-sum closeness assembled from per-pair BFS distances, summed in
// ascending-distance order (the same arithmetic the formula prescribes).
std::vector<double> closeness_by_pair_bfs(const ecnet::UndirectedView& view);

// Freeman betweenness by explicitly enumerating every geodesic of every
// unordered pair and crediting its interior nodes.
std::vector<double> betweenness_exhaustive(const ecnet::UndirectedView& view);

// 3·triangles / triples with brute-force triangle counting over node triples.
double clustering_brute(const ecnet::UndirectedView& view);

// Core numbers by literal repeated peeling: for k = 1, 2, ... delete nodes of
// degree < k until stable; a node's core number is the last k it survived.
std::vector<std::uint32_t> kcore_peeling(const ecnet::UndirectedView& view);

std::size_t component_count(const ecnet::UndirectedView& view);

// Articulation points by node-removal connectivity: v is an articulation
// point iff deleting it increases the component count among the remaining
// nodes.
std::vector<std::uint32_t> articulation_by_removal(const ecnet::UndirectedView& view);

// True when the induced subgraph on `members` stays connected after removing
// any single node (the definition of 2-connectivity for >= 3 nodes).
bool is_biconnected(const ecnet::UndirectedView& view,
                    const std::vector<std::uint32_t>& members);

// Random boolean query AST over a tiny phrase pool; depth-bounded.
ecnet::QueryPtr random_query(std::mt19937_64& rng, int depth = 0);

// Direct recursive evaluation used to check evaluate_query's boolean
// semantics: And/Or evaluate children independently and combine with &&/||.
bool evaluate_naive(const ecnet::QueryNode& node, const ecnet::PaperRecord& paper);

// Per-pattern scanner + longest-wins overlap resolver: finds every boundary
// respecting occurrence of every surface, then greedily keeps the leftmost
// match, breaking position ties by length. Returns the matched entities in
// text order, computed on normalized text.
std::vector<ecnet::EntityId> naive_chunk_entities(const ecnet::EntityDictionary& dict,
                                                  const std::vector<std::string>& surfaces,
                                                  std::string_view normalized_text);

// Random dictionary over a small alphabet plus a text that embeds some of the
// surfaces; exercises overlap, substring surfaces and boundary effects.
struct ChunkerCase {
    std::vector<std::string> lines;     // dictionary lines, surface-->TYPE_ID
    std::vector<std::string> surfaces;  // normalized surfaces, same order
    std::string text;
};
ChunkerCase random_chunker_case(std::mt19937_64& rng);

}  // namespace oracle
