#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace ecnet {

struct RunConfig {
    std::filesystem::path corpus_path;
    std::filesystem::path dictionary_path;
    std::string query_text;  // empty → every paper is a citing paper
    std::filesystem::path curated_db_path;  // empty → no comparison stage
    std::string anchor_key;  // "TYPE:ID"; required when curated_db_path is set
    std::filesystem::path output_dir;
    std::size_t exact_threshold = 10000;  // max component size for all-pairs distances
    std::size_t sample_size = 1000;       // BFS sources above the threshold
    std::uint64_t seed = 42;
    std::size_t top_k = 20;
    bool strict_ingest = false;
    unsigned threads = 1;
};

struct RunManifest {
    std::string command;                     // "pipeline" or "metrics"
    std::vector<std::string> output_files;   // names within output_dir, sorted
    std::vector<std::string> warnings;
    std::size_t papers_loaded = 0;
    std::size_t papers_matched = 0;
    std::size_t graph_nodes = 0;
    std::size_t graph_edges = 0;
    std::size_t graph_loops = 0;
};

// filter → extract → build → metrics → (optional) compare, writing the edge
// list, summary JSON, frequency tables, centrality tables, histogram table,
// comparison/novelty reports and manifest.json into output_dir. Any stage
// failure removes this run's partial outputs and rethrows with the stage name.
RunManifest run_pipeline(const RunConfig& config);

// Re-analyze an exported edge list: identical metric outputs to the pipeline's
// metric stage on the same graph (corpus/dictionary/query config is ignored).
RunManifest run_metrics_only(const std::filesystem::path& edge_list_path,
                             const RunConfig& config);

// Rank comparison + novelty reports only; requires curated_db_path and
// anchor_key.
RunManifest run_compare_only(const std::filesystem::path& edge_list_path,
                             const RunConfig& config);

// Deterministic float formatting shared by every TSV writer (%.12g).
std::string format_metric(double value);

}  // namespace ecnet
