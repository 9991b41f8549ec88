#include "ecnet/pipeline.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <utility>

#include <json.hpp>

#include "ecnet/chunker.hpp"
#include "ecnet/citation_graph.hpp"
#include "ecnet/corpus.hpp"
#include "ecnet/dictionary.hpp"
#include "ecnet/errors.hpp"
#include "ecnet/evaluation.hpp"
#include "ecnet/metrics.hpp"
#include "ecnet/query.hpp"
#include "ecnet/version.hpp"

namespace ecnet {

namespace {

using nlohmann::json;

template <typename Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const ConfigError& e) {
        throw ConfigError(std::string(name) + ": " + e.what());
    } catch (const DataError& e) {
        throw DataError(std::string(name) + ": " + e.what());
    } catch (const std::exception& e) {
        throw Error(std::string(name) + ": " + e.what());
    }
}

// Tracks files created by one run so a failed stage leaves no partial output.
class OutputSet {
public:
    explicit OutputSet(std::filesystem::path dir) : dir_(std::move(dir)) {}

    ~OutputSet() {
        if (armed_) {
            std::error_code ec;
            for (const auto& name : names_) std::filesystem::remove(dir_ / name, ec);
        }
    }

    std::ofstream create(const std::string& name) {
        std::ofstream out(dir_ / name, std::ios::binary);
        if (!out) throw ConfigError("cannot write output file: " + (dir_ / name).string());
        names_.push_back(name);
        return out;
    }

    void finish(const std::string& name, std::ofstream& out) {
        if (!out.flush()) throw DataError("short write to output file: " + (dir_ / name).string());
    }

    void add_existing(const std::string& name) { names_.push_back(name); }

    std::vector<std::string> sorted_names() const {
        auto names = names_;
        std::sort(names.begin(), names.end());
        return names;
    }

    const std::filesystem::path& dir() const { return dir_; }
    void dismiss() { armed_ = false; }

private:
    std::filesystem::path dir_;
    std::vector<std::string> names_;
    bool armed_ = true;
};

// Id-based cell label for the rank tables; stable across export/import of the
// edge list, which does not carry display names.
std::string table_cell(const EntityId& e) {
    return std::string(to_string(e.type)) + "_" + e.canonical_id;
}

constexpr std::array<EntityType, 3> kAllTypes = {EntityType::Disease, EntityType::Drug,
                                                 EntityType::Gene};

struct MetricsBundle {
    UndirectedView view;
    ComponentLabels components;
    BiComponentSet bicomps;
    CoreDecomposition cores;
    bool has_distances = false;
    DistanceSummary distances;
    DegreeHistogram hist_in, hist_out;
    bool has_fit_in = false, has_fit_out = false;
    PowerLawFit fit_in, fit_out;
    double clustering = 0.0;
    bool has_density = false;
    double density_value = 0.0;
    std::vector<CentralityScores> centralities;  // in_degree, out_degree, closeness, betweenness
};

std::vector<CentralityScores> compute_centralities(const EntityCitationGraph& g,
                                                   const UndirectedView& view, unsigned threads) {
    std::vector<CentralityScores> out;
    out.push_back(degree_centrality(g, Direction::In));
    out.push_back(degree_centrality(g, Direction::Out));
    out.push_back(closeness_centrality(view, threads));
    out.push_back(betweenness_centrality(view, threads));
    return out;
}

MetricsBundle compute_metrics(const EntityCitationGraph& g, const RunConfig& config,
                              std::vector<std::string>& warnings) {
    MetricsBundle b;
    b.view = undirected_view(g);
    b.components = weak_components(b.view);
    b.bicomps = bicomponents(b.view);
    b.cores = k_core_decomposition(b.view);

    if (g.node_count() == 0) {
        warnings.push_back("graph is empty; distance and density metrics skipped");
    } else {
        b.distances = distance_summary(b.view, config.exact_threshold, config.sample_size,
                                       config.seed, config.threads);
        b.has_distances = true;
        if (!b.distances.connected_input)
            warnings.push_back("graph is disconnected; distances computed on the largest "
                               "component only");
        if (!b.distances.exact)
            warnings.push_back("distances sampled from " +
                               std::to_string(b.distances.pair_count) +
                               " source pairs; diameter is a lower bound");
    }
    if (g.node_count() >= 2) {
        b.density_value = density(g);
        b.has_density = true;
    } else if (g.node_count() > 0) {
        warnings.push_back("graph has fewer than 2 nodes; density undefined");
    }

    std::tie(b.hist_in, b.hist_out) = degree_histograms(g);
    try {
        b.fit_in = fit_power_law(b.hist_in);
        b.has_fit_in = true;
    } catch (const DataError&) {
        warnings.push_back("in-degree power-law fit skipped: fewer than 3 nonzero bins");
    }
    try {
        b.fit_out = fit_power_law(b.hist_out);
        b.has_fit_out = true;
    } catch (const DataError&) {
        warnings.push_back("out-degree power-law fit skipped: fewer than 3 nonzero bins");
    }
    b.clustering = global_clustering_coefficient(b.view);
    b.centralities = compute_centralities(g, b.view, config.threads);
    return b;
}

json metadata_json() {
    return json{
        {"normalization", "lowercase; whitespace runs collapsed to one space; matching on "
                          "word boundaries (letters, digits and non-ASCII bytes are word "
                          "characters)"},
        {"closeness_variant", "reciprocal-sum (harmonic): C_c(v) = sum over u of 1/d(v,u), "
                              "1/inf = 0"},
        {"betweenness_variant", "unnormalized Freeman betweenness on the undirected view"},
        {"loop_policy", "loops stored and counted; excluded from the undirected view, the "
                        "density numerator, degrees and all distance/triangle metrics"},
        {"mean_distance_denominators", "primary N(N+1)/2 over unordered pairs; conventional "
                                       "N(N-1)/2 also reported"},
        {"tie_rule", "(entity_type, canonical_id) ascending"},
        {"tool_version", kVersion},
    };
}

json summary_json(const EntityCitationGraph& g, const MetricsBundle& b) {
    std::array<std::size_t, 3> type_counts{};
    for (const EntityId& e : g.nodes) ++type_counts[static_cast<std::size_t>(e.type)];

    json graph{
        {"node_count", g.node_count()},
        {"edge_count", g.edge_count()},
        {"loop_count", g.loop_count},
        {"non_loop_edge_count", g.edge_count() - g.loop_count},
        {"total_weight", g.total_weight},
        {"entity_type_counts",
         {{"DISEASE", type_counts[0]}, {"DRUG", type_counts[1]}, {"GENE", type_counts[2]}}},
    };
    if (b.has_density) {
        graph["density"] = b.density_value;
        const double n = static_cast<double>(g.node_count());
        graph["density_including_loops"] = static_cast<double>(g.edge_count()) / (n * (n - 1.0));
    } else {
        graph["density"] = nullptr;
        graph["density_including_loops"] = nullptr;
    }

    json distances = nullptr;
    if (b.has_distances) {
        const DistanceSummary& d = b.distances;
        distances = json{
            {"mean_geodesic", d.mean_paper_formula},
            {"mean_geodesic_conventional", d.mean_conventional},
            {"diameter", d.diameter},
            {"diameter_endpoints",
             {format_entity_key(g.nodes[d.diameter_endpoints.first]),
              format_entity_key(g.nodes[d.diameter_endpoints.second])}},
            {"exact", d.exact},
            {"diameter_is_lower_bound", !d.exact},
            {"pair_count", d.pair_count},
            {"node_count_used", d.node_count},
            {"computed_on_largest_component_only", !d.connected_input},
        };
    }

    const auto fit_json = [](bool has, const PowerLawFit& f) -> json {
        if (!has) return nullptr;
        return json{{"gamma", f.gamma + 0.0},
                    {"r_squared", f.r_squared},
                    {"k_min", f.k_min},
                    {"k_max", f.k_max}};
    };

    std::size_t largest_bicomp = 0;
    for (const auto& c : b.bicomps.components) largest_bicomp = std::max(largest_bicomp, c.size());

    json macro{
        {"components",
         {{"count", b.components.count()},
          {"largest_size", b.components.sizes.empty() ? 0 : b.components.sizes.front()}}},
        {"bicomponents",
         {{"count", b.bicomps.components.size()},
          {"articulation_point_count", b.bicomps.articulation_points.size()},
          {"largest_size", largest_bicomp}}},
        {"k_core", {{"max_k", b.cores.max_k}, {"max_core_size", b.cores.max_core_members.size()}}},
        {"distances", distances},
        {"degree_distribution",
         {{"in", fit_json(b.has_fit_in, b.fit_in)}, {"out", fit_json(b.has_fit_out, b.fit_out)}}},
    };

    return json{
        {"graph", graph},
        {"macro", macro},
        {"meso", {{"global_clustering_coefficient", b.clustering}}},
        {"metadata", metadata_json()},
    };
}

void write_json(OutputSet& outputs, const std::string& name, const json& value) {
    auto out = outputs.create(name);
    out << value.dump(2) << '\n';
    outputs.finish(name, out);
}

void write_centrality_table(OutputSet& outputs, const EntityCitationGraph& g,
                            const CentralityScores& scores, std::size_t k) {
    std::array<std::vector<RankedRow>, 3> per_type;
    for (std::size_t t = 0; t < 3; ++t) per_type[t] = top_k(scores, g, k, kAllTypes[t]);
    const std::vector<RankedRow> all = top_k(scores, g, k);

    const std::string name = "centrality_" + scores.measure + ".tsv";
    auto out = outputs.create(name);
    out << "rank\tdisease\tdrug\tgene\tall\n";
    std::size_t rows = all.size();
    for (const auto& list : per_type) rows = std::max(rows, list.size());
    for (std::size_t i = 0; i < rows; ++i) {
        out << (i + 1);
        for (const auto& list : per_type)
            out << '\t' << (i < list.size() ? table_cell(g.nodes[list[i].node]) : "");
        out << '\t' << (i < all.size() ? table_cell(g.nodes[all[i].node]) : "") << '\n';
    }
    outputs.finish(name, out);
}

void write_histograms(OutputSet& outputs, const DegreeHistogram& in, const DegreeHistogram& out_h) {
    const std::string name = "degree_histograms.tsv";
    auto out = outputs.create(name);
    out << "direction\tdegree\tnode_count\n";
    for (const DegreeHistogram* h : {&in, &out_h})
        for (const auto& [degree, count] : h->counts)
            out << to_string(h->direction) << '\t' << degree << '\t' << count << '\n';
    outputs.finish(name, out);
}

void write_metric_tables(OutputSet& outputs, const EntityCitationGraph& g, const MetricsBundle& b,
                         const RunConfig& config) {
    write_json(outputs, "summary.json", summary_json(g, b));
    for (const CentralityScores& scores : b.centralities)
        write_centrality_table(outputs, g, scores, config.top_k);
    write_histograms(outputs, b.hist_in, b.hist_out);
}

void write_comparisons(OutputSet& outputs, const EntityCitationGraph& g,
                       const std::vector<CentralityScores>& centralities, const CuratedDb& db,
                       const EntityId& anchor, const RunConfig& config,
                       std::vector<std::string>& warnings) {
    if (g.find_node(anchor) < 0)
        warnings.push_back("anchor entity " + format_entity_key(anchor) + " is not in the graph");

    std::vector<RankComparison> comparisons;
    for (const CentralityScores& scores : centralities)
        comparisons.push_back(match_rankings(scores, g, db, anchor, config.top_k));

    for (const RankComparison& comp : comparisons) {
        const std::string name = "comparison_" + comp.measure + ".tsv";
        auto out = outputs.create(name);
        out << "our_rank\tentity_type\tcanonical_id\tdisplay_name\tscore\tmatched\t"
               "curated_rank\tbucket\trelation\tinference_score\n";
        for (const RankComparisonRow& row : comp.rows) {
            out << row.our_rank << '\t' << to_string(row.entity.type) << '\t'
                << row.entity.canonical_id << '\t'
                << (row.entity.display_name.empty() ? row.entity.canonical_id
                                                    : row.entity.display_name)
                << '\t' << format_metric(row.score) << '\t' << (row.matched ? "true" : "false")
                << '\t' << (row.curated_rank ? std::to_string(*row.curated_rank) : "") << '\t'
                << to_string(row.bucket) << '\t' << row.relation << '\t'
                << (row.inference_score ? format_metric(*row.inference_score) : "") << '\n';
        }
        outputs.finish(name, out);
    }

    const std::vector<NoveltyRow> novel = novelty_report(comparisons);
    auto out = outputs.create("novelty.tsv");
    out << "entity_type\tcanonical_id\tdisplay_name\tbest_rank\tmeasures\n";
    for (const NoveltyRow& row : novel) {
        out << to_string(row.entity.type) << '\t' << row.entity.canonical_id << '\t'
            << (row.entity.display_name.empty() ? row.entity.canonical_id
                                                : row.entity.display_name)
            << '\t' << row.best_rank << '\t';
        for (std::size_t i = 0; i < row.measure_ranks.size(); ++i) {
            if (i) out << ';';
            out << row.measure_ranks[i].first << ':' << row.measure_ranks[i].second;
        }
        out << '\n';
    }
    outputs.finish("novelty.tsv", out);
}

json config_json(const RunConfig& config) {
    return json{
        {"corpus", config.corpus_path.string()},
        {"dictionary", config.dictionary_path.string()},
        {"query", config.query_text},
        {"curated_db", config.curated_db_path.string()},
        {"anchor", config.anchor_key},
        {"output_dir", config.output_dir.string()},
        {"exact_threshold", config.exact_threshold},
        {"sample_size", config.sample_size},
        {"seed", config.seed},
        {"k", config.top_k},
        {"strict", config.strict_ingest},
        {"threads", config.threads},
    };
}

void write_manifest(OutputSet& outputs, const RunConfig& config, RunManifest& manifest,
                    const json& extra_counts, const std::string& canonical_query) {
    manifest.output_files = outputs.sorted_names();
    json doc{
        {"command", manifest.command},
        {"config", config_json(config)},
        {"canonical_query", canonical_query},
        {"counts", extra_counts},
        {"decision_metadata", metadata_json()},
        {"outputs", manifest.output_files},
        {"warnings", manifest.warnings},
        {"tool_version", kVersion},
    };
    auto out = outputs.create("manifest.json");
    out << doc.dump(2) << '\n';
    outputs.finish("manifest.json", out);
}

}  // namespace

std::string format_metric(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value + 0.0);
    return buf;
}

RunManifest run_pipeline(const RunConfig& config) {
    if (config.top_k == 0) throw ConfigError("k must be >= 1");
    if (config.corpus_path.empty()) throw ConfigError("corpus path is required");
    if (config.dictionary_path.empty()) throw ConfigError("dictionary path is required");
    if (config.output_dir.empty()) throw ConfigError("output directory is required");
    if (!config.curated_db_path.empty() && config.anchor_key.empty())
        throw ConfigError("an anchor entity (TYPE:ID) is required with a curated database");
    if (!std::filesystem::exists(config.dictionary_path))
        throw ConfigError("dictionary file does not exist: " + config.dictionary_path.string());
    if (!std::filesystem::exists(config.corpus_path))
        throw ConfigError("corpus file does not exist: " + config.corpus_path.string());

    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) throw ConfigError("cannot create output directory: " + config.output_dir.string());

    RunManifest manifest;
    manifest.command = "pipeline";

    const Corpus corpus =
        stage("load-corpus", [&] { return load_corpus(config.corpus_path, config.strict_ingest); });
    manifest.papers_loaded = corpus.size();
    if (corpus.skipped_line_count() > 0)
        manifest.warnings.push_back(std::to_string(corpus.skipped_line_count()) +
                                    " malformed corpus lines skipped");

    const EntityDictionary dict =
        stage("load-dictionary", [&] { return load_dictionary(config.dictionary_path); });
    if (!dict.collisions().empty())
        manifest.warnings.push_back(std::to_string(dict.collisions().size()) +
                                    " dictionary surface collisions (first mapping kept)");

    QueryPtr ast;
    std::string canonical_query;
    if (!config.query_text.empty()) {
        ast = stage("parse-query", [&] { return parse_query(config.query_text); });
        canonical_query = print_query(*ast);
    }

    std::vector<std::string> citing_ids = stage("filter", [&] {
        if (ast) return filter_corpus(corpus, *ast);
        std::vector<std::string> all;
        for (const auto& [id, rec] : corpus.papers()) all.push_back(id);
        return all;
    });
    manifest.papers_matched = citing_ids.size();
    if (citing_ids.empty())
        manifest.warnings.push_back("query matched no papers; the graph is empty");

    // Extraction covers the citing papers and every paper they cite.
    struct Extraction {
        std::map<std::string, std::vector<EntityId>> entity_sets;
        std::map<EntityId, std::uint64_t> citing_mentions;
        std::map<EntityId, std::uint64_t> cited_paper_counts;
    };
    const Extraction extraction = stage("extract", [&] {
        std::set<std::string> cited_set;
        for (const std::string& id : citing_ids)
            for (const PaperRecord* ref : resolve_references(corpus, id))
                cited_set.insert(ref->paper_id);

        std::set<std::string> relevant(citing_ids.begin(), citing_ids.end());
        relevant.insert(cited_set.begin(), cited_set.end());

        Extraction ex;
        const std::set<std::string> citing_set(citing_ids.begin(), citing_ids.end());
        for (const std::string& id : relevant) {
            const auto occurrences = extract_entities(dict, corpus.at(id));
            if (occurrences.empty()) continue;
            ex.entity_sets.emplace(id, distinct_entities(occurrences));
            const bool citing = citing_set.contains(id);
            const bool cited = cited_set.contains(id);
            for (const EntityOccurrence& occ : occurrences) {
                if (citing) ex.citing_mentions[occ.entity] += occ.mention_count();
                if (cited) ex.cited_paper_counts[occ.entity] += 1;
            }
        }
        return ex;
    });

    const EntityCitationGraph graph = stage(
        "build-graph", [&] { return build_graph(corpus, citing_ids, extraction.entity_sets); });
    manifest.graph_nodes = graph.node_count();
    manifest.graph_edges = graph.edge_count();
    manifest.graph_loops = graph.loop_count;

    OutputSet outputs(config.output_dir);
    stage("write-edge-list", [&] {
        outputs.add_existing("edges.tsv");
        export_edge_list(graph, config.output_dir / "edges.tsv");
        return 0;
    });

    stage("write-frequency-tables", [&] {
        const auto write_frequency = [&](const std::string& name, const char* count_header,
                                         const std::map<EntityId, std::uint64_t>& freq) {
            std::vector<std::pair<const EntityId*, std::uint64_t>> rows;
            rows.reserve(freq.size());
            for (const auto& [entity, count] : freq) rows.emplace_back(&entity, count);
            std::stable_sort(rows.begin(), rows.end(),
                             [](const auto& a, const auto& b) { return a.second > b.second; });
            auto out = outputs.create(name);
            out << count_header << "\tentity_type\tcanonical_id\tdisplay_name\n";
            for (const auto& [entity, count] : rows) {
                out << count << '\t' << to_string(entity->type) << '\t' << entity->canonical_id
                    << '\t'
                    << (entity->display_name.empty() ? entity->canonical_id
                                                     : entity->display_name)
                    << '\n';
            }
            outputs.finish(name, out);
        };
        write_frequency("citing_entity_frequency.tsv", "mentions", extraction.citing_mentions);
        write_frequency("cited_entity_frequency.tsv", "num_papers", extraction.cited_paper_counts);
        return 0;
    });

    const MetricsBundle bundle =
        stage("metrics", [&] { return compute_metrics(graph, config, manifest.warnings); });
    stage("write-metric-tables", [&] {
        write_metric_tables(outputs, graph, bundle, config);
        return 0;
    });

    if (!config.curated_db_path.empty()) {
        const CuratedDb db =
            stage("load-curated-db", [&] { return load_curated_db(config.curated_db_path); });
        const EntityId anchor =
            stage("parse-anchor", [&] { return parse_entity_key(config.anchor_key); });
        stage("compare", [&] {
            write_comparisons(outputs, graph, bundle.centralities, db, anchor, config, manifest.warnings);
            return 0;
        });
    }

    const json counts{
        {"papers_loaded", manifest.papers_loaded},
        {"papers_matched", manifest.papers_matched},
        {"corpus_resolved_references", corpus.resolved_reference_count()},
        {"corpus_unresolved_references", corpus.unresolved_reference_count()},
        {"corpus_skipped_lines", corpus.skipped_line_count()},
        {"dictionary_surface_forms", dict.surface_count()},
        {"dictionary_entities", dict.total_entity_count()},
        {"dictionary_collisions", dict.collisions().size()},
        {"graph_nodes", manifest.graph_nodes},
        {"graph_edges", manifest.graph_edges},
        {"graph_loops", manifest.graph_loops},
    };
    stage("write-manifest",
          [&] { write_manifest(outputs, config, manifest, counts, canonical_query); return 0; });

    outputs.dismiss();
    return manifest;
}

RunManifest run_metrics_only(const std::filesystem::path& edge_list_path,
                             const RunConfig& config) {
    if (config.top_k == 0) throw ConfigError("k must be >= 1");
    if (config.output_dir.empty()) throw ConfigError("output directory is required");
    if (!config.curated_db_path.empty() && config.anchor_key.empty())
        throw ConfigError("an anchor entity (TYPE:ID) is required with a curated database");

    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) throw ConfigError("cannot create output directory: " + config.output_dir.string());

    RunManifest manifest;
    manifest.command = "metrics";

    const EntityCitationGraph graph =
        stage("import-edge-list", [&] { return import_edge_list(edge_list_path); });
    manifest.graph_nodes = graph.node_count();
    manifest.graph_edges = graph.edge_count();
    manifest.graph_loops = graph.loop_count;

    const MetricsBundle bundle =
        stage("metrics", [&] { return compute_metrics(graph, config, manifest.warnings); });

    OutputSet outputs(config.output_dir);
    stage("write-metric-tables", [&] {
        write_metric_tables(outputs, graph, bundle, config);
        return 0;
    });

    if (!config.curated_db_path.empty()) {
        const CuratedDb db =
            stage("load-curated-db", [&] { return load_curated_db(config.curated_db_path); });
        const EntityId anchor =
            stage("parse-anchor", [&] { return parse_entity_key(config.anchor_key); });
        stage("compare", [&] {
            write_comparisons(outputs, graph, bundle.centralities, db, anchor, config, manifest.warnings);
            return 0;
        });
    }

    const json counts{
        {"graph_nodes", manifest.graph_nodes},
        {"graph_edges", manifest.graph_edges},
        {"graph_loops", manifest.graph_loops},
    };
    stage("write-manifest", [&] { write_manifest(outputs, config, manifest, counts, ""); return 0; });

    outputs.dismiss();
    return manifest;
}

RunManifest run_compare_only(const std::filesystem::path& edge_list_path,
                             const RunConfig& config) {
    if (config.top_k == 0) throw ConfigError("k must be >= 1");
    if (config.output_dir.empty()) throw ConfigError("output directory is required");
    if (config.curated_db_path.empty()) throw ConfigError("a curated database is required");
    if (config.anchor_key.empty()) throw ConfigError("an anchor entity (TYPE:ID) is required");

    std::error_code ec;
    std::filesystem::create_directories(config.output_dir, ec);
    if (ec) throw ConfigError("cannot create output directory: " + config.output_dir.string());

    RunManifest manifest;
    manifest.command = "compare";

    const EntityCitationGraph graph =
        stage("import-edge-list", [&] { return import_edge_list(edge_list_path); });
    manifest.graph_nodes = graph.node_count();
    manifest.graph_edges = graph.edge_count();
    manifest.graph_loops = graph.loop_count;

    const CuratedDb db =
        stage("load-curated-db", [&] { return load_curated_db(config.curated_db_path); });
    const EntityId anchor =
        stage("parse-anchor", [&] { return parse_entity_key(config.anchor_key); });

    OutputSet outputs(config.output_dir);
    stage("compare", [&] {
        const UndirectedView view = undirected_view(graph);
        const auto centralities = compute_centralities(graph, view, config.threads);
        write_comparisons(outputs, graph, centralities, db, anchor, config, manifest.warnings);
        return 0;
    });

    const json counts{
        {"graph_nodes", manifest.graph_nodes},
        {"graph_edges", manifest.graph_edges},
        {"graph_loops", manifest.graph_loops},
        {"curated_interactions", db.size()},
    };
    stage("write-manifest", [&] { write_manifest(outputs, config, manifest, counts, ""); return 0; });

    outputs.dismiss();
    return manifest;
}

}  // namespace ecnet
