// ecnet — build entity-entity citation networks from a document corpus and
// compute their macro/meso/micro metrics.

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecnet/chunker.hpp"
#include "ecnet/citation_graph.hpp"
#include "ecnet/corpus.hpp"
#include "ecnet/dictionary.hpp"
#include "ecnet/errors.hpp"
#include "ecnet/pipeline.hpp"
#include "ecnet/query.hpp"
#include "ecnet/version.hpp"

namespace {

using ecnet::ConfigError;
using ecnet::RunConfig;

struct CliOptions {
    RunConfig run;
    std::string query_file;
    std::string config_file;
    std::string edges_path;
    std::string output_path;  // single-file commands; "-" = stdout
    std::string graphml_path;
};

// Shared flags; each subcommand exposes the subset it uses.
void add_run_flags(CLI::App* cmd, CliOptions& opt, bool with_outputs) {
    cmd->add_option("--query", opt.run.query_text, "Query text (field-tagged boolean language)");
    cmd->add_option("--query-file", opt.query_file, "File containing the query text");
    cmd->add_option("--config", opt.config_file,
                    "key=value file; its entries override command-line flags");
    cmd->add_flag("--strict", opt.run.strict_ingest,
                  "Abort on malformed corpus lines instead of skipping them");
    if (with_outputs) {
        cmd->add_option("--output-dir", opt.run.output_dir, "Directory for report files");
        cmd->add_option("--k", opt.run.top_k, "Ranking depth for centrality tables (default 20)");
        cmd->add_option("--exact-threshold", opt.run.exact_threshold,
                        "Max component size for exact all-pairs distances (default 10000)");
        cmd->add_option("--sample-size", opt.run.sample_size,
                        "BFS sources sampled above the threshold (default 1000)");
        cmd->add_option("--seed", opt.run.seed, "Sampling seed (default 42)");
        cmd->add_option("--threads", opt.run.threads, "Worker threads for metrics (default 1)");
        cmd->add_option("--curated-db", opt.run.curated_db_path,
                        "Curated interaction database (TSV) for rank comparison");
        cmd->add_option("--anchor", opt.run.anchor_key,
                        "Anchor entity TYPE:ID for the comparison (e.g. DRUG:DB00331)");
    }
}

bool parse_bool(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1" || value == "yes") return true;
    if (value == "false" || value == "0" || value == "no") return false;
    throw ConfigError("config key '" + key + "' expects a boolean, got '" + value + "'");
}

template <typename T>
T parse_number(const std::string& value, const std::string& key) {
    T out{};
    const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || p != value.data() + value.size())
        throw ConfigError("config key '" + key + "' expects a number, got '" + value + "'");
    return out;
}

// `key = value` lines; '#' starts a comment. Values override parsed flags, per
// the config-file contract.
void apply_config_file(CliOptions& opt) {
    if (opt.config_file.empty()) return;
    std::ifstream in(opt.config_file);
    if (!in) throw ConfigError("cannot open config file: " + opt.config_file);

    const auto trim = [](std::string s) {
        const auto first = s.find_first_not_of(" \t\r");
        const auto last = s.find_last_not_of(" \t\r");
        return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
    };

    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const std::string entry = trim(line);
        if (entry.empty()) continue;
        const auto eq = entry.find('=');
        if (eq == std::string::npos)
            throw ConfigError(opt.config_file + ":" + std::to_string(line_number) +
                              ": expected key=value");
        const std::string key = trim(entry.substr(0, eq));
        const std::string value = trim(entry.substr(eq + 1));

        if (key == "corpus") opt.run.corpus_path = value;
        else if (key == "dictionary") opt.run.dictionary_path = value;
        else if (key == "query") opt.run.query_text = value;
        else if (key == "query-file") opt.query_file = value;
        else if (key == "curated-db") opt.run.curated_db_path = value;
        else if (key == "anchor") opt.run.anchor_key = value;
        else if (key == "output-dir") opt.run.output_dir = value;
        else if (key == "edges") opt.edges_path = value;
        else if (key == "output") opt.output_path = value;
        else if (key == "k") opt.run.top_k = parse_number<std::size_t>(value, key);
        else if (key == "exact-threshold")
            opt.run.exact_threshold = parse_number<std::size_t>(value, key);
        else if (key == "sample-size") opt.run.sample_size = parse_number<std::size_t>(value, key);
        else if (key == "seed") opt.run.seed = parse_number<std::uint64_t>(value, key);
        else if (key == "threads") opt.run.threads = parse_number<unsigned>(value, key);
        else if (key == "strict") opt.run.strict_ingest = parse_bool(value, key);
        else throw ConfigError("unknown config key '" + key + "'");
    }
}

void resolve_query(CliOptions& opt) {
    if (opt.query_file.empty()) return;
    if (!opt.run.query_text.empty())
        throw ConfigError("--query and --query-file are mutually exclusive");
    std::ifstream in(opt.query_file, std::ios::binary);
    if (!in) throw ConfigError("cannot open query file: " + opt.query_file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    opt.run.query_text = buffer.str();
    // A query file usually ends with a newline; the parser treats it as
    // whitespace anyway, but an all-whitespace file is a config error.
    if (opt.run.query_text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw ConfigError("query file is empty: " + opt.query_file);
}

// Writes to the path or stdout for "-"/empty.
void write_text_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    out << content;
    if (!out.flush()) throw ecnet::DataError("short write to output file: " + path);
}

void print_manifest(const ecnet::RunManifest& manifest, const RunConfig& config) {
    if (manifest.command == "pipeline")
        std::cout << "papers loaded: " << manifest.papers_loaded
                  << ", matched: " << manifest.papers_matched << '\n';
    std::cout << "graph: " << manifest.graph_nodes << " nodes, " << manifest.graph_edges
              << " edges (" << manifest.graph_loops << " loops)\n"
              << "outputs (" << manifest.output_files.size() << " files) in "
              << config.output_dir.string() << '\n';
    for (const std::string& warning : manifest.warnings)
        std::cerr << "warning: " << warning << '\n';
}

int cmd_filter(CliOptions& opt) {
    resolve_query(opt);
    if (opt.run.query_text.empty()) throw ConfigError("a query is required");
    const ecnet::Corpus corpus = ecnet::load_corpus(opt.run.corpus_path, opt.run.strict_ingest);
    const ecnet::QueryPtr ast = ecnet::parse_query(opt.run.query_text);
    std::string out;
    for (const std::string& id : ecnet::filter_corpus(corpus, *ast)) {
        out += id;
        out += '\n';
    }
    write_text_output(opt.output_path, out);
    return 0;
}

int cmd_extract(CliOptions& opt) {
    resolve_query(opt);
    const ecnet::Corpus corpus = ecnet::load_corpus(opt.run.corpus_path, opt.run.strict_ingest);
    const ecnet::EntityDictionary dict = ecnet::load_dictionary(opt.run.dictionary_path);
    if (!dict.collisions().empty())
        std::cerr << "warning: " << dict.collisions().size()
                  << " dictionary surface collisions (first mapping kept)\n";

    std::vector<std::string> ids;
    if (!opt.run.query_text.empty()) {
        const ecnet::QueryPtr ast = ecnet::parse_query(opt.run.query_text);
        ids = ecnet::filter_corpus(corpus, *ast);
    } else {
        for (const auto& [id, rec] : corpus.papers()) ids.push_back(id);
    }

    std::string out;
    for (const std::string& id : ids) {
        for (const auto& occ : ecnet::extract_entities(dict, corpus.at(id))) {
            out += id;
            out += '\t';
            out += ecnet::to_string(occ.entity.type);
            out += '\t';
            out += occ.entity.canonical_id;
            out += '\t';
            out += std::to_string(occ.mention_count());
            out += '\n';
        }
    }
    write_text_output(opt.output_path, out);
    return 0;
}

int cmd_build(CliOptions& opt) {
    resolve_query(opt);
    if (opt.output_path.empty() || opt.output_path == "-")
        throw ConfigError("--output must name the edge-list file to write");
    const ecnet::Corpus corpus = ecnet::load_corpus(opt.run.corpus_path, opt.run.strict_ingest);
    const ecnet::EntityDictionary dict = ecnet::load_dictionary(opt.run.dictionary_path);

    std::vector<std::string> citing_ids;
    if (!opt.run.query_text.empty()) {
        const ecnet::QueryPtr ast = ecnet::parse_query(opt.run.query_text);
        citing_ids = ecnet::filter_corpus(corpus, *ast);
    } else {
        for (const auto& [id, rec] : corpus.papers()) citing_ids.push_back(id);
    }

    std::map<std::string, std::vector<ecnet::EntityId>> entity_sets;
    for (const auto& [id, rec] : corpus.papers()) {
        auto entities = ecnet::distinct_entities(ecnet::extract_entities(dict, rec));
        if (!entities.empty()) entity_sets.emplace(id, std::move(entities));
    }

    const ecnet::EntityCitationGraph graph = ecnet::build_graph(corpus, citing_ids, entity_sets);
    ecnet::export_edge_list(graph, opt.output_path);
    if (!opt.graphml_path.empty()) ecnet::export_graphml(graph, opt.graphml_path);
    std::cout << "graph: " << graph.node_count() << " nodes, " << graph.edge_count() << " edges ("
              << graph.loop_count << " loops) -> " << opt.output_path << '\n';
    return 0;
}

int cmd_report(const std::string& dir) {
    const auto read_json = [&](const std::string& name) {
        std::ifstream in(std::filesystem::path(dir) / name);
        if (!in) throw ConfigError("cannot open " + name + " in " + dir);
        return nlohmann::json::parse(in);
    };
    const nlohmann::json summary = read_json("summary.json");
    const nlohmann::json manifest = read_json("manifest.json");

    const auto& graph = summary.at("graph");
    const auto& macro = summary.at("macro");
    std::cout << "run: " << manifest.at("command").get<std::string>() << " (tool version "
              << manifest.at("tool_version").get<std::string>() << ")\n";
    if (const auto q = manifest.at("canonical_query").get<std::string>(); !q.empty())
        std::cout << "query: " << q << '\n';
    std::cout << "graph: " << graph.at("node_count") << " entities, " << graph.at("edge_count")
              << " links, " << graph.at("loop_count") << " loops\n"
              << "density (no loops): " << graph.at("density").dump()
              << "; including loops: " << graph.at("density_including_loops").dump() << '\n'
              << "components: " << macro.at("components").at("count")
              << " (largest " << macro.at("components").at("largest_size") << ")\n"
              << "bi-components: " << macro.at("bicomponents").at("count") << ", articulation points: "
              << macro.at("bicomponents").at("articulation_point_count") << '\n'
              << "max k-core: k=" << macro.at("k_core").at("max_k") << " with "
              << macro.at("k_core").at("max_core_size") << " members\n";
    if (!macro.at("distances").is_null()) {
        const auto& d = macro.at("distances");
        std::cout << "mean geodesic distance: " << d.at("mean_geodesic").dump()
                  << " (conventional " << d.at("mean_geodesic_conventional").dump() << ")\n"
                  << "diameter: " << d.at("diameter") << " between "
                  << d.at("diameter_endpoints")[0].get<std::string>() << " and "
                  << d.at("diameter_endpoints")[1].get<std::string>() << '\n';
    }
    std::cout << "clustering coefficient: "
              << summary.at("meso").at("global_clustering_coefficient").dump() << '\n';
    const auto& dd = macro.at("degree_distribution");
    for (const char* dir_name : {"in", "out"}) {
        if (!dd.at(dir_name).is_null())
            std::cout << "power-law gamma_" << dir_name << ": " << dd.at(dir_name).at("gamma").dump()
                      << " (R^2 " << dd.at(dir_name).at("r_squared").dump() << ")\n";
    }
    for (const auto& warning : manifest.at("warnings"))
        std::cout << "warning: " << warning.get<std::string>() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entity citation network toolkit"};
    app.set_version_flag("--version", ecnet::kVersion);
    app.require_subcommand(1);

    CliOptions opt;
    std::string report_dir;

    CLI::App* pipeline = app.add_subcommand(
        "pipeline", "filter -> extract -> build -> metrics -> compare, with all reports");
    pipeline->add_option("--corpus", opt.run.corpus_path, "Corpus JSONL file");
    pipeline->add_option("--dictionary", opt.run.dictionary_path, "Entity dictionary file");
    add_run_flags(pipeline, opt, true);

    CLI::App* filter = app.add_subcommand("filter", "print the paper ids matching a query");
    filter->add_option("--corpus", opt.run.corpus_path, "Corpus JSONL file")->required();
    filter->add_option("--output", opt.output_path, "Output file ('-' = stdout)");
    add_run_flags(filter, opt, false);

    CLI::App* extract = app.add_subcommand(
        "extract", "per-paper entity mention counts (paper_id, type, id, count TSV)");
    extract->add_option("--corpus", opt.run.corpus_path, "Corpus JSONL file")->required();
    extract->add_option("--dictionary", opt.run.dictionary_path, "Entity dictionary file")
        ->required();
    extract->add_option("--output", opt.output_path, "Output file ('-' = stdout)");
    add_run_flags(extract, opt, false);

    CLI::App* build = app.add_subcommand("build", "build the entity graph and export its edge list");
    build->add_option("--corpus", opt.run.corpus_path, "Corpus JSONL file")->required();
    build->add_option("--dictionary", opt.run.dictionary_path, "Entity dictionary file")
        ->required();
    build->add_option("--output", opt.output_path, "Edge-list TSV to write")->required();
    build->add_option("--graphml", opt.graphml_path, "Optional GraphML export path");
    add_run_flags(build, opt, false);

    CLI::App* metrics = app.add_subcommand("metrics", "recompute all metrics from an edge list");
    metrics->add_option("--edges", opt.edges_path, "Edge-list TSV")->required();
    add_run_flags(metrics, opt, true);

    CLI::App* compare =
        app.add_subcommand("compare", "rank comparison against a curated interaction database");
    compare->add_option("--edges", opt.edges_path, "Edge-list TSV")->required();
    add_run_flags(compare, opt, true);

    CLI::App* report = app.add_subcommand("report", "print a readable summary of a finished run");
    report->add_option("--output-dir", report_dir, "Directory holding summary.json + manifest.json")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage problems are exit 1
    }

    try {
        apply_config_file(opt);
        if (pipeline->parsed()) {
            resolve_query(opt);
            print_manifest(ecnet::run_pipeline(opt.run), opt.run);
            return 0;
        }
        if (filter->parsed()) return cmd_filter(opt);
        if (extract->parsed()) return cmd_extract(opt);
        if (build->parsed()) return cmd_build(opt);
        if (metrics->parsed()) {
            print_manifest(ecnet::run_metrics_only(opt.edges_path, opt.run), opt.run);
            return 0;
        }
        if (compare->parsed()) {
            print_manifest(ecnet::run_compare_only(opt.edges_path, opt.run), opt.run);
            return 0;
        }
        if (report->parsed()) return cmd_report(report_dir);
        throw ConfigError("no subcommand given");
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ecnet::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
