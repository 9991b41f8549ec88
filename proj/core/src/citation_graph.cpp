#include "ecnet/citation_graph.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <numeric>
#include <unordered_set>

#include "ecnet/errors.hpp"

namespace ecnet {

namespace {

std::uint64_t edge_key(std::uint32_t source, std::uint32_t target) {
    return (static_cast<std::uint64_t>(source) << 32) | target;
}

}  // namespace

std::int64_t EntityCitationGraph::find_node(const EntityId& e) const {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), e);
    if (it == nodes.end() || !(*it == e)) return -1;
    return it - nodes.begin();
}

std::uint32_t EdgeAccumulator::intern(const EntityId& e) {
    const auto [it, fresh] = index_.emplace(e, static_cast<std::uint32_t>(entities_.size()));
    if (fresh) entities_.push_back(e);
    return it->second;
}

void EdgeAccumulator::add_paper_citation(std::span<const EntityId> citing_entities,
                                         std::span<const EntityId> cited_entities) {
    if (citing_entities.empty() || cited_entities.empty()) return;

    std::vector<std::uint32_t> cited_ids;
    cited_ids.reserve(cited_entities.size());
    for (const EntityId& e : cited_entities) cited_ids.push_back(intern(e));

    for (const EntityId& citing : citing_entities) {
        const std::uint32_t s = intern(citing);
        for (const std::uint32_t t : cited_ids) ++weights_[edge_key(s, t)];
    }
    total_weight_ += static_cast<std::uint64_t>(citing_entities.size()) * cited_entities.size();
}

void EdgeAccumulator::merge(const EdgeAccumulator& other) {
    std::vector<std::uint32_t> remap(other.entities_.size());
    for (std::size_t i = 0; i < other.entities_.size(); ++i) remap[i] = intern(other.entities_[i]);
    for (const auto& [key, weight] : other.weights_) {
        const auto s = remap[static_cast<std::uint32_t>(key >> 32)];
        const auto t = remap[static_cast<std::uint32_t>(key)];
        weights_[edge_key(s, t)] += weight;
    }
    total_weight_ += other.total_weight_;
}

EntityCitationGraph EdgeAccumulator::finish() const {
    EntityCitationGraph g;

    std::vector<std::uint32_t> order(entities_.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return entities_[a] < entities_[b]; });
    std::vector<std::uint32_t> rank(entities_.size());
    g.nodes.reserve(entities_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = static_cast<std::uint32_t>(i);
        g.nodes.push_back(entities_[order[i]]);
    }

    g.edges.reserve(weights_.size());
    for (const auto& [key, weight] : weights_) {
        const auto s = rank[static_cast<std::uint32_t>(key >> 32)];
        const auto t = rank[static_cast<std::uint32_t>(key)];
        g.edges.push_back({s, t, weight});
        if (s == t) ++g.loop_count;
        g.total_weight += weight;
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
        return a.source != b.source ? a.source < b.source : a.target < b.target;
    });
    return g;
}

EntityCitationGraph build_graph(const Corpus& corpus, const std::vector<std::string>& citing_ids,
                                const std::map<std::string, std::vector<EntityId>>& entity_sets) {
    const auto set_of = [&](const std::string& paper_id) {
        std::vector<EntityId> set;
        if (const auto it = entity_sets.find(paper_id); it != entity_sets.end()) set = it->second;
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        return set;
    };

    EdgeAccumulator acc;
    for (const std::string& citing_id : citing_ids) {
        if (!corpus.find(citing_id))
            throw DataError("citing paper not in corpus: " + citing_id);
        const std::vector<EntityId> citing_set = set_of(citing_id);
        for (const PaperRecord* cited : resolve_references(corpus, citing_id))
            acc.add_paper_citation(citing_set, set_of(cited->paper_id));
    }
    return acc.finish();
}

double density(const EntityCitationGraph& g) {
    const std::size_t n = g.node_count();
    if (n < 2) throw DataError("density undefined on a graph with fewer than 2 nodes");
    const std::size_t non_loop = g.edge_count() - g.loop_count;
    return static_cast<double>(non_loop) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

void export_edge_list(const EntityCitationGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open edge list for writing: " + path.string());
    for (const Edge& e : g.edges) {
        const EntityId& s = g.nodes[e.source];
        const EntityId& t = g.nodes[e.target];
        out << to_string(s.type) << '\t' << s.canonical_id << '\t' << to_string(t.type) << '\t'
            << t.canonical_id << '\t' << e.weight << '\n';
    }
    if (!out.flush()) throw DataError("short write to edge list: " + path.string());
}

EntityCitationGraph import_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open edge list: " + path.string());

    std::unordered_set<std::uint64_t> seen;
    std::string line;
    std::size_t line_number = 0;
    EntityCitationGraph g;
    std::unordered_map<EntityId, std::uint32_t, EntityIdHash> index;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw_edges;  // key, weight

    const auto fail = [&](const std::string& why) -> ParseError {
        return ParseError(path.string() + ":" + std::to_string(line_number) + ": " + why);
    };

    const auto intern = [&](EntityId&& e) {
        const auto [it, fresh] = index.emplace(std::move(e), static_cast<std::uint32_t>(g.nodes.size()));
        if (fresh) g.nodes.push_back(it->first);
        return it->second;
    };

    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        std::array<std::string_view, 5> field;
        std::string_view rest = line;
        for (std::size_t i = 0; i < 5; ++i) {
            const auto tab = rest.find('\t');
            if (i < 4) {
                if (tab == std::string_view::npos) throw fail("expected 5 tab-separated fields");
                field[i] = rest.substr(0, tab);
                rest.remove_prefix(tab + 1);
            } else {
                if (tab != std::string_view::npos) throw fail("expected 5 tab-separated fields");
                field[i] = rest;
            }
        }
        if (field[1].empty() || field[3].empty()) throw fail("empty entity id");

        std::uint64_t weight = 0;
        const auto [ptr, ec] =
            std::from_chars(field[4].data(), field[4].data() + field[4].size(), weight);
        if (ec != std::errc() || ptr != field[4].data() + field[4].size() || weight == 0)
            throw fail("weight must be a positive integer");

        EntityId source{parse_entity_type(field[0]), std::string(field[1]), std::string(field[1])};
        EntityId target{parse_entity_type(field[2]), std::string(field[3]), std::string(field[3])};
        const std::uint32_t s = intern(std::move(source));
        const std::uint32_t t = intern(std::move(target));
        const std::uint64_t key = edge_key(s, t);
        if (!seen.insert(key).second) throw fail("duplicate edge");
        raw_edges.emplace_back(key, weight);
    }

    // Re-sort into canonical node order.
    std::vector<std::uint32_t> order(g.nodes.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return g.nodes[a] < g.nodes[b]; });
    std::vector<std::uint32_t> rank(g.nodes.size());
    std::vector<EntityId> sorted_nodes;
    sorted_nodes.reserve(g.nodes.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = static_cast<std::uint32_t>(i);
        sorted_nodes.push_back(g.nodes[order[i]]);
    }
    g.nodes = std::move(sorted_nodes);

    g.edges.reserve(raw_edges.size());
    for (const auto& [key, weight] : raw_edges) {
        const auto s = rank[static_cast<std::uint32_t>(key >> 32)];
        const auto t = rank[static_cast<std::uint32_t>(key)];
        g.edges.push_back({s, t, weight});
        if (s == t) ++g.loop_count;
        g.total_weight += weight;
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& a, const Edge& b) {
        return a.source != b.source ? a.source < b.source : a.target < b.target;
    });
    return g;
}

namespace {

std::string xml_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void export_graphml(const EntityCitationGraph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open GraphML file for writing: " + path.string());

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"d0\" for=\"node\" attr.name=\"entity_type\" attr.type=\"string\"/>\n"
        << "  <key id=\"d1\" for=\"node\" attr.name=\"canonical_id\" attr.type=\"string\"/>\n"
        << "  <key id=\"d2\" for=\"node\" attr.name=\"display_name\" attr.type=\"string\"/>\n"
        << "  <key id=\"d3\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"directed\">\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const EntityId& e = g.nodes[i];
        out << "    <node id=\"n" << i << "\">"
            << "<data key=\"d0\">" << to_string(e.type) << "</data>"
            << "<data key=\"d1\">" << xml_escape(e.canonical_id) << "</data>"
            << "<data key=\"d2\">" << xml_escape(format_entity_label(e)) << "</data>"
            << "</node>\n";
    }
    for (const Edge& e : g.edges) {
        out << "    <edge source=\"n" << e.source << "\" target=\"n" << e.target << "\">"
            << "<data key=\"d3\">" << e.weight << "</data></edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
    if (!out.flush()) throw DataError("short write to GraphML file: " + path.string());
}

}  // namespace ecnet
