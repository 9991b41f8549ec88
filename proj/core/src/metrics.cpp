#include "ecnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "ecnet/errors.hpp"

namespace ecnet {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

void sort_unique(std::vector<std::uint32_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

// fn(thread_index) on `threads` workers; fn must only write thread-owned data.
template <typename Fn>
void run_workers(unsigned threads, Fn&& fn) {
    if (threads <= 1) {
        fn(0u);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads - 1);
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(fn, t);
    fn(0u);
    for (auto& th : pool) th.join();
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Unbiased-enough bounded draw (fixed-point multiply); bit-stable everywhere.
std::uint64_t bounded_draw(std::uint64_t& state, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(splitmix64(state)) * n) >> 64);
}

struct SourceResult {
    std::uint64_t distance_sum = 0;
    std::uint32_t eccentricity = 0;
    std::uint32_t farthest = kNone;
};

SourceResult bfs_source(const UndirectedView& view, std::uint32_t source,
                        std::vector<std::int32_t>& dist, std::vector<std::uint32_t>& queue) {
    dist.assign(view.node_count, -1);
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    SourceResult r;
    r.farthest = source;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t u = queue[head];
        const auto d = dist[u];
        r.distance_sum += static_cast<std::uint64_t>(d);
        if (static_cast<std::uint32_t>(d) > r.eccentricity) {
            r.eccentricity = static_cast<std::uint32_t>(d);
            r.farthest = u;
        } else if (static_cast<std::uint32_t>(d) == r.eccentricity && u < r.farthest) {
            r.farthest = u;
        }
        for (const std::uint32_t v : view.adjacency[u]) {
            if (dist[v] < 0) {
                dist[v] = d + 1;
                queue.push_back(v);
            }
        }
    }
    return r;
}

}  // namespace

UndirectedView undirected_view(const EntityCitationGraph& g) {
    UndirectedView view;
    view.node_count = g.node_count();
    view.adjacency.assign(view.node_count, {});
    for (const Edge& e : g.edges) {
        if (e.source == e.target) continue;
        view.adjacency[e.source].push_back(e.target);
        view.adjacency[e.target].push_back(e.source);
    }
    for (auto& neighbors : view.adjacency) {
        sort_unique(neighbors);
        view.edge_count += neighbors.size();
    }
    view.edge_count /= 2;
    return view;
}

UndirectedView view_from_edges(std::size_t n,
                               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    UndirectedView view;
    view.node_count = n;
    view.adjacency.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u == v) continue;
        view.adjacency[u].push_back(v);
        view.adjacency[v].push_back(u);
    }
    for (auto& neighbors : view.adjacency) {
        sort_unique(neighbors);
        view.edge_count += neighbors.size();
    }
    view.edge_count /= 2;
    return view;
}

ComponentLabels weak_components(const UndirectedView& view) {
    const std::size_t n = view.node_count;
    ComponentLabels out;
    out.label.assign(n, kNone);

    std::vector<std::size_t> raw_sizes;
    std::vector<std::uint32_t> queue;
    for (std::uint32_t start = 0; start < n; ++start) {
        if (out.label[start] != kNone) continue;
        const auto id = static_cast<std::uint32_t>(raw_sizes.size());
        std::size_t size = 0;
        queue.assign(1, start);
        out.label[start] = id;
        while (!queue.empty()) {
            const std::uint32_t u = queue.back();
            queue.pop_back();
            ++size;
            for (const std::uint32_t v : view.adjacency[u]) {
                if (out.label[v] == kNone) {
                    out.label[v] = id;
                    queue.push_back(v);
                }
            }
        }
        raw_sizes.push_back(size);
    }

    // Relabel so component 0 is the largest; equal sizes keep discovery order.
    std::vector<std::uint32_t> order(raw_sizes.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return raw_sizes[a] > raw_sizes[b];
    });
    std::vector<std::uint32_t> new_id(raw_sizes.size());
    out.sizes.resize(raw_sizes.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        new_id[order[i]] = static_cast<std::uint32_t>(i);
        out.sizes[i] = raw_sizes[order[i]];
    }
    for (auto& l : out.label) l = new_id[l];
    return out;
}

BiComponentSet bicomponents(const UndirectedView& view) {
    const std::size_t n = view.node_count;
    BiComponentSet out;
    std::vector<std::int64_t> disc(n, -1), low(n, -1);
    std::vector<bool> articulation(n, false);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edge_stack;

    struct Frame {
        std::uint32_t u;
        std::uint32_t parent;
        std::size_t next_edge;
    };
    std::vector<Frame> stack;

    std::int64_t timer = 0;
    std::vector<std::uint32_t> component_nodes;
    for (std::uint32_t root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        disc[root] = low[root] = timer++;
        stack.push_back({root, kNone, 0});
        std::size_t root_children = 0;

        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next_edge < view.adjacency[f.u].size()) {
                const std::uint32_t v = view.adjacency[f.u][f.next_edge++];
                if (disc[v] < 0) {
                    edge_stack.emplace_back(f.u, v);
                    disc[v] = low[v] = timer++;
                    stack.push_back({v, f.u, 0});
                } else if (v != f.parent && disc[v] < disc[f.u]) {
                    edge_stack.emplace_back(f.u, v);
                    low[f.u] = std::min(low[f.u], disc[v]);
                }
                continue;
            }

            const Frame finished = f;
            stack.pop_back();
            if (stack.empty()) continue;

            Frame& p = stack.back();
            low[p.u] = std::min(low[p.u], low[finished.u]);
            if (low[finished.u] >= disc[p.u]) {
                // p.u separates this child subtree: pop one bi-component.
                if (p.parent == kNone) {
                    ++root_children;
                } else {
                    articulation[p.u] = true;
                }
                component_nodes.clear();
                while (true) {
                    const auto [a, b] = edge_stack.back();
                    edge_stack.pop_back();
                    component_nodes.push_back(a);
                    component_nodes.push_back(b);
                    if (a == p.u && b == finished.u) break;
                }
                sort_unique(component_nodes);
                out.components.push_back(component_nodes);
            }
        }
        if (root_children >= 2) articulation[root] = true;
    }

    std::sort(out.components.begin(), out.components.end());
    for (std::uint32_t v = 0; v < n; ++v)
        if (articulation[v]) out.articulation_points.push_back(v);
    return out;
}

CoreDecomposition k_core_decomposition(const UndirectedView& view) {
    const std::size_t n = view.node_count;
    CoreDecomposition out;
    out.core_number.assign(n, 0);
    if (n == 0) return out;

    std::vector<std::uint32_t> deg(n);
    std::uint32_t max_deg = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        deg[v] = static_cast<std::uint32_t>(view.degree(v));
        max_deg = std::max(max_deg, deg[v]);
    }

    // Batagelj–Zaveršnik peeling: process nodes in current-degree order.
    std::vector<std::uint32_t> bin_start(max_deg + 2, 0);
    for (std::uint32_t v = 0; v < n; ++v) ++bin_start[deg[v] + 1];
    for (std::size_t d = 1; d < bin_start.size(); ++d) bin_start[d] += bin_start[d - 1];
    std::vector<std::uint32_t> vert(n), pos(n);
    {
        std::vector<std::uint32_t> cursor(bin_start.begin(), bin_start.end() - 1);
        for (std::uint32_t v = 0; v < n; ++v) {
            pos[v] = cursor[deg[v]]++;
            vert[pos[v]] = v;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t v = vert[i];
        out.core_number[v] = deg[v];
        for (const std::uint32_t u : view.adjacency[v]) {
            if (deg[u] <= deg[v]) continue;
            const std::uint32_t du = deg[u];
            const std::uint32_t swap_pos = bin_start[du];
            const std::uint32_t w = vert[swap_pos];
            if (u != w) {
                std::swap(vert[pos[u]], vert[swap_pos]);
                std::swap(pos[u], pos[w]);
            }
            ++bin_start[du];
            --deg[u];
        }
    }

    out.max_k = *std::max_element(out.core_number.begin(), out.core_number.end());
    for (std::uint32_t v = 0; v < n; ++v)
        if (out.core_number[v] == out.max_k) out.max_core_members.push_back(v);
    return out;
}

DistanceSummary distance_summary(const UndirectedView& view, std::size_t exact_threshold,
                                 std::size_t sample_size, std::uint64_t seed, unsigned threads) {
    if (view.node_count == 0) throw DataError("distance summary of an empty graph");
    if (threads == 0) threads = 1;

    const ComponentLabels comps = weak_components(view);
    DistanceSummary out;
    out.connected_input = comps.count() <= 1;

    std::vector<std::uint32_t> members;
    for (std::uint32_t v = 0; v < view.node_count; ++v)
        if (comps.label[v] == 0) members.push_back(v);
    const std::size_t N = members.size();
    out.node_count = N;

    if (N == 1) {
        out.diameter_endpoints = {members[0], members[0]};
        return out;
    }

    out.exact = N <= exact_threshold;
    std::vector<std::uint32_t> sources = members;
    if (!out.exact) {
        if (sample_size == 0) throw ConfigError("distance sample size must be >= 1");
        std::uint64_t state = seed;
        const std::size_t take = std::min(sample_size, N);
        for (std::size_t i = 0; i < take; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(bounded_draw(state, N - i));
            std::swap(sources[i], sources[j]);
        }
        sources.resize(take);
        std::sort(sources.begin(), sources.end());
    }

    std::vector<SourceResult> results(sources.size());
    run_workers(threads, [&](unsigned t) {
        std::vector<std::int32_t> dist;
        std::vector<std::uint32_t> queue;
        for (std::size_t i = t; i < sources.size(); i += threads)
            results[i] = bfs_source(view, sources[i], dist, queue);
    });

    std::uint64_t total = 0;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        const SourceResult& r = results[i];
        total += r.distance_sum;
        if (r.eccentricity > out.diameter) {
            out.diameter = r.eccentricity;
            out.diameter_endpoints = {std::min(sources[i], r.farthest),
                                      std::max(sources[i], r.farthest)};
        }
    }

    const double n = static_cast<double>(N);
    if (out.exact) {
        // `total` counts every unordered pair twice.
        const double pair_sum = static_cast<double>(total) / 2.0;
        out.mean_paper_formula = pair_sum / (0.5 * n * (n + 1.0));
        out.mean_conventional = pair_sum / (0.5 * n * (n - 1.0));
        out.pair_count = N * (N - 1) / 2;
    } else {
        const double ordered_pairs = static_cast<double>(sources.size()) * (n - 1.0);
        const double mean_pair = static_cast<double>(total) / ordered_pairs;
        out.mean_conventional = mean_pair;
        out.mean_paper_formula = mean_pair * (n - 1.0) / (n + 1.0);
        out.pair_count = sources.size() * (N - 1);
    }
    return out;
}

std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::In: return "in";
        case Direction::Out: return "out";
        case Direction::Undirected: return "undirected";
    }
    return "?";
}

std::pair<DegreeHistogram, DegreeHistogram> degree_histograms(const EntityCitationGraph& g) {
    std::vector<std::uint32_t> in(g.node_count(), 0), out(g.node_count(), 0);
    for (const Edge& e : g.edges) {
        if (e.source == e.target) continue;  // edges are distinct per (s,t) pair
        ++out[e.source];
        ++in[e.target];
    }
    DegreeHistogram hin{Direction::In, {}}, hout{Direction::Out, {}};
    for (const auto d : in) ++hin.counts[d];
    for (const auto d : out) ++hout.counts[d];
    return {hin, hout};
}

PowerLawFit fit_power_law(const DegreeHistogram& h, std::uint32_t k_min) {
    k_min = std::max(k_min, 1u);
    std::vector<double> xs, ys;
    PowerLawFit fit;
    fit.k_min = k_min;
    for (const auto& [k, count] : h.counts) {
        if (k < k_min || count == 0) continue;
        xs.push_back(std::log(static_cast<double>(k)));
        ys.push_back(std::log(static_cast<double>(count)));
        fit.k_max = k;
    }
    if (xs.size() < 3)
        throw DataError("power-law fit needs at least 3 nonzero degree bins at k >= " +
                        std::to_string(k_min));

    const std::size_t m = xs.size();
    const double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / m;
    const double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / m;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        sxx += (xs[i] - mean_x) * (xs[i] - mean_x);
        sxy += (xs[i] - mean_x) * (ys[i] - mean_y);
    }
    const double slope = sxy / sxx;
    const double intercept = mean_y - slope * mean_x;
    fit.gamma = -slope;

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double fitted = intercept + slope * xs[i];
        ss_res += (ys[i] - fitted) * (ys[i] - fitted);
        ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
    }
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

double global_clustering_coefficient(const UndirectedView& view) {
    std::uint64_t closed = 0;  // 3 × triangle count = Σ_edges |N(u) ∩ N(v)|
    for (std::uint32_t u = 0; u < view.node_count; ++u) {
        for (const std::uint32_t v : view.adjacency[u]) {
            if (v <= u) continue;
            const auto& a = view.adjacency[u];
            const auto& b = view.adjacency[v];
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] < b[j]) ++i;
                else if (a[i] > b[j]) ++j;
                else { ++closed; ++i; ++j; }
            }
        }
    }
    std::uint64_t triples = 0;
    for (std::uint32_t v = 0; v < view.node_count; ++v) {
        const std::uint64_t d = view.degree(v);
        triples += d * (d - 1) / 2;
    }
    if (triples == 0) return 0.0;
    return static_cast<double>(closed) / static_cast<double>(triples);
}

CentralityScores degree_centrality(const EntityCitationGraph& g, Direction direction) {
    CentralityScores out;
    out.score.assign(g.node_count(), 0.0);
    if (direction == Direction::Undirected) {
        out.measure = "degree";
        const UndirectedView view = undirected_view(g);
        for (std::uint32_t v = 0; v < view.node_count; ++v)
            out.score[v] = static_cast<double>(view.degree(v));
        return out;
    }
    out.measure = direction == Direction::In ? "in_degree" : "out_degree";
    for (const Edge& e : g.edges) {
        if (e.source == e.target) continue;
        out.score[direction == Direction::In ? e.target : e.source] += 1.0;
    }
    return out;
}

CentralityScores closeness_centrality(const UndirectedView& view, unsigned threads) {
    if (threads == 0) threads = 1;
    CentralityScores out;
    out.measure = "closeness";
    out.score.assign(view.node_count, 0.0);

    run_workers(threads, [&](unsigned t) {
        std::vector<std::int32_t> dist;
        std::vector<std::uint32_t> queue;
        std::vector<std::uint64_t> level_count;
        for (std::uint32_t s = t; s < view.node_count; s += threads) {
            dist.assign(view.node_count, -1);
            queue.clear();
            queue.push_back(s);
            dist[s] = 0;
            level_count.assign(1, 0);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const std::uint32_t u = queue[head];
                const auto d = static_cast<std::size_t>(dist[u]);
                if (d >= level_count.size()) level_count.resize(d + 1, 0);
                ++level_count[d];
                for (const std::uint32_t v : view.adjacency[u]) {
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            // Summing whole levels in ascending distance keeps the float
            // result independent of visit order.
            double sum = 0.0;
            for (std::size_t d = 1; d < level_count.size(); ++d)
                sum += static_cast<double>(level_count[d]) / static_cast<double>(d);
            out.score[s] = sum;
        }
    });
    return out;
}

namespace {

// One Brandes source pass; adds the source's dependency contribution to acc.
void brandes_source(const UndirectedView& view, std::uint32_t s, std::vector<double>& acc,
                    std::vector<std::int32_t>& dist, std::vector<double>& sigma,
                    std::vector<double>& delta, std::vector<std::uint32_t>& order) {
    const std::size_t n = view.node_count;
    dist.assign(n, -1);
    sigma.assign(n, 0.0);
    delta.assign(n, 0.0);
    order.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::uint32_t u = order[head];
        for (const std::uint32_t v : view.adjacency[u]) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                order.push_back(v);
            }
            if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
        }
    }
    for (std::size_t i = order.size(); i-- > 1;) {
        const std::uint32_t w = order[i];
        for (const std::uint32_t v : view.adjacency[w]) {
            if (dist[v] == dist[w] - 1)
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
        }
        acc[w] += delta[w];
    }
}

}  // namespace

CentralityScores betweenness_centrality(const UndirectedView& view, unsigned threads) {
    if (threads == 0) threads = 1;
    const std::size_t n = view.node_count;
    CentralityScores out;
    out.measure = "betweenness";
    out.score.assign(n, 0.0);
    if (n == 0) return out;

    // Sources are processed in fixed blocks; per-wave partials fold into the
    // total strictly in block order, so every thread count yields the same
    // floating-point result.
    constexpr std::size_t kBlock = 64;
    const std::size_t num_blocks = (n + kBlock - 1) / kBlock;
    std::vector<std::vector<double>> partial(std::min<std::size_t>(threads, num_blocks));
    for (auto& p : partial) p.assign(n, 0.0);

    for (std::size_t wave_start = 0; wave_start < num_blocks; wave_start += partial.size()) {
        const std::size_t wave_blocks = std::min(partial.size(), num_blocks - wave_start);
        run_workers(static_cast<unsigned>(wave_blocks), [&](unsigned slot) {
            std::vector<std::int32_t> dist;
            std::vector<double> sigma, delta;
            std::vector<std::uint32_t> order;
            auto& acc = partial[slot];
            std::fill(acc.begin(), acc.end(), 0.0);
            const std::size_t block = wave_start + slot;
            const std::size_t lo = block * kBlock;
            const std::size_t hi = std::min(lo + kBlock, n);
            for (std::size_t s = lo; s < hi; ++s)
                brandes_source(view, static_cast<std::uint32_t>(s), acc, dist, sigma, delta,
                               order);
        });
        for (std::size_t slot = 0; slot < wave_blocks; ++slot)
            for (std::size_t v = 0; v < n; ++v) out.score[v] += partial[slot][v];
    }

    // Each unordered pair was counted from both endpoints.
    for (auto& s : out.score) s /= 2.0;
    return out;
}

std::vector<RankedRow> top_k(const CentralityScores& scores, const EntityCitationGraph& g,
                             std::size_t k, std::optional<EntityType> type_filter) {
    std::vector<std::uint32_t> nodes;
    for (std::uint32_t v = 0; v < g.node_count(); ++v) {
        if (!type_filter || g.nodes[v].type == *type_filter) nodes.push_back(v);
    }
    // Node-index order IS the (entity_type, canonical_id) tie rule: the node
    // list is sorted that way.
    std::stable_sort(nodes.begin(), nodes.end(), [&](std::uint32_t a, std::uint32_t b) {
        return scores.score[a] > scores.score[b];
    });
    if (nodes.size() > k) nodes.resize(k);

    std::vector<RankedRow> rows;
    rows.reserve(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        rows.push_back({nodes[i], scores.score[nodes[i]], static_cast<std::uint32_t>(i + 1)});
    return rows;
}

}  // namespace ecnet
