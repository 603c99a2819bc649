#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <unordered_map>
#include <vector>

#include "hsk/domination.hpp"
#include "hsk/error.hpp"
#include "hsk/hypercube.hpp"

namespace hsk {

// Unit-capacity flow network for the Menger reduction: every surviving vertex
// splits into an in-node and an out-node joined by one unit arc, and every
// surviving edge contributes a unit arc in each direction. The max s-t flow
// equals the number of internally vertex-disjoint s-t paths.
struct FlowGraph {
    struct Arc {
        int to = 0;
        int cap = 0;  // arcs[i ^ 1] is the reverse arc
    };

    // Edge arcs get a capacity no minimum cut can afford, so extracted cuts
    // consist of split arcs only, i.e. vertices.
    static constexpr int kEdgeCap = 1 << 20;

    int node_count = 0;
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out;
    std::vector<vertex> label_of;
    std::unordered_map<vertex, int> index_of;
    std::vector<int> initial_caps;

    static int in_node(int i) { return 2 * i; }
    static int out_node(int i) { return 2 * i + 1; }

    explicit FlowGraph(const Shell& shell) {
        label_of = shell.survivors();
        index_of.reserve(label_of.size() * 2);
        for (std::size_t i = 0; i < label_of.size(); ++i)
            index_of.emplace(label_of[i], static_cast<int>(i));
        node_count = static_cast<int>(label_of.size()) * 2;
        out.resize(static_cast<std::size_t>(node_count));

        for (std::size_t i = 0; i < label_of.size(); ++i)
            add_arc(in_node(static_cast<int>(i)), out_node(static_cast<int>(i)), 1);
        for (std::size_t i = 0; i < label_of.size(); ++i) {
            const vertex v = label_of[i];
            for (int b = 0; b < shell.n; ++b) {
                const vertex w = v ^ (vertex{1} << b);
                if (w < v || !shell.survives(w)) continue;
                const int j = index_of.at(w);
                add_arc(out_node(static_cast<int>(i)), in_node(j), kEdgeCap);
                add_arc(out_node(j), in_node(static_cast<int>(i)), kEdgeCap);
            }
        }
        initial_caps.reserve(arcs.size());
        for (const Arc& a : arcs) initial_caps.push_back(a.cap);
    }

    void add_arc(int from, int to, int cap) {
        out[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap});
        out[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0});
    }

    void reset() {
        for (std::size_t i = 0; i < arcs.size(); ++i) arcs[i].cap = initial_caps[i];
    }

    // BFS augmenting paths from s_out to t_in, stopping once `stop_at` units
    // have been pushed. Unit capacities keep every augmentation O(V + E).
    int max_flow(vertex s, vertex t, int stop_at = std::numeric_limits<int>::max()) {
        reset();
        const int source = out_node(index_of.at(s));
        const int sink = in_node(index_of.at(t));
        // A direct s-t edge carries at most one internally disjoint path.
        for (int id : out[static_cast<std::size_t>(source)])
            if (arcs[static_cast<std::size_t>(id)].to == sink &&
                arcs[static_cast<std::size_t>(id)].cap > 1)
                arcs[static_cast<std::size_t>(id)].cap = 1;
        int flow = 0;
        std::vector<int> pred_arc(static_cast<std::size_t>(node_count));
        while (flow < stop_at) {
            std::fill(pred_arc.begin(), pred_arc.end(), -1);
            std::queue<int> q;
            q.push(source);
            pred_arc[static_cast<std::size_t>(source)] = -2;
            bool reached = false;
            while (!q.empty() && !reached) {
                const int u = q.front();
                q.pop();
                for (int id : out[static_cast<std::size_t>(u)]) {
                    if (arcs[static_cast<std::size_t>(id)].cap <= 0) continue;
                    const int w = arcs[static_cast<std::size_t>(id)].to;
                    if (pred_arc[static_cast<std::size_t>(w)] != -1) continue;
                    pred_arc[static_cast<std::size_t>(w)] = id;
                    if (w == sink) {
                        reached = true;
                        break;
                    }
                    q.push(w);
                }
            }
            if (!reached) break;
            for (int u = sink; u != source;) {
                const int id = pred_arc[static_cast<std::size_t>(u)];
                arcs[static_cast<std::size_t>(id)].cap -= 1;
                arcs[static_cast<std::size_t>(id ^ 1)].cap += 1;
                u = arcs[static_cast<std::size_t>(id ^ 1)].to;
            }
            ++flow;
        }
        return flow;
    }

    // After a maxed-out flow, the separator is the set of split arcs crossing
    // the residual cut (vertex in-node reachable, out-node not).
    std::vector<vertex> min_cut_separator(vertex s) {
        const int source = out_node(index_of.at(s));
        std::vector<char> reach(static_cast<std::size_t>(node_count), 0);
        std::queue<int> q;
        q.push(source);
        reach[static_cast<std::size_t>(source)] = 1;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int id : out[static_cast<std::size_t>(u)]) {
                if (arcs[static_cast<std::size_t>(id)].cap <= 0) continue;
                const int w = arcs[static_cast<std::size_t>(id)].to;
                if (!reach[static_cast<std::size_t>(w)]) {
                    reach[static_cast<std::size_t>(w)] = 1;
                    q.push(w);
                }
            }
        }
        std::vector<vertex> sep;
        for (std::size_t i = 0; i < label_of.size(); ++i)
            if (reach[static_cast<std::size_t>(in_node(static_cast<int>(i)))] &&
                !reach[static_cast<std::size_t>(out_node(static_cast<int>(i)))])
                sep.push_back(label_of[i]);
        return sep;
    }
};

inline int max_disjoint_paths(const Shell& shell, vertex s, vertex t,
                              int stop_at = std::numeric_limits<int>::max()) {
    if (s == t) throw argument_error("max_disjoint_paths: endpoints must differ");
    if (!shell.survives(s) || !shell.survives(t))
        throw argument_error("max_disjoint_paths: endpoint removed");
    FlowGraph fg(shell);
    return fg.max_flow(s, t, stop_at);
}

struct WitnessCut {
    int k_claimed = 0;
    std::vector<vertex> separator;
    std::vector<std::vector<vertex>> components_sample;
};

struct ConnectivityResult {
    bool ok = false;
    std::optional<WitnessCut> witness;
};

namespace detail {

inline std::vector<std::vector<vertex>> sample_components(const Shell& shell,
                                                          const std::vector<vertex>& separator,
                                                          std::size_t per_component = 8,
                                                          std::size_t max_components = 4) {
    VertexSet sep(shell.n, separator);
    std::vector<std::vector<vertex>> out;
    std::vector<char> seen(std::size_t{1} << shell.n, 0);
    for (vertex v = 0; v < (vertex{1} << shell.n) && out.size() < max_components; ++v) {
        if (!shell.survives(v) || sep.contains(v) || seen[v]) continue;
        std::vector<vertex> comp;
        std::queue<vertex> q;
        q.push(v);
        seen[v] = 1;
        while (!q.empty()) {
            const vertex u = q.front();
            q.pop();
            if (comp.size() < per_component) comp.push_back(u);
            for (int b = 0; b < shell.n; ++b) {
                const vertex w = u ^ (vertex{1} << b);
                if (!shell.survives(w) || sep.contains(w) || seen[w]) continue;
                seen[w] = 1;
                q.push(w);
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace detail

// True iff every non-adjacent surviving pair admits >= k internally disjoint
// paths; a failing pair yields its minimum vertex cut as the witness.
inline ConnectivityResult verify_connectivity_at_least(const Shell& shell, int k) {
    const std::vector<vertex> survivors = shell.survivors();
    if (survivors.size() <= static_cast<std::size_t>(k))
        throw argument_error("verify_connectivity_at_least: too few survivors");
    FlowGraph fg(shell);
    for (std::size_t i = 0; i < survivors.size(); ++i)
        for (std::size_t j = i + 1; j < survivors.size(); ++j) {
            if (hamming_distance(survivors[i], survivors[j]) == 1) continue;
            const int flow = fg.max_flow(survivors[i], survivors[j], k);
            if (flow < k) {
                WitnessCut cut;
                cut.k_claimed = k;
                cut.separator = fg.min_cut_separator(survivors[i]);
                cut.components_sample = detail::sample_components(shell, cut.separator);
                return {false, cut};
            }
        }
    return {true, std::nullopt};
}

// Exact vertex connectivity: minimum over all non-adjacent surviving pairs of
// the max-flow value (0 when already disconnected). The running minimum caps
// each flow computation.
inline int vertex_connectivity(const Shell& shell) {
    const std::vector<vertex> survivors = shell.survivors();
    if (survivors.size() < 2) return 0;

    FlowGraph fg(shell);
    int best = std::numeric_limits<int>::max();
    for (vertex v : survivors) best = std::min(best, shell.degree(v));
    if (best == 0) return 0;

    bool has_nonadjacent = false;
    for (std::size_t i = 0; i < survivors.size(); ++i)
        for (std::size_t j = i + 1; j < survivors.size(); ++j) {
            if (hamming_distance(survivors[i], survivors[j]) == 1) continue;
            has_nonadjacent = true;
            if (best == 0) return 0;
            best = std::min(best, fg.max_flow(survivors[i], survivors[j], best));
        }
    if (!has_nonadjacent) return static_cast<int>(survivors.size()) - 1;
    return best;
}

// Greedy seeded sample of a pairwise-distance->=3 vertex set. Deterministic
// for a fixed seed; stops early when no candidate is left.
inline VertexSet random_strongly_independent(CubeDim n, int target_size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const vertex mask = full_mask(n);
    std::vector<vertex> chosen;
    const auto fits = [&](vertex v) {
        for (vertex u : chosen)
            if (hamming_distance(u, v) < 3) return false;
        return true;
    };
    std::uint64_t misses = 0;
    const std::uint64_t miss_cap = std::uint64_t{4} << n;
    while (static_cast<int>(chosen.size()) < target_size) {
        const vertex v = rng() & mask;
        if (fits(v)) {
            chosen.push_back(v);
            misses = 0;
            continue;
        }
        if (++misses >= miss_cap) {
            // Deterministic sweep decides whether any candidate remains.
            bool found = false;
            for (vertex w = 0; w <= mask && !found; ++w)
                if (fits(w)) {
                    chosen.push_back(w);
                    found = true;
                }
            if (!found) break;
            misses = 0;
        }
    }
    return {n, std::move(chosen)};
}

}  // namespace hsk
