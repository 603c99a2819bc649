#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "hsk/cycle.hpp"
#include "hsk/domination.hpp"
#include "hsk/error.hpp"
#include "hsk/hypercube.hpp"

// Independent brute-force oracles and certificate validation. Everything here
// checks results using only hypercube adjacency primitives, never the
// internals of the constructions being checked.

namespace hsk {

struct Verdict {
    bool valid = false;
    std::string reason;  // empty when valid

    static Verdict ok() { return {true, {}}; }
    static Verdict bad(std::string why) { return {false, std::move(why)}; }
};

enum class CertKind { cycle, cut, pid, total_pd, strongly_independent };

inline Verdict validate_cycle(const Shell& shell, const Cycle& c,
                              const std::optional<Edge>& required_edge = std::nullopt,
                              std::optional<int> required_len = std::nullopt) {
    const auto& vs = c.verts;
    if (vs.size() < 4) return Verdict::bad("cycle shorter than 4");
    if (vs.size() % 2 != 0) return Verdict::bad("odd cycle length");
    if (required_len && static_cast<int>(vs.size()) != *required_len)
        return Verdict::bad("length " + std::to_string(vs.size()) + " != required " +
                            std::to_string(*required_len));
    std::vector<vertex> sorted = vs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return Verdict::bad("duplicate vertices");
    for (vertex v : vs) {
        if (v > full_mask(shell.n)) return Verdict::bad("label out of range");
        if (!shell.survives(v)) return Verdict::bad("visits removed vertex " + std::to_string(v));
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (hamming_distance(vs[i], vs[(i + 1) % vs.size()]) != 1)
            return Verdict::bad("non-adjacent consecutive pair at index " + std::to_string(i));
    if (required_edge && !c.contains_edge(*required_edge))
        return Verdict::bad("required edge not traversed");
    return Verdict::ok();
}

// Exact set of simple-cycle lengths through e, by DFS over the survivors.
// Each cycle is counted once: paths start at e.u and take e.v first.
inline std::set<int> enumerate_cycle_lengths(const Shell& shell, const Edge& e) {
    if (shell.vertex_count() > 24)
        throw scale_error("enumerate_cycle_lengths: more than 24 survivors");
    if (!shell.survives(e.u) || !shell.survives(e.v))
        throw argument_error("enumerate_cycle_lengths: edge endpoint removed");

    std::set<int> lengths;
    std::vector<vertex> path{e.u, e.v};
    std::set<vertex> on_path{e.u, e.v};

    const std::function<void()> dfs = [&] {
        const vertex back = path.back();
        for (int i = 0; i < shell.n; ++i) {
            const vertex next = back ^ (vertex{1} << i);
            if (!shell.survives(next)) continue;
            if (next == e.u) {
                if (path.size() >= 4) lengths.insert(static_cast<int>(path.size()));
                continue;
            }
            if (on_path.count(next)) continue;
            path.push_back(next);
            on_path.insert(next);
            dfs();
            on_path.erase(next);
            path.pop_back();
        }
    };
    dfs();
    return lengths;
}

struct SweepFailure {
    Edge edge;
    int length = 0;
    std::string reason;
};

struct SweepReport {
    std::uint64_t edges = 0;
    std::uint64_t lengths_per_edge = 0;
    std::vector<SweepFailure> failures;

    bool clean() const { return failures.empty(); }
};

// Ask the engine for every (surviving edge, even length) pair and validate
// each answer. The report lists every failing request with its reason.
inline SweepReport exhaustive_bipancyclicity(
    const Shell& shell, const std::function<Cycle(const Edge&, int)>& engine, int jobs = 1) {
    const std::vector<Edge> edges = shell.surviving_edges();
    const int max_len = static_cast<int>(shell.vertex_count());

    SweepReport report;
    report.edges = edges.size();
    report.lengths_per_edge = static_cast<std::uint64_t>(max_len / 2 - 1);

    std::mutex mu;
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= edges.size()) return;
            const Edge& e = edges[i];
            for (int len = 4; len <= max_len; len += 2) {
                Verdict v;
                try {
                    v = validate_cycle(shell, engine(e, len), e, len);
                } catch (const std::exception& ex) {
                    v = Verdict::bad(std::string("engine threw: ") + ex.what());
                }
                if (!v.valid) {
                    std::lock_guard<std::mutex> lock(mu);
                    report.failures.push_back({e, len, v.reason});
                }
            }
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::sort(report.failures.begin(), report.failures.end(),
              [](const SweepFailure& a, const SweepFailure& b) {
                  if (!(a.edge == b.edge)) return a.edge < b.edge;
                  return a.length < b.length;
              });
    return report;
}

// At least two edges of the spanning subgraph P avoid F entirely.
// Preconditions: F strongly independent; every vertex has P-degree 1 or 2.
inline bool check_spanning_overlap(CubeDim n, const VertexSet& f, const std::vector<Edge>& p) {
    if (!is_strongly_independent(f))
        throw argument_error("check_spanning_overlap: F is not strongly independent");
    std::vector<int> deg(std::size_t{1} << n, 0);
    for (const Edge& e : p) {
        check_label(e.v, n);
        ++deg[e.u];
        ++deg[e.v];
    }
    for (vertex v = 0; v < (vertex{1} << n); ++v)
        if (deg[v] != 1 && deg[v] != 2)
            throw argument_error("check_spanning_overlap: vertex degree not in {1,2}");
    int clear = 0;
    for (const Edge& e : p)
        if (!f.contains(e.u) && !f.contains(e.v) && ++clear >= 2) return true;
    return false;
}

// Count cycle edges lying inside one half of a coordinate split (both
// endpoints agree in bit d-1 with `side`). Used to check the two-edges-per-half
// property of even cycles spanning both halves.
inline int edges_within_half(const Cycle& c, int dim_index, int side) {
    const vertex bit = vertex{1} << (dim_index - 1);
    int count = 0;
    for (std::size_t i = 0; i < c.verts.size(); ++i) {
        const vertex a = c.verts[i];
        const vertex b = c.verts[(i + 1) % c.verts.size()];
        if (((a & bit) != 0) == (side != 0) && ((b & bit) != 0) == (side != 0)) ++count;
    }
    return count;
}

inline int vertices_within_half(const Cycle& c, int dim_index, int side) {
    const vertex bit = vertex{1} << (dim_index - 1);
    int count = 0;
    for (vertex v : c.verts)
        if (((v & bit) != 0) == (side != 0)) ++count;
    return count;
}

}  // namespace hsk
