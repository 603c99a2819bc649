#include <catch2/catch_amalgamated.hpp>

#include <queue>
#include <set>

#include "hsk/connectivity.hpp"
#include "hsk/domination.hpp"

using namespace hsk;

namespace {

Shell intact(int n) { return make_shell(n, VertexSet(n, {})); }

// Independent check that removing `sep` disconnects s from t.
bool separates(const Shell& shell, const std::vector<vertex>& sep, vertex s, vertex t) {
    const VertexSet cut(shell.n, sep);
    if (cut.contains(s) || cut.contains(t)) return true;
    std::set<vertex> seen{s};
    std::queue<vertex> q;
    q.push(s);
    while (!q.empty()) {
        const vertex u = q.front();
        q.pop();
        if (u == t) return false;
        for (int b = 0; b < shell.n; ++b) {
            const vertex w = u ^ (vertex{1} << b);
            if (!shell.survives(w) || cut.contains(w) || seen.count(w)) continue;
            seen.insert(w);
            q.push(w);
        }
    }
    return true;
}

}  // namespace

TEST_CASE("disjoint path counts on small instances", "[connectivity]") {
    CHECK(max_disjoint_paths(intact(3), 0, 7) == 3);
    CHECK(max_disjoint_paths(make_shell(3, VertexSet(3, {0, 7})), 1, 6) == 2);
    CHECK_THROWS_AS(max_disjoint_paths(intact(3), 2, 2), argument_error);
    CHECK_THROWS_AS(max_disjoint_paths(make_shell(3, VertexSet(3, {0, 7})), 0, 3),
                    argument_error);
}

TEST_CASE("flow value equals the extracted minimum cut", "[connectivity]") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const VertexSet f = random_strongly_independent(4, 2 + static_cast<int>(seed % 2),
                                                        seed);
        const Shell shell = make_shell(4, f);
        const auto survivors = shell.survivors();
        FlowGraph fg(shell);
        for (std::size_t i = 0; i < survivors.size(); i += 3)
            for (std::size_t j = i + 1; j < survivors.size(); j += 3) {
                if (hamming_distance(survivors[i], survivors[j]) == 1) continue;
                const int flow = fg.max_flow(survivors[i], survivors[j]);
                const auto sep = fg.min_cut_separator(survivors[i]);
                CHECK(static_cast<int>(sep.size()) == flow);
                CHECK(separates(shell, sep, survivors[i], survivors[j]));
            }
    }
}

TEST_CASE("connectivity thresholds with witnesses", "[connectivity]") {
    const Shell q3shell = make_shell(3, VertexSet(3, {0, 7}));
    CHECK(verify_connectivity_at_least(q3shell, 2).ok);

    const auto fail = verify_connectivity_at_least(q3shell, 3);
    REQUIRE_FALSE(fail.ok);
    REQUIRE(fail.witness.has_value());
    CHECK(fail.witness->k_claimed == 3);
    CHECK(fail.witness->separator.size() < 3);
    CHECK(fail.witness->components_sample.size() >= 2);

    CHECK(verify_connectivity_at_least(make_shell(4, VertexSet(4, {0, 15})), 3).ok);
    CHECK_THROWS_AS(verify_connectivity_at_least(make_shell(2, VertexSet(2, {})), 5),
                    argument_error);
}

TEST_CASE("exact vertex connectivity", "[connectivity]") {
    CHECK(vertex_connectivity(intact(3)) == 3);
    CHECK(vertex_connectivity(intact(4)) == 4);
    CHECK(vertex_connectivity(intact(5)) == 5);
    CHECK(vertex_connectivity(make_shell(3, VertexSet(3, {0, 7}))) == 2);
    CHECK(vertex_connectivity(make_shell(5, construct_total_pd(5))) == 4);

    // disconnected: two antipodal fault *neighborhood* blankets in Q_3 would
    // be overkill; isolate vertex 0 instead
    const Shell isolated = make_shell(3, VertexSet(3, {1, 2, 4}));
    CHECK(vertex_connectivity(isolated) == 0);
}

TEST_CASE("shells of strongly independent faults stay (n-1)-connected",
          "[connectivity]") {
    for (int n : {4, 5}) {
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const int target = 1 + static_cast<int>(seed % ((1 << n) / (n + 1)));
            const VertexSet f = random_strongly_independent(n, target, seed);
            REQUIRE(is_strongly_independent(f));
            REQUIRE_FALSE(f.empty());
            const Shell shell = make_shell(n, f);
            CHECK(verify_connectivity_at_least(shell, n - 1).ok);
            CHECK(vertex_connectivity(shell) == n - 1);  // tight when F nonempty
        }
    }
}

TEST_CASE("product shells match the connectivity lower bound", "[connectivity]") {
    // kappa(H x Q_d) >= kappa(H) + d, and the min degree pins it exactly.
    CHECK(vertex_connectivity(make_shell(5, construct_total_pd(5))) == 4);  // 2 + 2
    CHECK(vertex_connectivity(make_shell(6, construct_total_pd(6))) == 5);  // 2 + 3
}

TEST_CASE("random strongly independent sets are reproducible", "[connectivity]") {
    const VertexSet a = random_strongly_independent(6, 8, 42);
    const VertexSet b = random_strongly_independent(6, 8, 42);
    CHECK(a.members == b.members);
    CHECK(is_strongly_independent(a));
    CHECK_FALSE(a.empty());

    const VertexSet single = random_strongly_independent(4, 1, 9);
    CHECK(single.size() == 1);

    const VertexSet pair3 = random_strongly_independent(3, 2, 5);
    CHECK(pair3.size() == 2);
    CHECK((pair3.members[0] ^ pair3.members[1]) == 7);  // antipodal is the only option

    // over-asking saturates: Q_3 cannot hold 3 vertices pairwise >= 3 apart
    const VertexSet maxed = random_strongly_independent(3, 5, 17);
    CHECK(maxed.size() == 2);
}
