#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "hsk/certify.hpp"
#include "hsk/connectivity.hpp"
#include "hsk/cycles.hpp"

using namespace hsk;

namespace {
Shell q3_shell() { return make_shell(3, VertexSet(3, {0, 7})); }
}  // namespace

TEST_CASE("validate_cycle accepts the Q_3 shell cycle", "[certify]") {
    const Cycle c({1, 3, 2, 6, 4, 5});
    CHECK(validate_cycle(q3_shell(), c).valid);
    CHECK(validate_cycle(q3_shell(), c, Edge(1, 3), 6).valid);
}

TEST_CASE("validate_cycle rejects each failure mode with a reason", "[certify]") {
    const Shell intact = make_shell(3, VertexSet(3, {}));

    const Verdict missing_edge = validate_cycle(intact, Cycle({0, 1, 3, 2}), Edge(0, 4));
    CHECK_FALSE(missing_edge.valid);
    CHECK(missing_edge.reason == "required edge not traversed");
    // The closing pair counts as traversed: (2,0) closes [0,1,3,2].
    CHECK(validate_cycle(intact, Cycle({0, 1, 3, 2}), Edge(0, 2)).valid);

    CHECK_FALSE(validate_cycle(intact, Cycle({0, 1, 0, 1})).valid);
    CHECK_FALSE(validate_cycle(intact, Cycle({0, 1, 3, 7})).valid);   // 7 -> 0 jump
    CHECK_FALSE(validate_cycle(intact, Cycle({0, 1})).valid);         // too short
    CHECK_FALSE(validate_cycle(intact, Cycle({0, 1, 3, 2}), std::nullopt, 6).valid);
    CHECK_FALSE(validate_cycle(q3_shell(), Cycle({0, 1, 3, 2})).valid);  // visits removed 0
    CHECK(validate_cycle(intact, Cycle({0, 1, 5, 4, 6, 2})).valid);
}

TEST_CASE("enumerate_cycle_lengths matches known shells", "[certify]") {
    CHECK(enumerate_cycle_lengths(q3_shell(), Edge(1, 3)) == std::set<int>{6});

    const Shell q3 = make_shell(3, VertexSet(3, {}));
    CHECK(enumerate_cycle_lengths(q3, Edge(0, 1)) == std::set<int>{4, 6, 8});

    const Shell q4 = make_shell(4, VertexSet(4, {}));
    CHECK(enumerate_cycle_lengths(q4, Edge(0, 1)) ==
          std::set<int>{4, 6, 8, 10, 12, 14, 16});

    const Shell q5 = make_shell(5, VertexSet(5, {}));
    CHECK_THROWS_AS(enumerate_cycle_lengths(q5, Edge(0, 1)), scale_error);
    CHECK_THROWS_AS(enumerate_cycle_lengths(q3_shell(), Edge(0, 1)), argument_error);
}

TEST_CASE("exhaustive sweep validates an honest engine and reports a dishonest one",
          "[certify]") {
    const Shell q3 = make_shell(3, VertexSet(3, {}));
    const auto honest = [&](const Edge& e, int len) { return cycle_through_edge(3, e, len); };
    const SweepReport good = exhaustive_bipancyclicity(q3, honest, 2);
    CHECK(good.edges == 12);
    CHECK(good.lengths_per_edge == 3);
    CHECK(good.clean());

    const auto dishonest = [&](const Edge& e, int len) {
        if (len == 6) return cycle_through_edge(3, e, 4);  // wrong length
        return cycle_through_edge(3, e, len);
    };
    const SweepReport bad = exhaustive_bipancyclicity(q3, dishonest);
    CHECK(bad.failures.size() == 12);
    CHECK(bad.failures.front().length == 6);
}

TEST_CASE("spanning overlap with a strongly independent fault set", "[certify]") {
    // Perfect matching along coordinate 1 of Q_3.
    std::vector<Edge> matching{Edge(0, 1), Edge(2, 3), Edge(4, 5), Edge(6, 7)};
    CHECK(check_spanning_overlap(3, VertexSet(3, {0, 7}), matching));
    CHECK(check_spanning_overlap(3, VertexSet(3, {}), matching));

    CHECK_THROWS_AS(check_spanning_overlap(3, VertexSet(3, {0, 1}), matching),
                    argument_error);
    std::vector<Edge> sparse{Edge(0, 1)};
    CHECK_THROWS_AS(check_spanning_overlap(3, VertexSet(3, {0, 7}), sparse), argument_error);
}

TEST_CASE("spanning subgraphs of degree 1..2 keep two edges clear of faults", "[certify]") {
    // Seeded property: P = one dimension matching plus a random
    // part of another, F = random strongly independent set.
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(trial % 2);
        const int a = static_cast<int>(rng() % n);
        int b = static_cast<int>(rng() % n);
        if (b == a) b = (a + 1) % n;

        std::vector<Edge> p;
        for (vertex v = 0; v < (vertex{1} << n); ++v)
            if (!((v >> a) & 1)) p.emplace_back(v, v ^ (vertex{1} << a));
        for (vertex v = 0; v < (vertex{1} << n); ++v)
            if (!((v >> b) & 1) && (rng() & 1)) p.emplace_back(v, v ^ (vertex{1} << b));

        const VertexSet f = random_strongly_independent(n, 1 + static_cast<int>(rng() % 3),
                                                        rng());
        REQUIRE(is_strongly_independent(f));
        CHECK(check_spanning_overlap(n, f, p));
    }
}

TEST_CASE("half-counting helpers agree with hand counts", "[certify]") {
    const Cycle c({0, 1, 3, 2, 6, 7, 5, 4});  // Gray cycle of Q_3
    CHECK(vertices_within_half(c, 3, 0) == 4);
    CHECK(vertices_within_half(c, 3, 1) == 4);
    CHECK(edges_within_half(c, 3, 0) == 3);
    CHECK(edges_within_half(c, 3, 1) == 3);
}
