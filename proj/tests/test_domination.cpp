#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "hsk/domination.hpp"

using namespace hsk;

TEST_CASE("independence predicates", "[domination]") {
    CHECK(is_independent(VertexSet(3, {0, 7})));
    CHECK_FALSE(is_independent(VertexSet(3, {0, 1})));
    CHECK(is_independent(VertexSet(3, {})));

    CHECK(is_strongly_independent(VertexSet(3, {0, 7})));
    CHECK_FALSE(is_strongly_independent(VertexSet(4, {0, 3})));
    CHECK(is_strongly_independent(construct_hamming_pid(3).base));
}

TEST_CASE("perfect domination predicate", "[domination]") {
    CHECK(is_perfect_dominating(construct_hamming_pid(2).base));
    CHECK_FALSE(is_perfect_dominating(VertexSet(3, {0})));
    CHECK(is_perfect_dominating(lift_pid(construct_hamming_pid(2)).base));
}

TEST_CASE("total domination predicate", "[domination]") {
    CHECK(is_total_dominating(construct_total_pd(5)));
    CHECK_FALSE(is_total_dominating(VertexSet(3, {0, 7})));
    std::vector<vertex> all;
    for (vertex v = 0; v < 8; ++v) all.push_back(v);
    CHECK(is_total_dominating(VertexSet(3, all)));
}

TEST_CASE("hamming PID sizes and properties", "[domination]") {
    const PidSet p2 = construct_hamming_pid(2);
    CHECK(p2.base.members == std::vector<vertex>{0, 7});
    CHECK(p2.linear);
    CHECK(p2.offset == 0);

    const PidSet p3 = construct_hamming_pid(3);
    CHECK(p3.base.size() == 16);
    CHECK(p3.base.n == 7);
    CHECK(is_perfect_dominating(p3.base));
    CHECK(is_independent(p3.base));

    const PidSet p4 = construct_hamming_pid(4);
    CHECK(p4.base.size() == 2048);
    CHECK(p4.base.n == 15);

    CHECK_THROWS_AS(construct_hamming_pid(5), dimension_error);
}

TEST_CASE("closed neighborhoods of a PID set partition the cube", "[domination]") {
    for (int m : {2, 3}) {
        const VertexSet d = construct_hamming_pid(m).base;
        const int n = d.n;
        std::vector<int> covered(std::size_t{1} << n, 0);
        for (vertex v : d.members) {
            ++covered[v];
            for (int i = 0; i < n; ++i) ++covered[v ^ (vertex{1} << i)];
        }
        for (vertex v = 0; v < (vertex{1} << n); ++v) CHECK(covered[v] == 1);
    }
    // Q_15: sampled membership form of the same property.
    const VertexSet d15 = construct_hamming_pid(4).base;
    for (vertex v = 1; v < (vertex{1} << 15); v += 977) {
        int hits = d15.contains(v) ? 1 : 0;
        for (int i = 0; i < 15; ++i) hits += d15.contains(v ^ (vertex{1} << i)) ? 1 : 0;
        CHECK(hits == 1);
    }
}

TEST_CASE("lift_pid matches the kernel of the lifted matrix", "[domination]") {
    const PidSet lifted2 = lift_pid(construct_hamming_pid(2));
    CHECK(lifted2.base.size() == 16);
    CHECK(lifted2.base.contains(0));
    CHECK(lifted2.base.contains(120));
    CHECK(lifted2.base.members ==
          kernel(lift_check_matrix(hamming_parity_check(2))).codewords);

    const PidSet lifted3 = lift_pid(construct_hamming_pid(3));
    CHECK(lifted3.base.size() == 2048);
    CHECK(lifted3.base.members ==
          kernel(lift_check_matrix(hamming_parity_check(3))).codewords);

    PidSet offset{xor_translate(construct_hamming_pid(2).base, 1), true, 1};
    CHECK_THROWS_AS(lift_pid(offset), unsupported_error);
    PidSet nonlinear{VertexSet(3, {1, 6}), false, 0};
    CHECK_THROWS_AS(lift_pid(nonlinear), unsupported_error);
}

TEST_CASE("coset family partitions the cube and stays balanced", "[domination]") {
    const auto fam3 = coset_family(construct_hamming_pid(2));
    REQUIRE(fam3.size() == 4);
    CHECK(fam3[0].members == std::vector<vertex>{0, 7});
    CHECK(fam3[1].members == std::vector<vertex>{1, 6});
    CHECK(fam3[2].members == std::vector<vertex>{2, 5});
    CHECK(fam3[3].members == std::vector<vertex>{3, 4});

    for (int m : {2, 3}) {
        const auto fam = coset_family(construct_hamming_pid(m));
        const int n = (1 << m) - 1;
        REQUIRE(fam.size() == static_cast<std::size_t>(n) + 1);
        std::set<vertex> seen;
        for (const auto& coset : fam) {
            CHECK(is_perfect_dominating(coset));
            int odd = 0;
            for (vertex v : coset.members) odd += parity_bit(v);
            CHECK(odd * 2 == static_cast<int>(coset.size()));
            for (vertex v : coset.members) CHECK(seen.insert(v).second);
        }
        CHECK(seen.size() == (std::size_t{1} << n));
    }
}

TEST_CASE("slice picks the coset named by the tuple", "[domination]") {
    const PidSet lifted = lift_pid(construct_hamming_pid(2));
    CHECK(slice(lifted, 0).members == std::vector<vertex>{0, 7});
    CHECK(slice(lifted, 0b1000).members.empty());  // odd parity tuple
    CHECK(slice(lifted, 0b1001).members == std::vector<vertex>{1, 6});

    // Reassembling all even slices recovers the lifted set.
    std::vector<vertex> rebuilt;
    for (vertex t = 0; t < 16; ++t) {
        const VertexSet s = slice(lifted, t);
        if (parity_bit(t) == 1) {
            CHECK(s.empty());
            continue;
        }
        for (vertex x : s.members) rebuilt.push_back(join(x, t, 3));
    }
    std::sort(rebuilt.begin(), rebuilt.end());
    CHECK(rebuilt == lifted.base.members);
}

TEST_CASE("shells of PID sets are (n-1)-regular", "[domination]") {
    const Shell s3 = make_shell(3, construct_hamming_pid(2).base);
    CHECK(s3.vertex_count() == 6);
    for (vertex v : s3.survivors()) CHECK(s3.degree(v) == 2);

    const Shell s7 = make_shell(7, construct_hamming_pid(3).base);
    CHECK(s7.vertex_count() == 112);
    CHECK(s7.surviving_edges().size() == 336);
    for (vertex v : s7.survivors()) CHECK(s7.degree(v) == 6);

    const Shell intact = make_shell(3, VertexSet(3, {}));
    CHECK(intact.vertex_count() == 8);
    for (vertex v : intact.survivors()) CHECK(intact.degree(v) == 3);

    // The complement of the shell's vertex set is exactly the removed set.
    std::set<vertex> surv;
    for (vertex v : s7.survivors()) surv.insert(v);
    for (vertex v = 0; v < 128; ++v)
        CHECK(surv.count(v) + (construct_hamming_pid(3).base.contains(v) ? 1 : 0) == 1);
}

TEST_CASE("total perfect dominating sets from the product construction", "[domination]") {
    const VertexSet d5 = construct_total_pd(5);
    CHECK(d5.size() == 8);  // 2^{5-2}
    CHECK(is_perfect_dominating(d5));
    CHECK(is_total_dominating(d5));
    const Shell s5 = make_shell(5, d5);
    CHECK(s5.vertex_count() == 24);
    for (vertex v : s5.survivors()) CHECK(s5.degree(v) == 4);

    const VertexSet d6 = construct_total_pd(6);
    CHECK(d6.size() == 16);  // 2^{6-2}
    CHECK(is_perfect_dominating(d6));
    CHECK(is_total_dominating(d6));
    const Shell s6 = make_shell(6, d6);
    for (vertex v : s6.survivors()) CHECK(s6.degree(v) == 5);

    CHECK_THROWS_AS(construct_total_pd(7), argument_error);
    CHECK_THROWS_AS(construct_total_pd(3), argument_error);
}

TEST_CASE("removing fewer vertices cannot keep the shell regular", "[domination]") {
    // Degree counting: a set of size 2^{n-k}-1 leaves exactly n+1 vertices
    // with no removed neighbor, so the remainder is not (n-1)-regular.
    for (auto [n, k] : {std::pair{3, 2}, {7, 3}, {15, 4}}) {
        const std::uint64_t coverage =
            (static_cast<std::uint64_t>(n) + 1) * ((std::uint64_t{1} << (n - k)) - 1);
        CHECK(coverage < (std::uint64_t{1} << n));
        CHECK((std::uint64_t{1} << n) - coverage == std::uint64_t(n) + 1);
    }
}

TEST_CASE("vertex set construction validates labels", "[domination]") {
    CHECK_THROWS_AS(VertexSet(3, {9}), label_error);
    const VertexSet s(3, {5, 1, 5});
    CHECK(s.members == std::vector<vertex>{1, 5});  // sorted, deduplicated
    CHECK_THROWS_AS(Shell(4, VertexSet(3, {0})), dimension_error);
}
