#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "hsk/hypercube.hpp"

using namespace hsk;

TEST_CASE("neighbors flips each coordinate once", "[hypercube]") {
    CHECK(neighbors(0, 3) == std::vector<vertex>{1, 2, 4});
    CHECK(neighbors(7, 3) == std::vector<vertex>{6, 5, 3});
    CHECK(neighbors(5, 4) == std::vector<vertex>{4, 7, 1, 13});
    CHECK_THROWS_AS(neighbors(8, 3), label_error);
}

TEST_CASE("neighbor relation is symmetric", "[hypercube]") {
    for (vertex v = 0; v < 32; ++v)
        for (vertex w : neighbors(v, 5)) {
            const auto back = neighbors(w, 5);
            CHECK(std::find(back.begin(), back.end(), v) != back.end());
        }
}

TEST_CASE("parity and distance", "[hypercube]") {
    CHECK(parity(0) == Parity::even);
    CHECK(parity(7) == Parity::odd);
    CHECK(parity(0b1111) == Parity::even);
    CHECK(hamming_distance(0, 7) == 3);
    CHECK(hamming_distance(42, 42) == 0);
    CHECK(hamming_distance(0b101, 0b011) == 2);
}

TEST_CASE("split and join round-trip", "[hypercube]") {
    CHECK(split(120, 3, 4) == std::pair<vertex, vertex>{0, 15});
    CHECK(split(0, 3, 4) == std::pair<vertex, vertex>{0, 0});
    CHECK(split(5, 1, 2) == std::pair<vertex, vertex>{1, 2});
    for (vertex v = 0; v < (vertex{1} << 14); ++v) {
        const auto [lo, hi] = split(v, 6, 8);
        CHECK(join(lo, hi, 6) == v);
    }
    CHECK_THROWS_AS(split(1 << 10, 3, 4), label_error);
}

TEST_CASE("gray cycle is Hamiltonian with alternating parities", "[hypercube]") {
    CHECK(gray_cycle(2) == std::vector<vertex>{0, 1, 3, 2});
    CHECK_THROWS_AS(gray_cycle(1), dimension_error);

    for (int n : {2, 3, 4, 6}) {
        const auto cyc = gray_cycle(n);
        REQUIRE(cyc.size() == (std::size_t{1} << n));
        CHECK(std::set<vertex>(cyc.begin(), cyc.end()).size() == cyc.size());
        CHECK(cyc[0] == 0);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            CHECK(hamming_distance(cyc[i], cyc[(i + 1) % cyc.size()]) == 1);
            CHECK(parity_bit(cyc[i]) == static_cast<int>(i % 2));
        }
    }
}

TEST_CASE("gray_rank inverts gray", "[hypercube]") {
    for (vertex i = 0; i < 4096; ++i) CHECK(gray_rank(gray(i)) == i);
}

TEST_CASE("permute_coordinates is an automorphism", "[hypercube]") {
    const std::vector<int> identity{1, 2, 3};
    CHECK(permute_coordinates(0b101, identity) == 0b101);

    const std::vector<int> swap12{2, 1};
    CHECK(permute_coordinates(0b01, swap12) == 0b10);

    const std::vector<int> sigma{3, 1, 5, 2, 4};
    for (vertex v = 0; v < 32; ++v) {
        const vertex img = permute_coordinates(v, sigma);
        std::set<vertex> mapped;
        for (vertex w : neighbors(v, 5)) mapped.insert(permute_coordinates(w, sigma));
        const auto ns = neighbors(img, 5);
        CHECK(mapped == std::set<vertex>(ns.begin(), ns.end()));
    }

    const std::vector<int> bad{1, 1, 3};
    CHECK_THROWS_AS(permute_coordinates(0, bad), argument_error);
}

TEST_CASE("xor translation preserves the edge relation", "[hypercube]") {
    for (vertex x : {vertex{1}, vertex{13}, vertex{42}, vertex{63}})
        for (vertex v = 0; v < 64; ++v)
            for (vertex w : neighbors(v, 6))
                CHECK(hamming_distance(v ^ x, w ^ x) == 1);
}

TEST_CASE("drop_bit and insert_bit invert each other", "[hypercube]") {
    for (vertex v = 0; v < 256; ++v)
        for (int d = 0; d < 8; ++d) {
            const int bit = static_cast<int>((v >> d) & 1);
            CHECK(insert_bit(drop_bit(v, d), d, bit) == v);
        }
}

TEST_CASE("edge normalizes endpoints and exposes the flipped coordinate", "[hypercube]") {
    const Edge e(5, 1);
    CHECK(e.u == 1);
    CHECK(e.v == 5);
    CHECK(e.dim_index() == 3);
    CHECK_THROWS_AS(Edge(0, 3), argument_error);
}

TEST_CASE("binary_string prints canonical numerals", "[hypercube]") {
    CHECK(binary_string(1, 3) == "001");
    CHECK(binary_string(6, 3) == "110");
    CHECK(binary_string(0, 4) == "0000");
}
