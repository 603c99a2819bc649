#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hsk/error.hpp"

namespace hsk {

// Canonical vertex label: coordinate v_1 is the least significant bit.
using vertex = std::uint64_t;

inline constexpr int kMaxDim = 62;

struct CubeDim {
    int n = 1;
    CubeDim(int dim) : n(dim) {
        if (n < 1 || n > kMaxDim)
            throw dimension_error("cube dimension must be in 1.." + std::to_string(kMaxDim) +
                                  ", got " + std::to_string(n));
    }
    operator int() const { return n; }
};

inline vertex full_mask(int n) { return (n >= 64) ? ~vertex{0} : ((vertex{1} << n) - 1); }

inline void check_label(vertex v, int n) {
    if (v > full_mask(n))
        throw label_error("vertex label " + std::to_string(v) + " out of range for Q_" +
                          std::to_string(n));
}

// An undirected hypercube edge, stored with u < v; endpoints differ in one bit.
struct Edge {
    vertex u = 0;
    vertex v = 1;

    Edge() = default;
    Edge(vertex a, vertex b) {
        if (std::popcount(a ^ b) != 1)
            throw argument_error("edge endpoints must differ in exactly one bit");
        u = a < b ? a : b;
        v = a < b ? b : a;
    }

    // 1-indexed flipped coordinate.
    int dim_index() const { return std::countr_zero(u ^ v) + 1; }

    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

enum class Parity { even, odd };

inline Parity parity(vertex v) { return (std::popcount(v) & 1) ? Parity::odd : Parity::even; }

inline int parity_bit(vertex v) { return std::popcount(v) & 1; }

inline int hamming_distance(vertex u, vertex v) { return std::popcount(u ^ v); }

inline std::vector<vertex> neighbors(vertex v, CubeDim n) {
    check_label(v, n);
    std::vector<vertex> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(v ^ (vertex{1} << i));
    return out;
}

inline std::pair<vertex, vertex> split(vertex v, int n_low, int n_high) {
    if (n_low < 0 || n_high < 0 || n_low + n_high > kMaxDim)
        throw dimension_error("bad split widths");
    check_label(v, n_low + n_high);
    return {v & full_mask(n_low), v >> n_low};
}

inline vertex join(vertex low, vertex high, int n_low) {
    return low | (high << n_low);
}

inline vertex gray(vertex i) { return i ^ (i >> 1); }

// Inverse of gray(): the position of v in reflected-Gray order.
inline vertex gray_rank(vertex v) {
    vertex r = 0;
    for (; v; v >>= 1) r ^= v;
    return r;
}

// Reflected-Gray Hamiltonian cycle of Q_n. Consecutive labels (cyclically)
// differ in one bit and parities alternate, starting even at 0.
inline std::vector<vertex> gray_cycle(CubeDim n) {
    if (n < 2) throw dimension_error("gray_cycle needs n >= 2");
    std::vector<vertex> out(vertex{1} << n);
    for (vertex i = 0; i < out.size(); ++i) out[i] = gray(i);
    return out;
}

// sigma is 1-indexed: coordinate i of the result is coordinate sigma[i-1] of v.
inline vertex permute_coordinates(vertex v, std::span<const int> sigma) {
    const int n = static_cast<int>(sigma.size());
    if (n < 1 || n > kMaxDim) throw argument_error("permutation size out of range");
    check_label(v, n);
    vertex seen = 0;
    vertex out = 0;
    for (int i = 0; i < n; ++i) {
        const int s = sigma[i];
        if (s < 1 || s > n) throw argument_error("permutation entry out of range");
        seen |= vertex{1} << (s - 1);
        if ((v >> (s - 1)) & 1) out |= vertex{1} << i;
    }
    if (seen != full_mask(n)) throw argument_error("sigma is not a bijection on 1..n");
    return out;
}

// Label with bit position d removed (projection onto a facet).
inline vertex drop_bit(vertex v, int d) {
    const vertex low = v & full_mask(d);
    return low | ((v >> (d + 1)) << d);
}

// Inverse of drop_bit: reinsert bit value `bit` at position d.
inline vertex insert_bit(vertex v, int d, int bit) {
    const vertex low = v & full_mask(d);
    return low | (static_cast<vertex>(bit) << d) | ((v >> d) << (d + 1));
}

inline std::string binary_string(vertex v, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((v >> i) & 1) s[static_cast<std::size_t>(n - 1 - i)] = '1';
    return s;
}

}  // namespace hsk
