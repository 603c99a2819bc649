#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hsk/error.hpp"
#include "hsk/gf2.hpp"
#include "hsk/hypercube.hpp"

namespace hsk {

// Sorted, duplicate-free set of vertex labels of Q_n.
struct VertexSet {
    int n = 1;
    std::vector<vertex> members;

    VertexSet() = default;
    VertexSet(CubeDim dim, std::vector<vertex> labels) : n(dim), members(std::move(labels)) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (vertex v : members) check_label(v, n);
    }

    bool contains(vertex v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }
    std::size_t size() const { return members.size(); }
    bool empty() const { return members.empty(); }
    bool operator==(const VertexSet&) const = default;
};

inline VertexSet xor_translate(const VertexSet& s, vertex x) {
    return {s.n, xor_translate(std::span<const vertex>(s.members), x, s.n)};
}

inline bool is_independent(const VertexSet& s) {
    for (std::size_t i = 0; i < s.members.size(); ++i)
        for (std::size_t j = i + 1; j < s.members.size(); ++j)
            if (hamming_distance(s.members[i], s.members[j]) == 1) return false;
    return true;
}

// Distant set: closed neighborhoods pairwise disjoint, i.e. pairwise distance >= 3.
inline bool is_strongly_independent(const VertexSet& s) {
    for (std::size_t i = 0; i < s.members.size(); ++i)
        for (std::size_t j = i + 1; j < s.members.size(); ++j)
            if (hamming_distance(s.members[i], s.members[j]) < 3) return false;
    return true;
}

// Every vertex outside D has exactly one neighbor in D.
inline bool is_perfect_dominating(const VertexSet& d) {
    const vertex size = vertex{1} << d.n;
    for (vertex v = 0; v < size; ++v) {
        if (d.contains(v)) continue;
        int hits = 0;
        for (int i = 0; i < d.n; ++i)
            if (d.contains(v ^ (vertex{1} << i)) && ++hits > 1) return false;
        if (hits != 1) return false;
    }
    return true;
}

// Every vertex of Q_n, members included, has at least one neighbor in D.
inline bool is_total_dominating(const VertexSet& d) {
    const vertex size = vertex{1} << d.n;
    for (vertex v = 0; v < size; ++v) {
        bool hit = false;
        for (int i = 0; i < d.n && !hit; ++i) hit = d.contains(v ^ (vertex{1} << i));
        if (!hit) return false;
    }
    return true;
}

// A perfect independent dominating set with its linearity metadata.
struct PidSet {
    VertexSet base;
    bool linear = false;
    vertex offset = 0;  // 0 when the set itself is a linear subspace
};

inline bool is_xor_closed(const VertexSet& s) {
    if (!s.contains(0)) return false;
    for (vertex a : s.members)
        for (vertex b : s.members)
            if (!s.contains(a ^ b)) return false;
    return true;
}

inline PidSet construct_hamming_pid(int m) {
    if (m < 2 || m > 4) throw dimension_error("construct_hamming_pid needs 2 <= m <= 4");
    LinearCode code = kernel(hamming_parity_check(m));
    return {VertexSet(code.n, code.codewords), true, 0};
}

// Length-doubling construction: D = { (x, y, j) : x in Q_n, y in D'+x,
// sum(y) = j }, a perfect code of Q_{2n+1}.
inline PidSet lift_pid(const PidSet& dp) {
    if (!dp.linear || dp.offset != 0)
        throw unsupported_error("lift_pid needs a linear PID set with offset 0");
    const int n = dp.base.n;
    bool mersenne = false;
    for (int m = 2; m <= 5; ++m) mersenne |= (n == (1 << m) - 1);
    if (!mersenne) throw dimension_error("lift_pid: base length must be 2^m - 1");

    std::vector<vertex> members;
    members.reserve((std::size_t{1} << n) * dp.base.size());
    for (vertex x = 0; x < (vertex{1} << n); ++x)
        for (vertex d : dp.base.members) {
            const vertex y = d ^ x;
            const vertex j = static_cast<vertex>(parity_bit(y));
            members.push_back(x | (y << n) | (j << (2 * n)));
        }
    return {VertexSet(2 * n + 1, std::move(members)), true, 0};
}

// Cosets D'_i = D'_0 + e_i for i = 0..n; they partition V(Q_n).
inline std::vector<VertexSet> coset_family(const PidSet& d0) {
    if (!d0.linear || d0.offset != 0)
        throw argument_error("coset_family needs a linear PID set with offset 0");
    std::vector<VertexSet> out;
    out.reserve(static_cast<std::size_t>(d0.base.n) + 1);
    out.push_back(d0.base);
    for (int i = 1; i <= d0.base.n; ++i)
        out.push_back(xor_translate(d0.base, vertex{1} << (i - 1)));
    return out;
}

// Restriction of a lifted PID set to the subcube (Q_n, t): empty for odd-parity
// t, and the coset D'_0 + y (t = (y, j)) for even-parity t.
inline VertexSet slice(const PidSet& d, vertex t) {
    const int k = d.base.n;
    if (k < 3 || k % 2 == 0) throw argument_error("slice: expected a lifted PID set of Q_{2n+1}");
    const int n = (k - 1) / 2;
    check_label(t, n + 1);
    std::vector<vertex> low;
    for (vertex v : d.base.members)
        if ((v >> n) == t) low.push_back(v & full_mask(n));
    return {n, std::move(low)};
}

// Induced subgraph of Q_n after deleting `removed`.
struct Shell {
    int n = 1;
    VertexSet removed;

    Shell() = default;
    Shell(CubeDim dim, VertexSet rem) : n(dim), removed(std::move(rem)) {
        if (removed.n != n) throw dimension_error("shell/removed dimension mismatch");
    }

    bool survives(vertex v) const { return v <= full_mask(n) && !removed.contains(v); }
    std::uint64_t vertex_count() const { return (std::uint64_t{1} << n) - removed.size(); }

    int degree(vertex v) const {
        int deg = 0;
        for (int i = 0; i < n; ++i) deg += survives(v ^ (vertex{1} << i)) ? 1 : 0;
        return deg;
    }

    std::vector<vertex> survivors() const {
        std::vector<vertex> out;
        out.reserve(vertex_count());
        for (vertex v = 0; v < (vertex{1} << n); ++v)
            if (survives(v)) out.push_back(v);
        return out;
    }

    std::vector<Edge> surviving_edges() const {
        std::vector<Edge> out;
        for (vertex v = 0; v < (vertex{1} << n); ++v) {
            if (!survives(v)) continue;
            for (int i = 0; i < n; ++i) {
                const vertex w = v ^ (vertex{1} << i);
                if (w > v && survives(w)) out.emplace_back(v, w);
            }
        }
        return out;
    }
};

inline Shell make_shell(CubeDim n, VertexSet d) { return Shell(n, std::move(d)); }

// Total perfect dominating set of Q_n for n strictly between Mersenne numbers:
// the product of the Q_m Hamming code with V(Q_{n-m}), m = 2^k - 1 < n.
inline VertexSet construct_total_pd(int n) {
    if (n < 4) throw argument_error("construct_total_pd needs n >= 4");
    if ((static_cast<std::uint64_t>(n) & (static_cast<std::uint64_t>(n) + 1)) == 0)
        throw argument_error("n = 2^k - 1: use construct_hamming_pid instead");
    int k = 2;
    while ((1 << (k + 1)) - 1 < n) ++k;
    const int m = (1 << k) - 1;
    const PidSet pid = construct_hamming_pid(k);
    std::vector<vertex> members;
    members.reserve(pid.base.size() << (n - m));
    for (vertex t = 0; t < (vertex{1} << (n - m)); ++t)
        for (vertex s : pid.base.members) members.push_back(join(s, t, m));
    return {n, std::move(members)};
}

}  // namespace hsk
