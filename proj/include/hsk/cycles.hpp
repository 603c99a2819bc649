#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hsk/cycle.hpp"
#include "hsk/domination.hpp"
#include "hsk/error.hpp"
#include "hsk/hypercube.hpp"

namespace hsk {

namespace detail {

inline vertex swap_bits(vertex w, int i, int j) {
    if (i == j) return w;
    const int bi = (w >> i) & 1;
    const int bj = (w >> j) & 1;
    if (bi != bj) w ^= (vertex{1} << i) | (vertex{1} << j);
    return w;
}

}  // namespace detail

Cycle cycle_through_edge(CubeDim n, const Edge& e, int len);

namespace detail {

// Cycle of length len through the canonical edge (0,1) in Q_n.
inline Cycle cte_canonical(int n, int len) {
    if (n == 2) return Cycle({0, 1, 3, 2});
    const vertex half = vertex{1} << (n - 1);
    if (len <= static_cast<int>(half)) return cte_canonical(n - 1, len);

    // Ham cycle of the low half in Gray order; its last edge (2^{n-2}, 0)
    // is the splice point into the high half.
    std::vector<vertex> low(half);
    for (vertex i = 0; i < half; ++i) low[i] = gray(i);
    const vertex a = vertex{1} << (n - 2);  // last Gray label

    const int k = len - static_cast<int>(half);
    std::vector<vertex> verts = std::move(low);  // path 0,1,...,a (edge (a,0) open)
    if (k == 2) {
        verts.push_back(a | half);
        verts.push_back(half);
    } else {
        Cycle cb = cycle_through_edge(n - 1, Edge(a, vertex{0}), k);
        std::vector<vertex> pb = open_at(cb, vertex{0}, a);  // a ... 0
        for (vertex w : pb) verts.push_back(w | half);
    }
    return Cycle(std::move(verts));
}

}  // namespace detail

// Cycle of length exactly len (even, 4..2^n) through edge e.
inline Cycle cycle_through_edge(CubeDim n, const Edge& e, int len) {
    if (n < 2) throw dimension_error("cycle_through_edge needs n >= 2");
    check_label(e.v, n);
    if (len < 4 || len % 2 != 0 || static_cast<std::uint64_t>(len) > (std::uint64_t{1} << n))
        throw argument_error("cycle_through_edge: bad length " + std::to_string(len));
    const int d0 = e.dim_index() - 1;
    Cycle c = detail::cte_canonical(n, len);
    // Automorphism taking (0, e_1) to (e.u, e.v): swap coordinates 1 and
    // dim_index, then translate by e.u.
    for (vertex& w : c.verts) w = detail::swap_bits(w, 0, d0) ^ e.u;
    return canonical_form(std::move(c));
}

// Hamiltonian cycle of Q_n through both e and f; any two distinct edges of a
// hypercube lie on one. Recursive: split along a coordinate unused by either
// edge, solve one half, transfer across a matched cross pair.
inline Cycle hamiltonian_two_edges(CubeDim n, const Edge& e, const Edge& f) {
    if (n < 2) throw dimension_error("hamiltonian_two_edges needs n >= 2");
    check_label(e.v, n);
    check_label(f.v, n);
    if (e == f) throw argument_error("hamiltonian_two_edges: edges must differ");
    if (n == 2) return canonical_form(Cycle(gray_cycle(2)));

    const vertex used = (e.u ^ e.v) | (f.u ^ f.v);
    int d = -1;
    for (int i = n - 1; i >= 0; --i)
        if (!((used >> i) & 1)) {
            d = i;
            break;
        }

    const int side_e = static_cast<int>((e.u >> d) & 1);
    const int side_f = static_cast<int>((f.u >> d) & 1);
    const Edge pe(drop_bit(e.u, d), drop_bit(e.v, d));
    const Edge pf(drop_bit(f.u, d), drop_bit(f.v, d));

    Cycle ca;   // half containing e (projected labels)
    Cycle cb;   // other half
    Edge g(0, 1);  // transfer edge, shared by both halves
    if (side_e == side_f) {
        ca = hamiltonian_two_edges(n - 1, pe, pf);
        for (std::size_t i = 0; i < ca.verts.size(); ++i) {
            const Edge cand(ca.verts[i], ca.verts[(i + 1) % ca.verts.size()]);
            if (!(cand == pe) && !(cand == pf)) {
                g = cand;
                break;
            }
        }
        cb = cycle_through_edge(n - 1, g, 1 << (n - 1));
    } else {
        ca = cycle_through_edge(n - 1, pe, 1 << (n - 1));
        for (std::size_t i = 0; i < ca.verts.size(); ++i) {
            const Edge cand(ca.verts[i], ca.verts[(i + 1) % ca.verts.size()]);
            if (!(cand == pe) && !(cand == pf)) {
                g = cand;
                break;
            }
        }
        cb = hamiltonian_two_edges(n - 1, g, pf);
    }
    const int side_b = (side_e == side_f) ? 1 - side_e : side_f;

    std::vector<vertex> pa = open_at(ca, g.u, g.v);  // g.v ... g.u
    std::vector<vertex> pb = open_at(cb, g.v, g.u);  // g.u ... g.v
    std::vector<vertex> verts;
    verts.reserve(pa.size() + pb.size());
    for (vertex w : pa) verts.push_back(insert_bit(w, d, side_e));
    for (vertex w : pb) verts.push_back(insert_bit(w, d, side_b));
    return canonical_form(Cycle(std::move(verts)));
}

// The Hamiltonian 6-cycle of Q_3 minus a PID set (one of the four antipodal
// pairs). The base shape is translated by the coset offset.
inline Cycle q3_shell_hamiltonian(const VertexSet& removed) {
    if (removed.n != 3 || removed.size() != 2 ||
        (removed.members[0] ^ removed.members[1]) != 7)
        throw argument_error("q3_shell_hamiltonian: not a PID set of Q_3");
    const vertex c = removed.members[0];
    Cycle base({1, 3, 2, 6, 4, 5});
    for (vertex& v : base.verts) v ^= c;
    return canonical_form(std::move(base));
}

// ---------------------------------------------------------------------------
// Mesh cycles (path-product grids), used by the product construction.

struct GridCycle {
    int rows = 0;
    int cols = 0;
    std::vector<std::pair<int, int>> cells;

    int length() const { return static_cast<int>(cells.size()); }
};

// Exact-length cycle in the grid P_rows x P_cols: a serpentine body over an
// even number of full rows, with U-shaped teeth dipping below the bottom row
// at disjoint column pairs to make up the remainder.
inline GridCycle mesh_cycle(int rows, int cols, int len) {
    if (rows < 2 || cols < 2) throw argument_error("mesh_cycle: grid sides must be >= 2");
    const int cap = (rows * cols) % 2 ? rows * cols - 1 : rows * cols;
    if (len < 4 || len % 2 != 0 || len > cap)
        throw argument_error("mesh_cycle: length " + std::to_string(len) + " out of range");

    GridCycle g{rows, cols, {}};
    g.cells.reserve(static_cast<std::size_t>(len));

    if (len <= 2 * cols) {
        const int t = len / 2;
        for (int j = 0; j < t; ++j) g.cells.emplace_back(0, j);
        for (int j = t - 1; j >= 0; --j) g.cells.emplace_back(1, j);
        return g;
    }

    int r = std::min((len / cols) & ~1, rows & ~1);
    int extra = len - r * cols;  // even; fits in the teeth below row r-1

    std::vector<int> tooth(static_cast<std::size_t>(cols), 0);  // depth per pair (j, j+1), even j
    int half = extra / 2;
    for (int j = 0; j + 1 < cols && half > 0; j += 2) {
        tooth[static_cast<std::size_t>(j)] = std::min(rows - r, half);
        half -= tooth[static_cast<std::size_t>(j)];
    }
    if (half != 0) throw argument_error("mesh_cycle: internal capacity check failed");

    // Row 0 rightward.
    for (int j = 0; j < cols; ++j) g.cells.emplace_back(0, j);
    // Rows 1..r-2 serpentine within columns 1..cols-1.
    for (int i = 1; i < r - 1; ++i) {
        if (i % 2 == 1)
            for (int j = cols - 1; j >= 1; --j) g.cells.emplace_back(i, j);
        else
            for (int j = 1; j <= cols - 1; ++j) g.cells.emplace_back(i, j);
    }
    // Bottom row r-1 right-to-left with teeth, then column 0 upward.
    for (int j = cols - 1; j >= 0; --j) {
        g.cells.emplace_back(r - 1, j);
        const int pair = j - 1;  // tooth replaces the step (r-1, j) -> (r-1, j-1)
        if (pair >= 0 && pair % 2 == 0 && tooth[static_cast<std::size_t>(pair)] > 0) {
            const int d = tooth[static_cast<std::size_t>(pair)];
            for (int i = r; i < r + d; ++i) g.cells.emplace_back(i, j);
            for (int i = r + d - 1; i >= r; --i) g.cells.emplace_back(i, j - 1);
        }
    }
    for (int i = r - 2; i >= 1; --i) g.cells.emplace_back(i, 0);
    return g;
}

// Cycle of length len in (Q_m shell) x Q_{q_dim}: rows follow the shell's
// Hamiltonian cycle opened into a path, columns follow a Gray Hamiltonian
// path; the spanning mesh carries the cycle (product bipancyclicity).
inline Cycle product_shell_cycle(int m, const Cycle& shell_ham, CubeDim q_dim, int len) {
    const int rows = shell_ham.length();
    const std::uint64_t total = static_cast<std::uint64_t>(rows) << q_dim;
    if (len < 4 || len % 2 != 0 || static_cast<std::uint64_t>(len) > total)
        throw argument_error("product_shell_cycle: length out of range");
    if (q_dim + m > kMaxDim) throw dimension_error("product_shell_cycle: label too wide");
    std::vector<vertex> sorted = shell_ham.verts;
    std::sort(sorted.begin(), sorted.end());
    if (rows < 4 || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        sorted.back() > full_mask(m))
        throw argument_error("product_shell_cycle: not a cycle over Q_m labels");
    for (int i = 0; i < rows; ++i)
        if (hamming_distance(shell_ham.verts[static_cast<std::size_t>(i)],
                             shell_ham.verts[static_cast<std::size_t>((i + 1) % rows)]) != 1)
            throw argument_error("product_shell_cycle: row sequence is not a cycle");

    const GridCycle g = mesh_cycle(rows, 1 << q_dim, len);
    std::vector<vertex> verts;
    verts.reserve(g.cells.size());
    for (const auto& [i, j] : g.cells)
        verts.push_back(join(shell_ham.verts[static_cast<std::size_t>(i)],
                             gray(static_cast<vertex>(j)), m));
    return canonical_form(Cycle(std::move(verts)));
}

// ---------------------------------------------------------------------------
// Bounded certified search: last-resort DFS for one (edge, length) request
// over an arbitrary adjacency oracle. Returns nullopt when the node budget
// runs out or no cycle exists.
inline std::optional<Cycle> bounded_cycle_search(
    const std::function<std::vector<vertex>(vertex)>& adj, const Edge& e, int len,
    std::uint64_t node_budget = 20'000'000) {
    std::vector<vertex> path{e.u, e.v};
    std::set<vertex> on_path{e.u, e.v};
    std::uint64_t budget = node_budget;
    std::optional<Cycle> found;

    const std::function<bool()> dfs = [&]() -> bool {
        if (budget == 0) return true;  // abort
        --budget;
        const vertex back = path.back();
        if (static_cast<int>(path.size()) == len) {
            for (vertex w : adj(back))
                if (w == e.u) {
                    found = Cycle(path);
                    return true;
                }
            return false;
        }
        // remaining vertices to place plus the closing edge back to e.u
        const int remaining = len - static_cast<int>(path.size());
        const int dist = hamming_distance(back, e.u);
        if (dist > remaining + 1 || (dist & 1) != ((remaining + 1) & 1)) return false;
        for (vertex w : adj(back)) {
            if (on_path.count(w)) continue;
            path.push_back(w);
            on_path.insert(w);
            const bool stop = dfs();
            on_path.erase(w);
            path.pop_back();
            if (stop) return true;
        }
        return false;
    };
    dfs();
    return found;
}

}  // namespace hsk
