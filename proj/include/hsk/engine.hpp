#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "hsk/certify.hpp"
#include "hsk/cycle.hpp"
#include "hsk/cycles.hpp"
#include "hsk/domination.hpp"
#include "hsk/error.hpp"
#include "hsk/gf2.hpp"
#include "hsk/glue.hpp"
#include "hsk/hypercube.hpp"

namespace hsk {

struct EmbedRequest {
    Shell shell;
    Edge edge;
    int target_len = 4;
};

namespace detail {

// Column-sum syndrome of the canonical Hamming check matrix: column j = binary j.
inline std::uint64_t hamming_syndrome(vertex v) {
    std::uint64_t s = 0;
    while (v) {
        s ^= static_cast<std::uint64_t>(std::countr_zero(v)) + 1;
        v &= v - 1;
    }
    return s;
}

// Syndrome labelling the code coset found in even-parity slice t: the lifted
// structure puts coset {x : syn(x) = c(t)} there, c(t) = XOR of t's bit positions.
inline std::uint64_t slice_coset_syndrome(vertex t) {
    std::uint64_t c = 0;
    while (t) {
        c ^= static_cast<std::uint64_t>(std::countr_zero(t));
        t &= t - 1;
    }
    return c;
}

Cycle solve_canonical(int m, const Edge& e, int len);

// The sub-shell occupying even-parity slice ts: Q_np minus a coset of the
// canonical Hamming code of order mm. Edge-bipancyclic via recursion.
class ShellSliceSibling final : public SiblingCycles {
public:
    ShellSliceSibling(int mm, vertex ts)
        : mm_(mm), np_((1 << mm) - 1), ts_(ts), c_(slice_coset_syndrome(ts)) {
        x0_ = (c_ == 0) ? 0 : (vertex{1} << (c_ - 1));
        count_ = (std::uint64_t{1} << np_) - (std::uint64_t{1} << (np_ - mm_));
    }

    std::uint64_t vertex_count() const override { return count_; }

    bool survives_low(vertex x) const { return hamming_syndrome(x) != c_; }

    bool has_vertex(vertex g) const override {
        return (g >> np_) == ts_ && survives_low(g & full_mask(np_));
    }
    bool has_edge(const Edge& e) const override {
        return has_vertex(e.u) && has_vertex(e.v) && (e.u >> np_) == (e.v >> np_);
    }
    std::vector<int> lengths_through(const Edge& e) const override {
        if (!has_edge(e)) return {};
        if (mm_ == 2) return {6};
        std::vector<int> out;
        for (int l = 4; l <= static_cast<int>(count_); l += 2) out.push_back(l);
        return out;
    }
    Cycle cycle_through(const Edge& e, int len) const override {
        if (!has_edge(e)) throw argument_error("slice sibling: edge not present");
        const vertex mask = full_mask(np_);
        const Edge el((e.u & mask) ^ x0_, (e.v & mask) ^ x0_);
        Cycle c = solve_canonical(mm_, el, len);
        for (vertex& v : c.verts) v = ((v ^ x0_) | (ts_ << np_));
        return c;
    }
    Cycle hamiltonian() const override {
        for (vertex x = 0; x < (vertex{1} << np_); ++x) {
            if (!survives_low(x)) continue;
            for (int i = 0; i < np_; ++i) {
                const vertex w = x ^ (vertex{1} << i);
                if (survives_low(w))
                    return cycle_through(Edge(x | (ts_ << np_), w | (ts_ << np_)),
                                         static_cast<int>(count_));
            }
        }
        throw construction_error("slice sibling has no edge");
    }
    std::vector<Edge> edges() const override {
        std::vector<Edge> out;
        for (vertex x = 0; x < (vertex{1} << np_); ++x) {
            if (!survives_low(x)) continue;
            for (int i = 0; i < np_; ++i) {
                const vertex w = x ^ (vertex{1} << i);
                if (w > x && survives_low(w))
                    out.emplace_back(x | (ts_ << np_), w | (ts_ << np_));
            }
        }
        return out;
    }

private:
    int mm_;
    int np_;
    vertex ts_;
    std::uint64_t c_;
    vertex x0_;
    std::uint64_t count_;
};

// Edge-bipancyclic embedding in the shell of the canonical Hamming code of
// order m. Decomposes Q_n = Q_np x Q_{np+1} along a Hamiltonian cycle of the
// high factor chosen so the requested edge lies in the first block, builds
// that block's cycle, then chains further blocks until the length is reached.
inline Cycle solve_canonical(int m, const Edge& e, int len) {
    if (m == 2) {
        if (len != 6) throw argument_error("Q_3 shell only carries 6-cycles");
        Cycle base({1, 3, 2, 6, 4, 5});
        if (!base.contains_edge(e)) throw argument_error("edge not in the Q_3 shell");
        return base;
    }

    const int np = (1 << (m - 1)) - 1;
    const int hd = np + 1;
    const std::uint64_t nslices = std::uint64_t{1} << hd;
    const vertex mask = full_mask(np);

    // High-factor Hamiltonian cycle with the edge's slice(s) at the front;
    // even-parity slices land at even positions.
    std::vector<vertex> t_seq(nslices);
    const int d0 = std::countr_zero(e.u ^ e.v);
    if (d0 < np) {
        const vertex t = e.u >> np;
        const vertex idx = gray_rank(t);
        const vertex shift = (parity_bit(t) == 0) ? idx : idx - 1;
        for (std::uint64_t i = 0; i < nslices; ++i)
            t_seq[i] = gray((i + shift) & (nslices - 1));
    } else {
        const vertex s = e.u >> np;
        const vertex sp = e.v >> np;
        const int dh = d0 - np;
        const vertex se = (parity_bit(s) == 0) ? s : sp;
        for (std::uint64_t i = 0; i < nslices; ++i)
            t_seq[i] = swap_bits(gray(i), 0, dh) ^ se;
    }

    const std::uint64_t block_len =
        (std::uint64_t{1} << np) + (std::uint64_t{1} << np) - (std::uint64_t{1} << (np - (m - 1)));
    const std::uint64_t block_count = nslices / 2;
    const auto frame_of = [&](std::uint64_t b) {
        return BlockFrame{np, t_seq[2 * b + 1] << np, t_seq[2 * b] << np};
    };

    const ShellSliceSibling sib0(m - 1, t_seq[0]);
    if (static_cast<std::uint64_t>(len) <= block_len)
        return embed_in_frame(frame_of(0), sib0, e, len);

    Cycle cur = embed_in_frame(frame_of(0), sib0, e, static_cast<int>(block_len));
    std::uint64_t acc = block_len;

    for (std::uint64_t b = 1; b < block_count; ++b) {
        const vertex tf_prev = t_seq[2 * b - 1];
        const vertex ts_next = t_seq[2 * b];
        const ShellSliceSibling sib(m - 1, ts_next);
        const BlockFrame fr = frame_of(b);

        // Transfer edge on the current cycle: inside the boundary full slice,
        // with both mates surviving in the next sub-shell (backed by the
        // spanning-overlap property), and distinct from the requested edge.
        std::optional<Edge> f;
        vertex g1 = 0, g2 = 0;
        for (std::size_t i = 0; i < cur.verts.size(); ++i) {
            const vertex a = cur.verts[i];
            const vertex bv = cur.verts[(i + 1) % cur.verts.size()];
            if ((a >> np) != tf_prev || (bv >> np) != tf_prev) continue;
            if (!sib.survives_low(a & mask) || !sib.survives_low(bv & mask)) continue;
            if (Edge(a, bv) == e) continue;
            f = Edge(a, bv);
            g1 = a;
            g2 = bv;
            break;
        }

        if (!f) {
            // Certified search inside the chained block union.
            std::unordered_set<vertex> allowed;
            for (std::uint64_t j = 0; j <= 2 * b + 1; ++j) allowed.insert(t_seq[j]);
            const auto adj = [&](vertex g) {
                std::vector<vertex> out;
                for (int i = 0; i < np + hd; ++i) {
                    const vertex w = g ^ (vertex{1} << i);
                    if (!allowed.count(w >> np)) continue;
                    if (hamming_syndrome(w) == 0) continue;
                    out.push_back(w);
                }
                return out;
            };
            auto searched = bounded_cycle_search(adj, e, len);
            if (searched) return *searched;
            throw construction_error("block chaining found no transfer edge");
        }

        const vertex m1 = (g1 & mask) | (ts_next << np);
        const vertex m2 = (g2 & mask) | (ts_next << np);
        const int k = static_cast<int>(len - acc);

        if (k == 2) {
            std::vector<vertex> verts = open_at(cur, g1, g2);  // g2 ... g1
            verts.push_back(m1);
            verts.push_back(m2);
            return Cycle(std::move(verts));
        }
        if (static_cast<std::uint64_t>(k) <= block_len) {
            Cycle cp = embed_in_frame(fr, sib, Edge(m1, m2), k);
            std::vector<vertex> verts = open_at(cur, g1, g2);
            const auto sp = open_at(cp, m2, m1);  // m1 ... m2
            verts.insert(verts.end(), sp.begin(), sp.end());
            return Cycle(std::move(verts));
        }
        Cycle cp = embed_in_frame(fr, sib, Edge(m1, m2), static_cast<int>(block_len));
        std::vector<vertex> verts = open_at(cur, g1, g2);
        const auto sp = open_at(cp, m2, m1);
        verts.insert(verts.end(), sp.begin(), sp.end());
        cur = Cycle(std::move(verts));
        acc += block_len;
    }
    throw construction_error("length exceeds the chained decomposition");
}

inline vertex apply_bit_map(vertex v, const std::vector<int>& bit_map) {
    vertex out = 0;
    while (v) {
        const int i = std::countr_zero(v);
        v &= v - 1;
        out |= vertex{1} << bit_map[static_cast<std::size_t>(i)];
    }
    return out;
}

}  // namespace detail

// Certified cycle embedding in a Hamming shell: a cycle of every even length
// 4..|V(shell)| through every surviving edge, for any removal set that is a
// coset of a linear perfect code: any such set maps to the canonical Hamming
// kernel by an XOR translation plus a coordinate permutation computed from
// the code's own check matrix.
class ShellCycleEngine {
public:
    explicit ShellCycleEngine(Shell shell) : shell_(std::move(shell)) {
        const int n = shell_.n;
        m_ = 0;
        for (int m = 3; m <= 5; ++m)
            if (n == (1 << m) - 1) m_ = m;
        if (m_ == 0)
            throw argument_error("shell dimension must be 2^m - 1 with m >= 3");
        if (shell_.removed.size() != (std::size_t{1} << (n - m_)))
            throw argument_error("removed set has the wrong size for a perfect code");

        offset_ = shell_.removed.members.front();
        std::vector<vertex> base =
            xor_translate(std::span<const vertex>(shell_.removed.members), offset_, n);

        const bool canonical = std::all_of(base.begin(), base.end(), [&](vertex b) {
            return detail::hamming_syndrome(b) == 0;
        });
        fwd_bits_.resize(static_cast<std::size_t>(n));
        inv_bits_.resize(static_cast<std::size_t>(n));
        if (canonical) {
            for (int i = 0; i < n; ++i) fwd_bits_[static_cast<std::size_t>(i)] = i;
            inv_bits_ = fwd_bits_;
        } else {
            derive_permutation(base);
        }
    }

    const Shell& shell() const { return shell_; }
    int code_order() const { return m_; }
    std::uint64_t survivor_count() const { return shell_.vertex_count(); }

    Cycle cycle_through(const Edge& e, int len) const {
        if (!shell_.survives(e.u) || !shell_.survives(e.v))
            throw argument_error("requested edge does not survive in the shell");
        if (len < 4 || len % 2 != 0 ||
            static_cast<std::uint64_t>(len) > shell_.vertex_count())
            throw argument_error("requested length out of range");

        const Edge ec(to_canonical(e.u), to_canonical(e.v));
        Cycle c = detail::solve_canonical(m_, ec, len);
        for (vertex& v : c.verts) v = from_canonical(v);
        c = canonical_form(std::move(c));

        const Verdict verdict = validate_cycle(shell_, c, e, len);
        if (!verdict.valid)
            throw construction_error("engine output failed certification: " + verdict.reason);
        return c;
    }

private:
    // Pivot-indexed GF(2) elimination; returns the independent vectors kept.
    static std::vector<vertex> linear_basis(const std::vector<vertex>& vecs, int n) {
        std::vector<vertex> piv(static_cast<std::size_t>(n), 0);
        std::vector<vertex> kept;
        for (vertex v : vecs) {
            vertex r = v;
            while (r) {
                const int t = 63 - std::countl_zero(r);
                if (piv[static_cast<std::size_t>(t)] == 0) {
                    piv[static_cast<std::size_t>(t)] = r;
                    kept.push_back(r);
                    break;
                }
                r ^= piv[static_cast<std::size_t>(t)];
            }
        }
        return kept;
    }

    void derive_permutation(const std::vector<vertex>& base) {
        const int n = shell_.n;
        // Basis of the (claimed) code, then a basis of its dual; the dual's
        // columns name the coordinate permutation onto the canonical kernel.
        const std::vector<vertex> basis = linear_basis(base, n);
        if (basis.size() != static_cast<std::size_t>(n - m_))
            throw argument_error("removed set is not a coset of a linear code");

        Gf2Matrix gen(static_cast<int>(basis.size()), n);
        for (std::size_t r = 0; r < basis.size(); ++r)
            gen.row_words[r] = BitVector(n, basis[r]);
        const LinearCode dual = kernel(gen);
        const std::vector<vertex> dual_basis = linear_basis(dual.codewords, n);
        if (dual_basis.size() != static_cast<std::size_t>(m_))
            throw argument_error("removed set is not a coset of a linear perfect code");

        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int i = 0; i < n; ++i) {
            vertex col = 0;
            for (std::size_t r = 0; r < dual_basis.size(); ++r)
                if ((dual_basis[r] >> i) & 1) col |= vertex{1} << r;
            if (col == 0 || col > static_cast<vertex>(n) || seen[col])
                throw argument_error("removed set is not a coset of a linear perfect code");
            seen[col] = true;
            fwd_bits_[static_cast<std::size_t>(i)] = static_cast<int>(col) - 1;
            inv_bits_[col - 1] = i;
        }
        for (vertex b : base)
            if (detail::hamming_syndrome(detail::apply_bit_map(b, fwd_bits_)) != 0)
                throw argument_error("removed set is not a coset of a linear perfect code");
    }

    vertex to_canonical(vertex v) const { return detail::apply_bit_map(v ^ offset_, fwd_bits_); }
    vertex from_canonical(vertex v) const { return detail::apply_bit_map(v, inv_bits_) ^ offset_; }

    Shell shell_;
    int m_ = 0;
    vertex offset_ = 0;
    std::vector<int> fwd_bits_;
    std::vector<int> inv_bits_;
};

inline Cycle shell_cycle(const EmbedRequest& req) {
    return ShellCycleEngine(req.shell).cycle_through(req.edge, req.target_len);
}

}  // namespace hsk
