#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hsk/error.hpp"
#include "hsk/hypercube.hpp"

namespace hsk {

// Fixed-length word over GF(2). Bit i (LSB = coordinate v_1) holds coordinate i+1.
struct BitVector {
    int length = 1;
    std::uint64_t bits = 0;

    BitVector() = default;
    BitVector(int len, std::uint64_t b) : length(len), bits(b) {
        if (length < 1 || length > kMaxDim)
            throw dimension_error("BitVector length out of range: " + std::to_string(len));
        if (bits > full_mask(length)) throw label_error("BitVector bits exceed length");
    }

    bool get(int i) const { return (bits >> i) & 1; }
    int weight() const { return std::popcount(bits); }

    BitVector operator^(const BitVector& o) const {
        if (length != o.length) throw dimension_error("BitVector length mismatch");
        return {length, bits ^ o.bits};
    }
    bool operator==(const BitVector&) const = default;
};

// Row-major bit matrix over GF(2); each row is one BitVector of `cols` bits.
struct Gf2Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<BitVector> row_words;

    Gf2Matrix() = default;
    Gf2Matrix(int r, int c) : rows(r), cols(c), row_words(static_cast<std::size_t>(r), BitVector(c, 0)) {
        if (r < 1 || c < 1 || c > kMaxDim) throw dimension_error("bad matrix shape");
    }

    bool get(int r, int c) const { return row_words[static_cast<std::size_t>(r)].get(c); }
    void set(int r, int c, bool v) {
        auto& w = row_words[static_cast<std::size_t>(r)].bits;
        if (v)
            w |= std::uint64_t{1} << c;
        else
            w &= ~(std::uint64_t{1} << c);
    }
    std::uint64_t column(int c) const {
        std::uint64_t col = 0;
        for (int r = 0; r < rows; ++r)
            if (get(r, c)) col |= std::uint64_t{1} << r;
        return col;
    }
};

// Binary linear code: all codewords plus the parity-check matrix they satisfy.
struct LinearCode {
    int n = 1;
    int dim = 0;
    std::vector<vertex> codewords;  // sorted ascending
    Gf2Matrix check;
};

// Parity-check matrix of the binary Hamming code of length 2^m - 1:
// column j (1-indexed) is the m-bit binary representation of j, LSB in row 0.
inline Gf2Matrix hamming_parity_check(int m) {
    if (m < 2 || m > 5) throw dimension_error("hamming_parity_check needs 2 <= m <= 5");
    const int n = (1 << m) - 1;
    Gf2Matrix h(m, n);
    for (int j = 1; j <= n; ++j)
        for (int r = 0; r < m; ++r)
            if ((j >> r) & 1) h.set(r, j - 1, true);
    return h;
}

// H x over GF(2); result bit r is the parity of row r AND x.
inline BitVector syndrome(const Gf2Matrix& h, const BitVector& x) {
    if (x.length != h.cols) throw dimension_error("syndrome: vector length != matrix cols");
    std::uint64_t s = 0;
    for (int r = 0; r < h.rows; ++r)
        if (std::popcount(h.row_words[static_cast<std::size_t>(r)].bits & x.bits) & 1)
            s |= std::uint64_t{1} << r;
    return {h.rows, s};
}

inline std::uint64_t syndrome_bits(const Gf2Matrix& h, vertex x) {
    return syndrome(h, BitVector(h.cols, x)).bits;
}

// Null space of H, enumerated from a basis of the free columns.
inline LinearCode kernel(const Gf2Matrix& h) {
    if (h.cols > 31) throw scale_error("kernel: cols > 31 not supported");
    // Row-reduce a working copy; record the pivot column of each surviving row.
    std::vector<std::uint64_t> rows;
    rows.reserve(static_cast<std::size_t>(h.rows));
    for (const auto& rw : h.row_words) rows.push_back(rw.bits);

    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int c = 0; c < h.cols && rank < rows.size(); ++c) {
        std::size_t pr = rank;
        while (pr < rows.size() && !((rows[pr] >> c) & 1)) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[rank], rows[pr]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && ((rows[r] >> c) & 1)) rows[r] ^= rows[rank];
        pivot_col.push_back(c);
        ++rank;
    }
    rows.resize(rank);

    std::vector<int> free_cols;
    for (int c = 0; c < h.cols; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end())
            free_cols.push_back(c);

    // Basis vector for free column f: x_f = 1 and x_{pivot r} = rref[r][f].
    std::vector<vertex> basis;
    basis.reserve(free_cols.size());
    for (int f : free_cols) {
        vertex b = vertex{1} << f;
        for (std::size_t r = 0; r < rank; ++r)
            if ((rows[r] >> f) & 1) b |= vertex{1} << pivot_col[r];
        basis.push_back(b);
    }

    LinearCode code;
    code.n = h.cols;
    code.dim = static_cast<int>(basis.size());
    code.check = h;
    code.codewords.reserve(std::size_t{1} << code.dim);
    for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << code.dim); ++sel) {
        vertex w = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if ((sel >> i) & 1) w ^= basis[i];
        code.codewords.push_back(w);
    }
    std::sort(code.codewords.begin(), code.codewords.end());
    return code;
}

// Length-doubling block matrix: top rows [Hp | Hp | 0-column], bottom row
// [0^n | 1^n | 1]; its kernel is a perfect code of twice-plus-one the length.
inline Gf2Matrix lift_check_matrix(const Gf2Matrix& hp) {
    const int m = hp.rows;
    const int n = hp.cols;
    if (n != (1 << m) - 1) throw dimension_error("lift_check_matrix: Hp must be m x (2^m - 1)");
    Gf2Matrix h(m + 1, 2 * n + 1);
    for (int r = 0; r < m; ++r) {
        const std::uint64_t row = hp.row_words[static_cast<std::size_t>(r)].bits;
        h.row_words[static_cast<std::size_t>(r)] = BitVector(2 * n + 1, row | (row << n));
    }
    const std::uint64_t ones_n = full_mask(n);
    h.row_words[static_cast<std::size_t>(m)] =
        BitVector(2 * n + 1, (ones_n << n) | (std::uint64_t{1} << (2 * n)));
    return h;
}

// { s XOR x : s in S }; an automorphism image, so |output| = |S|.
inline std::vector<vertex> xor_translate(std::span<const vertex> s, vertex x, int n) {
    check_label(x, n);
    std::vector<vertex> out;
    out.reserve(s.size());
    for (vertex v : s) {
        check_label(v, n);
        out.push_back(v ^ x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hsk
