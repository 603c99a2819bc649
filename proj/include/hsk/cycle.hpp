#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "hsk/error.hpp"
#include "hsk/hypercube.hpp"

namespace hsk {

// Closed vertex sequence; the last entry is implicitly adjacent to the first.
struct Cycle {
    std::vector<vertex> verts;

    Cycle() = default;
    explicit Cycle(std::vector<vertex> v) : verts(std::move(v)) {}

    int length() const { return static_cast<int>(verts.size()); }

    bool contains_edge(const Edge& e) const {
        const std::size_t n = verts.size();
        for (std::size_t i = 0; i < n; ++i) {
            const vertex a = verts[i];
            const vertex b = verts[(i + 1) % n];
            if ((a == e.u && b == e.v) || (a == e.v && b == e.u)) return true;
        }
        return false;
    }
};

// Rotate so the minimum label comes first, then orient so the second entry is
// the smaller of the first vertex's two cycle neighbors. Reproducible output.
inline Cycle canonical_form(Cycle c) {
    const std::size_t n = c.verts.size();
    if (n < 3) return c;
    const auto min_it = std::min_element(c.verts.begin(), c.verts.end());
    std::rotate(c.verts.begin(), min_it, c.verts.end());
    if (c.verts.back() < c.verts[1]) {
        std::reverse(c.verts.begin() + 1, c.verts.end());
    }
    return c;
}

// Open the cycle at edge (a,b): the returned path starts at b, ends at a, and
// visits every cycle vertex once, following the cycle's order.
inline std::vector<vertex> open_at(const Cycle& c, vertex a, vertex b) {
    const std::size_t n = c.verts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const vertex x = c.verts[i];
        const vertex y = c.verts[(i + 1) % n];
        if (x == a && y == b) {
            std::vector<vertex> path;
            path.reserve(n);
            for (std::size_t k = 0; k < n; ++k) path.push_back(c.verts[(i + 1 + k) % n]);
            return path;  // b ... a
        }
        if (x == b && y == a) {
            std::vector<vertex> path;
            path.reserve(n);
            for (std::size_t k = 0; k < n; ++k) path.push_back(c.verts[(i + n - k) % n]);
            return path;  // b ... a (reversed orientation)
        }
    }
    throw argument_error("open_at: edge not on cycle");
}

}  // namespace hsk
