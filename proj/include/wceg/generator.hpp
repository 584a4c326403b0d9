#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "wceg/graph.hpp"
#include "wceg/prng.hpp"

namespace wceg {

struct WeightRange {
    double lo = 1.0;
    double hi = 100.0;
};

namespace detail {

inline void check_weight_range(const WeightRange& r) {
    if (!(r.lo > 0.0) || !(r.hi > r.lo))
        throw std::invalid_argument("weight range requires 0 < lo < hi");
}

// Uniform draw on [lo, hi), quantized to the fixed-point scale at generation
// time so the solve stays exact. Floor of one unit keeps weights positive.
inline std::int64_t draw_weight(SplitMix64& rng, const WeightRange& r, int scale) {
    double value = r.lo + rng.next_unit() * (r.hi - r.lo);
    std::int64_t units = std::llround(value * static_cast<double>(pow10_units(scale)));
    return std::max<std::int64_t>(units, 1);
}

inline void add_generated_colours(GraphBuilder& b, int k) {
    for (int c = 0; c < k; ++c) b.add_colour("c" + std::to_string(c));
}

}  // namespace detail

// Complete multigraph: one edge per ordered vertex pair per colour, kn(n-1)
// edges total. Edge order is (from, to, colour), so a given
// (n, k, seed, range, scale) reproduces the identical graph byte for byte.
inline ColouredGraph complete_multigraph(int n, int k, std::uint64_t seed,
                                         WeightRange range = {}, int scale = 3) {
    if (n < 2 || k < 1) throw std::invalid_argument("complete multigraph requires n >= 2, k >= 1");
    detail::check_weight_range(range);
    GraphBuilder b(static_cast<VertexId>(n), scale);
    detail::add_generated_colours(b, k);
    SplitMix64 rng(seed);
    for (int from = 0; from < n; ++from)
        for (int to = 0; to < n; ++to) {
            if (to == from) continue;
            for (int c = 0; c < k; ++c)
                b.add_edge(static_cast<VertexId>(from), static_cast<VertexId>(to),
                           static_cast<ColourId>(c), detail::draw_weight(rng, range, scale));
        }
    return std::move(b).build();
}

// m edges with endpoints, colour, and weight drawn uniformly; self-loops are
// rejected and the endpoint pair redrawn.
inline ColouredGraph random_sparse(int n, int k, int m, std::uint64_t seed,
                                   WeightRange range = {}, int scale = 3) {
    if (n < 1 || k < 1 || m < 0) throw std::invalid_argument("invalid sparse graph sizes");
    if (m > 0 && n < 2) throw std::invalid_argument("edges need at least two vertices");
    detail::check_weight_range(range);
    GraphBuilder b(static_cast<VertexId>(n), scale);
    detail::add_generated_colours(b, k);
    SplitMix64 rng(seed);
    for (int i = 0; i < m; ++i) {
        std::uint64_t from, to;
        do {
            from = rng.next_below(static_cast<std::uint64_t>(n));
            to = rng.next_below(static_cast<std::uint64_t>(n));
        } while (from == to);
        ColourId colour = static_cast<ColourId>(rng.next_below(static_cast<std::uint64_t>(k)));
        b.add_edge(static_cast<VertexId>(from), static_cast<VertexId>(to), colour,
                   detail::draw_weight(rng, range, scale));
    }
    return std::move(b).build();
}

}  // namespace wceg
