#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "wceg/graph.hpp"
#include "wceg/prng.hpp"
#include "wceg/weight_vector.hpp"

namespace wceg::testsupport {

// Order-free view of a collection of weight vectors, for set comparisons.
inline std::vector<std::vector<std::int64_t>> as_sorted_set(
    const std::vector<WeightVector>& vs) {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(vs.size());
    for (const WeightVector& v : vs) {
        auto span = v.components();
        out.emplace_back(span.begin(), span.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline WeightVector random_vector(SplitMix64& rng, std::size_t k, std::int64_t max_units = 50) {
    WeightVector v(k);
    for (std::size_t i = 0; i < k; ++i)
        v[i] = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(max_units + 1)));
    return v;
}

// Classic scalar Dijkstra over edge weights, colours ignored. Reference for
// the k=1 collapse.
inline std::vector<std::optional<std::int64_t>> scalar_dijkstra(const ColouredGraph& g,
                                                                VertexId source) {
    std::vector<std::optional<std::int64_t>> dist(static_cast<std::size_t>(g.vertex_count()));
    using Item = std::pair<std::int64_t, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[static_cast<std::size_t>(source)] = 0;
    heap.push({0, source});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d > *dist[static_cast<std::size_t>(v)]) continue;
        for (EdgeId eid : g.out_edges(v)) {
            const Edge& e = g.edge(eid);
            std::int64_t nd = d + e.weight;
            auto& slot = dist[static_cast<std::size_t>(e.to)];
            if (!slot || nd < *slot) {
                slot = nd;
                heap.push({nd, e.to});
            }
        }
    }
    return dist;
}

}  // namespace wceg::testsupport
