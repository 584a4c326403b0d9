#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wceg/graph.hpp"
#include "wceg/weight_vector.hpp"

namespace wceg {

// A path under construction: labels share prefixes through parent links.
struct PathLabel {
    VertexId vertex = 0;
    WeightVector weight;
    std::shared_ptr<const PathLabel> parent;  // null for the empty path
    std::optional<EdgeId> via_edge;

    static PathLabel empty_at(VertexId v, ColourId k) {
        return PathLabel{v, WeightVector(static_cast<std::size_t>(k)), nullptr, std::nullopt};
    }
};

inline bool on_path(const PathLabel& label, VertexId v) {
    if (label.vertex == v) return true;
    for (const PathLabel* cur = label.parent.get(); cur; cur = cur->parent.get())
        if (cur->vertex == v) return true;
    return false;
}

inline PathLabel extend(const ColouredGraph& g, std::shared_ptr<const PathLabel> label, EdgeId e) {
    const Edge& edge = g.edge(e);
    if (!label) throw std::invalid_argument("cannot extend a null label");
    if (edge.from != label->vertex)
        throw std::invalid_argument("edge does not start at the label's end vertex");
    if (on_path(*label, edge.to))
        throw std::invalid_argument("extension would revisit a vertex on the path");
    WeightVector w = label->weight;
    w[static_cast<std::size_t>(edge.colour)] =
        checked_add(w[static_cast<std::size_t>(edge.colour)], edge.weight);
    return PathLabel{edge.to, std::move(w), std::move(label), e};
}

inline std::vector<EdgeId> edge_sequence(const PathLabel& label) {
    std::vector<EdgeId> out;
    for (const PathLabel* cur = &label; cur->via_edge; cur = cur->parent.get())
        out.push_back(*cur->via_edge);
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace wceg
