#pragma once

#include <string>
#include <vector>

#include "wceg/graph.hpp"
#include "wceg/oracle.hpp"
#include "wceg/solver.hpp"

namespace wceg {

enum class AugmentMode { Hops, Transfers };

// A graph extended with a counting colour k, plus the bookkeeping needed to
// interpret results in terms of the original vertices and edges.
struct AugmentResult {
    ColouredGraph graph;
    // original vertex -> augmented vertices whose Pareto sets form its merged set
    std::vector<std::vector<VertexId>> vertex_groups;
    // original vertex -> augmented vertex to start a solve from
    std::vector<VertexId> source_map;
    // augmented edge -> original edge, or -1 for counter edges
    std::vector<EdgeId> edge_origin;
};

namespace detail {

// Hop counting: each edge becomes (original colour/weight) then a unit edge
// of colour k through a fresh intermediate vertex, so the solver accumulates
// one whole unit in colour k per original edge traversed.
inline AugmentResult augment_hops(const ColouredGraph& g) {
    const VertexId n = g.vertex_count();
    const std::int64_t unit = pow10_units(g.scale());
    GraphBuilder b(n + static_cast<VertexId>(g.edge_count()), g.scale());
    for (const std::string& name : g.colour_names()) b.add_colour(name);
    ColourId counter = b.add_colour("hops");

    AugmentResult out;
    for (const Edge& e : g.edges()) {
        VertexId mid = n + e.id;
        b.add_edge(e.from, mid, e.colour, e.weight);
        out.edge_origin.push_back(e.id);
        b.add_edge(mid, e.to, counter, unit);
        out.edge_origin.push_back(-1);
    }
    out.graph = std::move(b).build();
    out.vertex_groups.resize(static_cast<std::size_t>(n));
    out.source_map.resize(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) {
        out.vertex_groups[static_cast<std::size_t>(v)] = {v};
        out.source_map[static_cast<std::size_t>(v)] = v;
    }
    return out;
}

// Transfer counting by vertex expansion: per vertex one sub-vertex for each
// incident colour; moving between different-colour sub-vertices costs one
// unit of colour k. Hub vertices carry the boarding copies so the first edge
// of a path is free of any transfer, and arrival sub-vertices terminate paths
// at no extra cost. Pareto sets of an original vertex are read as the merged
// sets of its group (hub + arrival sub-vertices).
inline AugmentResult augment_transfers(const ColouredGraph& g) {
    const VertexId n = g.vertex_count();
    const ColourId k = g.colour_count();
    const std::int64_t unit = pow10_units(g.scale());

    // sub-vertex ids, allocated densely for incident (vertex, colour) pairs
    std::vector<std::vector<char>> incident(static_cast<std::size_t>(n),
                                            std::vector<char>(static_cast<std::size_t>(k), 0));
    std::vector<std::vector<char>> out_colour(static_cast<std::size_t>(n),
                                              std::vector<char>(static_cast<std::size_t>(k), 0));
    std::vector<std::vector<char>> in_colour(static_cast<std::size_t>(n),
                                             std::vector<char>(static_cast<std::size_t>(k), 0));
    for (const Edge& e : g.edges()) {
        out_colour[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.colour)] = 1;
        in_colour[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.colour)] = 1;
        incident[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.colour)] = 1;
        incident[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.colour)] = 1;
    }
    std::vector<std::vector<VertexId>> sub(static_cast<std::size_t>(n),
                                           std::vector<VertexId>(static_cast<std::size_t>(k), -1));
    VertexId next = n;  // hubs keep the original ids
    for (VertexId v = 0; v < n; ++v)
        for (ColourId c = 0; c < k; ++c)
            if (incident[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)])
                sub[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] = next++;

    GraphBuilder b(next, g.scale());
    for (const std::string& name : g.colour_names()) b.add_colour(name);
    ColourId counter = b.add_colour("transfers");

    AugmentResult out;
    for (const Edge& e : g.edges()) {
        VertexId from_sub = sub[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.colour)];
        VertexId to_sub = sub[static_cast<std::size_t>(e.to)][static_cast<std::size_t>(e.colour)];
        b.add_edge(from_sub, to_sub, e.colour, e.weight);  // continue in the same colour
        out.edge_origin.push_back(e.id);
        b.add_edge(e.from, to_sub, e.colour, e.weight);  // board at the hub, transfer-free
        out.edge_origin.push_back(e.id);
    }
    for (VertexId v = 0; v < n; ++v)
        for (ColourId cin = 0; cin < k; ++cin) {
            if (!in_colour[static_cast<std::size_t>(v)][static_cast<std::size_t>(cin)]) continue;
            for (ColourId cout = 0; cout < k; ++cout) {
                if (cout == cin ||
                    !out_colour[static_cast<std::size_t>(v)][static_cast<std::size_t>(cout)])
                    continue;
                b.add_edge(sub[static_cast<std::size_t>(v)][static_cast<std::size_t>(cin)],
                           sub[static_cast<std::size_t>(v)][static_cast<std::size_t>(cout)],
                           counter, unit);
                out.edge_origin.push_back(-1);
            }
        }

    out.graph = std::move(b).build();
    out.vertex_groups.resize(static_cast<std::size_t>(n));
    out.source_map.resize(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) {
        out.source_map[static_cast<std::size_t>(v)] = v;
        auto& group = out.vertex_groups[static_cast<std::size_t>(v)];
        group.push_back(v);
        for (ColourId c = 0; c < k; ++c)
            if (sub[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] >= 0)
                group.push_back(sub[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)]);
    }
    return out;
}

}  // namespace detail

inline AugmentResult augment_with_count_colour(const ColouredGraph& g, AugmentMode mode) {
    return mode == AugmentMode::Hops ? detail::augment_hops(g) : detail::augment_transfers(g);
}

struct AugmentedSolve {
    std::vector<std::vector<PathEntry>> sets;  // per original destination
    std::vector<std::string> colour_names;     // original colours plus the counter
    SolveStats stats;
};

// Solve the augmented graph and read the answer back in original terms:
// per original destination, the Pareto merge over its vertex group, paths
// translated to original edge ids (counter edges dropped). Note that after
// transfer expansion a path may pass one original vertex once per colour.
inline AugmentedSolve solve_augmented(const ColouredGraph& g, AugmentMode mode, VertexId source,
                                      const SolveOptions& opts = {}) {
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("source vertex out of range");
    AugmentResult aug = augment_with_count_colour(g, mode);
    SolveOptions inner = opts;
    inner.target.reset();
    SolveResult res = solve(aug.graph, aug.source_map[static_cast<std::size_t>(source)], inner);

    AugmentedSolve out;
    out.colour_names = aug.graph.colour_names();
    out.stats = res.stats();
    out.sets.resize(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (VertexId member : aug.vertex_groups[static_cast<std::size_t>(v)]) {
            for (LabelId id : res.pareto(member)) {
                PathEntry entry;
                entry.weight = res.weight(id);
                for (EdgeId eid : res.reconstruct(id)) {
                    EdgeId orig = aug.edge_origin[static_cast<std::size_t>(eid)];
                    if (orig >= 0) entry.edges.push_back(orig);
                }
                front_insert(out.sets[static_cast<std::size_t>(v)], std::move(entry),
                             opts.keep_ties);
            }
        }
    }
    return out;
}

}  // namespace wceg
