#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wceg/bigint.hpp"
#include "wceg/graph.hpp"
#include "wceg/solver.hpp"
#include "wceg/weight_vector.hpp"

namespace wceg {

// Exhaustive enumeration for small graphs. Deliberately free of pruning or
// cleverness; the solver is checked against this, never the reverse.

struct PathEntry {
    std::vector<EdgeId> edges;
    WeightVector weight;
};

constexpr std::uint64_t kDefaultEnumerationCeiling = 10'000'000;

// Maximum number of u->v paths in a complete multigraph with n vertices and
// k colours: sum over j intermediates of C(n-2,j) * k^(j+1) * j!.
inline BigUint complete_multigraph_path_count(int n, int k) {
    if (n < 2 || k < 1) throw std::invalid_argument("path count requires n >= 2, k >= 1");
    BigUint term(static_cast<std::uint64_t>(k));  // j = 0: the direct parallel edges
    BigUint total = term;
    for (int j = 1; j <= n - 2; ++j) {
        // C(n-2,j) * j! is the falling factorial (n-2)(n-3)...(n-1-j)
        term *= static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n - 1 - j);
        total += term;
    }
    return total;
}

namespace detail {

inline void check_enumeration_guard(const ColouredGraph& g, std::uint64_t ceiling,
                                    int destinations) {
    if (ceiling == 0 || g.vertex_count() < 2) return;
    BigUint bound = complete_multigraph_path_count(g.vertex_count(),
                                                   std::max<ColourId>(g.colour_count(), 1));
    bound *= static_cast<std::uint64_t>(destinations);
    if (bound > BigUint(ceiling))
        throw resource_limit_error("enumeration refused: worst-case path bound " +
                                   bound.to_string() + " exceeds ceiling " +
                                   std::to_string(ceiling));
}

template <typename Visit>
void dfs_paths(const ColouredGraph& g, VertexId cur, std::vector<EdgeId>& edges,
               WeightVector& weight, std::vector<char>& on_path, Visit&& visit) {
    visit(cur, edges, weight);
    for (EdgeId eid : g.out_edges(cur)) {
        const Edge& e = g.edge(eid);
        if (on_path[static_cast<std::size_t>(e.to)]) continue;
        on_path[static_cast<std::size_t>(e.to)] = 1;
        edges.push_back(eid);
        std::size_t c = static_cast<std::size_t>(e.colour);
        weight[c] = checked_add(weight[c], e.weight);
        dfs_paths(g, e.to, edges, weight, on_path, visit);
        weight[c] -= e.weight;
        edges.pop_back();
        on_path[static_cast<std::size_t>(e.to)] = 0;
    }
}

}  // namespace detail

// Visits every simple u->v path, depth-first with edges in id order. A
// simple u->v path never has v in its interior, so the walk stops at v.
template <typename Visit>
void for_each_simple_path(const ColouredGraph& g, VertexId u, VertexId v, std::uint64_t ceiling,
                          Visit&& visit) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("enumeration endpoint out of range");
    WeightVector weight(static_cast<std::size_t>(g.colour_count()));
    std::vector<EdgeId> edges;
    if (u == v) {
        visit(edges, weight);
        return;
    }
    detail::check_enumeration_guard(g, ceiling, 1);

    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    on_path[static_cast<std::size_t>(u)] = 1;
    auto walk = [&](auto&& self, VertexId cur) -> void {
        if (cur == v) {
            visit(edges, weight);
            return;
        }
        for (EdgeId eid : g.out_edges(cur)) {
            const Edge& e = g.edge(eid);
            if (on_path[static_cast<std::size_t>(e.to)]) continue;
            on_path[static_cast<std::size_t>(e.to)] = 1;
            edges.push_back(eid);
            std::size_t c = static_cast<std::size_t>(e.colour);
            weight[c] = checked_add(weight[c], e.weight);
            self(self, e.to);
            weight[c] -= e.weight;
            edges.pop_back();
            on_path[static_cast<std::size_t>(e.to)] = 0;
        }
    };
    walk(walk, u);
}

// All simple u->v paths with exact weight vectors, materialized.
inline std::vector<PathEntry> enumerate_simple_paths(
    const ColouredGraph& g, VertexId u, VertexId v,
    std::uint64_t ceiling = kDefaultEnumerationCeiling) {
    std::vector<PathEntry> out;
    for_each_simple_path(g, u, v, ceiling,
                         [&](const std::vector<EdgeId>& edges, const WeightVector& weight) {
                             out.push_back(PathEntry{edges, weight});
                         });
    return out;
}

// Entries whose vectors no other distinct vector in the input dominates.
// Literal quadratic application of the definition; input order is kept, and
// under keep_ties=false the first entry per surviving vector wins.
inline std::vector<PathEntry> pareto_filter(const std::vector<PathEntry>& entries,
                                            bool keep_ties = false) {
    std::vector<PathEntry> out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < entries.size() && keep; ++j) {
            if (j == i) continue;
            Dominance d = compare(entries[j].weight, entries[i].weight);
            if (d == Dominance::Less) keep = false;
            if (d == Dominance::Equal && !keep_ties && j < i) keep = false;
        }
        if (keep) out.push_back(entries[i]);
    }
    return out;
}

// Streaming non-dominated front, used where full materialization would not fit.
inline void front_insert(std::vector<PathEntry>& front, PathEntry cand, bool keep_ties) {
    for (const PathEntry& t : front) {
        Dominance d = compare(t.weight, cand.weight);
        if (d == Dominance::Less || (d == Dominance::Equal && !keep_ties)) return;
    }
    std::erase_if(front, [&](const PathEntry& t) {
        return compare(cand.weight, t.weight) == Dominance::Less;
    });
    front.push_back(std::move(cand));
}

struct SourceOracle {
    std::vector<std::vector<PathEntry>> fronts;  // per destination vertex
    std::vector<std::uint64_t> path_counts;      // simple paths source->v enumerated
};

// One exhaustive walk over every simple path from the source, folded into
// per-destination Pareto fronts. Ground truth for solve().
inline SourceOracle all_paths_pareto(const ColouredGraph& g, VertexId source,
                                     bool keep_ties = false,
                                     std::uint64_t ceiling = kDefaultEnumerationCeiling) {
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("source vertex out of range");
    detail::check_enumeration_guard(g, ceiling, std::max<VertexId>(g.vertex_count() - 1, 1));

    SourceOracle oracle;
    oracle.fronts.resize(static_cast<std::size_t>(g.vertex_count()));
    oracle.path_counts.assign(static_cast<std::size_t>(g.vertex_count()), 0);

    std::vector<EdgeId> edges;
    WeightVector weight(static_cast<std::size_t>(g.colour_count()));
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    on_path[static_cast<std::size_t>(source)] = 1;
    detail::dfs_paths(g, source, edges, weight, on_path,
                      [&](VertexId v, const std::vector<EdgeId>& path, const WeightVector& w) {
                          oracle.path_counts[static_cast<std::size_t>(v)]++;
                          front_insert(oracle.fronts[static_cast<std::size_t>(v)],
                                       PathEntry{path, w}, keep_ties);
                      });
    return oracle;
}

}  // namespace wceg
