#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wceg/fixed_decimal.hpp"
#include "wceg/weight_vector.hpp"

namespace wceg {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using ColourId = std::int32_t;

struct Edge {
    VertexId from = 0;
    VertexId to = 0;
    ColourId colour = 0;
    std::int64_t weight = 0;  // units of 10^-scale, strictly positive
    EdgeId id = 0;
};

// Directed multigraph whose edges each carry one colour and one positive
// weight. Immutable once built; safe to share across concurrent solver runs.
class ColouredGraph {
public:
    ColouredGraph() = default;  // empty graph; populate through GraphBuilder

    VertexId vertex_count() const { return n_; }
    ColourId colour_count() const { return static_cast<ColourId>(colour_names_.size()); }
    int scale() const { return scale_; }

    const std::vector<std::string>& colour_names() const { return colour_names_; }
    const std::string& colour_name(ColourId c) const { return colour_names_.at(static_cast<std::size_t>(c)); }

    std::size_t edge_count() const { return edges_.size(); }
    const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Outgoing edge ids of v, ordered by edge id.
    std::span<const EdgeId> out_edges(VertexId v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
        return {adj_.data() + adj_offsets_[static_cast<std::size_t>(v)],
                adj_.data() + adj_offsets_[static_cast<std::size_t>(v) + 1]};
    }

    ColourId colour_by_name(const std::string& name) const {
        for (std::size_t i = 0; i < colour_names_.size(); ++i)
            if (colour_names_[i] == name) return static_cast<ColourId>(i);
        throw std::invalid_argument("unknown colour '" + name + "'");
    }

    WeightVector edge_weight_vector(EdgeId e) const {
        WeightVector w(static_cast<std::size_t>(colour_count()));
        const Edge& ed = edge(e);
        w[static_cast<std::size_t>(ed.colour)] = ed.weight;
        return w;
    }

    bool operator==(const ColouredGraph& o) const {
        if (n_ != o.n_ || scale_ != o.scale_ || colour_names_ != o.colour_names_ ||
            edges_.size() != o.edges_.size())
            return false;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Edge &a = edges_[i], &b = o.edges_[i];
            if (a.from != b.from || a.to != b.to || a.colour != b.colour || a.weight != b.weight)
                return false;
        }
        return true;
    }

private:
    friend class GraphBuilder;

    VertexId n_ = 0;
    int scale_ = 3;
    std::vector<std::string> colour_names_;
    std::vector<Edge> edges_;             // indexed by edge id
    std::vector<std::size_t> adj_offsets_;  // CSR offsets, size n+1
    std::vector<EdgeId> adj_;             // concatenated out-edge ids
};

class GraphBuilder {
public:
    explicit GraphBuilder(VertexId vertex_count, int scale = 3)
        : n_(vertex_count), scale_(scale) {
        if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
        if (scale < 0 || scale > kMaxScale) throw std::invalid_argument("scale out of range");
    }

    ColourId add_colour(std::string name) {
        if (name.empty() || name.find_first_of(" \t\n") != std::string::npos)
            throw std::invalid_argument("colour names must be non-empty single tokens");
        colour_names_.push_back(std::move(name));
        return static_cast<ColourId>(colour_names_.size() - 1);
    }

    EdgeId add_edge(VertexId from, VertexId to, ColourId colour, std::int64_t weight_units) {
        if (from < 0 || from >= n_ || to < 0 || to >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (colour < 0 || colour >= static_cast<ColourId>(colour_names_.size()))
            throw std::invalid_argument("edge colour out of range");
        if (weight_units <= 0)
            throw std::invalid_argument("edge weights must be strictly positive");
        EdgeId id = static_cast<EdgeId>(edges_.size());
        edges_.push_back(Edge{from, to, colour, weight_units, id});
        return id;
    }

    EdgeId add_edge_decimal(VertexId from, VertexId to, ColourId colour, std::string_view weight) {
        return add_edge(from, to, colour, parse_decimal(weight, scale_));
    }

    ColourId colour_count_so_far() const { return static_cast<ColourId>(colour_names_.size()); }
    int scale() const { return scale_; }

    ColouredGraph build() && {
        ColouredGraph g;
        g.n_ = n_;
        g.scale_ = scale_;
        g.colour_names_ = std::move(colour_names_);
        g.edges_ = std::move(edges_);
        g.adj_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (const Edge& e : g.edges_) g.adj_offsets_[static_cast<std::size_t>(e.from) + 1]++;
        for (std::size_t v = 0; v < static_cast<std::size_t>(n_); ++v)
            g.adj_offsets_[v + 1] += g.adj_offsets_[v];
        g.adj_.resize(g.edges_.size());
        std::vector<std::size_t> cursor(g.adj_offsets_.begin(), g.adj_offsets_.end() - 1);
        for (const Edge& e : g.edges_) g.adj_[cursor[static_cast<std::size_t>(e.from)]++] = e.id;
        return g;
    }

private:
    VertexId n_;
    int scale_;
    std::vector<std::string> colour_names_;
    std::vector<Edge> edges_;
};

}  // namespace wceg
