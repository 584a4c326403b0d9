#pragma once

#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "wceg/graph.hpp"
#include "wceg/graph_io.hpp"

namespace wceg {

// One transport mode's raw network: junctions with planar coordinates in
// decimal degrees plus weighted links. Input to junction clustering.
struct Junction {
    std::int64_t id = 0;
    double x = 0;
    double y = 0;
};

struct Link {
    std::int64_t from = 0;
    std::int64_t to = 0;
    double length = 0;  // decimal degrees
    bool directed = false;
};

struct JunctionLayer {
    std::string mode;
    std::vector<Junction> junctions;
    std::vector<Link> links;
};

// layer v1 text format:
//   layer v1 mode=<name>
//   junction <id> <x> <y>
//   link <from> <to> <length> <directed:0|1>
inline void write_layer(std::ostream& out, const JunctionLayer& layer) {
    out << "layer v1 mode=" << layer.mode << "\n";
    char buf[64];
    for (const Junction& j : layer.junctions) {
        std::snprintf(buf, sizeof(buf), "%.6f %.6f", j.x, j.y);
        out << "junction " << j.id << " " << buf << "\n";
    }
    for (const Link& l : layer.links) {
        std::snprintf(buf, sizeof(buf), "%.6f", l.length);
        out << "link " << l.from << " " << l.to << " " << buf << " " << (l.directed ? 1 : 0)
            << "\n";
    }
}

inline JunctionLayer read_layer(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error("empty layer file");
    std::istringstream header(line);
    std::string magic, version, modetok;
    header >> magic >> version >> modetok;
    if (magic != "layer" || version != "v1" || modetok.rfind("mode=", 0) != 0)
        throw parse_error("not a layer v1 file (header '" + line + "')");
    JunctionLayer layer;
    layer.mode = modetok.substr(5);
    if (layer.mode.empty()) throw parse_error("layer mode name is empty");

    std::unordered_map<std::int64_t, std::size_t> seen;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "junction") {
            Junction j;
            if (!(ls >> j.id >> j.x >> j.y))
                throw parse_error("line " + std::to_string(line_no) + ": malformed junction");
            if (!seen.emplace(j.id, layer.junctions.size()).second)
                throw parse_error("line " + std::to_string(line_no) + ": duplicate junction id");
            layer.junctions.push_back(j);
        } else if (kind == "link") {
            Link l;
            int directed = 0;
            if (!(ls >> l.from >> l.to >> l.length >> directed) || (directed != 0 && directed != 1))
                throw parse_error("line " + std::to_string(line_no) + ": malformed link");
            l.directed = directed == 1;
            if (!(l.length > 0))
                throw parse_error("line " + std::to_string(line_no) + ": link length must be > 0");
            if (!seen.count(l.from) || !seen.count(l.to))
                throw parse_error("line " + std::to_string(line_no) +
                                  ": link references unknown junction");
            layer.links.push_back(l);
        } else {
            throw parse_error("line " + std::to_string(line_no) + ": unknown record '" + kind +
                              "'");
        }
    }
    return layer;
}

inline JunctionLayer load_layer_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open layer file '" + path + "'");
    return read_layer(in);
}

// Junction (layer, id) -> cluster vertex. Cluster ids are dense and ordered
// by each cluster's smallest (layer index, junction id) member, so the map is
// independent of junction input order.
class ClusterMap {
public:
    VertexId cluster_count() const { return count_; }

    VertexId cluster(std::size_t layer, std::int64_t junction_id) const {
        if (layer >= by_layer_.size()) throw std::invalid_argument("layer index out of range");
        auto it = by_layer_[layer].find(junction_id);
        if (it == by_layer_[layer].end())
            throw std::invalid_argument("junction " + std::to_string(junction_id) +
                                        " of layer " + std::to_string(layer) +
                                        " is not covered by the cluster map");
        return it->second;
    }

private:
    friend ClusterMap cluster_junctions(const std::vector<JunctionLayer>&, double);
    std::vector<std::unordered_map<std::int64_t, VertexId>> by_layer_;
    VertexId count_ = 0;
};

namespace detail {

struct UnionFind {
    std::vector<std::int32_t> parent;
    explicit UnionFind(std::size_t size) : parent(size) {
        for (std::size_t i = 0; i < size; ++i) parent[i] = static_cast<std::int32_t>(i);
    }
    std::int32_t find(std::int32_t x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

}  // namespace detail

// Single-linkage clustering under Euclidean distance: junctions of any modes
// share a cluster iff a chain of pairwise distances <= the threshold connects
// them. A uniform grid of cell size = threshold keeps the neighbour search
// near-linear on GIS-sized layers.
inline ClusterMap cluster_junctions(const std::vector<JunctionLayer>& layers, double distance) {
    if (layers.empty()) throw std::invalid_argument("clustering needs at least one layer");
    if (!(distance > 0)) throw std::invalid_argument("clustering distance must be positive");

    struct Point {
        double x, y;
        std::size_t layer;
        std::int64_t id;
    };
    std::vector<Point> points;
    for (std::size_t li = 0; li < layers.size(); ++li)
        for (const Junction& j : layers[li].junctions) points.push_back({j.x, j.y, li, j.id});

    detail::UnionFind uf(points.size());
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::int32_t>> grid;
    auto cell_of = [&](const Point& p) {
        return std::pair<std::int64_t, std::int64_t>{
            static_cast<std::int64_t>(std::floor(p.x / distance)),
            static_cast<std::int64_t>(std::floor(p.y / distance))};
    };
    const double d2 = distance * distance;
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto [cx, cy] = cell_of(points[i]);
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = grid.find({cx + dx, cy + dy});
                if (it == grid.end()) continue;
                for (std::int32_t j : it->second) {
                    double ddx = points[i].x - points[static_cast<std::size_t>(j)].x;
                    double ddy = points[i].y - points[static_cast<std::size_t>(j)].y;
                    if (ddx * ddx + ddy * ddy <= d2)
                        uf.unite(static_cast<std::int32_t>(i), j);
                }
            }
        grid[{cx, cy}].push_back(static_cast<std::int32_t>(i));
    }

    // canonical ids: walk junctions sorted by (layer, junction id)
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (points[a].layer != points[b].layer) return points[a].layer < points[b].layer;
        return points[a].id < points[b].id;
    });
    ClusterMap map;
    map.by_layer_.resize(layers.size());
    std::unordered_map<std::int32_t, VertexId> root_to_cluster;
    for (std::size_t i : order) {
        std::int32_t root = uf.find(static_cast<std::int32_t>(i));
        auto [it, inserted] = root_to_cluster.try_emplace(root, map.count_);
        if (inserted) ++map.count_;
        map.by_layer_[points[i].layer][points[i].id] = it->second;
    }
    return map;
}

// Fuse the layers into one coloured graph over the cluster vertices: one
// colour per layer, links become edges (two opposed edges when undirected),
// links collapsing to a single cluster are dropped. Mode changes inside a
// cluster carry no cost; isolated clusters stay as vertices.
inline ColouredGraph assemble(const std::vector<JunctionLayer>& layers, const ClusterMap& map,
                              int scale = 6) {
    for (std::size_t li = 0; li < layers.size(); ++li)
        for (const Junction& j : layers[li].junctions) map.cluster(li, j.id);
    GraphBuilder b(map.cluster_count(), scale);
    const std::int64_t one = pow10_units(scale);
    for (std::size_t li = 0; li < layers.size(); ++li) {
        ColourId colour = b.add_colour(layers[li].mode);
        for (const Link& link : layers[li].links) {
            VertexId a = map.cluster(li, link.from);
            VertexId c = map.cluster(li, link.to);
            if (a == c) continue;  // would be a self-loop
            std::int64_t units =
                std::max<std::int64_t>(std::llround(link.length * static_cast<double>(one)), 1);
            b.add_edge(a, c, colour, units);
            if (!link.directed) b.add_edge(c, a, colour, units);
        }
    }
    return std::move(b).build();
}

}  // namespace wceg
