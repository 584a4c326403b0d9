#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "wceg/graph.hpp"

namespace wceg {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// wceg v1 text format, canonical for golden tests:
//   wceg v1 n=<n> k=<k> scale=<s>
//   colour <id> <name>            (k lines)
//   edge <from> <to> <colour> <weight-decimal>
inline void write_graph(std::ostream& out, const ColouredGraph& g) {
    out << "wceg v1 n=" << g.vertex_count() << " k=" << g.colour_count()
        << " scale=" << g.scale() << "\n";
    for (ColourId c = 0; c < g.colour_count(); ++c)
        out << "colour " << c << " " << g.colour_name(c) << "\n";
    for (const Edge& e : g.edges())
        out << "edge " << e.from << " " << e.to << " " << e.colour << " "
            << format_decimal(e.weight, g.scale()) << "\n";
}

inline std::string to_text(const ColouredGraph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

namespace detail {

inline long parse_header_field(const std::string& token, const char* key, long lo, long hi) {
    std::string prefix = std::string(key) + "=";
    if (token.rfind(prefix, 0) != 0)
        throw parse_error("expected '" + prefix + "<value>' in wceg header, got '" + token + "'");
    std::size_t used = 0;
    long value = 0;
    try {
        value = std::stol(token.substr(prefix.size()), &used);
    } catch (const std::exception&) {
        throw parse_error("bad numeric value in header token '" + token + "'");
    }
    if (used != token.size() - prefix.size() || value < lo || value > hi)
        throw parse_error("header value out of range in '" + token + "'");
    return value;
}

}  // namespace detail

inline ColouredGraph read_graph_text(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw parse_error("empty graph file");
    std::istringstream header(line);
    std::string magic, version, ntok, ktok, stok;
    header >> magic >> version >> ntok >> ktok >> stok;
    if (magic != "wceg" || version != "v1")
        throw parse_error("not a wceg v1 file (header '" + line + "')");
    long n = detail::parse_header_field(ntok, "n", 0, 1L << 30);
    long k = detail::parse_header_field(ktok, "k", 0, 1L << 20);
    long scale = detail::parse_header_field(stok, "scale", 0, kMaxScale);

    GraphBuilder builder(static_cast<VertexId>(n), static_cast<int>(scale));
    long colours_seen = 0;
    long line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "colour") {
            long id;
            std::string name;
            if (!(ls >> id >> name) || id != colours_seen)
                throw parse_error("line " + std::to_string(line_no) +
                                  ": colour lines must be dense and in order");
            builder.add_colour(name);
            ++colours_seen;
        } else if (kind == "edge") {
            long from, to, colour;
            std::string weight;
            if (!(ls >> from >> to >> colour >> weight))
                throw parse_error("line " + std::to_string(line_no) + ": malformed edge line");
            try {
                builder.add_edge_decimal(static_cast<VertexId>(from), static_cast<VertexId>(to),
                                         static_cast<ColourId>(colour), weight);
            } catch (const std::invalid_argument& e) {
                throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
            }
        } else {
            throw parse_error("line " + std::to_string(line_no) + ": unknown record '" + kind + "'");
        }
        std::string rest;
        if (ls >> rest)
            throw parse_error("line " + std::to_string(line_no) + ": trailing tokens");
    }
    if (colours_seen != k)
        throw parse_error("header declares k=" + std::to_string(k) + " but found " +
                          std::to_string(colours_seen) + " colour lines");
    return std::move(builder).build();
}

// JSON mirror of the text schema. Weights are decimal strings so values stay
// exact regardless of scale.
inline nlohmann::json to_json(const ColouredGraph& g) {
    nlohmann::json j;
    j["format"] = "wceg";
    j["version"] = 1;
    j["n"] = g.vertex_count();
    j["k"] = g.colour_count();
    j["scale"] = g.scale();
    j["colours"] = nlohmann::json::array();
    for (ColourId c = 0; c < g.colour_count(); ++c)
        j["colours"].push_back({{"id", c}, {"name", g.colour_name(c)}});
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges())
        j["edges"].push_back({{"from", e.from},
                              {"to", e.to},
                              {"colour", e.colour},
                              {"weight", format_decimal(e.weight, g.scale())}});
    return j;
}

inline ColouredGraph from_json(const nlohmann::json& j) {
    try {
        if (j.at("format") != "wceg" || j.at("version") != 1)
            throw parse_error("not a wceg v1 JSON document");
        GraphBuilder builder(j.at("n").get<VertexId>(), j.at("scale").get<int>());
        for (const auto& c : j.at("colours")) {
            if (c.at("id").get<ColourId>() != builder.colour_count_so_far())
                throw parse_error("colour ids must be dense and in order");
            builder.add_colour(c.at("name").get<std::string>());
        }
        for (const auto& e : j.at("edges")) {
            const auto& w = e.at("weight");
            std::string weight = w.is_string() ? w.get<std::string>() : w.dump();
            builder.add_edge_decimal(e.at("from").get<VertexId>(), e.at("to").get<VertexId>(),
                                     e.at("colour").get<ColourId>(), weight);
        }
        if (builder.colour_count_so_far() != j.at("k").get<ColourId>())
            throw parse_error("k does not match the number of colour entries");
        return std::move(builder).build();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad wceg JSON: ") + e.what());
    }
}

// Reads either format; JSON is detected by a leading '{'.
inline ColouredGraph read_graph(std::istream& in) {
    int first = in.peek();
    while (first == ' ' || first == '\n' || first == '\t' || first == '\r') {
        in.get();
        first = in.peek();
    }
    if (first == '{') {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw parse_error(std::string("bad JSON: ") + e.what());
        }
        return from_json(j);
    }
    return read_graph_text(in);
}

inline ColouredGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open graph file '" + path + "'");
    return read_graph(in);
}

inline void save_graph_file(const std::string& path, const ColouredGraph& g) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write graph file '" + path + "'");
    write_graph(out, g);
}

}  // namespace wceg
