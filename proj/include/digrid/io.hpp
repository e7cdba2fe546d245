#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "digrid/grid.hpp"

namespace digrid {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string bits_string(const Orientation& o) {
    std::string s;
    s.reserve(o.bits.size());
    for (bool b : o.bits) s.push_back(b ? '1' : '0');
    return s;
}

// Orientation document. Full form lists every arc tail-to-head in canonical
// edge order; compact form packs the directions into a 0/1 string over the
// same order.
inline nlohmann::json serialize_orientation(const Orientation& o, bool compact = false) {
    validate(o);
    nlohmann::json j;
    j["m"] = o.dims.m;
    j["n"] = o.dims.n;
    if (compact) {
        j["bits"] = bits_string(o);
        return j;
    }
    nlohmann::json arcs = nlohmann::json::array();
    for (const GridEdge& e : grid_edge_list(o.dims)) {
        const auto [tail, head] = arc_of(o, e);
        arcs.push_back({{tail.row, tail.col}, {head.row, head.col}});
    }
    j["arcs"] = std::move(arcs);
    return j;
}

inline Orientation parse_orientation(const nlohmann::json& doc) {
    if (!doc.is_object()) throw parse_error("orientation document must be a JSON object");
    if (!doc.contains("m") || !doc.contains("n") || !doc["m"].is_number_integer() ||
        !doc["n"].is_number_integer())
        throw parse_error("orientation document needs integer fields \"m\" and \"n\"");
    const GridDims dims{doc["m"].get<int>(), doc["n"].get<int>()};
    if (!dims.valid()) throw parse_error("orientation document has invalid dimensions");
    const std::size_t edge_count = static_cast<std::size_t>(dims.edge_count());

    if (doc.contains("bits")) {
        if (!doc["bits"].is_string()) throw parse_error("\"bits\" must be a string");
        const std::string s = doc["bits"].get<std::string>();
        if (s.size() != edge_count)
            throw parse_error("\"bits\" has length " + std::to_string(s.size()) + ", expected " +
                              std::to_string(edge_count));
        Orientation o{dims, std::vector<bool>(edge_count)};
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] != '0' && s[i] != '1')
                throw parse_error("\"bits\" may contain only 0 and 1");
            o.bits[i] = s[i] == '1';
        }
        return o;
    }

    if (!doc.contains("arcs") || !doc["arcs"].is_array())
        throw parse_error("orientation document needs an \"arcs\" array or a \"bits\" string");
    Orientation o{dims, std::vector<bool>(edge_count)};
    std::vector<bool> seen(edge_count, false);
    for (const auto& entry : doc["arcs"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() ||
            !entry[1].is_array() || entry[0].size() != 2 || entry[1].size() != 2)
            throw parse_error("each arc must be [[r,c],[r',c']], got " + entry.dump());
        const Vertex tail{entry[0][0].get<int>(), entry[0][1].get<int>()};
        const Vertex head{entry[1][0].get<int>(), entry[1][1].get<int>()};
        if (!contains(dims, tail) || !contains(dims, head))
            throw parse_error("arc coordinate out of range: " + to_string(tail) + "->" +
                              to_string(head));
        long long id = 0;
        try {
            id = edge_id_between(dims, tail, head);
        } catch (const std::invalid_argument&) {
            throw parse_error("arc joins non-adjacent vertices: " + to_string(tail) + "->" +
                              to_string(head));
        }
        if (seen[static_cast<std::size_t>(id)])
            throw parse_error("duplicate edge: " + to_string(tail) + "->" + to_string(head));
        seen[static_cast<std::size_t>(id)] = true;
        const GridEdge e = grid_edge_at(dims, id);
        o.bits[static_cast<std::size_t>(id)] = tail == e.a;
    }
    for (std::size_t i = 0; i < edge_count; ++i) {
        if (!seen[i]) {
            const GridEdge e = grid_edge_at(dims, static_cast<long long>(i));
            throw parse_error("missing edge: " + to_string(e.a) + "-" + to_string(e.b));
        }
    }
    return o;
}

inline Orientation read_orientation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(path + ": " + e.what());
    }
    return parse_orientation(doc);
}

inline void write_orientation_file(const std::string& path, const Orientation& o,
                                   bool compact = false) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << serialize_orientation(o, compact).dump(2) << "\n";
    if (!out) throw io_error("failed writing " + path);
}

// Graphviz export: node ids "r_c", one edge line per arc, nodes pinned so
// row 1 renders on top (feed through `neato -n`).
inline std::string to_dot(const Orientation& o) {
    validate(o);
    std::ostringstream out;
    out << "digraph \"G_" << o.dims.m << "x" << o.dims.n << "\" {\n";
    out << "  node [shape=circle, width=0.25, fixedsize=true];\n";
    for (int r = 1; r <= o.dims.m; ++r)
        for (int c = 1; c <= o.dims.n; ++c)
            out << "  \"" << r << "_" << c << "\" [pos=\"" << c - 1 << "," << o.dims.m - r
                << "!\"];\n";
    for (const GridEdge& e : grid_edge_list(o.dims)) {
        const auto [tail, head] = arc_of(o, e);
        out << "  \"" << tail.row << "_" << tail.col << "\" -> \"" << head.row << "_" << head.col
            << "\";\n";
    }
    out << "}\n";
    return out.str();
}

inline void write_dot_file(const std::string& path, const Orientation& o) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << to_dot(o);
    if (!out) throw io_error("failed writing " + path);
}

}  // namespace digrid
