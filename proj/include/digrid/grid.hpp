#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "digrid/int128.hpp"

namespace digrid {

// An m-by-n grid of vertices. (1,1) is the top-left corner, row indices
// grow downward, column indices grow to the right.
struct GridDims {
    int m = 0;
    int n = 0;

    long long vertex_count() const { return 1LL * m * n; }
    long long edge_count() const { return 1LL * m * (n - 1) + 1LL * n * (m - 1); }
    bool valid() const { return m >= 1 && n >= 1; }

    friend bool operator==(const GridDims&, const GridDims&) = default;
};

inline void require_valid(GridDims d) {
    if (!d.valid())
        throw std::invalid_argument("grid dimensions must be at least 1x1, got " +
                                    std::to_string(d.m) + "x" + std::to_string(d.n));
}

struct Vertex {
    int row = 0;  // 1..m
    int col = 0;  // 1..n

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

inline std::string to_string(Vertex v) {
    return "(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
}

inline bool contains(GridDims d, Vertex v) {
    return v.row >= 1 && v.row <= d.m && v.col >= 1 && v.col <= d.n;
}

inline long long vertex_index(GridDims d, Vertex v) {
    if (!contains(d, v))
        throw std::out_of_range("vertex " + to_string(v) + " outside " +
                                std::to_string(d.m) + "x" + std::to_string(d.n) + " grid");
    return 1LL * (v.row - 1) * d.n + (v.col - 1);
}

inline Vertex vertex_at(GridDims d, long long index) {
    if (index < 0 || index >= d.vertex_count())
        throw std::out_of_range("vertex index " + std::to_string(index) + " out of range");
    return Vertex{static_cast<int>(index / d.n) + 1, static_cast<int>(index % d.n) + 1};
}

// Canonical edge order: all horizontal edges in row-major order, then all
// vertical edges in row-major order. The horizontal edge (r,c)-(r,c+1) has
// id (r-1)(n-1)+(c-1); the vertical edge (r,c)-(r+1,c) has id
// m(n-1)+(r-1)n+(c-1).
struct GridEdge {
    long long id = 0;
    Vertex a;  // left endpoint (horizontal) or top endpoint (vertical)
    Vertex b;
    bool horizontal = false;

    friend bool operator==(const GridEdge&, const GridEdge&) = default;
};

inline long long horizontal_edge_id(GridDims d, int r, int c) {
    return 1LL * (r - 1) * (d.n - 1) + (c - 1);
}

inline long long vertical_edge_id(GridDims d, int r, int c) {
    return 1LL * d.m * (d.n - 1) + 1LL * (r - 1) * d.n + (c - 1);
}

inline GridEdge grid_edge_at(GridDims d, long long id) {
    const long long horizontal_count = 1LL * d.m * (d.n - 1);
    if (id < 0 || id >= d.edge_count())
        throw std::out_of_range("edge id " + std::to_string(id) + " out of range");
    if (id < horizontal_count) {
        const int r = static_cast<int>(id / (d.n - 1)) + 1;
        const int c = static_cast<int>(id % (d.n - 1)) + 1;
        return GridEdge{id, Vertex{r, c}, Vertex{r, c + 1}, true};
    }
    const long long rest = id - horizontal_count;
    const int r = static_cast<int>(rest / d.n) + 1;
    const int c = static_cast<int>(rest % d.n) + 1;
    return GridEdge{id, Vertex{r, c}, Vertex{r + 1, c}, false};
}

inline std::vector<GridEdge> grid_edge_list(GridDims d) {
    require_valid(d);
    std::vector<GridEdge> edges;
    edges.reserve(static_cast<std::size_t>(d.edge_count()));
    for (int r = 1; r <= d.m; ++r)
        for (int c = 1; c < d.n; ++c)
            edges.push_back(GridEdge{horizontal_edge_id(d, r, c), Vertex{r, c}, Vertex{r, c + 1}, true});
    for (int r = 1; r < d.m; ++r)
        for (int c = 1; c <= d.n; ++c)
            edges.push_back(GridEdge{vertical_edge_id(d, r, c), Vertex{r, c}, Vertex{r + 1, c}, false});
    return edges;
}

// Edge id of the grid edge {u,v}; throws if u and v are not grid-adjacent.
inline long long edge_id_between(GridDims d, Vertex u, Vertex v) {
    if (!contains(d, u) || !contains(d, v))
        throw std::out_of_range("edge endpoint outside grid: " + to_string(u) + "-" + to_string(v));
    if (u.row == v.row && (u.col == v.col + 1 || v.col == u.col + 1))
        return horizontal_edge_id(d, u.row, std::min(u.col, v.col));
    if (u.col == v.col && (u.row == v.row + 1 || v.row == u.row + 1))
        return vertical_edge_id(d, std::min(u.row, v.row), u.col);
    throw std::invalid_argument("vertices are not grid-adjacent: " + to_string(u) + "-" + to_string(v));
}

// One direction per grid edge. bits[e] == true orients edge e rightward
// (horizontal) or downward (vertical); false is the opposite direction.
struct Orientation {
    GridDims dims;
    std::vector<bool> bits;

    friend bool operator==(const Orientation&, const Orientation&) = default;
    friend bool operator<(const Orientation& x, const Orientation& y) {
        if (x.dims.m != y.dims.m) return x.dims.m < y.dims.m;
        if (x.dims.n != y.dims.n) return x.dims.n < y.dims.n;
        return x.bits < y.bits;
    }
};

inline void validate(const Orientation& o) {
    require_valid(o.dims);
    if (static_cast<long long>(o.bits.size()) != o.dims.edge_count())
        throw std::invalid_argument("orientation has " + std::to_string(o.bits.size()) +
                                    " bits, expected " + std::to_string(o.dims.edge_count()));
}

inline Orientation uniform_orientation(GridDims d, bool rightward_downward) {
    require_valid(d);
    return Orientation{d, std::vector<bool>(static_cast<std::size_t>(d.edge_count()),
                                            rightward_downward)};
}

// Tail and head of edge e under orientation o.
inline std::pair<Vertex, Vertex> arc_of(const Orientation& o, const GridEdge& e) {
    return o.bits[static_cast<std::size_t>(e.id)] ? std::pair{e.a, e.b} : std::pair{e.b, e.a};
}

inline Orientation reverse(Orientation o) {
    validate(o);
    o.bits.flip();
    return o;
}

// Out-neighbor adjacency of a materialized orientation.
struct Digraph {
    GridDims dims;
    std::vector<std::vector<int>> out;

    long long q() const { return static_cast<long long>(out.size()); }
};

inline Digraph materialize(const Orientation& o) {
    validate(o);
    if (o.dims.vertex_count() > std::numeric_limits<int>::max())
        throw std::invalid_argument("grid too large to materialize");
    Digraph d{o.dims, std::vector<std::vector<int>>(static_cast<std::size_t>(o.dims.vertex_count()))};
    for (const GridEdge& e : grid_edge_list(o.dims)) {
        const auto [tail, head] = arc_of(o, e);
        d.out[static_cast<std::size_t>(vertex_index(o.dims, tail))]
            .push_back(static_cast<int>(vertex_index(o.dims, head)));
    }
    return d;
}

// Automorphisms of the grid: the identity, both axis mirrors and the
// half-turn; the four transpositions join in when the grid is square.
enum class GridSymmetry {
    identity,
    flip_cols,            // (r,c) -> (r, n+1-c)
    flip_rows,            // (r,c) -> (m+1-r, c)
    rotate180,            // (r,c) -> (m+1-r, n+1-c)
    transpose,            // (r,c) -> (c,r), square grids only
    transpose_flip_cols,  // 90-degree rotation
    transpose_flip_rows,  // 270-degree rotation
    transpose_rotate180,  // anti-diagonal mirror
};

inline bool is_transposing(GridSymmetry g) {
    return g == GridSymmetry::transpose || g == GridSymmetry::transpose_flip_cols ||
           g == GridSymmetry::transpose_flip_rows || g == GridSymmetry::transpose_rotate180;
}

inline const char* to_string(GridSymmetry g) {
    switch (g) {
        case GridSymmetry::identity: return "identity";
        case GridSymmetry::flip_cols: return "flip_cols";
        case GridSymmetry::flip_rows: return "flip_rows";
        case GridSymmetry::rotate180: return "rotate180";
        case GridSymmetry::transpose: return "transpose";
        case GridSymmetry::transpose_flip_cols: return "transpose_flip_cols";
        case GridSymmetry::transpose_flip_rows: return "transpose_flip_rows";
        case GridSymmetry::transpose_rotate180: return "transpose_rotate180";
    }
    return "?";
}

inline std::vector<GridSymmetry> symmetry_group(GridDims d) {
    require_valid(d);
    std::vector<GridSymmetry> g{GridSymmetry::identity, GridSymmetry::flip_cols,
                                GridSymmetry::flip_rows, GridSymmetry::rotate180};
    if (d.m == d.n) {
        g.push_back(GridSymmetry::transpose);
        g.push_back(GridSymmetry::transpose_flip_cols);
        g.push_back(GridSymmetry::transpose_flip_rows);
        g.push_back(GridSymmetry::transpose_rotate180);
    }
    return g;
}

inline Vertex apply_symmetry(GridSymmetry g, GridDims d, Vertex v) {
    if (is_transposing(g) && d.m != d.n)
        throw std::invalid_argument(std::string(to_string(g)) + " requires a square grid");
    switch (g) {
        case GridSymmetry::identity: return v;
        case GridSymmetry::flip_cols: return Vertex{v.row, d.n + 1 - v.col};
        case GridSymmetry::flip_rows: return Vertex{d.m + 1 - v.row, v.col};
        case GridSymmetry::rotate180: return Vertex{d.m + 1 - v.row, d.n + 1 - v.col};
        case GridSymmetry::transpose: return Vertex{v.col, v.row};
        case GridSymmetry::transpose_flip_cols: return Vertex{v.col, d.n + 1 - v.row};
        case GridSymmetry::transpose_flip_rows: return Vertex{d.m + 1 - v.col, v.row};
        case GridSymmetry::transpose_rotate180: return Vertex{d.m + 1 - v.col, d.n + 1 - v.row};
    }
    throw std::invalid_argument("unknown grid symmetry");
}

// Bit-level form of a symmetry, optionally composed with arc reversal:
// new_bits[dst[e]] = bits[e] ^ flip[e].
struct EdgeTransform {
    std::vector<long long> dst;
    std::vector<bool> flip;
};

inline EdgeTransform edge_transform(GridDims d, GridSymmetry g, bool reverse_arcs) {
    require_valid(d);
    if (is_transposing(g) && d.m != d.n)
        throw std::invalid_argument(std::string(to_string(g)) + " requires a square grid");
    const auto edges = grid_edge_list(d);
    EdgeTransform t;
    t.dst.resize(edges.size());
    t.flip.resize(edges.size());
    for (const GridEdge& e : edges) {
        const Vertex ia = apply_symmetry(g, d, e.a);
        const Vertex ib = apply_symmetry(g, d, e.b);
        const long long j = edge_id_between(d, ia, ib);
        const GridEdge image = grid_edge_at(d, j);
        // bit 1 means "from the canonical first endpoint"; it survives the
        // map exactly when a lands on the image's first endpoint.
        const bool keeps_direction = ia == image.a;
        t.dst[static_cast<std::size_t>(e.id)] = j;
        t.flip[static_cast<std::size_t>(e.id)] = !keeps_direction != reverse_arcs;
    }
    return t;
}

inline Orientation apply_transform(const Orientation& o, const EdgeTransform& t) {
    validate(o);
    Orientation r{o.dims, std::vector<bool>(o.bits.size())};
    for (std::size_t i = 0; i < o.bits.size(); ++i)
        r.bits[static_cast<std::size_t>(t.dst[i])] = o.bits[i] ^ t.flip[i];
    return r;
}

inline Orientation apply_automorphism(const Orientation& o, GridSymmetry g) {
    validate(o);
    return apply_transform(o, edge_transform(o.dims, g, false));
}

// Every non-identity element of (symmetry group) x {keep arcs, reverse arcs}.
// Minimizing over these plus the input itself yields the canonical
// representative of an orientation's orbit.
inline std::vector<EdgeTransform> orbit_transforms(GridDims d) {
    std::vector<EdgeTransform> ts;
    for (GridSymmetry g : symmetry_group(d)) {
        for (bool rev : {false, true}) {
            if (g == GridSymmetry::identity && !rev) continue;
            ts.push_back(edge_transform(d, g, rev));
        }
    }
    return ts;
}

}  // namespace digrid
