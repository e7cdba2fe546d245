#pragma once

#include <vector>

#include "digrid/grid.hpp"
#include "digrid/int128.hpp"

namespace digrid {

// Directed distances from one source. Unreachable targets carry distance 0
// (the convention under which the Wiener index of a digraph is defined);
// the reachability mask tells an unreachable target apart from the source.
struct DistanceVector {
    Vertex source;
    std::vector<int> dist;
    std::vector<bool> reachable;
};

namespace detail {

// BFS from `s` into `dist`, which must be sized q and filled with -1.
inline void bfs(const Digraph& d, int s, std::vector<int>& dist, std::vector<int>& fifo) {
    fifo.clear();
    fifo.push_back(s);
    dist[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < fifo.size(); ++head) {
        const int u = fifo[head];
        const int du = dist[static_cast<std::size_t>(u)];
        for (int v : d.out[static_cast<std::size_t>(u)]) {
            if (dist[static_cast<std::size_t>(v)] < 0) {
                dist[static_cast<std::size_t>(v)] = du + 1;
                fifo.push_back(v);
            }
        }
    }
}

}  // namespace detail

inline DistanceVector distances_from(const Digraph& d, Vertex s) {
    const int src = static_cast<int>(vertex_index(d.dims, s));
    const std::size_t q = d.out.size();
    std::vector<int> dist(q, -1);
    std::vector<int> fifo;
    fifo.reserve(q);
    detail::bfs(d, src, dist, fifo);
    DistanceVector dv{s, std::vector<int>(q, 0), std::vector<bool>(q, false)};
    for (std::size_t v = 0; v < q; ++v) {
        if (dist[v] >= 0) {
            dv.dist[v] = dist[v];
            dv.reachable[v] = true;
        }
    }
    return dv;
}

struct Transmission {
    Vertex vertex;
    long long value = 0;  // sum of directed distances to all vertices
};

inline Transmission transmission(const Digraph& d, Vertex u) {
    const DistanceVector dv = distances_from(d, u);
    long long sum = 0;
    for (int x : dv.dist) sum += x;
    return Transmission{u, sum};
}

// Sum of directed distances over all ordered vertex pairs, unreachable
// pairs contributing 0. Exact for any grid that fits in memory.
inline int128 wiener_index(const Digraph& d) {
    const std::size_t q = d.out.size();
    std::vector<int> dist(q);
    std::vector<int> fifo;
    fifo.reserve(q);
    int128 total = 0;
    for (std::size_t s = 0; s < q; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        detail::bfs(d, static_cast<int>(s), dist, fifo);
        long long row = 0;
        for (int x : dist)
            if (x > 0) row += x;
        total += row;
    }
    return total;
}

// W / (q(q-1)): mean directed distance over ordered pairs.
inline Rational average_distance(const Digraph& d) {
    const int128 q = d.q();
    if (q < 2) throw std::invalid_argument("average distance needs at least two vertices");
    return Rational(wiener_index(d), q * (q - 1));
}

inline bool is_strongly_connected(const Digraph& d) {
    const std::size_t q = d.out.size();
    if (q <= 1) return true;
    std::vector<std::vector<int>> rev(q);
    for (std::size_t u = 0; u < q; ++u)
        for (int v : d.out[u]) rev[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
    std::vector<int> dist(q, -1);
    std::vector<int> fifo;
    fifo.reserve(q);
    detail::bfs(d, 0, dist, fifo);
    if (fifo.size() != q) return false;
    const Digraph reversed{d.dims, std::move(rev)};
    std::fill(dist.begin(), dist.end(), -1);
    detail::bfs(reversed, 0, dist, fifo);
    return fifo.size() == q;
}

}  // namespace digrid
