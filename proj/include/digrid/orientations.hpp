#pragma once

#include <stdexcept>
#include <string>

#include "digrid/grid.hpp"

namespace digrid {

// Comb orientation: the top row together with a zig-zag through the
// columns forms a directed Hamiltonian cycle; every edge off the cycle is
// oriented so it cannot shorten a walk along the cycle (remaining vertical
// edges point up into row 1, remaining horizontal edges point right).
// Defined only for even n.
inline Orientation comb_orientation(GridDims d) {
    require_valid(d);
    if (d.n % 2 != 0)
        throw std::invalid_argument("comb orientation undefined for odd column count n=" +
                                    std::to_string(d.n));
    if (d.m < 2 || d.n < 2)
        throw std::invalid_argument("comb orientation needs m >= 2 and n >= 2");

    const int m = d.m, n = d.n;
    Orientation o{d, std::vector<bool>(static_cast<std::size_t>(d.edge_count()))};
    auto set_h = [&](int r, int c, bool rightward) {
        o.bits[static_cast<std::size_t>(horizontal_edge_id(d, r, c))] = rightward;
    };
    auto set_v = [&](int r, int c, bool downward) {
        o.bits[static_cast<std::size_t>(vertical_edge_id(d, r, c))] = downward;
    };

    // Defaults are the off-cycle directions: horizontals right, verticals up.
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c < n; ++c) set_h(r, c, true);
    for (int r = 1; r < m; ++r)
        for (int c = 1; c <= n; ++c) set_v(r, c, false);

    // Cycle: up column 1, right along row 1, down column n, then weave back
    // through columns n-1..2, alternating up (odd c, connector in row 2) and
    // down (even c, connector in row m), closing at (m,1).
    for (int r = 1; r < m; ++r) set_v(r, n, true);
    set_h(m, n - 1, false);
    for (int c = n - 1; c >= 2; --c) {
        if (c % 2 == 1) {
            set_h(2, c - 1, false);
        } else {
            for (int r = 2; r < m; ++r) set_v(r, c, true);
            set_h(m, c - 1, false);
        }
    }
    return o;
}

// All columns up except the last (down); all rows left except the first
// (right). The boundary arcs alone form a directed Hamiltonian cycle.
inline Orientation conjectured_orientation(GridDims d) {
    require_valid(d);
    if (d.m < 2 || d.n < 2)
        throw std::invalid_argument("orientation needs m >= 2 and n >= 2");
    Orientation o{d, std::vector<bool>(static_cast<std::size_t>(d.edge_count()))};
    for (int c = 1; c < d.n; ++c)
        o.bits[static_cast<std::size_t>(horizontal_edge_id(d, 1, c))] = true;  // row 1 right
    for (int r = 1; r < d.m; ++r)
        o.bits[static_cast<std::size_t>(vertical_edge_id(d, r, d.n))] = true;  // column n down
    return o;
}

// Orientation built from the boustrophedon row-major Hamiltonian path:
// path edges follow the traversal, every other edge points from the later
// vertex on the path to the earlier one, so no off-path arc can act as a
// shortcut. Along-path distances therefore survive unchanged.
inline Orientation snake_hampath_orientation(GridDims d) {
    require_valid(d);
    Orientation o{d, std::vector<bool>(static_cast<std::size_t>(d.edge_count()))};
    for (int r = 1; r <= d.m; ++r)
        for (int c = 1; c < d.n; ++c)
            o.bits[static_cast<std::size_t>(horizontal_edge_id(d, r, c))] = r % 2 == 1;
    // Path verticals are the row-to-row drops (column n after odd rows,
    // column 1 after even rows); all other verticals point backward, i.e. up.
    for (int r = 1; r < d.m; ++r) {
        const int drop_col = r % 2 == 1 ? d.n : 1;
        o.bits[static_cast<std::size_t>(vertical_edge_id(d, r, drop_col))] = true;
    }
    return o;
}

inline Orientation ladder_orientation(int n) {
    return conjectured_orientation(GridDims{2, n});
}

}  // namespace digrid
