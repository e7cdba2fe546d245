#pragma once

#include <stdexcept>
#include <string>

#include "digrid/grid.hpp"
#include "digrid/int128.hpp"
#include "digrid/metrics.hpp"
#include "digrid/orientations.hpp"

namespace digrid {

namespace detail {

// The closed forms below are stated as (integer polynomial)/k. The division
// must come out exact; a remainder means the polynomial was transcribed
// wrong, so fail loudly instead of truncating.
inline int128 exact_div(int128 value, int128 k, const char* what) {
    if (value % k != 0)
        throw std::logic_error(std::string(what) + ": polynomial not divisible by " +
                               to_string(k));
    return value / k;
}

}  // namespace detail

// Parity correction in the comb closed form: 3n-6 when m is odd, else 0.
struct ParityTerm {
    int128 beta = 0;

    static ParityTerm for_comb(int m, int n) {
        return ParityTerm{m % 2 == 1 ? int128{3} * n - 6 : int128{0}};
    }
};

// Exact Wiener index of the comb orientation, valid for even n with
// m, n >= 4. For m = 3 no closed form exists (the beta-free polynomial is
// only a lower bound there); use wiener_index(comb_orientation(...)).
inline int128 comb_closed_form(int m, int n) {
    if (m < 4 || n < 4 || n % 2 != 0)
        throw std::domain_error("comb closed form requires even n and m,n >= 4, got m=" +
                                std::to_string(m) + " n=" + std::to_string(n));
    const int128 M = m, N = n;
    const int128 beta = ParityTerm::for_comb(m, n).beta;
    const int128 twelve =
        2 * M * M * M * N * N * N + 2 * M * M * M * N * N + 2 * M * M * M * N + 4 * M * M * M +
        4 * M * M * N * N * N - 3 * M * M * N * N - M * M * N - 6 * M * M -
        2 * M * N * N * N + 4 * M * N * N - 2 * M * N - 16 * M +
        24 * N * N - 72 * N + 72 + beta;
    return detail::exact_div(twelve, 12, "comb closed form");
}

// Exact Wiener index of the conjectured orientation, valid for m, n >= 2.
inline int128 conj_closed_form(int m, int n) {
    if (m < 2 || n < 2)
        throw std::domain_error("conjectured-orientation closed form requires m,n >= 2, got m=" +
                                std::to_string(m) + " n=" + std::to_string(n));
    const int128 M = m, N = n;
    const int128 twelve =
        10 * M * M * M * N * N + 10 * M * M * N * N * N - 6 * M * M * M * N -
        24 * M * M * N * N - 6 * M * N * N * N + 4 * M * M * M + 14 * M * M * N +
        14 * M * N * N + 4 * N * N * N - 12 * M * N - 4 * M - 4 * N;
    return detail::exact_div(twelve, 12, "conjectured-orientation closed form");
}

// W of the directed path on n vertices: C(n+1,3).
inline int128 path_wiener(long long n) {
    if (n < 1) throw std::domain_error("path needs at least one vertex");
    return binom3(int128{n} + 1);
}

// W of the directed cycle on q vertices: q*C(q,2). No orientation of any
// graph on q vertices exceeds this.
inline int128 cycle_wiener(long long q) {
    if (q < 1) throw std::domain_error("cycle needs at least one vertex");
    return int128{q} * binom2(q);
}

// Maximum Wiener index over all orientations of the ladder G_{2,n}:
// (8n^3+3n^2-5n+6)/3, attained by ladder_orientation(n).
inline int128 ladder_max(long long n) {
    if (n < 2) throw std::domain_error("ladder needs n >= 2");
    const int128 N = n;
    return detail::exact_div(8 * N * N * N + 3 * N * N - 5 * N + 6, 3, "ladder maximum");
}

// Two exactly computed Wiener values with their gap, the route each value
// took (closed form or BFS), and the W/(mn)^3 ratios as exact rationals.
struct ComparisonReport {
    GridDims dims;
    std::string lhs_label;
    std::string rhs_label;
    int128 lhs = 0;
    int128 rhs = 0;
    int128 gap = 0;
    bool holds = false;  // lhs > rhs
    const char* lhs_route = "";
    const char* rhs_route = "";
    Rational lhs_ratio;
    Rational rhs_ratio;
};

// comb vs conjectured on the same grid. The comb side uses the closed form
// when its hypotheses hold (m >= 4) and BFS otherwise (m = 3, where the
// closed form does not apply).
inline ComparisonReport compare_comb_vs_conj(int m, int n) {
    if (n % 2 != 0)
        throw std::domain_error("comb orientation undefined for odd n=" + std::to_string(n));
    if (m < 3 || n < 4)
        throw std::domain_error("comparison requires m >= 3 and even n >= 4, got m=" +
                                std::to_string(m) + " n=" + std::to_string(n));
    ComparisonReport r;
    r.dims = GridDims{m, n};
    r.lhs_label = "comb";
    r.rhs_label = "conj";
    if (m >= 4) {
        r.lhs = comb_closed_form(m, n);
        r.lhs_route = "closed-form";
    } else {
        r.lhs = wiener_index(materialize(comb_orientation(r.dims)));
        r.lhs_route = "bfs";
    }
    r.rhs = conj_closed_form(m, n);
    r.rhs_route = "closed-form";
    r.gap = r.lhs - r.rhs;
    r.holds = r.gap > 0;
    const int128 cube = int128{m} * n * (int128{m} * n) * (int128{m} * n);
    r.lhs_ratio = Rational(r.lhs, cube);
    r.rhs_ratio = Rational(r.rhs, cube);
    return r;
}

// comb on the m-by-n grid vs comb on the transposed grid, both by closed
// form; requires m and n even with 4 <= m < n.
inline ComparisonReport compare_comb_transpose(int m, int n) {
    if (m % 2 != 0 || n % 2 != 0 || m < 4 || m >= n)
        throw std::domain_error("transpose comparison requires even m,n with 4 <= m < n, got m=" +
                                std::to_string(m) + " n=" + std::to_string(n));
    ComparisonReport r;
    r.dims = GridDims{m, n};
    r.lhs_label = "comb(" + std::to_string(m) + "," + std::to_string(n) + ")";
    r.rhs_label = "comb(" + std::to_string(n) + "," + std::to_string(m) + ")";
    r.lhs = comb_closed_form(m, n);
    r.rhs = comb_closed_form(n, m);
    r.lhs_route = r.rhs_route = "closed-form";
    r.gap = r.lhs - r.rhs;
    r.holds = r.gap > 0;
    const int128 cube = int128{m} * n * (int128{m} * n) * (int128{m} * n);
    r.lhs_ratio = Rational(r.lhs, cube);
    r.rhs_ratio = Rational(r.rhs, cube);
    return r;
}

}  // namespace digrid
