// Acceptance suite: one line per criterion, nonzero exit if any fails.
// The long 3x6 exhaustive run only happens with --big.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "digrid/digrid.hpp"

using namespace digrid;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Criterion {
    std::string id;
    std::string what;
    double limit_seconds;
    std::function<bool(std::ostream&)> run;
};

bool check_eq(std::ostream& log, const std::string& label, int128 got, int128 want) {
    if (got == want) return true;
    log << "  " << label << ": got " << to_string(got) << ", want " << to_string(want) << "\n";
    return false;
}

Orientation random_orientation(GridDims dims, std::mt19937_64& rng) {
    Orientation o{dims, std::vector<bool>(static_cast<std::size_t>(dims.edge_count()))};
    for (std::size_t i = 0; i < o.bits.size(); ++i) o.bits[i] = rng() & 1u;
    return o;
}

bool paper_constants(std::ostream& log) {
    bool ok = true;
    ok &= check_eq(log, "conj 3x4", wiener_index(materialize(conjectured_orientation({3, 4}))), 516);
    ok &= check_eq(log, "conj 3x5", wiener_index(materialize(conjectured_orientation({3, 5}))), 968);
    ok &= check_eq(log, "conj 3x6", wiener_index(materialize(conjectured_orientation({3, 6}))), 1626);
    ok &= check_eq(log, "comb 3x4", wiener_index(materialize(comb_orientation({3, 4}))), 538);
    ok &= check_eq(log, "comb 3x6", wiener_index(materialize(comb_orientation({3, 6}))), 1740);
    return ok;
}

bool conj_formula_vs_bfs(std::ostream& log) {
    bool ok = true;
    for (int m = 2; m <= 8; ++m)
        for (int n = 2; n <= 8; ++n)
            ok &= check_eq(log, "conj " + std::to_string(m) + "x" + std::to_string(n),
                           conj_closed_form(m, n),
                           wiener_index(materialize(conjectured_orientation({m, n}))));
    return ok;
}

bool comb_formula_vs_bfs(std::ostream& log) {
    bool ok = true;
    for (int m = 4; m <= 7; ++m)
        for (int n : {4, 6, 8})
            ok &= check_eq(log, "comb " + std::to_string(m) + "x" + std::to_string(n),
                           comb_closed_form(m, n),
                           wiener_index(materialize(comb_orientation({m, n}))));
    return ok;
}

bool ladder_maximum(std::ostream& log) {
    bool ok = true;
    for (int n = 2; n <= 5; ++n) {
        const SearchReport rep = exhaustive_max({2, n});
        ok &= check_eq(log, "ladder max n=" + std::to_string(n), rep.max_wiener, ladder_max(n));
        const Orientation canon = canonical_representative(ladder_orientation(n));
        bool attained = false;
        for (const auto& w : rep.witnesses)
            if (w.orientation == canon) attained = true;
        if (!attained) {
            log << "  ladder orientation does not attain the maximum for n=" << n << "\n";
            ok = false;
        }
    }
    return ok;
}

bool search_optima(std::ostream& log) {
    bool ok = true;
    {
        const auto t0 = std::chrono::steady_clock::now();
        const SearchReport rep = exhaustive_max({3, 4});
        ok &= check_eq(log, "exhaustive 3x4", rep.max_wiener, 578);
        const double secs = seconds_since(t0);
        if (secs > 10) {
            log << "  3x4 took " << secs << "s, limit 10s\n";
            ok = false;
        }
    }
    {
        const auto t0 = std::chrono::steady_clock::now();
        SearchOptions single;
        single.worker_count = 1;
        const SearchReport rep = exhaustive_max({3, 5}, single);
        ok &= check_eq(log, "exhaustive 3x5 single-threaded", rep.max_wiener, 1116);
        const double secs = seconds_since(t0);
        if (secs > 300) {
            log << "  3x5 single-threaded took " << secs << "s, limit 300s\n";
            ok = false;
        }
    }
    {
        const auto t0 = std::chrono::steady_clock::now();
        SearchOptions fast;
        fast.worker_count = 4;
        fast.use_symmetry = true;
        const SearchReport rep = exhaustive_max({3, 5}, fast);
        ok &= check_eq(log, "exhaustive 3x5 symmetry+4 workers", rep.max_wiener, 1116);
        const double secs = seconds_since(t0);
        if (secs > 60) {
            log << "  3x5 with symmetry and 4 workers took " << secs << "s, limit 60s\n";
            ok = false;
        }
        for (const auto& w : rep.witnesses)
            if (!w.strongly_connected || !is_strongly_connected(materialize(w.orientation))) {
                log << "  3x5 witness not strongly connected\n";
                ok = false;
            }
    }
    return ok;
}

bool search_optimum_3x6(std::ostream& log) {
    SearchOptions opts;
    opts.worker_count = 4;
    opts.use_symmetry = true;
    opts.big = true;
    const SearchReport rep = exhaustive_max({3, 6}, opts);
    return check_eq(log, "exhaustive 3x6", rep.max_wiener, 1928);
}

bool comb_beats_conj(std::ostream& log) {
    bool ok = true;
    for (int m = 3; m <= 6; ++m)
        for (int n : {4, 6, 8}) {
            const int128 comb = wiener_index(materialize(comb_orientation({m, n})));
            const int128 conj = wiener_index(materialize(conjectured_orientation({m, n})));
            if (!(comb > conj)) {
                log << "  comb <= conj at " << m << "x" << n << "\n";
                ok = false;
            }
        }
    for (int m = 4; m <= 12; ++m)
        for (int n = 4; n <= 12; n += 2)
            if (!(comb_closed_form(m, n) - conj_closed_form(m, n) > 0)) {
                log << "  closed-form gap not positive at " << m << "x" << n << "\n";
                ok = false;
            }
    return ok;
}

bool comb_beats_transpose(std::ostream& log) {
    bool ok = true;
    for (int m = 4; m <= 12; m += 2)
        for (int n = m + 2; n <= 12; n += 2)
            if (!(comb_closed_form(m, n) > comb_closed_form(n, m))) {
                log << "  comb(" << m << "," << n << ") <= comb(" << n << "," << m << ")\n";
                ok = false;
            }
    return ok;
}

bool property_suite(std::ostream& log) {
    const GridDims dims{4, 4};
    const int128 bound = cycle_wiener(16);
    if (bound != 1920) {
        log << "  cycle bound is " << to_string(bound) << ", expected 1920\n";
        return false;
    }
    std::mt19937_64 rng(20240101);
    const auto group = symmetry_group(dims);
    for (int i = 0; i < 1000; ++i) {
        const Orientation o = random_orientation(dims, rng);
        const int128 w = wiener_index(materialize(o));
        if (w != wiener_index(materialize(reverse(o)))) {
            log << "  reversal changed W at sample " << i << "\n";
            return false;
        }
        if (w > bound) {
            log << "  cycle bound violated at sample " << i << "\n";
            return false;
        }
        const Orientation canon = canonical_representative(o);
        if (canonical_representative(canon) != canon) {
            log << "  canonical form not idempotent at sample " << i << "\n";
            return false;
        }
        for (GridSymmetry g : group) {
            const Orientation image = apply_automorphism(o, g);
            if (w != wiener_index(materialize(image))) {
                log << "  automorphism changed W at sample " << i << "\n";
                return false;
            }
            if (canonical_representative(image) != canon) {
                log << "  canonical form not orbit-constant at sample " << i << "\n";
                return false;
            }
        }
    }
    return true;
}

bool lower_bound_constructions(std::ostream& log) {
    bool ok = true;
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            const int128 w = wiener_index(materialize(snake_hampath_orientation({m, n})));
            if (w < path_wiener(1LL * m * n)) {
                log << "  snake below the path value at " << m << "x" << n << "\n";
                ok = false;
            }
        }
    for (int m = 2; m <= 20; ++m)
        for (int n = 2; n <= 20; ++n)
            if (conj_closed_form(m, n) != conj_closed_form(n, m)) {
                log << "  conj closed form asymmetric at " << m << "x" << n << "\n";
                ok = false;
            }
    for (int n = 2; n <= 50; ++n)
        if (conj_closed_form(2, n) != ladder_max(n)) {
            log << "  conj(2," << n << ") != ladder max\n";
            ok = false;
        }
    return ok;
}

bool symmetry_soundness(std::ostream& log) {
    bool ok = true;
    std::vector<GridDims> dims;
    for (int m = 1; m <= 4; ++m)
        for (int n = m; n <= 18; ++n) {
            const GridDims d{m, n};
            if (d.edge_count() >= 1 && d.edge_count() <= 17) dims.push_back(d);
        }
    for (GridDims d : dims) {
        SearchOptions plain;
        SearchOptions pruned;
        pruned.use_symmetry = true;
        const SearchReport a = exhaustive_max(d, plain);
        const SearchReport b = exhaustive_max(d, pruned);
        bool same = a.max_wiener == b.max_wiener &&
                    a.optima_orbit_count == b.optima_orbit_count &&
                    a.witnesses.size() == b.witnesses.size();
        if (same)
            for (std::size_t i = 0; i < a.witnesses.size(); ++i)
                same = same && a.witnesses[i].orientation == b.witnesses[i].orientation;
        if (!same) {
            log << "  symmetry pruning changed the result on " << d.m << "x" << d.n << "\n";
            ok = false;
        }
    }
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    bool big = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--big") big = true;

    std::vector<Criterion> criteria{
        {"1", "paper constants by BFS", 1, paper_constants},
        {"2", "conjectured closed form vs BFS on 2..8 x 2..8", 5, conj_formula_vs_bfs},
        {"3", "comb closed form vs BFS, both beta branches", 5, comb_formula_vs_bfs},
        {"4", "exhaustive ladder maxima n=2..5", 30, ladder_maximum},
        {"5", "computed search optima 3x4 and 3x5", 370, search_optima},
        {"6", "comb beats conjectured", 30, comb_beats_conj},
        {"7", "comb beats its transpose", 5, comb_beats_transpose},
        {"8", "1000-orientation property suite on 4x4", 30, property_suite},
        {"9", "lower-bound constructions and identities", 5, lower_bound_constructions},
        {"10", "symmetry pruning soundness on all grids with E <= 17", 120, symmetry_soundness},
    };
    if (big)
        criteria.push_back({"5-big", "exhaustive 3x6 optimum (long run)", 7200,
                            search_optimum_3x6});

    int failures = 0;
    for (const Criterion& c : criteria) {
        std::ostringstream log;
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << "  exception: " << e.what() << "\n";
        }
        const double secs = seconds_since(t0);
        if (secs > c.limit_seconds) {
            log << "  took " << secs << "s, limit " << c.limit_seconds << "s\n";
            ok = false;
        }
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.what << "  ["
             << static_cast<int>(secs * 1000) / 1000.0 << "s]";
        std::cout << line.str() << "\n" << log.str();
        if (!ok) ++failures;
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
