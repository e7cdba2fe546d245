#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "digrid/formulas.hpp"
#include "digrid/io.hpp"
#include "digrid/metrics.hpp"
#include "digrid/orientations.hpp"
#include "oracle.hpp"

using namespace digrid;

static std::string S(int128 v) { return to_string(v); }

static Orientation load_fixture(const std::string& name) {
    return read_orientation_file(std::string(DIGRID_FIXTURE_DIR) + "/" + name);
}

TEST_CASE("comb reproduces the 5x8 figure arc for arc", "[orientations]") {
    CHECK(comb_orientation({5, 8}) == load_fixture("comb_5x8.json"));
}

TEST_CASE("conjectured reproduces the 5x8 figure arc for arc", "[orientations]") {
    CHECK(conjectured_orientation({5, 8}) == load_fixture("conj_5x8.json"));
}

TEST_CASE("comb spot arcs", "[orientations]") {
    const Orientation o = comb_orientation({5, 8});
    const Digraph d = materialize(o);
    auto has_arc = [&](Vertex u, Vertex v) {
        const auto& lst = d.out[static_cast<std::size_t>(vertex_index(d.dims, u))];
        return std::find(lst.begin(), lst.end(), static_cast<int>(vertex_index(d.dims, v))) !=
               lst.end();
    };
    CHECK(has_arc({5, 1}, {4, 1}));  // column 1 runs upward
    CHECK(has_arc({2, 2}, {1, 2}));  // off-cycle verticals point into row 1
    CHECK(has_arc({2, 7}, {2, 6}));  // row-2 connector of the zig-zag
}

TEST_CASE("comb needs even n and at least two rows", "[orientations]") {
    CHECK_THROWS_AS(comb_orientation({3, 5}), std::invalid_argument);
    CHECK_THROWS_AS(comb_orientation({1, 4}), std::invalid_argument);
    CHECK_NOTHROW(comb_orientation({2, 2}));
}

TEST_CASE("comb wiener values", "[orientations]") {
    CHECK(S(wiener_index(materialize(comb_orientation({3, 4})))) == "538");
    CHECK(S(wiener_index(materialize(comb_orientation({3, 6})))) == "1740");
}

TEST_CASE("comb contains a hamiltonian cycle and is strongly connected", "[orientations]") {
    for (int m : {2, 3, 4, 5})
        for (int n : {2, 4, 6, 8})
            CHECK(is_strongly_connected(materialize(comb_orientation({m, n}))));
}

TEST_CASE("conjectured wiener values", "[orientations]") {
    CHECK(S(wiener_index(materialize(conjectured_orientation({3, 5})))) == "968");
    CHECK(S(wiener_index(materialize(conjectured_orientation({2, 6})))) == "604");
    CHECK_THROWS_AS(conjectured_orientation({1, 5}), std::invalid_argument);
}

TEST_CASE("ladder alias", "[orientations]") {
    CHECK(ladder_orientation(6) == conjectured_orientation({2, 6}));
    CHECK(S(wiener_index(materialize(ladder_orientation(2)))) == "24");
    CHECK(S(wiener_index(materialize(ladder_orientation(6)))) == "604");
    CHECK(ladder_max(6) == wiener_index(materialize(ladder_orientation(6))));
}

TEST_CASE("conjectured orientation attains the ladder maximum", "[orientations]") {
    for (int n = 2; n <= 12; ++n)
        CHECK(wiener_index(materialize(conjectured_orientation({2, n}))) == ladder_max(n));
}

TEST_CASE("snake path orientation", "[orientations]") {
    // A single row degenerates to the directed path.
    CHECK(snake_hampath_orientation({1, 5}) == uniform_orientation({1, 5}, true));
    CHECK(S(wiener_index(materialize(snake_hampath_orientation({1, 5})))) == "20");
    CHECK(S(wiener_index(materialize(snake_hampath_orientation({2, 2})))) == "24");
    CHECK(S(wiener_index(materialize(snake_hampath_orientation({3, 4})))) == "502");
    CHECK(wiener_index(materialize(snake_hampath_orientation({3, 4}))) >= binom3(13));
}

TEST_CASE("snake dominates the directed-path wiener value", "[orientations]") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            const int128 w = wiener_index(materialize(snake_hampath_orientation({m, n})));
            CHECK(w >= path_wiener(1LL * m * n));
        }
}
