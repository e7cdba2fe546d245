#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "digrid/io.hpp"
#include "digrid/metrics.hpp"
#include "digrid/orientations.hpp"
#include "oracle.hpp"

using namespace digrid;
using nlohmann::json;

TEST_CASE("serialize then parse is the identity", "[io]") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 10; ++i) {
        const Orientation o = oracle::random_orientation({3, 4}, rng);
        CHECK(parse_orientation(serialize_orientation(o)) == o);
        CHECK(parse_orientation(serialize_orientation(o, true)) == o);
    }
}

TEST_CASE("parse then serialize canonicalizes the document", "[io]") {
    const Orientation o = comb_orientation({3, 4});
    const json doc = serialize_orientation(o);
    CHECK(serialize_orientation(parse_orientation(doc)) == doc);
}

TEST_CASE("arc documents accept arbitrary arc order", "[io]") {
    const Orientation o = comb_orientation({3, 4});
    json doc = serialize_orientation(o);
    std::reverse(doc["arcs"].begin(), doc["arcs"].end());
    CHECK(parse_orientation(doc) == o);
    CHECK(to_string(wiener_index(materialize(parse_orientation(doc)))) == "538");
}

TEST_CASE("parse rejects malformed documents naming the offending edge", "[io]") {
    const Orientation o = conjectured_orientation({2, 2});
    json good = serialize_orientation(o);

    json dup = good;
    dup["arcs"][1] = dup["arcs"][0];
    CHECK_THROWS_WITH(parse_orientation(dup), Catch::Matchers::ContainsSubstring("duplicate"));

    json missing = good;
    missing["arcs"].erase(3);
    CHECK_THROWS_WITH(parse_orientation(missing),
                      Catch::Matchers::ContainsSubstring("missing edge"));

    json diagonal = good;
    diagonal["arcs"][0] = json::array({json::array({1, 1}), json::array({2, 2})});
    CHECK_THROWS_WITH(parse_orientation(diagonal),
                      Catch::Matchers::ContainsSubstring("non-adjacent"));

    json outside = good;
    outside["arcs"][0] = json::array({json::array({1, 1}), json::array({1, 9})});
    CHECK_THROWS_WITH(parse_orientation(outside),
                      Catch::Matchers::ContainsSubstring("out of range"));

    json bad_bits = {{"m", 2}, {"n", 2}, {"bits", "01"}};
    CHECK_THROWS_WITH(parse_orientation(bad_bits), Catch::Matchers::ContainsSubstring("length"));

    json bad_char = {{"m", 2}, {"n", 2}, {"bits", "01x1"}};
    CHECK_THROWS_AS(parse_orientation(bad_char), parse_error);

    CHECK_THROWS_AS(parse_orientation(json{{"m", 2}}), parse_error);
    CHECK_THROWS_AS(parse_orientation(json{{"m", 0}, {"n", 3}, {"bits", ""}}), parse_error);
}

TEST_CASE("bits strings follow the canonical edge order", "[io]") {
    // 1x3 grid, both edges rightward.
    const Orientation o = uniform_orientation({1, 3}, true);
    CHECK(bits_string(o) == "11");
    const json doc = {{"m", 1}, {"n", 3}, {"bits", "10"}};
    const Orientation parsed = parse_orientation(doc);
    CHECK(parsed.bits == std::vector<bool>{true, false});
}

TEST_CASE("dot export", "[io]") {
    const std::string dot = to_dot(comb_orientation({5, 8}));
    std::size_t arrows = 0, nodes = 0;
    std::istringstream in(dot);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find(" -> ") != std::string::npos) ++arrows;
        if (line.find("pos=") != std::string::npos) ++nodes;
    }
    CHECK(arrows == 67);
    CHECK(nodes == 40);
    CHECK(dot.find("digraph") == 0);
    // Row 1 is pinned to the top of the drawing.
    CHECK(dot.find("\"1_1\" [pos=\"0,4!\"]") != std::string::npos);
    CHECK(dot.find("\"5_1\" [pos=\"0,0!\"]") != std::string::npos);
}

TEST_CASE("file round trip and io errors", "[io]") {
    const Orientation o = comb_orientation({3, 4});
    const std::string path = "test_io_roundtrip.json";
    write_orientation_file(path, o);
    CHECK(read_orientation_file(path) == o);
    std::remove(path.c_str());

    CHECK_THROWS_AS(read_orientation_file("does_not_exist.json"), io_error);
    CHECK_THROWS_AS(write_orientation_file("no_such_dir/x.json", o), io_error);

    std::ofstream junk("test_io_junk.json");
    junk << "not json";
    junk.close();
    CHECK_THROWS_AS(read_orientation_file("test_io_junk.json"), parse_error);
    std::remove("test_io_junk.json");
}
