#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shicone/digraph.hpp"
#include "shicone/errors.hpp"
#include "shicone/oracle.hpp"
#include "shicone/path_count.hpp"
#include "shicone/root_system.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

using namespace shicone;

TEST_CASE("rank one staircase is a single box") {
    RootSystem sys = build_root_system("A1");
    ShiDigraph g = build_shi_digraph(sys);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 4);
    CHECK(g.source == g.vertex_id(0, 1));
    CHECK(g.sink == g.vertex_id(1, 2));
    REQUIRE(g.corners.size() == 1);
    REQUIRE(g.corners[0].size() == 1);
    const Corner& c = g.corners[0][0];
    CHECK(c.bl == g.vertex_id(0, 1));
    CHECK(c.br == g.vertex_id(1, 1));
    CHECK(c.tr == g.vertex_id(1, 2));
    CHECK(g.vertex_name(g.source) == "0,1(1,0)");
}

TEST_CASE("rank two staircase locates one box per root") {
    RootSystem sys = build_root_system("A2");
    ShiDigraph g = build_shi_digraph(sys);
    CHECK(g.num_vertices() == 8); // the (0,0) corner of the 3x3 grid is cut off
    CHECK(g.num_edges() == 10);
    auto corner_of = [&](const std::vector<int>& coeffs) {
        int r = sys.index_of(coeffs);
        REQUIRE(r >= 0);
        REQUIRE(g.corners[r].size() == 1);
        return g.corners[r][0];
    };
    CHECK(corner_of({1, 0}).bl == g.vertex_id(0, 1));
    CHECK(corner_of({0, 1}).bl == g.vertex_id(1, 2));
    CHECK(corner_of({1, 1}).bl == g.vertex_id(0, 2));
    // a corner is an east edge followed by a north edge
    for (const auto& per_root : g.corners)
        for (const Corner& c : per_root) {
            CHECK(g.has_edge(c.bl, c.br));
            CHECK(g.has_edge(c.br, c.tr));
            CHECK(g.verts[c.br].x == g.verts[c.bl].x + 1);
            CHECK(g.verts[c.br].y == g.verts[c.bl].y);
            CHECK(g.verts[c.tr].x == g.verts[c.br].x);
            CHECK(g.verts[c.tr].y == g.verts[c.br].y + 1);
        }
}

TEST_CASE("vertex and edge tallies of the embedded builders") {
    auto shape = [](const std::string& t) {
        ShiDigraph g = build_shi_digraph(build_root_system(t));
        return std::pair<int, int>(g.num_vertices(), g.num_edges());
    };
    CHECK(shape("G2") == std::pair<int, int>(14, 19));
    CHECK(shape("F4") == std::pair<int, int>(82, 116));
    CHECK(shape("B4") == std::pair<int, int>(28, 43));
    CHECK(shape("D5") == std::pair<int, int>(94, 131));
}

TEST_CASE("single corner instance per root in the staircase families") {
    for (const std::string& t : {"A5", "B4", "C4", "G2"}) {
        RootSystem sys = build_root_system(t);
        ShiDigraph g = build_shi_digraph(sys);
        REQUIRE(static_cast<int>(g.corners.size()) == sys.num_positive());
        for (const auto& per_root : g.corners)
            CHECK(per_root.size() == 1);
    }
    // the fork and the exceptional geometry need repeated corner instances
    for (const std::string& t : {"D5", "F4"}) {
        RootSystem sys = build_root_system(t);
        ShiDigraph g = build_shi_digraph(sys);
        int multi = 0;
        for (const auto& per_root : g.corners)
            if (per_root.size() > 1) ++multi;
        CHECK(multi > 0);
    }
}

TEST_CASE("topological order respects every edge") {
    for (const std::string& t : {"A3", "B3", "D4", "F4"}) {
        ShiDigraph g = build_shi_digraph(build_root_system(t));
        std::vector<int> order = g.topo_order();
        REQUIRE(static_cast<int>(order.size()) == g.num_vertices());
        std::vector<int> pos(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
        for (int v = 0; v < g.num_vertices(); ++v)
            for (int w : g.adj[v]) {
                CHECK(pos[v] < pos[w]);
                CHECK(g.has_edge(v, w));
            }
        CHECK_FALSE(g.has_edge(g.sink, g.source));
    }
}

TEST_CASE("all builders pass validation and hit the antichain total") {
    for (const std::string& t : {"A1", "A2", "A3", "A4", "A5", "A6", "A7",
                                 "B2", "B3", "B4", "B5",
                                 "C2", "C3", "C4", "C5",
                                 "D4", "D5", "D6", "G2", "F4"}) {
        CAPTURE(t);
        RootSystem sys = build_root_system(t);
        ShiDigraph g = build_shi_digraph(sys);
        ValidationReport rep = validate_digraph(sys, g);
        for (const std::string& p : rep.problems) CAPTURE(p);
        CHECK(rep.ok);
        CHECK(dp_count(g, g.source, g.sink) == sys.catalan);
    }
}

TEST_CASE("validation flags tampered digraphs") {
    RootSystem sys = build_root_system("A2");

    ShiDigraph missing = build_shi_digraph(sys);
    missing.corners[2].clear();
    CHECK_FALSE(validate_digraph(sys, missing).ok);

    ShiDigraph shared = build_shi_digraph(sys);
    shared.corners[1] = shared.corners[0]; // two roots share one corner's edges
    CHECK_FALSE(validate_digraph(sys, shared).ok);

    ShiDigraph swapped = build_shi_digraph(sys);
    std::swap(swapped.corners[0], swapped.corners[2]); // mislabel two roots
    ValidationReport rep = validate_digraph(sys, swapped);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.problems.empty());
}

TEST_CASE("json export round-trips exactly") {
    for (const std::string& t : {"A3", "B3", "D4", "G2"}) {
        RootSystem sys = build_root_system(t);
        ShiDigraph g = build_shi_digraph(sys);
        std::string text = export_digraph_json(sys, g);
        ShiDigraph h = load_digraph_json(sys, text);
        CHECK(h.verts == g.verts);
        CHECK(h.adj == g.adj);
        CHECK(h.radj == g.radj);
        CHECK(h.source == g.source);
        CHECK(h.sink == g.sink);
        CHECK(h.corners == g.corners);
        CHECK(export_digraph_json(sys, h) == text);
        for (int v = 0; v < g.num_vertices(); ++v) {
            const DigraphVertex& d = g.verts[v];
            CHECK(h.vertex_id(d.x, d.y, d.u, d.v) == v);
        }
    }
}

TEST_CASE("dot export names every vertex") {
    RootSystem sys = build_root_system("A2");
    ShiDigraph g = build_shi_digraph(sys);
    std::string dot = export_digraph_dot(sys, g);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("0,1(1,0)") != std::string::npos);
    CHECK(dot.find("2,3(1,0)") != std::string::npos);
}

TEST_CASE("malformed json is rejected with a usable message") {
    RootSystem sys = build_root_system("A2");
    std::string good = export_digraph_json(sys, build_shi_digraph(sys));

    CHECK_THROWS_AS((void)load_digraph_json(sys, "{ not json"), std::invalid_argument);

    nlohmann::json dup = nlohmann::json::parse(good);
    dup["vertices"][1]["id"] = 0;
    CHECK_THROWS_AS((void)load_digraph_json(sys, dup.dump()), std::invalid_argument);

    nlohmann::json badroot = nlohmann::json::parse(good);
    nlohmann::json corners = badroot["corners"];
    corners["7 7"] = corners.begin().value();
    badroot["corners"] = corners;
    CHECK_THROWS_AS((void)load_digraph_json(sys, badroot.dump()), std::invalid_argument);

    nlohmann::json badedge = nlohmann::json::parse(good);
    badedge["edges"].push_back({0, 999});
    CHECK_THROWS_AS((void)load_digraph_json(sys, badedge.dump()), std::invalid_argument);
}

TEST_CASE("dispatch refuses what it cannot build") {
    CHECK_THROWS_AS((void)build_shi_digraph(build_root_system("E6")), MissingData);
    CHECK_THROWS_AS((void)build_shi_digraph(build_root_system("E7")), MissingData);
    CHECK_THROWS_AS((void)build_shi_digraph(build_root_system("D3")), std::invalid_argument);
    CHECK_THROWS_AS((void)build_digraph_D(3), std::invalid_argument);
}
