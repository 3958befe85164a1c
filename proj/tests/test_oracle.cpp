#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shicone/digraph.hpp"
#include "shicone/errors.hpp"
#include "shicone/oracle.hpp"
#include "shicone/root_system.hpp"
#include "shicone/weyl.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace shicone;

TEST_CASE("antichain counts of small posets") {
    RootSystem a2 = build_root_system("A2");
    AntichainCount full = count_antichains(a2, std::vector<char>(3, 0));
    CHECK(full.total == 5);
    CHECK(full.by_size == std::vector<Int>{1, 3, 1});

    // drop the inversion roots of the word 1 2: alpha_2 and the highest root
    std::vector<char> excluded(3, 0);
    excluded[a2.index_of({0, 1})] = 1;
    excluded[a2.index_of({1, 1})] = 1;
    AntichainCount restricted = count_antichains(a2, excluded);
    CHECK(restricted.total == 2);
    CHECK(restricted.by_size == std::vector<Int>{1, 1});
}

TEST_CASE("antichain totals for full posets match the catalan numbers") {
    for (const std::string& t : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4",
                                 "C4", "D4", "D5", "G2", "F4", "E6", "E7"}) {
        CAPTURE(t);
        RootSystem sys = build_root_system(t);
        AntichainCount ac = count_antichains(sys, std::vector<char>(sys.num_positive(), 0));
        CHECK(ac.total == sys.catalan);
        CHECK(ac.by_size.front() == 1);
        CHECK(ac.by_size.size() >= 2);
        CHECK(ac.by_size[1] == sys.num_positive());
        Int sum = 0;
        for (const Int& b : ac.by_size) sum += b;
        CHECK(sum == ac.total);
    }
}

TEST_CASE("antichain oracle rejects oversized posets and bad masks") {
    RootSystem e8 = build_root_system("E8"); // 120 positive roots
    CHECK_THROWS_AS((void)count_antichains(e8, std::vector<char>(120, 0)),
                    std::invalid_argument);
    RootSystem a2 = build_root_system("A2");
    CHECK_THROWS_AS((void)count_antichains(a2, std::vector<char>(2, 0)),
                    std::invalid_argument);
}

TEST_CASE("path enumeration with and without forbidden corners") {
    RootSystem a2 = build_root_system("A2");
    ShiDigraph g = build_shi_digraph(a2);

    PathCount all = count_avoiding_paths(g, {});
    CHECK(all.total == 5);
    CHECK(all.corner_poly.coeffs() == std::vector<Int>{1, 3, 1});

    // forbid the corners of alpha_2 and the highest root
    std::vector<PathSeq> forbidden;
    for (const std::vector<int>& coeffs : {std::vector<int>{0, 1}, std::vector<int>{1, 1}}) {
        const Corner& c = g.corners[a2.index_of(coeffs)][0];
        forbidden.push_back({c.bl, c.br, c.tr});
    }
    PathCount avoiding = count_avoiding_paths(g, forbidden);
    CHECK(avoiding.total == 2);
    CHECK(avoiding.corner_poly.coeffs() == std::vector<Int>{1, 1});

    CHECK_THROWS_AS((void)count_avoiding_paths(g, {}, 3), CapExceeded);
}

TEST_CASE("path oracle grading matches the restricted antichain sizes") {
    RootSystem b3 = build_root_system("B3");
    ShiDigraph g = build_shi_digraph(b3);
    GroupEnumeration grp = enumerate_group(b3, 1000);
    for (std::size_t i = 0; i < grp.elements.size(); ++i) {
        std::vector<int> inv = inverse_inversion_set(grp.elements[i]);
        std::vector<char> excluded(b3.num_positive(), 0);
        std::vector<PathSeq> forbidden;
        for (int r : inv) {
            excluded[r] = 1;
            for (const Corner& c : g.corners[r]) forbidden.push_back({c.bl, c.br, c.tr});
        }
        AntichainCount ac = count_antichains(b3, excluded);
        PathCount pc = count_avoiding_paths(g, forbidden);
        CHECK(pc.total == ac.total);
        while (ac.by_size.size() > pc.corner_poly.coeffs().size() && ac.by_size.back() == 0)
            ac.by_size.pop_back();
        CHECK(pc.corner_poly.coeffs() == ac.by_size);
    }
}

TEST_CASE("weighted path sums honour weights and forbidden subpaths") {
    // two parallel routes 0 -> 1 -> 3 and 0 -> 2 -> 3
    SimpleDag dag = SimpleDag::from_edges(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
    CHECK(weighted_path_sum(dag, 0, 3, {}, {}) == 2);

    std::vector<std::vector<Int>> w(4, std::vector<Int>(4, 1));
    w[0][1] = 2;
    w[1][3] = 5;
    CHECK(weighted_path_sum(dag, 0, 3, {}, w) == 11); // 2*5 + 1*1

    CHECK(weighted_path_sum(dag, 0, 3, {PathSeq{1, 3}}, w) == 1);
    CHECK(weighted_path_sum(dag, 0, 3, {PathSeq{0, 1}, PathSeq{2, 3}}, w) == 0);
    CHECK(weighted_path_sum(dag, 3, 0, {}, {}) == 0); // nothing runs backwards
}
