#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shicone/root_system.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

using shicone::build_root_system;
using shicone::Int;
using shicone::parse_type;
using shicone::RootSystem;

TEST_CASE("type labels parse case-insensitively with rank bounds") {
    CHECK(parse_type("A5") == std::pair<char, int>('A', 5));
    CHECK(parse_type("b3") == std::pair<char, int>('B', 3));
    CHECK(parse_type("e8") == std::pair<char, int>('E', 8));
    CHECK(build_root_system("c4").label == "C4");

    for (const char* bad : {"", "A", "A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H3", "X2", "A-1", "2A"})
        CHECK_THROWS_AS((void)parse_type(bad), std::invalid_argument);
}

TEST_CASE("positive root counts") {
    auto n_pos = [](const std::string& t) { return build_root_system(t).num_positive(); };
    CHECK(n_pos("A1") == 1);
    CHECK(n_pos("A5") == 15);
    CHECK(n_pos("B4") == 16);
    CHECK(n_pos("C4") == 16);
    CHECK(n_pos("D4") == 12);
    CHECK(n_pos("D6") == 30);
    CHECK(n_pos("G2") == 6);
    CHECK(n_pos("F4") == 24);
    CHECK(n_pos("E6") == 36);
    CHECK(n_pos("E7") == 63);
    CHECK(n_pos("E8") == 120);
}

TEST_CASE("roots are sorted by height and start with the simple roots") {
    for (const std::string& t : {"A4", "B3", "C3", "D5", "G2", "F4", "E6"}) {
        RootSystem sys = build_root_system(t);
        REQUIRE(static_cast<int>(sys.heights.size()) == sys.num_positive());
        for (int r = 0; r + 1 < sys.num_positive(); ++r)
            CHECK(sys.heights[r] <= sys.heights[r + 1]);
        for (int r = 0; r < sys.rank; ++r)
            CHECK(sys.heights[r] == 1);
        // highest root has height h - 1
        CHECK(sys.heights.back() == sys.coxeter_number - 1);
        for (int r = 0; r < sys.num_positive(); ++r)
            CHECK(sys.index_of(sys.roots[r]) == r);
    }
}

TEST_CASE("exponents, Coxeter numbers and group orders") {
    auto check_sys = [](const std::string& t, std::vector<int> exps, int h, const Int& order) {
        RootSystem sys = build_root_system(t);
        CHECK(sys.exponents == exps);
        CHECK(sys.coxeter_number == h);
        CHECK(sys.weyl_order == order);
        // exponent symmetry e_i + e_{rank+1-i} = h
        for (int i = 0; i < sys.rank; ++i)
            CHECK(sys.exponents[i] + sys.exponents[sys.rank - 1 - i] == h);
    };
    check_sys("A1", {1}, 2, 2);
    check_sys("A5", {1, 2, 3, 4, 5}, 6, 720);
    check_sys("B4", {1, 3, 5, 7}, 8, 384);
    check_sys("C4", {1, 3, 5, 7}, 8, 384);
    check_sys("B5", {1, 3, 5, 7, 9}, 10, 3840);
    check_sys("D4", {1, 3, 3, 5}, 6, 192);
    check_sys("D5", {1, 3, 4, 5, 7}, 8, 1920);
    check_sys("D6", {1, 3, 5, 5, 7, 9}, 10, 23040);
    check_sys("G2", {1, 5}, 6, 12);
    check_sys("F4", {1, 5, 7, 11}, 12, 1152);
    check_sys("E6", {1, 4, 5, 7, 8, 11}, 12, 51840);
    check_sys("E7", {1, 5, 7, 9, 11, 13, 17}, 18, 2903040);
    check_sys("E8", {1, 7, 11, 13, 17, 19, 23, 29}, 30, 696729600);
}

TEST_CASE("antichain counts of the positive-root poset") {
    auto cat = [](const std::string& t) { return build_root_system(t).catalan; };
    CHECK(cat("A1") == 2);
    CHECK(cat("A2") == 5);
    CHECK(cat("A3") == 14);
    CHECK(cat("A4") == 42);
    CHECK(cat("A5") == 132);
    CHECK(cat("B2") == 6);
    CHECK(cat("B3") == 20);
    CHECK(cat("B4") == 70);
    CHECK(cat("C4") == 70);
    CHECK(cat("D4") == 50);
    CHECK(cat("D5") == 182);
    CHECK(cat("D6") == 672);
    CHECK(cat("G2") == 8);
    CHECK(cat("F4") == 105);
    CHECK(cat("E6") == 833);
    CHECK(cat("E7") == 4160);
    CHECK(cat("E8") == 25080);
}

TEST_CASE("simple reflections act by the Cartan pairing") {
    RootSystem b2 = build_root_system("B2");
    CHECK(b2.reflect(2, {1, 0}) == std::vector<int>{1, 2}); // long simple picks up 2 alpha_2
    CHECK(b2.reflect(1, {0, 1}) == std::vector<int>{1, 1});

    RootSystem c3 = build_root_system("C3");
    CHECK(c3.reflect(3, {0, 1, 0}) == std::vector<int>{0, 1, 1});
    CHECK(c3.reflect(2, {0, 0, 1}) == std::vector<int>{0, 2, 1}); // alpha_3 is the long root

    RootSystem g2 = build_root_system("G2");
    CHECK(g2.reflect(1, {0, 1}) == std::vector<int>{3, 1}); // alpha_1 short, triple bond
    CHECK(g2.reflect(2, {1, 0}) == std::vector<int>{1, 1});
    CHECK(g2.index_of({3, 2}) == g2.num_positive() - 1); // highest root 3a1 + 2a2

    RootSystem f4 = build_root_system("F4");
    CHECK(f4.reflect(2, {0, 0, 1, 0}) == std::vector<int>{0, 2, 1, 0}); // alpha_2 short
    CHECK(f4.reflect(3, {0, 1, 0, 0}) == std::vector<int>{0, 1, 1, 0});
    CHECK(f4.roots.back() == std::vector<int>{2, 4, 3, 2});

    RootSystem b4 = build_root_system("B4");
    CHECK(b4.roots.back() == std::vector<int>{1, 2, 2, 2});
    RootSystem c4 = build_root_system("C4");
    CHECK(c4.roots.back() == std::vector<int>{2, 2, 2, 1});
    RootSystem d5 = build_root_system("D5");
    CHECK(d5.roots.back() == std::vector<int>{1, 2, 2, 1, 1});
    RootSystem e6 = build_root_system("E6");
    CHECK(e6.roots.back() == std::vector<int>{1, 2, 2, 3, 2, 1});
}

TEST_CASE("signed reflection table agrees with coefficient reflection") {
    for (const std::string& t : {"A3", "B3", "C3", "D4", "G2"}) {
        RootSystem sys = build_root_system(t);
        for (int i = 1; i <= sys.rank; ++i)
            for (int r = 0; r < sys.num_positive(); ++r) {
                int s = sys.reflect_root(i, r);
                std::vector<int> img = sys.reflect(i, sys.roots[r]);
                if (s > 0) {
                    CHECK(sys.index_of(img) == s - 1);
                } else {
                    for (auto& c : img) c = -c;
                    CHECK(sys.index_of(img) == -s - 1);
                }
            }
    }
}

TEST_CASE("root poset order is componentwise domination") {
    RootSystem a3 = build_root_system("A3");
    int a1 = a3.index_of({1, 0, 0});
    int a2 = a3.index_of({0, 1, 0});
    int a12 = a3.index_of({1, 1, 0});
    int a13 = a3.index_of({1, 1, 1});
    CHECK(a3.poset_leq(a1, a1));
    CHECK(a3.poset_leq(a1, a12));
    CHECK(a3.poset_leq(a12, a13));
    CHECK_FALSE(a3.poset_leq(a12, a2));
    CHECK_FALSE(a3.poset_leq(a1, a2));
    CHECK(a3.comparable(a2, a13));
    CHECK_FALSE(a3.comparable(a1, a2));
}

TEST_CASE("root labels") {
    RootSystem a5 = build_root_system("A5");
    CHECK(a5.root_label(a5.index_of({1, 0, 0, 0, 0})) == "a_{11}");
    CHECK(a5.root_label(a5.index_of({1, 1, 1, 0, 0})) == "a_{13}");
    CHECK(a5.root_label(a5.index_of({0, 0, 1, 1, 1})) == "a_{35}");

    RootSystem b4 = build_root_system("B4");
    CHECK(b4.root_label(b4.index_of({0, 0, 0, 1})) == "a_{44}");
    CHECK(b4.root_label(b4.index_of({1, 1, 1, 1})) == "a_{14}");
    CHECK(b4.root_label(b4.index_of({0, 0, 1, 2})) == "a_{34,44}");
    CHECK(b4.root_label(b4.index_of({1, 1, 1, 2})) == "a_{14,44}");

    RootSystem c4 = build_root_system("C4");
    CHECK(c4.root_label(c4.index_of({0, 0, 2, 1})) == "a_{34,33}");
    CHECK(c4.root_label(c4.index_of({1, 1, 1, 1})) == "a_{14}");

    RootSystem d5 = build_root_system("D5");
    CHECK(d5.root_label(d5.index_of({1, 1, 1, 0, 1})) == "a_{13,55}");
    CHECK(d5.root_label(d5.index_of({0, 1, 2, 1, 1})) == "a_{25,33}");

    RootSystem f4 = build_root_system("F4");
    CHECK(f4.root_label(f4.num_positive() - 1) == "(2 4 3 2)");
    RootSystem g2 = build_root_system("G2");
    CHECK(g2.root_label(0) == "(0 1)");
}
