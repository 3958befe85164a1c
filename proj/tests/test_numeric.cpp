#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shicone/numeric.hpp"
#include "shicone/poly.hpp"

#include <stdexcept>

using shicone::Int;
using shicone::Poly;

TEST_CASE("binomial basics and guards") {
    CHECK(shicone::binomial(0, 0) == 1);
    CHECK(shicone::binomial(5, 2) == 10);
    CHECK(shicone::binomial(10, 10) == 1);
    CHECK(shicone::binomial(10, 11) == 0);
    CHECK(shicone::binomial(10, -1) == 0);
    CHECK(shicone::binomial(52, 26) == Int("495918532948104"));
    // any negative upper argument falls under the k < 0 or k > n guard
    CHECK(shicone::binomial(-3, 0) == 0);
    CHECK(shicone::binomial(-3, -1) == 0);
}

TEST_CASE("binomial matches Pascal recurrence") {
    for (int n = 1; n <= 30; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(shicone::binomial(n, k) ==
                  shicone::binomial(n - 1, k - 1) + shicone::binomial(n - 1, k));
}

TEST_CASE("div_exact on integers") {
    CHECK(shicone::div_exact(Int(42), Int(7)) == 6);
    CHECK(shicone::div_exact(Int(-42), Int(7)) == -6);
    CHECK_THROWS_AS((void)shicone::div_exact(Int(5), Int(2)), std::logic_error);
    CHECK_THROWS_AS((void)shicone::div_exact(Int(5), Int(0)), std::logic_error);
}

TEST_CASE("polynomial arithmetic") {
    Poly t = Poly::t();
    Poly p = Poly(Int(1)) + Poly::monomial(1, 3) + Poly::monomial(2); // 1 + 3t + t^2
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 3);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(5) == 0);
    CHECK(p.eval(1) == 5);
    CHECK(p.eval(2) == 11);
    CHECK((p - p).is_zero());
    CHECK(p * Poly() == Poly());
    CHECK(-p + p == Poly());

    Poly q = (Poly(Int(1)) + t) * (Poly(Int(1)) + t); // 1 + 2t + t^2
    CHECK(q.coeff(1) == 2);
    CHECK(q.pretty() == "1 + 2t + t^2");
}

TEST_CASE("polynomial exact division") {
    Poly t = Poly::t();
    Poly u = Poly(Int(2)) + t;                  // 2 + t
    Poly v = Poly(Int(-1)) + Poly::monomial(1, 3); // -1 + 3t
    Poly a = u * v;
    CHECK(div_exact(a, u) == v);
    CHECK(div_exact(a, v) == u);
    CHECK_THROWS_AS((void)div_exact(a + Poly(Int(1)), u), std::logic_error);
    CHECK_THROWS_AS((void)div_exact(a, Poly()), std::logic_error);
    CHECK(div_exact(Poly(), a).is_zero());
}

TEST_CASE("polynomial pretty printing") {
    CHECK(Poly().pretty() == "0");
    CHECK(Poly(Int(7)).pretty() == "7");
    CHECK(Poly::t().pretty() == "t");
    CHECK((-Poly::t()).pretty() == "-t");
    CHECK((Poly(Int(1)) - Poly::monomial(2, 4)).pretty() == "1 - 4t^2");
    CHECK(Poly::monomial(3).pretty("q") == "q^3");
}
