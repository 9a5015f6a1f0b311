#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsjack/skew.hpp"

using namespace nsjack;

TEST_CASE("skew operator twists the interval group action by sign") {
    ParameterSet p{3, Rational(1, 2), 0};
    Interval I{1, 3};
    for (const auto& m : compositions_of_degree(3, 3)) {
        Poly f(3, m);
        Poly pf = apply_psi(f, I, p);
        for (const auto& w : interval_group(3, {I}))
            CHECK(apply_psi(f.group_act(w), I, p) ==
                  Rational(w.sign()) * pf.group_act(w));
    }
}

TEST_CASE("skew operator commutes with outside operators and interval thetas") {
    ParameterSet p{4, Rational(2, 3), 0};
    Interval I{1, 2};
    for (const auto& m : compositions_of_degree(4, 2)) {
        Poly f(4, m);
        Poly pf = apply_psi(f, I, p);
        for (int j = 3; j <= 4; ++j)
            CHECK(apply_psi(apply_U(f, j, p), I, p) == apply_U(pf, j, p));
        for (int i = 1; i <= 2; ++i)
            CHECK(apply_psi(apply_theta(f, i, I, p), I, p) ==
                  apply_theta(pf, i, I, p));
        // outside transpositions commute without the sign
        Permutation w = Permutation::transposition(4, 3, 4);
        CHECK(apply_psi(f.group_act(w), I, p) == pf.group_act(w));
    }
}

TEST_CASE("skew operator contracts the normalized family") {
    ParameterSet p{3, Rational(1, 2), 0};
    Interval I{1, 2};
    Permutation w0 = longest_element(3, I);
    for (int d = 1; d <= 3; ++d)
        for (const auto& a : compositions_of_degree(3, d)) {
            if (!satisfies_gt(a, I)) continue;
            CHECK(apply_psi(zeta(a, p), I, p) ==
                  psi_scalar(a, I, p) *
                      zeta(reverse_on_interval(a, I), p).group_act(w0));
        }
}

TEST_CASE("skew image of the alternant has the shifted scalar") {
    ParameterSet p{3, Rational(3, 4), 0};
    // internal cross-check against direct operator application must pass
    CHECK_NOTHROW(psi_on_alternant({2, 1, 0}, Interval{1, 3}, p));
    CHECK_NOTHROW(psi_on_alternant({3, 1, 0}, Interval{2, 3}, p));
}

TEST_CASE("alternation-evaluation bridge") {
    ParameterSet p{4, Rational(1, 2), 0};
    IntervalFamily fam({Interval{1, 2}, Interval{3, 4}});
    CHECK(fam.staircase(4) == Composition{1, 1, 0, 0});
    // both evaluation routes inside weyl_evaluate must agree
    for (const auto& m : compositions_of_degree(4, 2)) {
        Poly f(4, m);
        CHECK_NOTHROW(weyl_evaluate(f, fam, p));
    }
    // a symmetric sanity value: constants pass through alternation trivially
    CHECK(weyl_evaluate(Poly::constant(4, 7), IntervalFamily({}), p) == 7);
}

TEST_CASE("closed form for the evaluated alternating sum") {
    ParameterSet p{4, Rational(1, 3), 0};
    IntervalFamily fam({Interval{1, 2}, Interval{3, 4}});
    // self-verifying against the direct route
    CHECK_NOTHROW(alternant_quotient_eval({2, 1, 1, 0}, fam, p));
    CHECK_NOTHROW(alternant_quotient_eval({3, 0, 2, 1}, fam, p));
    ParameterSet p3{3, Rational(2), 0};
    CHECK_NOTHROW(
        alternant_quotient_eval({2, 1, 0}, IntervalFamily({Interval{1, 3}}), p3));
}
