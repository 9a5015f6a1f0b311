#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsjack/combinatorics.hpp"

using namespace nsjack;

TEST_CASE("permutation composition and action on compositions") {
    Permutation s12 = Permutation::transposition(3, 1, 2);
    Permutation s23 = Permutation::transposition(3, 2, 3);
    Permutation w = s12 * s23;  // (a*b)(i) = a(b(i))
    CHECK(w(1) == 2);
    CHECK(w(2) == 3);
    CHECK(w(3) == 1);
    CHECK(w.sign() == 1);
    CHECK((w * w.inverse())(2) == 2);

    // (w alpha)_i = alpha_{w^{-1}(i)}
    Composition a{5, 7, 9};
    Composition wa = w.permute(a);
    for (int i = 1; i <= 3; ++i) CHECK(wa[w(i) - 1] == a[i - 1]);
}

TEST_CASE("grevlex and the solve order refine dominance within a degree") {
    CHECK(grevlex_greater({2, 0, 0}, {1, 1, 0}));
    CHECK(grevlex_greater({1, 1, 0}, {0, 2, 0}));
    CHECK(grevlex_greater({0, 2, 0}, {1, 0, 1}));
    CHECK(total_order_greater({2, 0}, {0, 2}));     // partitions sort first
    CHECK(total_order_greater({0, 2}, {1, 1}));     // by sorted shape
    CHECK_FALSE(grevlex_greater({1, 0}, {1, 0}));
}

TEST_CASE("spectral vector") {
    ParameterSet p{3, Rational(1, 2), 0};
    // kappa_i = Nk - k(#greater + #equal-before) + alpha_i + 1
    Composition a{0, 2, 1};
    CHECK(kappa(a, 1, p) == Rational(3) / 2 - Rational(1) + 1);        // two greater
    CHECK(kappa(a, 2, p) == Rational(3) / 2 + 3);                      // none greater
    CHECK(kappa(a, 3, p) == Rational(3) / 2 - Rational(1, 2) + 2);     // one greater
    // distinctness on a regular parameter
    Composition b{1, 1, 0};
    CHECK(kappa(b, 1, p) != kappa(b, 2, p));
}

TEST_CASE("interval spectral vector counts equal parts only before the interval") {
    ParameterSet p{4, Rational(1, 3), 0};
    Interval I{3, 4};
    Composition beta{2, 0, 2, 0};
    // i=3: greater within all of beta: none (2 is max, one equal at s=1<=l)
    CHECK(kappa_prime(beta, 3, I, p) ==
          4 * p.k - p.k * (0 + 1) + 2 + 1);
    CHECK(kappa_prime(beta, 4, I, p) ==
          4 * p.k - p.k * (2 + 1) + 0 + 1);
}

TEST_CASE("hook product and shifted factorials") {
    ParameterSet p{2, Rational(1), 0};
    // lambda = (2,1), t = 1, k = 1:
    // cell (1,1): 2-1+1+k*1 = 3; (1,2): 2-2+1 = 1; (2,1): 1-1+1 = 1
    CHECK(hook_product({2, 1}, 1, p) == 3);
    CHECK(shifted_factorial(Rational(3), 4) == 3 * 4 * 5 * 6);
    // (t)_lambda = prod_i (t - (i-1)k)_{lambda_i}
    CHECK(shifted_factorial(Rational(3), {2, 1}, p) == (3 * 4) * 2);
}

TEST_CASE("orbit machinery") {
    Composition a{2, 1, 1};
    Interval I{1, 3};
    CHECK(orbit_count(a, I) == 3);
    CHECK(orbit(a, {I}).size() == 3);
    CHECK(interval_group(4, {Interval{1, 2}, Interval{3, 4}}).size() == 4);
    CHECK(reverse_on_interval({5, 1, 2, 3}, Interval{2, 4}) == Composition{5, 3, 2, 1});
}

TEST_CASE("eps products match the reversal identity") {
    // E_eps(alpha^R; I) = prod{1 + eps k/(kappa_i - kappa_j): i<j in I, a_i > a_j}
    ParameterSet p{3, Rational(2, 3), 0};
    Interval I{1, 3};
    Composition a{3, 1, 0};
    Rational direct = 1;
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            if (a[i - 1] > a[j - 1])
                direct *= 1 + p.k / (kappa(a, i, p) - kappa(a, j, p));
    CHECK(eps_product(reverse_on_interval(a, I), I, Sign::plus, p) == direct);
}

TEST_CASE("signed-label helpers") {
    CHECK(halved_parts({3, 1, 2}) == Composition{1, 0, 1});
    CHECK(ceil_parts({3, 1, 2}) == Composition{2, 1, 1});
    CHECK(is_b_partition({3, 1, 2}));       // odd parts decreasing, even parts decreasing
    CHECK_FALSE(is_b_partition({1, 3, 2}));
    Permutation w = subset_shuffle(4, {2, 4});
    // positions 1,2 (standard odd slots) map to 2,4
    CHECK(w(1) == 2);
    CHECK(w(2) == 4);
}

TEST_CASE("enumeration sizes") {
    CHECK(compositions_of_degree(3, 2).size() == 6);
    CHECK(partitions_of_degree(3, 4).size() == 4);  // 4, 31, 22, 211
    CHECK(compositions_of_degree(2, 0).size() == 1);
}
