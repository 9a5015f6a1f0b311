#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsjack/polynomial.hpp"
#include "nsjack/textform.hpp"

using namespace nsjack;

static Poly x(int n, int i) { return Poly::variable(n, i); }

TEST_CASE("ring arithmetic and canonical form") {
    Poly f = x(2, 1) * x(2, 1) + Rational(2) * x(2, 2);
    Poly g = f - f;
    CHECK(g.is_zero());
    CHECK((f * Poly::constant(2, 1)) == f);
    CHECK(f.coeff({2, 0}) == 1);
    CHECK(f.coeff({0, 1}) == 2);
    CHECK(f.coeff({1, 1}) == 0);
    CHECK(f.degree() == 2);
    CHECK(poly_to_text(f) == "1*x1^2 + 2*x2");
    CHECK(poly_to_text(Poly(2)) == "0");
    CHECK(poly_to_text(Rational(2) * x(2, 1) + x(2, 2)) == "2*x1 + 1*x2");
    CHECK(poly_to_text(x(2, 1) - x(2, 2)) == "1*x1 - 1*x2");
}

TEST_CASE("evaluation, substitution, group action, derivative") {
    Poly f = x(2, 1) * x(2, 1) * x(2, 2);  // x1^2 x2
    CHECK(f.evaluate({Rational(2), Rational(3)}) == 12);
    Poly swapped = f.group_act(Permutation::transposition(2, 1, 2));
    CHECK(swapped.coeff({1, 2}) == 1);
    Poly sub = f.substitute({x(2, 1) + x(2, 2), x(2, 2)});
    CHECK(sub.coeff({0, 3}) == 1);
    CHECK(sub.coeff({2, 1}) == 1);
    CHECK(sub.coeff({1, 2}) == 2);
    CHECK(f.partial_derivative(1) == Rational(2) * x(2, 1) * x(2, 2));
    // signed action: flip x2
    Poly flipped = f.group_act_signed(Permutation(2), {2});
    CHECK(flipped == -f);
}

TEST_CASE("exact division") {
    Poly n2 = x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2);
    Poly q = exact_divide(n2, x(2, 1) - x(2, 2));
    CHECK(q == x(2, 1) + x(2, 2));
    CHECK_THROWS_AS(exact_divide(x(2, 1) * x(2, 1) + x(2, 2), x(2, 1) - x(2, 2)),
                    invariant_violation);
}

TEST_CASE("alternating polynomial") {
    Poly a = alternating_poly(3, {Interval{1, 2}});
    CHECK(a == x(3, 1) - x(3, 2));
    Poly a2 = alternating_poly(2, {Interval{1, 2}});
    CHECK(a2.group_act(Permutation::transposition(2, 1, 2)) == -a2);
}

TEST_CASE("deformed power-sum basis") {
    ParameterSet p{2, Rational(1), 0};
    // p_{(0,1)} = k x1 + (k+1) x2: not grevlex-triangular
    Poly p01 = p_basis({0, 1}, p);
    CHECK(p01 == p.k * x(2, 1) + (p.k + 1) * x(2, 2));
    Poly p10 = p_basis({1, 0}, p);
    CHECK(p10 == (p.k + 1) * x(2, 1) + p.k * x(2, 2));

    // expansion inverts construction for every composition of degree <= 3
    for (int d = 0; d <= 3; ++d)
        for (const auto& a : compositions_of_degree(2, d)) {
            auto coeffs = p_basis_expand(p_basis(a, p), p);
            for (const auto& [m, c] : coeffs) {
                if (m == a)
                    CHECK(c == 1);
                else
                    CHECK(c == 0);
            }
        }
}

TEST_CASE("p-basis expansion is linear and exact") {
    ParameterSet p{3, Rational(2, 3), 0};
    Poly f = Rational(5) * x(3, 1) * x(3, 2) - x(3, 3) * x(3, 3);
    auto coeffs = p_basis_expand(f, p);
    Poly rebuilt(3);
    for (const auto& [m, c] : coeffs) rebuilt += c * p_basis(m, p);
    CHECK(rebuilt == f);
}
