#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsjack/typeb.hpp"

using namespace nsjack;

static Poly x(int n, int i) { return Poly::variable(n, i); }

TEST_CASE("signed difference-differential operator, smallest cases") {
    ParameterSet p1{1, 0, Rational(3, 2)};
    CHECK(apply_dunkl_B(x(1, 1), 1, p1) == Poly::constant(1, 1 + 2 * p1.k1));
    CHECK(apply_dunkl_B(x(1, 1) * x(1, 1), 1, p1) == Rational(2) * x(1, 1));
    ParameterSet p2{2, Rational(1), Rational(1, 2)};
    // T^B_1 x1 = 1 + 2 k1 + 2k (the x1-x2 and x1+x2 terms each contribute k)
    CHECK(apply_dunkl_B(x(2, 1), 1, p2) ==
          Poly::constant(2, 1 + 2 * p2.k1 + 2 * p2.k));
    // T^B_1 x2^2 = -2k x1 (both reflection terms contribute)
    CHECK(apply_dunkl_B(x(2, 2) * x(2, 2), 1, p2) == -2 * p2.k * x(2, 1));
    // operators commute
    for (const auto& m : compositions_of_degree(2, 3)) {
        Poly f(2, m);
        CHECK(apply_dunkl_B(apply_dunkl_B(f, 1, p2), 2, p2) ==
              apply_dunkl_B(apply_dunkl_B(f, 2, p2), 1, p2));
    }
}

TEST_CASE("parity sectors decompose and lift back") {
    Poly f = x(2, 1) * x(2, 1) * x(2, 2) + Rational(3) * x(2, 2);
    Poly sum(2);
    for (const auto& [A, g] : parity_sectors(f)) sum += lift_sector(g, A);
    CHECK(sum == f);
}

TEST_CASE("sector and gauge routes to the type-B Cherednik operator agree") {
    ParameterSet p{2, Rational(1, 2), Rational(2)};
    CHECK(apply_UB(Poly::constant(2, 1), 1, p) ==
          apply_UB_gauge(Poly::constant(2, 1), 1, p));
    for (int d = 0; d <= 3; ++d)
        for (const auto& m : compositions_of_degree(2, d)) {
            Poly f(2, m);
            for (int i = 1; i <= 2; ++i)
                CHECK(apply_UB(f, i, p) == apply_UB_gauge(f, i, p));
        }
    // commutativity
    Poly f = x(2, 1) * x(2, 2) * x(2, 2);
    CHECK(apply_UB(apply_UB(f, 1, p), 2, p) == apply_UB(apply_UB(f, 2, p), 1, p));
}

TEST_CASE("top terms are joint eigenfunctions with the stated eigenvalues") {
    ParameterSet p{2, Rational(1), Rational(1, 2)};
    // gamma arbitrary, ell odd slots: c_i = 2 kappa_i(gamma) for i <= ell,
    // c_i = 2(kappa_i(gamma) + k1 - k - 1/2) for i > ell
    for (int ell = 0; ell <= 2; ++ell)
        for (int d = 0; d <= 2; ++d)
            for (const auto& g : compositions_of_degree(2, d)) {
                Poly top = hermite_top(g, ell, p);
                for (int i = 1; i <= 2; ++i) {
                    Rational c = 2 * kappa(g, i, p);
                    if (i > ell) c += 2 * (p.k1 - p.k - Rational(1, 2));
                    CHECK(apply_UB(top, i, p) == c * top);
                }
            }
}

TEST_CASE("lowered family: frozen one-variable case") {
    ParameterSet p{1, 0, Rational(2)};
    HermiteLabel lb = HermiteLabel::standard({2});
    // e^{-L/2} x^2 = x^2 - (1 + 2 k1)
    CHECK(hermite(lb, p) ==
          x(1, 1) * x(1, 1) - Poly::constant(1, 1 + 2 * p.k1));
    CHECK(spectrum_value(lb, BSpectrum::H3, p) == 2 + 1 + 2 * p.k1);
}

TEST_CASE("Fischer-type orthogonality and closed-form norms of the tops") {
    ParameterSet p{2, Rational(1), Rational(1, 2)};
    std::vector<HermiteLabel> labels = {
        HermiteLabel::standard({0, 0}), HermiteLabel::standard({1, 0}),
        HermiteLabel::standard({1, 1}), HermiteLabel::standard({2, 0}),
        HermiteLabel::standard({3, 1}), HermiteLabel::standard({2, 2})};
    std::vector<Poly> tops;
    for (const auto& lb : labels)
        tops.push_back(hermite_top(halved_parts(lb.beta), lb.ell, p));
    for (size_t i = 0; i < labels.size(); ++i) {
        CHECK(inner_B(tops[i], tops[i], p) == hermite_norm_B(labels[i], p));
        for (size_t j = i + 1; j < labels.size(); ++j)
            CHECK(inner_B(tops[i], tops[j], p) == 0);
    }
}

TEST_CASE("lowering series expansion matches direct operator application") {
    ParameterSet p{2, Rational(1, 2), Rational(2)};
    Rational s(1, 2);
    for (int ell = 0; ell <= 1; ++ell)
        for (int d = 0; d <= 2; ++d)
            for (const auto& a : compositions_of_degree(2, d))
                CHECK(exp_sL_zeta_expansion(a, ell, s, p) ==
                      apply_exp_L(hermite_top(a, ell, p), s, p));
}

TEST_CASE("generalized binomial coefficients") {
    ParameterSet p{2, Rational(1, 2), 0};
    auto bc = binomial_coeffs({2, 1}, p);
    CHECK(bc.at({2, 1}) == 1);
    CHECK(bc.at({0, 0}) == 1);
    // support: only labels whose sorted shape is contained in (2,1)
    for (const auto& [g, v] : bc) {
        Composition gp = sort_to_partition(g);
        CHECK(gp[0] <= 2);
        CHECK(gp[1] <= 1);
    }
    // k = 0: products of ordinary binomial coefficients on partitions
    ParameterSet p0{2, 0, 0};
    auto bc0 = binomial_coeffs({3, 1}, p0);
    CHECK(bc0.at({2, 1}) == 3);   // C(3,2) C(1,1)
    CHECK(bc0.at({1, 0}) == 3);   // C(3,1) C(1,0)
    CHECK(bc0.at({3, 0}) == 1);
}

TEST_CASE("two-interval invariants and alternants in the signed theory") {
    ParameterSet p{3, Rational(1), Rational(1, 2)};
    int ell = 2;
    Composition a{2, 1, 1};  // nonincreasing on [1,2] and on [3,3]
    TypeBInvariant inv = typeb_invariant(a, ell, p);
    // invariance: permutations inside [1,2], sign flips on x3 (even powers)
    Permutation s12 = Permutation::transposition(3, 1, 2);
    CHECK(inv.poly.group_act(s12) == inv.poly);
    CHECK(act_sigma_i(inv.poly, 3) == inv.poly);
    CHECK(act_sigma_i(inv.poly, 1) == -inv.poly);  // odd in x1
    CHECK(inner_B(inv.poly, inv.poly, p) == inv.b_norm);

    Composition b{2, 1, 1};  // strictly decreasing on [1,2]
    TypeBInvariant alt = typeb_alternant(b, ell, p);
    CHECK(alt.poly.group_act(s12) == -alt.poly);
    CHECK(inner_B(alt.poly, alt.poly, p) == alt.b_norm);
    CHECK_NOTHROW(typeb_alternant({2, 1, 0}, 0, p));  // whole-line alternant
}

TEST_CASE("spectra closed forms against operator application") {
    ParameterSet p{2, Rational(1), Rational(1, 2)};
    for (const auto& beta :
         {Composition{0, 0}, Composition{1, 0}, Composition{1, 1},
          Composition{2, 0}, Composition{3, 1}}) {
        HermiteLabel lb = HermiteLabel::standard(beta);
        Poly top = hermite_top(halved_parts(beta), lb.ell, p);
        Poly acc(2);
        for (int i = 1; i <= 2; ++i) acc += apply_UB(top, i, p);
        CHECK(acc == spectrum_value(lb, BSpectrum::H3, p) * top);
        // gauge shift between the two confined Hamiltonians
        CHECK(spectrum_value(lb, BSpectrum::H2, p) ==
              spectrum_value(lb, BSpectrum::H3, p) -
                  (p.k1 - p.k) * (2 - 2 * lb.ell) - 2 * (p.k + Rational(1, 2)));
    }
}
