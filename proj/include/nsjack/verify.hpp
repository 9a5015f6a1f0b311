#ifndef NSJACK_VERIFY_HPP
#define NSJACK_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

#include "textform.hpp"
#include "typeb.hpp"

namespace nsjack {

struct SuiteReport {
    std::string name;
    int checks = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

namespace detail {

struct Checker {
    SuiteReport& rep;
    void operator()(bool cond, const std::string& msg) {
        ++rep.checks;
        if (!cond) rep.failures.push_back(msg);
    }
};

inline std::string lbl(const Composition& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

inline std::vector<Composition> all_compositions_up_to(int n, int deg) {
    std::vector<Composition> out;
    for (int d = 0; d <= deg; ++d)
        for (auto& c : compositions_of_degree(n, d)) out.push_back(c);
    return out;
}

} // namespace detail

// Eigenfunction and exchange-relation checks for the nonsymmetric basis.
inline SuiteReport suite_eigen(const ParameterSet& p, int deg) {
    SuiteReport rep{"eigen"};
    detail::Checker check{rep};
    for (const auto& a : detail::all_compositions_up_to(p.n, deg)) {
        Poly e = e_monic(a, p);
        for (int i = 1; i <= p.n; ++i)
            check(apply_U(e, i, p) == kappa(a, i, p) * e,
                  "U_" + std::to_string(i) + " eigenvalue failed at " + detail::lbl(a));
        check(zeta(a, p) == zeta_via_exchange(a, p),
            "solver and exchange-recursion constructions disagree at " + detail::lbl(a));
        // adjacent exchange: zeta_{sa} = s zeta_a - c zeta_a, plus the induced
        // 1^N-value and norm recurrences
        for (int i = 1; i < p.n; ++i) {
            if (a[i - 1] <= a[i]) continue;
            Rational c = p.k / (kappa(a, i, p) - kappa(a, i + 1, p));
            Composition sa = a;
            std::swap(sa[i - 1], sa[i]);
            Poly za = zeta(a, p);
            check(zeta(sa, p) ==
                      za.group_act(Permutation::transposition(p.n, i, i + 1)) - c * za,
                  "exchange relation failed at " + detail::lbl(a));
            check(eval_1n(sa, p) == (1 - c) * eval_1n(a, p),
                  "exchange 1^N-value recurrence failed at " + detail::lbl(a));
            check(zeta_norms(sa, p).p_norm == (1 - c * c) * zeta_norms(a, p).p_norm,
                  "exchange norm recurrence failed at " + detail::lbl(a));
        }
    }
    return rep;
}

// Orthogonality, closed-form norms, and 1^N evaluations.
inline SuiteReport suite_orthogonality(const ParameterSet& p, int deg) {
    SuiteReport rep{"orthogonality"};
    detail::Checker check{rep};
    std::vector<Rational> ones(p.n, 1);
    for (const auto& a : detail::all_compositions_up_to(p.n, deg)) {
        Poly za = zeta(a, p);
        ZetaNorms nm = zeta_norms(a, p);
        check(inner_p(za, za, p) == nm.p_norm,
              "p-norm closed form failed at " + detail::lbl(a));
        check(inner_A(za, za, p) == nm.a_norm,
              "A-norm closed form failed at " + detail::lbl(a));
        check(za.evaluate(ones) == eval_1n(a, p),
              "1^N evaluation closed form failed at " + detail::lbl(a));
    }
    int pair_deg = std::min(deg, 3);
    auto small = detail::all_compositions_up_to(p.n, pair_deg);
    for (size_t i = 0; i < small.size(); ++i)
        for (size_t j = i + 1; j < small.size(); ++j)
            check(inner_p(zeta(small[i], p), zeta(small[j], p), p) == 0,
                  "orthogonality failed at " + detail::lbl(small[i]) + "," +
                      detail::lbl(small[j]));
    return rep;
}

// Symmetric-function expansion of the binomial-series product.
inline SuiteReport suite_hypergeometric(const ParameterSet& p, int deg) {
    SuiteReport rep{"hypergeometric"};
    detail::Checker check{rep};
    auto r = one_f0_check(std::min(deg, 4), p);
    check(r.ok, "binomial-series expansion over symmetric invariants failed");
    return rep;
}

// Parabolic-subgroup coset bases, invariants, and alternants.
inline SuiteReport suite_subgroup(const ParameterSet& p, int deg) {
    SuiteReport rep{"subgroup"};
    detail::Checker check{rep};
    std::vector<Interval> ivs;
    if (p.n >= 2) ivs.push_back(Interval{1, 2});
    if (p.n >= 3) ivs.push_back(Interval{1, 3});
    for (const auto& I : ivs) {
        for (const auto& a : detail::all_compositions_up_to(p.n, std::min(deg, 3))) {
            if (!satisfies_geq(a, I)) continue;
            try {
                CosetData cd = coset_data(a, I, p);  // self-verifies reciprocity
                ++rep.checks;
                Poly j = j_invariant(a, {I}, p);
                Poly sum(p.n);
                Rational hsum = 0;
                for (const auto& b : cd.orbit) {
                    sum += cd.g.at(b);
                    hsum += cd.H[cd.pos(a)][cd.pos(b)];
                }
                check(j == sum, "invariant != coset-basis sum at " + detail::lbl(a));
                Composition ar = reverse_on_interval(a, I);
                check(hsum == eps_product(ar, I, Sign::plus, p),
                      "Gram row sum closed form failed at " + detail::lbl(a));
                for (int i = I.lo; i < I.hi; ++i) {
                    Permutation w = Permutation::transposition(p.n, i, i + 1);
                    check(j.group_act(w) == j,
                          "invariant not symmetric at " + detail::lbl(a));
                }
                if (satisfies_gt(a, I)) {
                    Poly alt = a_alternating(a, {I}, p);
                    Rational hasum = 0;
                    for (const auto& b : cd.orbit)
                        hasum += orbit_sign(a, b, {I}) * cd.H[cd.pos(a)][cd.pos(b)];
                    check(hasum == eps_product(ar, I, Sign::minus, p),
                          "signed Gram row sum closed form failed at " + detail::lbl(a));
                    for (int i = I.lo; i < I.hi; ++i) {
                        Permutation w = Permutation::transposition(p.n, i, i + 1);
                        check(alt.group_act(w) == -alt,
                              "alternant not antisymmetric at " + detail::lbl(a));
                    }
                }
            } catch (const singular_parameter&) {
                continue;  // label excluded at this parameter
            }
        }
    }
    return rep;
}

// Skew-operator symmetries and the evaluation bridge.
inline SuiteReport suite_skew(const ParameterSet& p, int deg) {
    SuiteReport rep{"skew"};
    detail::Checker check{rep};
    if (p.n < 2) return rep;
    Interval I{1, 2};
    int d = std::min(deg, 3);
    for (const auto& m : detail::all_compositions_up_to(p.n, d)) {
        Poly f(p.n);
        f.add_term(m, 1);
        Poly pf = apply_psi(f, I, p);
        Permutation s = Permutation::transposition(p.n, 1, 2);
        check(apply_psi(f.group_act(s), I, p) == -pf.group_act(s),
              "skew symmetry (psi w = sgn(w) w psi) failed at " + detail::lbl(m));
        for (int j = 3; j <= p.n; ++j)
            check(apply_psi(apply_U(f, j, p), I, p) == apply_U(pf, j, p),
                  "psi does not commute with outside U at " + detail::lbl(m));
        for (int i = I.lo; i <= I.hi; ++i)
            check(apply_psi(apply_theta(f, i, I, p), I, p) == apply_theta(pf, i, I, p),
                  "psi does not commute with theta at " + detail::lbl(m));
    }
    for (const auto& a : detail::all_compositions_up_to(p.n, d)) {
        if (!satisfies_gt(a, I)) continue;
        try {
            Poly lhs = apply_psi(zeta(a, p), I, p);
            Composition sa = reverse_on_interval(a, I);
            Poly rhs = psi_scalar(a, I, p) *
                       zeta(sa, p).group_act(longest_element(p.n, I));
            check(lhs == rhs,
                  "psi action on nonsymmetric basis failed at " + detail::lbl(a));
            psi_on_alternant(a, I, p);  // self-verifying
            ++rep.checks;
        } catch (const singular_parameter&) {
            continue;
        }
    }
    // evaluation bridge: both routes inside weyl_evaluate must agree
    IntervalFamily fam({I});
    for (const auto& m : detail::all_compositions_up_to(p.n, std::min(deg, 2))) {
        Poly f(p.n);
        f.add_term(m, 1);
        weyl_evaluate(f, fam, p);
        ++rep.checks;
    }
    return rep;
}

// Signed-reflection operators, Hermite orthogonality, and lowering series.
inline SuiteReport suite_typeb(const ParameterSet& p, int deg) {
    SuiteReport rep{"typeb"};
    detail::Checker check{rep};
    int d = std::min(deg, 3);
    for (const auto& m : detail::all_compositions_up_to(p.n, d)) {
        Poly f(p.n);
        f.add_term(m, 1);
        for (int i = 1; i <= p.n; ++i)
            check(apply_UB(f, i, p) == apply_UB_gauge(f, i, p),
                  "sector and gauge routes to U^B disagree at " + detail::lbl(m));
        if (p.n >= 2)
            check(apply_UB(apply_UB(f, 1, p), 2, p) == apply_UB(apply_UB(f, 2, p), 1, p),
                  "U^B operators do not commute at " + detail::lbl(m));
    }
    // Hermite orthogonality and closed-form squared norms
    std::vector<HermiteLabel> labels;
    for (const auto& b : detail::all_compositions_up_to(p.n, std::min(deg, 4)))
        if (is_b_partition(b) || b == Composition(p.n, 0)) {
            bool std_form = true;
            bool even_seen = false;
            for (int v : b) {
                if (v % 2 != 0 && even_seen) std_form = false;
                if (v % 2 == 0) even_seen = true;
            }
            if (std_form) labels.push_back(HermiteLabel::standard(b));
        }
    // Gaussian orthogonality of the lowered family equals Fischer-type
    // orthogonality of the top terms, so pair the tops.
    std::vector<Poly> tops;
    for (const auto& lb : labels)
        tops.push_back(hermite_top(halved_parts(lb.beta), lb.ell, p));
    for (size_t i = 0; i < labels.size(); ++i) {
        check(inner_B(tops[i], tops[i], p) == hermite_norm_B(labels[i], p),
              "Hermite norm closed form failed at " + detail::lbl(labels[i].beta));
        for (size_t j = i + 1; j < labels.size(); ++j)
            check(inner_B(tops[i], tops[j], p) == 0,
                  "Hermite orthogonality failed at " + detail::lbl(labels[i].beta) +
                      "," + detail::lbl(labels[j].beta));
    }
    // closed-form lowering expansion against the operator series
    Rational s(1, 3);
    for (const auto& a : detail::all_compositions_up_to(p.n, std::min(deg, 3)))
        for (int ell : {0, std::min(1, p.n)}) {
            try {
                check(exp_sL_zeta_expansion(a, ell, s, p) ==
                          apply_exp_L(hermite_top(a, ell, p), s, p),
                      "lowering-series expansion failed at " + detail::lbl(a) +
                          " ell=" + std::to_string(ell));
            } catch (const singular_parameter&) {
                continue;
            }
        }
    // k = 0 reduction of generalized binomial coefficients
    ParameterSet p0{p.n, 0, p.k1};
    for (const auto& a : detail::all_compositions_up_to(p.n, std::min(deg, 3))) {
        if (!is_partition(a)) continue;
        auto bc = binomial_coeffs(a, p0);
        for (const auto& [g, v] : bc) {
            if (!is_partition(g)) continue;
            Rational expect = 1;
            for (int i = 0; i < p.n; ++i) {
                if (g[i] > a[i]) { expect = 0; break; }
                for (int t = 0; t < g[i]; ++t)
                    expect *= Rational(a[i] - t) / (g[i] - t);
            }
            check(v == expect,
                  "k=0 binomial reduction failed at " + detail::lbl(a) + " over " +
                      detail::lbl(g));
        }
    }
    return rep;
}

// Closed-form spectra against direct operator application.
inline SuiteReport suite_spectra(const ParameterSet& p, int deg) {
    SuiteReport rep{"spectra"};
    detail::Checker check{rep};
    for (const auto& lam : detail::all_compositions_up_to(p.n, deg)) {
        if (!is_partition(lam)) continue;
        h1_spectrum(lam, p);  // self-asserting: two closed forms must agree
        ++rep.checks;
    }
    for (const auto& b : detail::all_compositions_up_to(p.n, std::min(deg, 3))) {
        bool std_form = true, even_seen = false;
        for (int v : b) {
            if (v % 2 != 0 && even_seen) std_form = false;
            if (v % 2 == 0) even_seen = true;
        }
        if (!std_form) continue;
        HermiteLabel lb = HermiteLabel::standard(b);
        Poly top = hermite_top(halved_parts(b), lb.ell, p);
        Poly acc(p.n);
        for (int i = 1; i <= p.n; ++i) acc += apply_UB(top, i, p);
        check(acc == spectrum_value(lb, BSpectrum::H3, p) * top,
              "total U^B spectrum failed at " + detail::lbl(b));
    }
    return rep;
}

inline std::vector<std::string> suite_names() {
    return {"eigen", "orthogonality", "hypergeometric", "subgroup",
            "skew",  "typeb",         "spectra"};
}

inline SuiteReport run_suite(const std::string& name, const ParameterSet& p, int deg) {
    if (name == "eigen") return suite_eigen(p, deg);
    if (name == "orthogonality") return suite_orthogonality(p, deg);
    if (name == "hypergeometric") return suite_hypergeometric(p, deg);
    if (name == "subgroup") return suite_subgroup(p, deg);
    if (name == "skew") return suite_skew(p, deg);
    if (name == "typeb") return suite_typeb(p, deg);
    if (name == "spectra") return suite_spectra(p, deg);
    throw user_error("unknown suite: " + name);
}

} // namespace nsjack

#endif
