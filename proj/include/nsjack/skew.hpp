#ifndef NSJACK_SKEW_HPP
#define NSJACK_SKEW_HPP

#include "jack.hpp"

namespace nsjack {

struct IntervalFamily {
    std::vector<Interval> intervals;

    explicit IntervalFamily(std::vector<Interval> is) : intervals(std::move(is)) {
        require_disjoint(intervals);
    }

    // (m_1-1, ..., 1, 0, m_2-1, ..., 0, ...)^+, padded to length n
    Composition staircase(int n) const {
        Composition mu;
        for (const auto& I : intervals)
            for (int v = I.size() - 1; v >= 0; --v) mu.push_back(v);
        while ((int)mu.size() < n) mu.push_back(0);
        if ((int)mu.size() > n) throw user_error("intervals exceed the variable count");
        return sort_to_partition(mu);
    }

    Rational size_factorials() const {
        Rational f = 1;
        for (const auto& I : intervals) f *= factorial(I.size());
        return f;
    }
};

// prod{kappa_i(alpha) - kappa_j(alpha): i < j in I}
inline Rational psi_scalar(const Composition& alpha, const Interval& I,
                           const ParameterSet& p) {
    if (!satisfies_gt(alpha, I))
        throw user_error("scalar requires a strictly decreasing label on the interval");
    Rational s = 1;
    for (int i = I.lo; i <= I.hi; ++i)
        for (int j = i + 1; j <= I.hi; ++j)
            s *= kappa(alpha, i, p) - kappa(alpha, j, p);
    return s;
}

// psi_I a_{alpha;I} = prod_{i<j in I}(kappa_i - kappa_j - k) j_{alpha;I};
// verified by direct operator application, then returned.
inline Poly psi_on_alternant(const Composition& alpha, const Interval& I,
                             const ParameterSet& p) {
    Poly lhs = apply_psi(a_alternating(alpha, {I}, p), I, p);
    Rational factor = 1;
    for (int i = I.lo; i <= I.hi; ++i)
        for (int j = i + 1; j <= I.hi; ++j)
            factor *= kappa(alpha, i, p) - kappa(alpha, j, p) - p.k;
    Poly rhs = factor * j_invariant(alpha, {I}, p);
    if (lhs != rhs)
        throw invariant_violation("skew image of the alternant mismatches its closed form");
    return lhs;
}

// (A_{I_1} ... A_{I_t} f)(1^N), computed both by alternation/division and by
// the skew-operator formula; the two routes must agree.
inline Rational weyl_evaluate(const Poly& f, const IntervalFamily& fam,
                              const ParameterSet& p) {
    std::vector<Rational> ones(p.n, Rational(1));
    Poly g = f;
    for (const auto& I : fam.intervals) g = symmetrize_div(g, I);
    Rational direct = g.evaluate(ones);

    Poly h = f;
    for (const auto& I : fam.intervals) h = apply_psi(h, I, p);
    Rational den = shifted_factorial(p.n * p.k + 1, fam.staircase(p.n), p) *
                   fam.size_factorials();
    if (den == 0) throw singular_parameter("(Nk+1)_mu vanishes");
    Rational formula = h.evaluate(ones) / den;
    if (direct != formula)
        throw invariant_violation("division and skew-operator evaluations disagree");
    return direct;
}

// (prod_r A_{I_r} sum_{w in S_I} sgn(w) w zeta_alpha)(1^N): closed form
// checked against the direct route.
inline Rational alternant_quotient_eval(const Composition& alpha,
                                        const IntervalFamily& fam,
                                        const ParameterSet& p) {
    for (const auto& I : fam.intervals)
        if (!satisfies_gt(alpha, I))
            throw user_error("evaluation requires a strictly decreasing label on each interval");
    Composition mu = fam.staircase(p.n);
    Rational den = shifted_factorial(p.n * p.k + 1, mu, p);
    if (den == 0) throw singular_parameter("(Nk+1)_mu vanishes");
    Rational closed = shifted_factorial(p.n * p.k + 1, sort_to_partition(alpha), p) / den *
                      eps_product_full(alpha, Sign::minus, p) /
                      hook_product(sort_to_partition(alpha), 1, p);
    for (const auto& I : fam.intervals)
        for (int i = I.lo; i <= I.hi; ++i)
            for (int j = i + 1; j <= I.hi; ++j)
                closed *= kappa(alpha, i, p) - kappa(alpha, j, p) - p.k;

    Poly za = zeta(alpha, p), alt(p.n);
    for (const auto& w : interval_group(p.n, fam.intervals))
        alt += Rational(w.sign()) * za.group_act(w);
    Rational direct = weyl_evaluate(alt, fam, p);
    if (direct != closed)
        throw invariant_violation("alternant evaluation closed form disagrees with the direct route");
    return closed;
}

} // namespace nsjack

#endif
