#ifndef NSJACK_DUNKL_HPP
#define NSJACK_DUNKL_HPP

#include "polynomial.hpp"

namespace nsjack {

// (f - (ij)f)/(x_i - x_j); always an exact division.
inline Poly divided_difference(const Poly& f, int i, int j) {
    int n = f.nvars();
    Poly num = f - f.group_act(Permutation::transposition(n, i, j));
    if (num.is_zero()) return Poly(n);
    return exact_divide(num, Poly::variable(n, i) - Poly::variable(n, j));
}

// T_i f = d f/dx_i + k sum_{j != i} (f - (ij)f)/(x_i - x_j)
inline Poly apply_dunkl(const Poly& f, int i, const ParameterSet& p) {
    if (i < 1 || i > p.n) throw user_error("operator index out of range");
    Poly r = f.partial_derivative(i);
    if (p.k != 0)
        for (int j = 1; j <= p.n; ++j)
            if (j != i) r += p.k * divided_difference(f, i, j);
    return r;
}

// The degree-preserving raising composite: f -> T_i(x_i f) + k f.
inline Poly apply_txi(const Poly& f, int i, const ParameterSet& p) {
    return apply_dunkl(Poly::variable(p.n, i) * f, i, p) + p.k * f;
}

// U_i = T_i rho_i - k sum_{j<i} (ij)
inline Poly apply_U(const Poly& f, int i, const ParameterSet& p) {
    Poly r = apply_txi(f, i, p);
    for (int j = 1; j < i; ++j)
        r -= p.k * f.group_act(Permutation::transposition(p.n, i, j));
    return r;
}

// tau_i = T_i rho_i - k sum_{j <= lo-1} (ij), for i in I = [lo, hi]
inline Poly apply_tau(const Poly& f, int i, const Interval& I, const ParameterSet& p) {
    if (!I.contains(i)) throw user_error("tau: index not in interval");
    Poly r = apply_txi(f, i, p);
    for (int j = 1; j < I.lo; ++j)
        r -= p.k * f.group_act(Permutation::transposition(p.n, i, j));
    return r;
}

// theta_i = tau_i - (k/2) sum_{j in I, j != i} (ij)
inline Poly apply_theta(const Poly& f, int i, const Interval& I, const ParameterSet& p) {
    Poly r = apply_tau(f, i, I, p);
    for (int j = I.lo; j <= I.hi; ++j)
        if (j != i)
            r -= (p.k / 2) * f.group_act(Permutation::transposition(p.n, i, j));
    return r;
}

// xi_i = (1/k)(U_i - (k(N-1)+1))
inline Poly apply_xi(const Poly& f, int i, const ParameterSet& p) {
    if (p.k == 0) throw singular_parameter("xi requires k != 0");
    return (apply_U(f, i, p) - (p.k * (p.n - 1) + 1) * f) / p.k;
}

struct OperatorName {
    enum class Tag { T, Txi, U, tau, theta, xi } tag;
    int i;
    Interval I{1, 1};  // used by tau/theta only
};

inline Poly apply_named(const OperatorName& op, const Poly& f, const ParameterSet& p) {
    using Tag = OperatorName::Tag;
    switch (op.tag) {
        case Tag::T: return apply_dunkl(f, op.i, p);
        case Tag::Txi: return apply_txi(f, op.i, p);
        case Tag::U: return apply_U(f, op.i, p);
        case Tag::tau: return apply_tau(f, op.i, op.I, p);
        case Tag::theta: return apply_theta(f, op.i, op.I, p);
        case Tag::xi: return apply_xi(f, op.i, p);
    }
    throw user_error("unknown operator");
}

// <f,g>_A = (f(T)g)(0): substitute T_i for x_i in f, apply to g, take the
// constant term.
inline Rational inner_A(const Poly& f, const Poly& g, const ParameterSet& p) {
    f.check_same(g);
    Rational total = 0;
    Composition zero(p.n, 0);
    for (const auto& [mono, c] : f.terms()) {
        Poly h = g;
        for (int i = 1; i <= p.n && !h.is_zero(); ++i)
            for (int e = 0; e < mono[i - 1] && !h.is_zero(); ++e)
                h = apply_dunkl(h, i, p);
        total += c * h.coeff(zero);
    }
    return total;
}

// <f,g>_p: pair the monomial coefficients of f against the p-basis
// expansion of g (<x^a, p_b>_p = delta_ab).
inline Rational inner_p(const Poly& f, const Poly& g, const ParameterSet& p) {
    f.check_same(g);
    Rational total = 0;
    for (const auto& [mono, c] : p_basis_expand(g, p)) total += f.coeff(mono) * c;
    return total;
}

// Torus pairing restricted to a single E_lambda, via the ratio to the
// p-product.
inline Rational inner_torus_on_Elambda(const Poly& f, const Poly& g,
                                       const Composition& lambda, const ParameterSet& p) {
    Rational den = shifted_factorial((p.n - 1) * p.k + 1, lambda, p);
    if (den == 0) throw singular_parameter("((N-1)k+1)_lambda vanishes");
    return shifted_factorial(p.n * p.k + 1, lambda, p) / den * inner_p(f, g, p);
}

// Division symmetrizer: A_I f = (1/m!) sum_{w in S_I} sgn(w) wf / a_I.
inline Poly symmetrize_div(const Poly& f, const Interval& I) {
    int n = f.nvars();
    Poly alt(n);
    for (const auto& w : interval_group(n, {I}))
        alt += Rational(w.sign()) * f.group_act(w);
    if (alt.is_zero()) return Poly(n);
    return exact_divide(alt, alternating_poly(n, {I})) / factorial(I.size());
}

namespace detail {

// psi_s for the interval prefix [lo, lo+s-1], applied to f.
inline Poly apply_psi_rec(const Poly& f, int lo, int s, const ParameterSet& p) {
    if (s == 1) return f;
    // psi~_s = U_lo ... U_{lo+s-2} psi_{s-1}
    auto psi_tilde = [&](const Poly& g) {
        Poly h = apply_psi_rec(g, lo, s - 1, p);
        for (int i = lo + s - 2; i >= lo; --i) h = apply_U(h, i, p);
        return h;
    };
    int t = lo + s - 1;
    Poly r = psi_tilde(f);
    for (int i = lo; i < t; ++i) {
        Permutation tr = Permutation::transposition(p.n, i, t);
        r -= psi_tilde(f.group_act(tr)).group_act(tr);
    }
    return r;
}

} // namespace detail

// The skew operator psi_I of the interval I (degree-preserving).
inline Poly apply_psi(const Poly& f, const Interval& I, const ParameterSet& p) {
    return detail::apply_psi_rec(f, I.lo, I.size(), p);
}

} // namespace nsjack

#endif
