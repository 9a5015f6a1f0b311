#ifndef NSJACK_TYPEB_HPP
#define NSJACK_TYPEB_HPP

#include "skew.hpp"

namespace nsjack {

// ---- hyperoctahedral reflections ----

inline Poly act_sigma_i(const Poly& f, int i) {
    return f.group_act_signed(Permutation(f.nvars()), {i});
}
inline Poly act_sigma_ij(const Poly& f, int i, int j) {
    return f.group_act(Permutation::transposition(f.nvars(), i, j));
}
inline Poly act_tau_ij(const Poly& f, int i, int j) {
    return f.group_act_signed(Permutation::transposition(f.nvars(), i, j), {i, j});
}

// T^B_i = d_i + k1 (f - sigma_i f)/x_i
//         + k sum_{j!=i} [(f - sigma_ij f)/(x_i-x_j) + (f - tau_ij f)/(x_i+x_j)]
inline Poly apply_dunkl_B(const Poly& f, int i, const ParameterSet& p) {
    if (i < 1 || i > p.n) throw user_error("operator index out of range");
    int n = p.n;
    Poly r = f.partial_derivative(i);
    if (p.k1 != 0) {
        Poly num = f - act_sigma_i(f, i);
        if (!num.is_zero()) r += p.k1 * exact_divide(num, Poly::variable(n, i));
    }
    if (p.k != 0) {
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            r += p.k * divided_difference(f, i, j);
            Poly num = f - act_tau_ij(f, i, j);
            if (!num.is_zero())
                r += p.k * exact_divide(num, Poly::variable(n, i) + Poly::variable(n, j));
        }
    }
    return r;
}

// ---- parity-sector decomposition: f = sum_A x_A g_A(x^2) ----

using ParityMask = unsigned;  // bit i-1 set <=> odd in x_i

inline ParityMask parity_of(const Composition& mono) {
    ParityMask m = 0;
    for (size_t i = 0; i < mono.size(); ++i)
        if (mono[i] % 2 != 0) m |= (1u << i);
    return m;
}

// x^(2c + 1_A) <- y^c, coefficientwise
inline Poly lift_sector(const Poly& g, ParityMask A) {
    Poly out(g.nvars());
    for (const auto& [c, v] : g.terms()) {
        Composition m(c.size());
        for (size_t i = 0; i < c.size(); ++i)
            m[i] = 2 * c[i] + ((A >> i) & 1u);
        out.add_term(m, v);
    }
    return out;
}

inline std::map<ParityMask, Poly> parity_sectors(const Poly& f) {
    std::map<ParityMask, Poly> out;
    for (const auto& [m, c] : f.terms()) {
        ParityMask A = parity_of(m);
        Composition half(m.size());
        for (size_t i = 0; i < m.size(); ++i) half[i] = m[i] / 2;
        auto [it, ins] = out.try_emplace(A, Poly((int)m.size()));
        it->second.add_term(half, c);
    }
    return out;
}

// U_{A,i} on polynomials in y: for i in A, T_i rho_i - k sum{(ij): j<i, j in A};
// for i not in A, T_i rho_i + (k1-k-1/2) - k sum{(ij): j in A or (j not in A, j<i)}.
inline Poly apply_U_sector(const Poly& g, int i, ParityMask A, const ParameterSet& p) {
    bool in_A = (A >> (i - 1)) & 1u;
    Poly r = apply_txi(g, i, p);
    if (!in_A) r += (p.k1 - p.k - Rational(1, 2)) * g;
    for (int j = 1; j <= p.n; ++j) {
        if (j == i) continue;
        bool j_in = (A >> (j - 1)) & 1u;
        bool hit = in_A ? (j_in && j < i) : (j_in || j < i);
        if (hit) r -= p.k * g.group_act(Permutation::transposition(p.n, i, j));
    }
    return r;
}

// U^B_i via the sector bridge U^B_i(x_A g(y)) = 2 x_A U_{A,i} g(y).
inline Poly apply_UB(const Poly& f, int i, const ParameterSet& p) {
    Poly out(p.n);
    for (const auto& [A, g] : parity_sectors(f))
        out += Rational(2) * lift_sector(apply_U_sector(g, i, A, p), A);
    return out;
}

inline Rational inner_B(const Poly& f, const Poly& g, const ParameterSet& p) {
    f.check_same(g);
    Rational total = 0;
    Composition zero(p.n, 0);
    for (const auto& [mono, c] : f.terms()) {
        Poly h = g;
        for (int i = 1; i <= p.n && !h.is_zero(); ++i)
            for (int e = 0; e < mono[i - 1] && !h.is_zero(); ++e)
                h = apply_dunkl_B(h, i, p);
        total += c * h.coeff(zero);
    }
    return total;
}

inline Poly apply_L(const Poly& f, const ParameterSet& p) {
    Poly r(p.n);
    for (int i = 1; i <= p.n; ++i)
        r += apply_dunkl_B(apply_dunkl_B(f, i, p), i, p);
    return r;
}

// e^{sL} f; the series terminates since L lowers degree by 2.
inline Poly apply_exp_L(const Poly& f, const Rational& s, const ParameterSet& p) {
    Poly total = f, term = f;
    int m = 1;
    while (!term.is_zero()) {
        term = apply_L(term, p) * (s / m);
        total += term;
        ++m;
    }
    return total;
}

// Independent route to U^B_i from the gauge identity
// e^{-L/2} U^B_i e^{L/2} = x_i T^B_i - (T^B_i)^2 + 1 + k + (2k1-k) sigma_i
//                          + k sum_{j>i} (sigma_ij + tau_ij).
inline Poly apply_UB_gauge(const Poly& f, int i, const ParameterSet& p) {
    Poly g = apply_exp_L(f, Rational(-1, 2), p);
    Poly tb = apply_dunkl_B(g, i, p);
    Poly mid = Poly::variable(p.n, i) * tb - apply_dunkl_B(tb, i, p) +
               (1 + p.k) * g + (2 * p.k1 - p.k) * act_sigma_i(g, i);
    for (int j = i + 1; j <= p.n; ++j)
        mid += p.k * (act_sigma_ij(g, i, j) + act_tau_ij(g, i, j));
    return apply_exp_L(mid, Rational(1, 2), p);
}

// ---- generalized Hermite polynomials ----

struct HermiteLabel {
    Composition beta;  // standard form: odd parts exactly in positions [1,ell]
    int ell = 0;

    static HermiteLabel standard(const Composition& beta) {
        HermiteLabel lb;
        lb.beta = beta;
        bool even_seen = false;
        for (int v : beta) {
            if (v % 2 != 0) {
                if (even_seen) throw user_error("label is not in standard form");
                ++lb.ell;
            } else {
                even_seen = true;
            }
        }
        return lb;
    }
};

// b(gamma, ell) = (2g_1+1, ..., 2g_ell+1, 2g_{ell+1}, ..., 2g_N)
inline Composition doubled_label(const Composition& gamma, int ell) {
    Composition b(gamma.size());
    for (size_t i = 0; i < gamma.size(); ++i)
        b[i] = 2 * gamma[i] + ((int)i < ell ? 1 : 0);
    return b;
}

inline ParityMask prefix_mask(int ell) { return (1u << ell) - 1u; }

// x_1...x_ell zeta_gamma(x_1^2, ..., x_N^2)
inline Poly hermite_top(const Composition& gamma, int ell, const ParameterSet& p) {
    return lift_sector(zeta(gamma, p), prefix_mask(ell));
}

inline Poly hermite(const HermiteLabel& lb, const ParameterSet& p) {
    return apply_exp_L(hermite_top(halved_parts(lb.beta), lb.ell, p), Rational(-1, 2), p);
}

// general parity member w_A H_beta
inline Poly hermite_general(const std::vector<int>& A_sorted, const HermiteLabel& lb,
                            const ParameterSet& p) {
    if ((int)A_sorted.size() != lb.ell) throw user_error("subset size must match the odd count");
    return hermite(lb, p).group_act(subset_shuffle(p.n, A_sorted));
}

inline Rational hermite_norm_B(const HermiteLabel& lb, const ParameterSet& p) {
    Composition gamma = halved_parts(lb.beta);
    return pow_rational(Rational(2), 2 * total_degree(gamma) + lb.ell) *
           lambda_factor(doubled_label(gamma, lb.ell), p) * zeta_norms(gamma, p).p_norm;
}

// ---- generalized binomial coefficients ----

// (alpha over gamma): zeta_alpha(y+1^N)/zeta_alpha(1^N)
//                     = sum_gamma (alpha over gamma) zeta_gamma(y)/zeta_gamma(1^N)
inline std::map<Composition, Rational> binomial_coeffs(const Composition& alpha,
                                                       const ParameterSet& p) {
    Rational ea = eval_1n(alpha, p);
    if (ea == 0) throw singular_parameter("zeta_alpha(1^N) vanishes");
    std::vector<Poly> shift;
    for (int i = 1; i <= p.n; ++i)
        shift.push_back(Poly::variable(p.n, i) + Poly::constant(p.n, 1));
    Poly f = zeta(alpha, p).substitute(shift);

    std::map<Composition, Rational> out;
    std::map<int, Poly> by_degree;
    for (const auto& [m, c] : f.terms()) {
        auto [it, ins] = by_degree.try_emplace(total_degree(m), Poly(p.n));
        it->second.add_term(m, c);
    }
    for (const auto& [d, part] : by_degree) {
        auto pexp = p_basis_expand(part, p);
        for (const auto& gamma : compositions_of_degree(p.n, d)) {
            // c_gamma = <part, zeta_gamma>_p / |zeta_gamma|^2_p by orthogonality
            Poly zg = zeta(gamma, p);
            Rational num = 0;
            for (const auto& [m, c] : pexp) num += zg.coeff(m) * c;
            if (num == 0) continue;
            Rational c_gamma = num / zeta_norms(gamma, p).p_norm;
            Rational binom = c_gamma * eval_1n(gamma, p) / ea;
            if (binom != 0) out[gamma] = binom;
        }
    }
    return out;
}

// Closed-form expansion of e^{sL}(x_1...x_ell zeta_alpha(y)); checked against
// the direct operator series by callers/tests.
inline Poly exp_sL_zeta_expansion(const Composition& alpha, int ell, const Rational& s,
                                  const ParameterSet& p) {
    if (ell < 0 || ell > p.n) throw user_error("ell out of range");
    Rational la = lambda_factor(doubled_label(alpha, ell), p);
    Composition ap = sort_to_partition(alpha);
    Rational ha1 = hook_product(ap, 1, p);
    Rational ema = eps_product_full(alpha, Sign::minus, p);
    Poly out(p.n);
    for (const auto& [beta, binom] : binomial_coeffs(alpha, p)) {
        Rational lb = lambda_factor(doubled_label(beta, ell), p);
        Rational coeff = binom * pow_rational(4 * s, total_degree(alpha) - total_degree(beta)) *
                         la * hook_product(sort_to_partition(beta), 1, p) * ema /
                         (lb * ha1 * eps_product_full(beta, Sign::minus, p));
        out += coeff * hermite_top(beta, ell, p);
    }
    return out;
}

// ---- spectra ----

enum class BSpectrum { H1, H2, H3 };

inline Rational spectrum_value(const HermiteLabel& lb, BSpectrum which,
                               const ParameterSet& p) {
    int deg = total_degree(lb.beta), ell = lb.ell;
    Rational h3 = deg + 2 * ell * (p.k - p.k1) + p.n * (p.n * p.k + 1 + 2 * p.k1 - p.k);
    switch (which) {
        case BSpectrum::H3: return h3;
        case BSpectrum::H2: return h3 - (p.k1 - p.k) * (p.n - 2 * ell) -
                                   p.n * (p.k + Rational(1, 2));
        case BSpectrum::H1: return h1_spectrum(sort_to_partition(lb.beta), p);
    }
    throw user_error("unknown spectrum");
}

// ---- two-interval invariants and alternants of the signed theory ----

struct TypeBInvariant {
    Poly poly;            // in x
    Rational p_norm;      // closed form
    Rational b_norm;      // closed form
    Rational quotient_1n; // alternant only: quotient by the squared-variable
                          // staircase alternants, evaluated at 1^N
};

namespace detail {

inline std::vector<Interval> split_intervals(int n, int ell) {
    std::vector<Interval> fam;
    if (ell >= 2) fam.push_back(Interval{1, ell});
    if (n - ell >= 2) fam.push_back(Interval{ell + 1, n});
    return fam;
}

} // namespace detail

inline TypeBInvariant typeb_invariant(const Composition& alpha, int ell,
                                      const ParameterSet& p) {
    if (ell < 0 || ell > p.n) throw user_error("ell out of range");
    auto fam = detail::split_intervals(p.n, ell);
    for (const auto& I : fam)
        if (!satisfies_geq(alpha, I))
            throw user_error("invariant requires a nonincreasing label on each interval");
    TypeBInvariant out{Poly(p.n), 0, 0, 0};
    out.poly = lift_sector(j_invariant(alpha, fam, p), prefix_mask(ell));
    Rational orb = 1;
    for (const auto& I : fam) orb *= orbit_count(alpha, I);
    out.p_norm = orb *
                 eps_product(reverse_on_intervals(alpha, fam), fam, Sign::plus, p) *
                 zeta_norms(alpha, p).p_norm;
    out.b_norm = pow_rational(Rational(2), 2 * total_degree(alpha) + ell) *
                 lambda_factor(doubled_label(alpha, ell), p) * out.p_norm;
    return out;
}

inline TypeBInvariant typeb_alternant(const Composition& alpha, int ell,
                                      const ParameterSet& p) {
    if (ell < 0 || ell > p.n) throw user_error("ell out of range");
    auto fam = detail::split_intervals(p.n, ell);
    for (const auto& I : fam)
        if (!satisfies_gt(alpha, I))
            throw user_error("alternant requires a strictly decreasing label on each interval");
    TypeBInvariant out{Poly(p.n), 0, 0, 0};
    out.poly = lift_sector(a_alternating(alpha, fam, p), prefix_mask(ell));
    out.p_norm = factorial(ell) * factorial(p.n - ell) *
                 eps_product(reverse_on_intervals(alpha, fam), fam, Sign::minus, p) *
                 zeta_norms(alpha, p).p_norm;
    out.b_norm = pow_rational(Rational(2), 2 * total_degree(alpha) + ell) *
                 lambda_factor(doubled_label(alpha, ell), p) * out.p_norm;
    out.quotient_1n = fam.empty() ? eval_1n(alpha, p)
                                  : alternant_quotient_eval(alpha, IntervalFamily(fam), p);
    return out;
}

} // namespace nsjack

#endif
