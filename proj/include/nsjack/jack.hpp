#ifndef NSJACK_JACK_HPP
#define NSJACK_JACK_HPP

#include "dunkl.hpp"

#include <mutex>

namespace nsjack {

namespace detail {

// Monomials of one total degree, sorted descending in the solve order
// (sorted parts compared first, grevlex tie-breaks), plus the action of
// each U_i on each monomial. Cached per (parameters, degree).
struct DegreeSpace {
    std::vector<Composition> monos;              // descending
    std::map<Composition, int> index;
    std::vector<std::map<Composition, Poly>> u;  // u[i-1][mono] = U_i x^mono
};

inline const DegreeSpace& degree_space(int degree, const ParameterSet& p) {
    static std::map<std::pair<ParameterSet, int>, DegreeSpace> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(p, degree);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    DegreeSpace ds;
    ds.monos = compositions_of_degree(p.n, degree);
    std::sort(ds.monos.begin(), ds.monos.end(), total_order_greater);
    for (int i = 0; i < (int)ds.monos.size(); ++i) ds.index[ds.monos[i]] = i;
    ds.u.resize(p.n);
    for (int i = 1; i <= p.n; ++i)
        for (const auto& m : ds.monos)
            ds.u[i - 1].emplace(m, apply_U(Poly(p.n, m), i, p));
    return cache.emplace(key, std::move(ds)).first->second;
}

} // namespace detail

// The monic nonsymmetric Jack polynomial: the unique eigenfunction
// U_i E = kappa_i(alpha) E with leading coefficient 1 at x^alpha,
// supported on monomials below alpha in the solve order.
inline Poly e_monic(const Composition& alpha, const ParameterSet& p) {
    if ((int)alpha.size() != p.n) throw user_error("label length mismatch");
    static std::map<std::pair<ParameterSet, Composition>, Poly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({p, alpha});
        if (it != cache.end()) return it->second;
    }
    const auto& ds = detail::degree_space(total_degree(alpha), p);
    std::vector<Rational> target(p.n);
    for (int i = 1; i <= p.n; ++i) target[i - 1] = kappa(alpha, i, p);

    Poly e(p.n, alpha);  // coefficient 1 at the top
    int start = ds.index.at(alpha);
    for (int gi = start + 1; gi < (int)ds.monos.size(); ++gi) {
        const Composition& gamma = ds.monos[gi];
        // pick an i whose eigenvalue separates gamma from alpha
        int sep = 0;
        for (int i = 1; i <= p.n; ++i)
            if (kappa(gamma, i, p) != target[i - 1]) { sep = i; break; }
        Rational s = 0;
        int use = sep ? sep : 1;
        for (const auto& [beta, c] : e.terms())
            s += c * ds.u[use - 1].at(beta).coeff(gamma);
        if (s == 0) continue;
        if (!sep)
            throw singular_parameter("eigenvalue lists of two compositions coincide for every U_i");
        e.add_term(gamma, s / (target[sep - 1] - kappa(gamma, sep, p)));
    }
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(std::make_pair(p, alpha), std::move(e)).first->second;
}

// zeta_alpha = E_alpha * h(alpha^+, k+1) E_+(alpha) E_-(alpha) / h(alpha^+, 1)
inline Poly zeta(const Composition& alpha, const ParameterSet& p) {
    Composition lam = sort_to_partition(alpha);
    Rational scale = hook_product(lam, p.k + 1, p) *
                     eps_product_full(alpha, Sign::plus, p) *
                     eps_product_full(alpha, Sign::minus, p) /
                     hook_product(lam, 1, p);
    return e_monic(alpha, p) * scale;
}

// Independent construction of zeta_alpha: start from the partition case and
// walk down with the exchange relation
//   zeta_{sigma beta} = sigma zeta_beta - c zeta_beta,
//   c = k/(kappa_i(beta) - kappa_{i+1}(beta)), valid when beta_i > beta_{i+1}.
inline Poly zeta_via_exchange(const Composition& alpha, const ParameterSet& p) {
    // bubble alpha up to its sorted form, recording the swaps
    Composition cur = alpha;
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i + 1 < p.n; ++i)
            if (cur[i] < cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]);
                word.push_back(i + 1);
                moved = true;
            }
    }
    Poly f = zeta(cur, p);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        Rational den = kappa(cur, i, p) - kappa(cur, i + 1, p);
        if (den == 0)
            throw singular_parameter("kappa_" + std::to_string(i) + " = kappa_" +
                                     std::to_string(i + 1));
        Rational c = p.k / den;
        f = f.group_act(Permutation::transposition(p.n, i, i + 1)) - c * f;
        std::swap(cur[i - 1], cur[i]);
    }
    return f;
}

namespace detail {

// any w with w(lambda) = alpha, lambda = alpha^+ (well-defined action on
// zeta_lambda/omega_lambda by stabilizer invariance)
inline Permutation sorting_permutation(const Composition& alpha) {
    int n = (int)alpha.size();
    Composition lam = sort_to_partition(alpha);
    std::vector<int> winv(n, -1);
    std::vector<char> used(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!used[j] && lam[j] == alpha[i]) {
                winv[i] = j;
                used[j] = 1;
                break;
            }
    return Permutation(std::move(winv)).inverse();
}

} // namespace detail

// omega_alpha: the multiple of E whose p-basis coefficient at alpha^+ is 1,
// transported along the orbit by the group action.
inline Poly omega(const Composition& alpha, const ParameterSet& p) {
    Composition lam = sort_to_partition(alpha);
    Poly zl = zeta(lam, p);
    Rational lead = p_basis_expand(zl, p).at(lam);
    if (lead == 0) throw invariant_violation("omega: vanishing p-leading coefficient");
    Poly ol = zl / lead;
    if (alpha == lam) return ol;
    return ol.group_act(detail::sorting_permutation(alpha));
}

// Closed form for zeta_alpha(1,...,1).
inline Rational eval_1n(const Composition& alpha, const ParameterSet& p) {
    Composition lam = sort_to_partition(alpha);
    return eps_product_full(alpha, Sign::minus, p) *
           shifted_factorial(p.n * p.k + 1, lam, p) / hook_product(lam, 1, p);
}

struct ZetaNorms {
    Rational p_norm, a_norm, torus_norm;
};

inline ZetaNorms zeta_norms(const Composition& alpha, const ParameterSet& p) {
    Composition lam = sort_to_partition(alpha);
    Rational pn = eps_product_full(alpha, Sign::plus, p) *
                  eps_product_full(alpha, Sign::minus, p) *
                  hook_product(lam, p.k + 1, p) / hook_product(lam, 1, p);
    Rational top = shifted_factorial(p.n * p.k + 1, lam, p);
    Rational bot = shifted_factorial((p.n - 1) * p.k + 1, lam, p);
    if (bot == 0) throw singular_parameter("((N-1)k+1)_lambda vanishes");
    return ZetaNorms{pn, top * pn, top / bot * pn};
}

// Coset basis data for one interval: g_beta = w zeta_alpha, the base-change
// matrix B (zeta_beta = sum_gamma B(gamma,beta) g_gamma) and the Gram matrix
// H(beta,gamma) = <g_beta,g_gamma>/|zeta_alpha|^2, p-product.
struct CosetData {
    Composition alpha;
    Interval I;
    std::vector<Composition> orbit;  // descending solve order, orbit[0] = alpha
    std::map<Composition, Poly> g;
    std::vector<std::vector<Rational>> B, H;

    int pos(const Composition& beta) const {
        for (int i = 0; i < (int)orbit.size(); ++i)
            if (orbit[i] == beta) return i;
        throw user_error("composition not in orbit");
    }
};

inline CosetData coset_data(const Composition& alpha, const Interval& I,
                            const ParameterSet& p) {
    if (!satisfies_geq(alpha, I))
        throw user_error("coset basis requires a nonincreasing label on the interval");
    CosetData cd;
    cd.alpha = alpha;
    cd.I = I;
    for (const auto& b : orbit(alpha, {I})) cd.orbit.push_back(b);
    std::sort(cd.orbit.begin(), cd.orbit.end(), total_order_greater);
    int m = (int)cd.orbit.size();

    Poly za = zeta(alpha, p);
    for (const auto& w : interval_group(p.n, {I})) {
        Composition beta = w.permute(alpha);
        if (!cd.g.count(beta)) cd.g.emplace(beta, za.group_act(w));
    }

    // G[d][c] = coefficient of zeta_{orbit[d]} in g_{orbit[c]}; B = G^{-1}
    std::vector<Poly> zb(m);
    std::vector<Rational> znorm(m);
    for (int d = 0; d < m; ++d) {
        zb[d] = zeta(cd.orbit[d], p);
        znorm[d] = inner_p(zb[d], zb[d], p);
        if (znorm[d] == 0) throw singular_parameter("vanishing zeta norm in orbit");
    }
    std::vector<std::vector<Rational>> G(m, std::vector<Rational>(m));
    for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d)
            G[d][c] = inner_p(zb[d], cd.g.at(cd.orbit[c]), p) / znorm[d];
    cd.B.assign(m, std::vector<Rational>(m, Rational(0)));
    for (int c = 0; c < m; ++c) {
        std::vector<Rational> e(m, Rational(0));
        e[c] = 1;
        auto col = detail::gauss_solve(G, e);
        for (int d = 0; d < m; ++d) cd.B[d][c] = col[d];
    }
    cd.H.assign(m, std::vector<Rational>(m, Rational(0)));
    Rational an = inner_p(za, za, p);
    for (int r = 0; r < m; ++r)
        for (int c = r; c < m; ++c)
            cd.H[r][c] = cd.H[c][r] =
                inner_p(cd.g.at(cd.orbit[r]), cd.g.at(cd.orbit[c]), p) / an;

    // H(w1 a, w2 a) = B^{-1}(a, w1^{-1} w2 a) = G(a, w1^{-1} w2 a)
    int a0 = cd.pos(alpha);
    for (const auto& w1 : interval_group(p.n, {I}))
        for (const auto& w2 : interval_group(p.n, {I})) {
            Rational lhs = cd.H[cd.pos(w1.permute(alpha))][cd.pos(w2.permute(alpha))];
            Rational rhs = G[a0][cd.pos((w1.inverse() * w2).permute(alpha))];
            if (lhs != rhs)
                throw invariant_violation("Gram/base-change reciprocity failed");
        }
    return cd;
}

// sign of the (unique, parts strictly decreasing per interval) w in S_I with
// w alpha = beta
inline int orbit_sign(const Composition& alpha, const Composition& beta,
                      const std::vector<Interval>& intervals) {
    int sign = 1;
    for (const auto& I : intervals) {
        std::vector<int> perm;  // position in alpha of each beta entry
        std::vector<char> used(I.size(), 0);
        for (int i = I.lo; i <= I.hi; ++i) {
            bool found = false;
            for (int j = I.lo; j <= I.hi; ++j)
                if (!used[j - I.lo] && alpha[j - 1] == beta[i - 1]) {
                    used[j - I.lo] = 1;
                    perm.push_back(j);
                    found = true;
                    break;
                }
            if (!found) throw user_error("compositions not in the same orbit");
        }
        for (size_t a = 0; a < perm.size(); ++a)
            for (size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) sign = -sign;
    }
    return sign;
}

// j_{alpha;I} = E_+(alpha^R;I) sum_{beta in orbit} zeta_beta / E_+(beta;I)
inline Poly j_invariant(const Composition& alpha, const std::vector<Interval>& intervals,
                        const ParameterSet& p) {
    for (const auto& I : intervals)
        if (!satisfies_geq(alpha, I))
            throw user_error("invariant sum requires a nonincreasing label on each interval");
    Poly out(p.n);
    for (const auto& beta : orbit(alpha, intervals))
        out += zeta(beta, p) / eps_product(beta, intervals, Sign::plus, p);
    return eps_product(reverse_on_intervals(alpha, intervals), intervals, Sign::plus, p) * out;
}

// a_{alpha;I} = E_-(alpha^R;I) sum_{w} sgn(w) zeta_{w alpha} / E_-(w alpha;I)
inline Poly a_alternating(const Composition& alpha, const std::vector<Interval>& intervals,
                          const ParameterSet& p) {
    for (const auto& I : intervals)
        if (!satisfies_gt(alpha, I))
            throw user_error("alternating sum requires a strictly decreasing label on each interval");
    Poly out(p.n);
    for (const auto& beta : orbit(alpha, intervals))
        out += Rational(orbit_sign(alpha, beta, intervals)) * zeta(beta, p) /
               eps_product(beta, intervals, Sign::minus, p);
    return eps_product(reverse_on_intervals(alpha, intervals), intervals, Sign::minus, p) * out;
}

struct OneF0Report {
    bool ok = true;
    std::vector<Composition> failures;
};

// Term-by-term identity between prod_i (1-x_i)^{-(Nk+1)} and the invariant
// expansion sum_lambda (Nk+1)_lambda / (h(lambda,k+1) E_+(lambda^R)) j_lambda,
// through total degree d.
inline OneF0Report one_f0_check(int degree, const ParameterSet& p) {
    // left side, truncated
    Poly lhs = Poly::constant(p.n, 1);
    Rational a = p.n * p.k + 1;
    for (int i = 1; i <= p.n; ++i) {
        Poly factor(p.n);
        Composition m(p.n, 0);
        for (int e = 0; e <= degree; ++e) {
            m[i - 1] = e;
            factor.add_term(m, shifted_factorial(a, e) / factorial(e));
        }
        Poly prod = lhs * factor, trunc(p.n);
        for (const auto& [mono, c] : prod.terms())
            if (total_degree(mono) <= degree) trunc.add_term(mono, c);
        lhs = std::move(trunc);
    }
    Poly rhs(p.n);
    std::vector<Interval> full{Interval{1, p.n}};
    for (int d = 0; d <= degree; ++d)
        for (const auto& lam : partitions_of_degree(p.n, d))
            rhs += shifted_factorial(a, lam, p) /
                   (hook_product(lam, p.k + 1, p) *
                    eps_product(reverse_on_intervals(lam, full), full, Sign::plus, p)) *
                   j_invariant(lam, full, p);
    OneF0Report rep;
    Poly diff = lhs - rhs;
    for (const auto& [mono, c] : diff.terms())
        if (c != 0) {
            rep.ok = false;
            rep.failures.push_back(mono);
        }
    return rep;
}

// Calogero spectrum value sum_i (kappa_i(lambda) - 1 - k(N+1)/2)^2; asserted
// against the expanded closed form.
inline Rational h1_spectrum(const Composition& lambda, const ParameterSet& p) {
    if (!is_partition(lambda)) throw user_error("h1_spectrum expects a partition");
    Rational s = 0;
    for (int i = 1; i <= p.n; ++i) {
        Rational t = kappa(lambda, i, p) - 1 - p.k * (p.n + 1) / 2;
        s += t * t;
    }
    Rational expanded = p.k * p.k * p.n * (p.n * p.n - 1) / 12;
    for (int i = 1; i <= p.n; ++i)
        expanded += Rational(lambda[i - 1]) * lambda[i - 1] +
                    p.k * (p.n - 2 * i + 1) * lambda[i - 1];
    if (s != expanded)
        throw invariant_violation("spectrum closed forms disagree");
    return s;
}

} // namespace nsjack

#endif
