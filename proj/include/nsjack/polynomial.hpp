#ifndef NSJACK_POLYNOMIAL_HPP
#define NSJACK_POLYNOMIAL_HPP

#include "combinatorics.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace nsjack {

struct GrevlexLess {
    bool operator()(const Composition& a, const Composition& b) const {
        return grevlex_greater(b, a);
    }
};

// Multivariate polynomial in x_1..x_n with rational coefficients, stored
// sparsely with terms ordered grevlex-ascending (rbegin() is the leading term).
class Poly {
public:
    using TermMap = std::map<Composition, Rational, GrevlexLess>;

    Poly() = default;
    explicit Poly(int n) : n_(n) {}
    Poly(int n, const Composition& mono, Rational coeff = 1) : n_(n) {
        if ((int)mono.size() != n) throw user_error("monomial length mismatch");
        if (coeff != 0) terms_[mono] = std::move(coeff);
    }

    static Poly constant(int n, Rational c) {
        return Poly(n, Composition(n, 0), std::move(c));
    }
    static Poly variable(int n, int i) {
        Composition m(n, 0);
        m[i - 1] = 1;
        return Poly(n, m);
    }

    int nvars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = total_degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (total_degree(m) != d) return false;
        return true;
    }

    Rational coeff(const Composition& mono) const {
        auto it = terms_.find(mono);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Largest monomial under grevlex (terms are kept ascending).
    const Composition& leading_monomial() const {
        if (terms_.empty()) throw invariant_violation("leading term of zero polynomial");
        return terms_.rbegin()->first;
    }

    void add_term(const Composition& mono, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(mono, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_same(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly& operator*=(const Rational& s) {
        if (s == 0) { terms_.clear(); return *this; }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }
    Poly& operator/=(const Rational& s) {
        if (s == 0) throw user_error("division by zero scalar");
        for (auto& [m, c] : terms_) c /= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(Poly a, const Rational& s) { a *= s; return a; }
    friend Poly operator*(const Rational& s, Poly a) { a *= s; return a; }
    friend Poly operator/(Poly a, const Rational& s) { a /= s; return a; }
    friend Poly operator-(Poly a) { a *= Rational(-1); return a; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_same(b);
        Poly r(a.n_);
        Composition m(a.n_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                for (int i = 0; i < a.n_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rational evaluate(const std::vector<Rational>& x) const {
        if ((int)x.size() != n_) throw user_error("evaluation point length mismatch");
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < n_; ++i)
                if (m[i] != 0) t *= pow_rational(x[i], m[i]);
            total += t;
        }
        return total;
    }

    // Substitute x_i -> subs[i-1] (polynomial substitution).
    Poly substitute(const std::vector<Poly>& subs) const {
        if ((int)subs.size() != n_) throw user_error("substitution length mismatch");
        int m = subs.empty() ? n_ : subs[0].nvars();
        Poly r(m);
        for (const auto& [mono, c] : terms_) {
            Poly t = Poly::constant(m, c);
            for (int i = 0; i < n_; ++i)
                for (int e = 0; e < mono[i]; ++e) t = t * subs[i];
            r += t;
        }
        return r;
    }

    // x_i -> x_{w(i)}: monomial alpha maps to w.alpha.
    Poly group_act(const Permutation& w) const {
        Poly r(n_);
        for (const auto& [m, c] : terms_) r.add_term(w.permute(m), c);
        return r;
    }

    // Signed action: additionally flip the sign of each variable in `flips`
    // (1-based), i.e. x_i -> -x_{w(i)} for i in flips.
    Poly group_act_signed(const Permutation& w, const std::vector<int>& flips) const {
        std::vector<char> f(n_, 0);
        for (int i : flips) f[i - 1] = 1;
        Poly r(n_);
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (int i = 0; i < n_; ++i)
                if (f[i]) s += m[i];
            r.add_term(w.permute(m), s % 2 == 0 ? c : -c);
        }
        return r;
    }

    Poly partial_derivative(int i) const {
        Poly r(n_);
        for (const auto& [m, c] : terms_) {
            if (m[i - 1] == 0) continue;
            Composition d = m;
            d[i - 1] -= 1;
            r.add_term(d, c * m[i - 1]);
        }
        return r;
    }

    void check_same(const Poly& o) const {
        if (n_ != o.n_) throw user_error("polynomial variable-count mismatch");
    }

private:
    int n_ = 0;
    TermMap terms_;
};

// Exact long division: returns q with f = q*g, throws if g does not divide f.
inline Poly exact_divide(const Poly& f, const Poly& g) {
    f.check_same(g);
    if (g.is_zero()) throw user_error("division by zero polynomial");
    int n = f.nvars();
    Poly rem = f, q(n);
    const Composition& lg = g.leading_monomial();
    Rational lc = g.coeff(lg);
    while (!rem.is_zero()) {
        Composition lr = rem.leading_monomial();  // copy: rem changes below
        Composition m(n);
        for (int i = 0; i < n; ++i) {
            m[i] = lr[i] - lg[i];
            if (m[i] < 0)
                throw invariant_violation("exact_divide: nonzero remainder");
        }
        Rational c = rem.coeff(lr) / lc;
        q.add_term(m, c);
        rem -= Poly(n, m, c) * g;
        if (!rem.is_zero() && !grevlex_greater(lr, rem.leading_monomial()))
            throw invariant_violation("exact_divide: leading term did not drop");
    }
    return q;
}

// Alternating polynomial for a family of disjoint intervals:
// prod over intervals of prod_{lo <= i < j <= hi} (x_i - x_j).
inline Poly alternating_poly(int n, const std::vector<Interval>& intervals) {
    require_disjoint(intervals);
    Poly a = Poly::constant(n, 1);
    for (const auto& I : intervals)
        for (int i = I.lo; i <= I.hi; ++i)
            for (int j = i + 1; j <= I.hi; ++j)
                a = a * (Poly::variable(n, i) - Poly::variable(n, j));
    return a;
}

namespace detail {

// b(m) = (k)_m / m!, the binomial series coefficients of (1-t)^{-k}.
inline Rational b_coeff(int m, const Rational& k) {
    return shifted_factorial(k, m) / factorial(m);
}
// B(m) = sum_{t<=m} b(t) = (k+1)_m / m!.
inline Rational B_coeff(int m, const Rational& k) {
    return shifted_factorial(k + 1, m) / factorial(m);
}

// Enumerate matrices c with row sums alpha; callback receives column sums
// and the coefficient prod_i [ B(c_ii) prod_{j != i} b(c_ij) ].
template <typename F>
void p_basis_rows(const Composition& alpha, int row, Composition& colsum,
                  const Rational& acc, const ParameterSet& p, F&& emit) {
    int n = (int)alpha.size();
    if (row == n) {
        emit(colsum, acc);
        return;
    }
    // split alpha[row] into n cells
    Composition cell(n, 0);
    auto rec = [&](auto&& self, int col, int rem, const Rational& w) -> void {
        if (col == n - 1) {
            cell[col] = rem;
            Rational w2 = w * (col == row ? B_coeff(rem, p.k) : b_coeff(rem, p.k));
            for (int i = 0; i < n; ++i) colsum[i] += cell[i];
            p_basis_rows(alpha, row + 1, colsum, acc * w2, p, emit);
            for (int i = 0; i < n; ++i) colsum[i] -= cell[i];
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cell[col] = v;
            Rational w2 = w * (col == row ? B_coeff(v, p.k) : b_coeff(v, p.k));
            if (w2 != 0) self(self, col + 1, rem - v, w2);
        }
        cell[col] = 0;
    };
    rec(rec, 0, alpha[row], Rational(1));
}

} // namespace detail

// The dual basis p_alpha characterized by <x^alpha, p_beta>_p = delta.
// Closed form: sum over decompositions of alpha into row vectors c^(i),
// coefficient prod_i [ B(c^(i)_i) prod_{j!=i} b(c^(i)_j) ] on x^{colsums}.
inline Poly p_basis(const Composition& alpha, const ParameterSet& p) {
    if ((int)alpha.size() != p.n) throw user_error("p_basis: length mismatch");
    Poly out(p.n);
    Composition colsum(p.n, 0);
    detail::p_basis_rows(alpha, 0, colsum, Rational(1), p,
                         [&](const Composition& cs, const Rational& c) {
                             out.add_term(cs, c);
                         });
    return out;
}

namespace detail {

// Dense linear solve A x = rhs (A square, consumed). Throws on singularity.
inline std::vector<Rational> gauss_solve(std::vector<std::vector<Rational>> A,
                                         std::vector<Rational> rhs) {
    int m = (int)A.size();
    for (int col = 0; col < m; ++col) {
        int piv = -1;
        for (int r = col; r < m; ++r)
            if (A[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw singular_parameter("singular linear system");
        std::swap(A[piv], A[col]);
        std::swap(rhs[piv], rhs[col]);
        Rational inv = 1 / A[col][col];
        for (int c = col; c < m; ++c) A[col][c] *= inv;
        rhs[col] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == col || A[r][col] == 0) continue;
            Rational f = A[r][col];
            for (int c = col; c < m; ++c) A[r][c] -= f * A[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

} // namespace detail

// Expand f in the p-basis: returns map beta -> coefficient with
// f = sum coeff(beta) p_beta. The change of basis is not triangular, so we
// solve the monomial-coefficient linear system degree by degree.
inline std::map<Composition, Rational> p_basis_expand(const Poly& f, const ParameterSet& p) {
    std::map<Composition, Rational> out;
    std::map<int, Poly> by_degree;
    for (const auto& [m, c] : f.terms()) {
        auto [it, ins] = by_degree.try_emplace(total_degree(m), Poly(f.nvars()));
        it->second.add_term(m, c);
    }
    for (auto& [d, part] : by_degree) {
        std::vector<Composition> monos = compositions_of_degree(f.nvars(), d);
        int m = (int)monos.size();
        std::map<Composition, int> index;
        for (int i = 0; i < m; ++i) index[monos[i]] = i;
        // column j = monomial expansion of p_{monos[j]}
        std::vector<std::vector<Rational>> A(m, std::vector<Rational>(m, Rational(0)));
        for (int j = 0; j < m; ++j) {
            Poly pj = p_basis(monos[j], p);
            for (const auto& [mono, c] : pj.terms()) A[index.at(mono)][j] = c;
        }
        std::vector<Rational> rhs(m, Rational(0));
        for (const auto& [mono, c] : part.terms()) rhs[index.at(mono)] = c;
        std::vector<Rational> sol = detail::gauss_solve(std::move(A), std::move(rhs));
        for (int j = 0; j < m; ++j)
            if (sol[j] != 0) out[monos[j]] += sol[j];
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

} // namespace nsjack

#endif
