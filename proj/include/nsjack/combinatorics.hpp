#ifndef NSJACK_COMBINATORICS_HPP
#define NSJACK_COMBINATORICS_HPP

#include "scalar.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace nsjack {

// A composition is a tuple of N nonnegative integers. Partitions are
// nonincreasing compositions; `sort_to_partition` maps one to the other.
using Composition = std::vector<int>;

struct ParameterSet {
    int n = 1;
    Rational k = 0;
    Rational k1 = 0;

    friend bool operator<(const ParameterSet& a, const ParameterSet& b) {
        if (a.n != b.n) return a.n < b.n;
        if (a.k != b.k) return a.k < b.k;
        return a.k1 < b.k1;
    }
    friend bool operator==(const ParameterSet& a, const ParameterSet& b) {
        return a.n == b.n && a.k == b.k && a.k1 == b.k1;
    }
};

// Contiguous 1-based index range [lo, hi].
struct Interval {
    int lo = 1;
    int hi = 1;

    int size() const { return hi - lo + 1; }
    bool contains(int i) const { return lo <= i && i <= hi; }

    static Interval checked(int lo, int hi, int n) {
        if (!(1 <= lo && lo <= hi && hi <= n))
            throw user_error("bad interval [" + std::to_string(lo) + "," +
                             std::to_string(hi) + "] for N=" + std::to_string(n));
        return Interval{lo, hi};
    }
};

inline void require_disjoint(const std::vector<Interval>& intervals) {
    for (size_t a = 0; a < intervals.size(); ++a)
        for (size_t b = a + 1; b < intervals.size(); ++b)
            if (intervals[a].lo <= intervals[b].hi && intervals[b].lo <= intervals[a].hi)
                throw user_error("intervals overlap");
}

// A permutation of [1,N], stored as 0-based images: image(i) = w(i).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int n) : img_(n) {
        std::iota(img_.begin(), img_.end(), 0);
    }
    // imgs[i] = w(i+1)-1, must be a bijection of {0..n-1}
    explicit Permutation(std::vector<int> imgs) : img_(std::move(imgs)) {
        std::vector<char> seen(img_.size(), 0);
        for (int v : img_) {
            if (v < 0 || v >= (int)img_.size() || seen[v])
                throw user_error("not a permutation");
            seen[v] = 1;
        }
    }

    static Permutation transposition(int n, int i, int j) {
        Permutation w(n);
        std::swap(w.img_[i - 1], w.img_[j - 1]);
        return w;
    }

    int size() const { return (int)img_.size(); }
    // 1-based application
    int operator()(int i) const { return img_[i - 1] + 1; }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < (int)img_.size(); ++i) inv[img_[i]] = i;
        return Permutation(std::move(inv));
    }

    // (a*b)(i) = a(b(i))
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        std::vector<int> c(a.img_.size());
        for (int i = 0; i < (int)c.size(); ++i) c[i] = a.img_[b.img_[i]];
        return Permutation(std::move(c));
    }
    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.img_ == b.img_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.img_ < b.img_;
    }

    int sign() const {
        int inv = 0;
        for (size_t i = 0; i < img_.size(); ++i)
            for (size_t j = i + 1; j < img_.size(); ++j)
                if (img_[i] > img_[j]) ++inv;
        return inv % 2 == 0 ? 1 : -1;
    }

    // (w alpha)_i = alpha_{w^{-1}(i)}
    Composition permute(const Composition& alpha) const {
        Composition r(alpha.size());
        for (int i = 0; i < (int)alpha.size(); ++i) r[img_[i]] = alpha[i];
        return r;
    }

    const std::vector<int>& images() const { return img_; }

private:
    std::vector<int> img_;
};

inline int total_degree(const Composition& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

inline Composition sort_to_partition(const Composition& alpha) {
    Composition p = alpha;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
}

inline bool is_partition(const Composition& a) {
    return std::is_sorted(a.begin(), a.end(), std::greater<int>());
}

enum class Dominance { precedes, succeeds, equal, incomparable };

// alpha >= beta iff every prefix sum of alpha dominates that of beta.
inline Dominance dominance_compare(const Composition& alpha, const Composition& beta) {
    if (alpha.size() != beta.size() || total_degree(alpha) != total_degree(beta))
        throw user_error("dominance comparison requires equal length and degree");
    bool ge = true, le = true;
    long sa = 0, sb = 0;
    for (size_t i = 0; i < alpha.size(); ++i) {
        sa += alpha[i];
        sb += beta[i];
        if (sa < sb) ge = false;
        if (sa > sb) le = false;
    }
    if (ge && le) return Dominance::equal;
    if (ge) return Dominance::succeeds;
    if (le) return Dominance::precedes;
    return Dominance::incomparable;
}

// Graded reverse-lexicographic: a > b iff the last nonzero entry of a-b is
// negative. Refines dominance within a degree class.
inline bool grevlex_greater(const Composition& a, const Composition& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (int i = (int)a.size() - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// The total refinement used by the triangular solves: compare sorted parts
// first, then the compositions themselves, grevlex-breaking dominance ties.
inline bool total_order_greater(const Composition& a, const Composition& b) {
    Composition ap = sort_to_partition(a), bp = sort_to_partition(b);
    if (ap != bp) return grevlex_greater(ap, bp);
    if (a == b) return false;
    return grevlex_greater(a, b);
}

inline bool satisfies_geq(const Composition& a, const Interval& I) {
    for (int i = I.lo; i < I.hi; ++i)
        if (a[i - 1] < a[i]) return false;
    return true;
}

inline bool satisfies_gt(const Composition& a, const Interval& I) {
    for (int i = I.lo; i < I.hi; ++i)
        if (a[i - 1] <= a[i]) return false;
    return true;
}

inline Composition reverse_on_interval(const Composition& alpha, const Interval& I) {
    Composition r = alpha;
    std::reverse(r.begin() + (I.lo - 1), r.begin() + I.hi);
    return r;
}

inline Composition reverse_on_intervals(const Composition& alpha,
                                        const std::vector<Interval>& intervals) {
    Composition r = alpha;
    for (const auto& I : intervals) r = reverse_on_interval(r, I);
    return r;
}

// Longest element of S_I.
inline Permutation longest_element(int n, const Interval& I) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::reverse(img.begin() + (I.lo - 1), img.begin() + I.hi);
    return Permutation(std::move(img));
}

// All w in the product of the interval symmetric groups (identity outside).
inline std::vector<Permutation> interval_group(int n, const std::vector<Interval>& intervals) {
    require_disjoint(intervals);
    std::vector<Permutation> group{Permutation(n)};
    for (const auto& I : intervals) {
        std::vector<int> idx(I.size());
        std::iota(idx.begin(), idx.end(), I.lo - 1);
        std::vector<Permutation> next;
        std::sort(idx.begin(), idx.end());
        do {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            for (int t = 0; t < I.size(); ++t) img[I.lo - 1 + t] = idx[t];
            Permutation w{std::vector<int>(img)};
            for (const auto& g : group) next.push_back(w * g);
        } while (std::next_permutation(idx.begin(), idx.end()));
        group = std::move(next);
    }
    std::sort(group.begin(), group.end());
    return group;
}

inline std::set<Composition> orbit(const Composition& alpha,
                                   const std::vector<Interval>& intervals) {
    std::set<Composition> out;
    for (const auto& w : interval_group((int)alpha.size(), intervals))
        out.insert(w.permute(alpha));
    return out;
}

// kappa_i(alpha) = Nk - k(#{s: a_s > a_i} + #{s < i: a_s = a_i}) + a_i + 1
inline Rational kappa(const Composition& alpha, int i, const ParameterSet& p) {
    if (i < 1 || i > (int)alpha.size()) throw user_error("kappa: index out of range");
    int greater = 0, earlier_equal = 0;
    for (int s = 1; s <= (int)alpha.size(); ++s) {
        if (alpha[s - 1] > alpha[i - 1]) ++greater;
        if (s < i && alpha[s - 1] == alpha[i - 1]) ++earlier_equal;
    }
    return p.n * p.k - p.k * (greater + earlier_equal) + alpha[i - 1] + 1;
}

// kappa'_i(beta) for an interval I = [l+1, l+m]: the equal-part count only
// runs over positions <= l.
inline Rational kappa_prime(const Composition& beta, int i, const Interval& I,
                            const ParameterSet& p) {
    if (!I.contains(i)) throw user_error("kappa_prime: index not in interval");
    int ell = I.lo - 1;
    int greater = 0, head_equal = 0;
    for (int s = 1; s <= (int)beta.size(); ++s) {
        if (beta[s - 1] > beta[i - 1]) ++greater;
        if (s <= ell && beta[s - 1] == beta[i - 1]) ++head_equal;
    }
    return p.n * p.k - p.k * (greater + head_equal) + beta[i - 1] + 1;
}

// h(lambda,t) = prod_i prod_{j=1}^{lambda_i} (lambda_i - j + t
//               + k #{s: s > i and j <= lambda_s <= lambda_i})
inline Rational hook_product(const Composition& lambda, const Rational& t,
                             const ParameterSet& p) {
    if (!is_partition(lambda)) throw user_error("hook_product: not a partition");
    Rational h = 1;
    for (int i = 1; i <= (int)lambda.size(); ++i) {
        for (int j = 1; j <= lambda[i - 1]; ++j) {
            int arm = 0;
            for (int s = i + 1; s <= (int)lambda.size(); ++s)
                if (j <= lambda[s - 1] && lambda[s - 1] <= lambda[i - 1]) ++arm;
            h *= lambda[i - 1] - j + t + p.k * arm;
        }
    }
    return h;
}

inline Rational shifted_factorial(const Rational& t, int m) {
    Rational r = 1;
    for (int i = 1; i <= m; ++i) r *= t + (i - 1);
    return r;
}

// (t)_lambda = prod_i (t - (i-1)k)_{lambda_i}
inline Rational shifted_factorial(const Rational& t, const Composition& lambda,
                                  const ParameterSet& p) {
    if (!is_partition(lambda)) throw user_error("shifted_factorial: not a partition");
    Rational r = 1;
    for (int i = 1; i <= (int)lambda.size(); ++i)
        r *= shifted_factorial(t - (i - 1) * p.k, lambda[i - 1]);
    return r;
}

enum class Sign { plus, minus };

// E_eps(beta; I) = prod{1 + eps k / (kappa_j - kappa_i) : b_i < b_j, i < j in I}
inline Rational eps_product(const Composition& beta, const Interval& I, Sign eps,
                            const ParameterSet& p) {
    Rational e = 1;
    Rational sk = (eps == Sign::plus) ? p.k : -p.k;
    for (int i = I.lo; i <= I.hi; ++i) {
        for (int j = i + 1; j <= I.hi; ++j) {
            if (beta[i - 1] < beta[j - 1]) {
                Rational den = kappa(beta, j, p) - kappa(beta, i, p);
                if (den == 0)
                    throw singular_parameter("kappa_" + std::to_string(j) + " = kappa_" +
                                             std::to_string(i) + " on the given composition");
                e *= 1 + sk / den;
            }
        }
    }
    return e;
}

inline Rational eps_product_full(const Composition& beta, Sign eps, const ParameterSet& p) {
    return eps_product(beta, Interval{1, (int)beta.size()}, eps, p);
}

inline Rational eps_product(const Composition& beta, const std::vector<Interval>& intervals,
                            Sign eps, const ParameterSet& p) {
    Rational e = 1;
    for (const auto& I : intervals) e *= eps_product(beta, I, eps, p);
    return e;
}

// #S_N lambda = N! / prod_j m_j!, the number of distinct rearrangements.
inline Rational orbit_count(const Composition& alpha, const Interval& I) {
    Rational c = factorial(I.size());
    std::vector<int> vals(alpha.begin() + (I.lo - 1), alpha.begin() + I.hi);
    std::sort(vals.begin(), vals.end());
    int run = 1;
    for (size_t i = 1; i <= vals.size(); ++i) {
        if (i < vals.size() && vals[i] == vals[i - 1]) {
            ++run;
        } else {
            c /= factorial(run);
            run = 1;
        }
    }
    return c;
}

// ---- type-B composition machinery ----

// Halved parts: h(alpha)_i = floor(alpha_i / 2).
inline Composition halved_parts(const Composition& alpha) {
    Composition h(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) h[i] = alpha[i] / 2;
    return h;
}

// b(alpha) = alpha - h(alpha), i.e. ceil(alpha_i / 2).
inline Composition ceil_parts(const Composition& alpha) {
    Composition b(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) b[i] = alpha[i] - alpha[i] / 2;
    return b;
}

// Odd and even parts separately nonincreasing.
inline bool is_b_partition(const Composition& alpha) {
    for (size_t i = 0; i < alpha.size(); ++i)
        for (size_t j = i + 1; j < alpha.size(); ++j)
            if (alpha[i] % 2 == alpha[j] % 2 && alpha[i] < alpha[j]) return false;
    return true;
}

// The unique w mapping [1,ell] onto A, order-preserving on [1,ell] and on
// [ell+1, N].
inline Permutation subset_shuffle(int n, const std::vector<int>& a_sorted) {
    std::vector<char> in_a(n, 0);
    for (int v : a_sorted) {
        if (v < 1 || v > n) throw user_error("subset element out of range");
        if (in_a[v - 1]) throw user_error("duplicate subset element");
        in_a[v - 1] = 1;
    }
    std::vector<int> img(n);
    int ell = (int)a_sorted.size();
    for (int t = 0; t < ell; ++t) img[t] = a_sorted[t] - 1;
    int pos = ell;
    for (int v = 1; v <= n; ++v)
        if (!in_a[v - 1]) img[pos++] = v - 1;
    return Permutation(std::move(img));
}

struct BStandardization {
    Composition standard;  // odd parts first, then even parts
    Permutation w;         // w . standard = original
};

inline BStandardization standardize_b_partition(const Composition& alpha) {
    if (!is_b_partition(alpha)) throw user_error("not a B-partition");
    std::vector<int> odd_pos;
    Composition standard;
    for (size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] % 2 != 0) {
            odd_pos.push_back((int)i + 1);
            standard.push_back(alpha[i]);
        }
    for (size_t i = 0; i < alpha.size(); ++i)
        if (alpha[i] % 2 == 0) standard.push_back(alpha[i]);
    return BStandardization{std::move(standard),
                            subset_shuffle((int)alpha.size(), odd_pos)};
}

// Lambda(alpha) = (Nk+1)_{h(alpha)^+} ((N-1)k + k1 + 1/2)_{b(alpha)^+}
inline Rational lambda_factor(const Composition& alpha, const ParameterSet& p) {
    Composition hp = sort_to_partition(halved_parts(alpha));
    Composition bp = sort_to_partition(ceil_parts(alpha));
    return shifted_factorial(p.n * p.k + 1, hp, p) *
           shifted_factorial((p.n - 1) * p.k + p.k1 + Rational(1, 2), bp, p);
}

// Enumerate all compositions of given length and total degree.
inline void compositions_of_degree(int length, int degree,
                                   std::vector<Composition>& out,
                                   Composition& cur) {
    if ((int)cur.size() == length - 1) {
        cur.push_back(degree);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= degree; ++v) {
        cur.push_back(v);
        compositions_of_degree(length, degree - v, out, cur);
        cur.pop_back();
    }
}

inline std::vector<Composition> compositions_of_degree(int length, int degree) {
    std::vector<Composition> out;
    Composition cur;
    compositions_of_degree(length, degree, out, cur);
    return out;
}

inline std::vector<Composition> partitions_of_degree(int length, int degree) {
    std::vector<Composition> out;
    for (const auto& c : compositions_of_degree(length, degree))
        if (is_partition(c)) out.push_back(c);
    return out;
}

} // namespace nsjack

#endif
