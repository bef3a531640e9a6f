#ifndef SHAFORGE_ALGEBRA_HPP
#define SHAFORGE_ALGEBRA_HPP

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "shaforge/rational.hpp"

// Field-generic polynomial and linear algebra. A field object K provides:
//   typename K::Elem, zero(), one(), from_int(long),
//   add, sub, mul, neg, inv, is_zero, eq.
// QQ (rational.hpp) and NumberField (numberfield.hpp) both qualify; pencil
// and section analysis run over either.

namespace shaforge {

template <class K>
using FPoly = std::vector<typename K::Elem>;  // lowest degree first

template <class K>
using Mat = std::vector<std::vector<typename K::Elem>>;

template <class K>
void fp_trim(const K& k, FPoly<K>& a) {
    while (!a.empty() && k.is_zero(a.back())) a.pop_back();
}

template <class K>
int fp_deg(const FPoly<K>& a) {
    return static_cast<int>(a.size()) - 1;
}

template <class K>
FPoly<K> fp_add(const K& k, const FPoly<K>& a, const FPoly<K>& b) {
    FPoly<K> c(std::max(a.size(), b.size()), k.zero());
    for (size_t i = 0; i < a.size(); ++i) c[i] = k.add(c[i], a[i]);
    for (size_t i = 0; i < b.size(); ++i) c[i] = k.add(c[i], b[i]);
    fp_trim(k, c);
    return c;
}

template <class K>
FPoly<K> fp_sub(const K& k, const FPoly<K>& a, const FPoly<K>& b) {
    FPoly<K> c(std::max(a.size(), b.size()), k.zero());
    for (size_t i = 0; i < a.size(); ++i) c[i] = k.add(c[i], a[i]);
    for (size_t i = 0; i < b.size(); ++i) c[i] = k.sub(c[i], b[i]);
    fp_trim(k, c);
    return c;
}

template <class K>
FPoly<K> fp_mul(const K& k, const FPoly<K>& a, const FPoly<K>& b) {
    if (a.empty() || b.empty()) return {};
    FPoly<K> c(a.size() + b.size() - 1, k.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (k.is_zero(a[i])) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = k.add(c[i + j], k.mul(a[i], b[j]));
    }
    fp_trim(k, c);
    return c;
}

template <class K>
FPoly<K> fp_scale(const K& k, const FPoly<K>& a, const typename K::Elem& s) {
    FPoly<K> c = a;
    for (auto& x : c) x = k.mul(x, s);
    fp_trim(k, c);
    return c;
}

template <class K>
std::pair<FPoly<K>, FPoly<K>> fp_divrem(const K& k, const FPoly<K>& a, const FPoly<K>& b) {
    if (b.empty()) throw std::invalid_argument("fp_divrem: zero divisor");
    FPoly<K> rem = a;
    int db = fp_deg(b);
    if (fp_deg(a) < db) return {{}, rem};
    FPoly<K> quot(static_cast<size_t>(fp_deg(a) - db) + 1, k.zero());
    auto li = k.inv(b.back());
    for (int d = fp_deg(a) - db; d >= 0; --d) {
        auto q = k.mul(rem[static_cast<size_t>(d + db)], li);
        if (k.is_zero(q)) continue;
        quot[static_cast<size_t>(d)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(d + j)] = k.sub(rem[static_cast<size_t>(d + j)], k.mul(q, b[static_cast<size_t>(j)]));
    }
    fp_trim(k, rem);
    return {std::move(quot), std::move(rem)};
}

template <class K>
FPoly<K> fp_monic(const K& k, const FPoly<K>& a) {
    if (a.empty()) throw std::invalid_argument("fp_monic: zero polynomial");
    return fp_scale(k, a, k.inv(a.back()));
}

// monic gcd; zero iff both zero
template <class K>
FPoly<K> fp_gcd(const K& k, FPoly<K> a, FPoly<K> b) {
    while (!b.empty()) {
        FPoly<K> r = fp_divrem(k, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return fp_monic(k, a);
}

template <class K>
FPoly<K> fp_derivative(const K& k, const FPoly<K>& a) {
    if (a.size() <= 1) return {};
    FPoly<K> d(a.size() - 1, k.zero());
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = k.mul(a[i], k.from_int(static_cast<long>(i)));
    fp_trim(k, d);
    return d;
}

template <class K>
typename K::Elem fp_eval(const K& k, const FPoly<K>& a, const typename K::Elem& x) {
    auto r = k.zero();
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = k.add(k.mul(r, x), *it);
    return r;
}

// ------------------------------------------------------------ matrices

template <class K>
int mat_rank(const K& k, Mat<K> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && k.is_zero(m[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(m[row], m[piv]);
        auto li = k.inv(m[row][col]);
        for (size_t j = col; j < cols; ++j) m[row][j] = k.mul(m[row][j], li);
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || k.is_zero(m[i][col])) continue;
            auto c = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] = k.sub(m[i][j], k.mul(c, m[row][j]));
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Basis of the right kernel {v : m v = 0}.
template <class K>
std::vector<std::vector<typename K::Elem>> mat_kernel(const K& k, Mat<K> m) {
    if (m.empty()) return {};
    const size_t rows = m.size(), cols = m[0].size();
    std::vector<int> pivot_of_col(cols, -1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && k.is_zero(m[piv][col])) ++piv;
        if (piv == rows) continue;
        std::swap(m[row], m[piv]);
        auto li = k.inv(m[row][col]);
        for (size_t j = col; j < cols; ++j) m[row][j] = k.mul(m[row][j], li);
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || k.is_zero(m[i][col])) continue;
            auto c = m[i][col];
            for (size_t j = col; j < cols; ++j)
                m[i][j] = k.sub(m[i][j], k.mul(c, m[row][j]));
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    std::vector<std::vector<typename K::Elem>> basis;
    for (size_t col = 0; col < cols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<typename K::Elem> v(cols, k.zero());
        v[col] = k.one();
        for (size_t c2 = 0; c2 < cols; ++c2) {
            if (pivot_of_col[c2] < 0) continue;
            v[c2] = k.neg(m[static_cast<size_t>(pivot_of_col[c2])][col]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Bareiss fraction-free determinant over an integral domain R providing
// Elem, zero(), one(), mul, sub, divexact, is_zero. Destroys m.
template <class R>
typename R::Elem det_bareiss(const R& ring, std::vector<std::vector<typename R::Elem>>& m) {
    const size_t n = m.size();
    if (n == 0) return ring.one();
    auto denom = ring.one();
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (ring.is_zero(m[k][k])) {
            size_t piv = k + 1;
            while (piv < n && ring.is_zero(m[piv][k])) ++piv;
            if (piv == n) return ring.zero();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                auto t = ring.sub(ring.mul(m[i][j], m[k][k]), ring.mul(m[i][k], m[k][j]));
                m[i][j] = ring.divexact(t, denom);
            }
            m[i][k] = ring.zero();
        }
        denom = m[k][k];
    }
    auto d = m[n - 1][n - 1];
    if (sign < 0) {
        return ring.sub(ring.zero(), d);
    }
    return d;
}

// v^T M v for symmetric M
template <class K>
typename K::Elem quad_value(const K& k, const Mat<K>& m, const std::vector<typename K::Elem>& v) {
    auto r = k.zero();
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j) r = k.add(r, k.mul(k.mul(m[i][j], v[i]), v[j]));
    return r;
}

// M v
template <class K>
std::vector<typename K::Elem> mat_apply(const K& k, const Mat<K>& m, const std::vector<typename K::Elem>& v) {
    std::vector<typename K::Elem> r(m.size(), k.zero());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] = k.add(r[i], k.mul(m[i][j], v[j]));
    return r;
}

// Determinant of det(A + lambda B) as a polynomial in lambda, by Laplace
// expansion over K[lambda]; A, B square of equal size (n <= 5 in practice).
template <class K>
FPoly<K> pencil_det(const K& k, const Mat<K>& a, const Mat<K>& b) {
    const size_t n = a.size();
    std::vector<std::vector<FPoly<K>>> entries(n, std::vector<FPoly<K>>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            FPoly<K> e{a[i][j], b[i][j]};
            fp_trim(k, e);
            entries[i][j] = std::move(e);
        }
    std::vector<size_t> cols(n);
    for (size_t i = 0; i < n; ++i) cols[i] = i;
    // recursive expansion along the first row of the submatrix
    std::function<FPoly<K>(size_t, std::vector<size_t>&)> det =
        [&](size_t row, std::vector<size_t>& cs) -> FPoly<K> {
        if (cs.size() == 1) return entries[row][cs[0]];
        FPoly<K> acc;
        for (size_t idx = 0; idx < cs.size(); ++idx) {
            const FPoly<K>& e = entries[row][cs[idx]];
            if (e.empty()) continue;
            size_t removed = cs[idx];
            cs.erase(cs.begin() + static_cast<long>(idx));
            FPoly<K> sub = det(row + 1, cs);
            cs.insert(cs.begin() + static_cast<long>(idx), removed);
            FPoly<K> term = fp_mul(k, e, sub);
            acc = (idx % 2 == 0) ? fp_add(k, acc, term) : fp_sub(k, acc, term);
        }
        return acc;
    };
    return det(0, cols);
}

}  // namespace shaforge

#endif
