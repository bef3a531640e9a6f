#include "shaforge/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace shaforge {

PolyQ PolyQ::monomial(const Rat& c, int k) {
    if (c.is_zero()) return PolyQ();
    std::vector<Rat> v(static_cast<size_t>(k) + 1, Rat(0));
    v.back() = c;
    return PolyQ(std::move(v));
}

PolyQ PolyQ::operator-() const {
    std::vector<Rat> v = c_;
    for (auto& x : v) x = -x;
    return PolyQ(std::move(v));
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return PolyQ(std::move(v));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
    return PolyQ(std::move(v));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return PolyQ(std::move(v));
}

PolyQ PolyQ::operator*(const Rat& s) const {
    if (s.is_zero()) return PolyQ();
    std::vector<Rat> v = c_;
    for (auto& x : v) x *= s;
    return PolyQ(std::move(v));
}

Rat PolyQ::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

PolyQ PolyQ::derivative() const {
    if (c_.size() <= 1) return PolyQ();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return PolyQ(std::move(v));
}

PolyQ PolyQ::monic() const {
    if (is_zero()) throw std::invalid_argument("PolyQ::monic: zero polynomial");
    return *this * lc().inv();
}

PolyQ PolyQ::compose_linear(const Rat& a, const Rat& b) const {
    PolyQ result;
    PolyQ lin({b, a});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        result = result * lin + PolyQ::constant(*it);
    return result;
}

std::string PolyQ::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rat ck = coeff(k);
        if (ck.is_zero()) continue;
        if (!first) os << (ck.sign() > 0 ? " + " : " - ");
        else if (ck.sign() < 0) os << "-";
        Rat a = ck.abs();
        if (k == 0 || !a.is_one()) os << a.str();
        if (k > 0) {
            if (!a.is_one()) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::pair<PolyQ, PolyQ> poly_divrem(const PolyQ& a, const PolyQ& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divrem: division by zero polynomial");
    std::vector<Rat> rem = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {PolyQ(), a};
    std::vector<Rat> quot(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
    Rat lb = b.lc().inv();
    for (int k = a.degree() - db; k >= 0; --k) {
        Rat q = rem[static_cast<size_t>(k + db)] * lb;
        if (q.is_zero()) continue;
        quot[static_cast<size_t>(k)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<size_t>(k + j)] -= q * b.coeff(j);
    }
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ poly_divexact(const PolyQ& a, const PolyQ& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw std::invalid_argument("poly_divexact: nonzero remainder");
    return q;
}

PolyQ poly_gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ u = a, v = b;
    while (!v.is_zero()) {
        PolyQ r = poly_divrem(u, v).second;
        u = std::move(v);
        v = std::move(r);
    }
    if (u.is_zero()) return PolyQ();
    return u.monic();
}

namespace {

// Bareiss fraction-free determinant of an integer matrix (destroys m).
Int det_bareiss_int(std::vector<std::vector<Int>>& m) {
    const size_t n = m.size();
    Int denom(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return Int(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), denom.get_mpz_t());
                m[i][j] = t;
            }
            m[i][k] = 0;
        }
        denom = m[k][k];
    }
    Int d = m[n - 1][n - 1];
    return sign < 0 ? Int(-d) : d;
}

}  // namespace

ContentSplit content_split(const PolyQ& a) {
    if (a.is_zero()) return {Rat(0), {}};
    Int den_lcm(1);
    for (const auto& c : a.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<Int> z(a.coeffs().size());
    Int g(0);
    for (size_t i = 0; i < z.size(); ++i) {
        z[i] = a.coeffs()[i].num() * (den_lcm / a.coeffs()[i].den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    int s = sgn(z.back());
    if (s < 0) g = -g;
    for (auto& zi : z) mpz_divexact(zi.get_mpz_t(), zi.get_mpz_t(), g.get_mpz_t());
    return {Rat(g, den_lcm), std::move(z)};
}

Rat resultant(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("resultant: zero polynomial input");
    const int m = a.degree(), n = b.degree();
    if (m == 0 && n == 0) return Rat(1);
    // Res(ca*A, cb*B) = ca^n * cb^m * Res(A, B) over the integer parts.
    ContentSplit ca = content_split(a), cb = content_split(b);
    const size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<Int>> syl(N, std::vector<Int>(N, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) syl[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = ca.pp[static_cast<size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) syl[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = cb.pp[static_cast<size_t>(n - j)];
    Int det = det_bareiss_int(syl);
    Rat scale(1);
    for (int i = 0; i < n; ++i) scale *= ca.content;
    for (int i = 0; i < m; ++i) scale *= cb.content;
    return Rat(det) * scale;
}

PolyQ squarefree_part(const PolyQ& a) {
    if (a.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
    if (a.degree() == 0) return PolyQ({Rat(1)});
    PolyQ g = poly_gcd(a, a.derivative());
    return poly_divexact(a, g).monic();
}

Rat discriminant(const PolyQ& a) {
    const int n = a.degree();
    if (n < 1) throw std::invalid_argument("discriminant: degree must be >= 1");
    if (n == 1) return Rat(1);
    Rat r = resultant(a, a.derivative());
    int sign = ((static_cast<long>(n) * (n - 1) / 2) % 2 == 0) ? 1 : -1;
    Rat d = r / a.lc();
    return sign > 0 ? d : -d;
}

int sturm_count(const PolyQ& a, const Rat& lo, const Rat& hi) {
    if (a.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (!(lo < hi)) return 0;
    std::vector<PolyQ> chain;
    chain.push_back(squarefree_part(a));
    chain.push_back(chain[0].derivative());
    while (!chain.back().is_zero()) {
        PolyQ r = poly_divrem(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    auto variations = [&chain](const Rat& x) {
        int count = 0, prev = 0;
        for (const auto& p : chain) {
            int s = p.eval(x).sign();
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(lo) - variations(hi);
}

}  // namespace shaforge
