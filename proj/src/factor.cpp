#include "shaforge/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace shaforge {

PolyQ Factorization::expand() const {
    PolyQ r = PolyQ::constant(unit);
    for (const auto& [f, m] : factors)
        for (int i = 0; i < m; ++i) r = r * f;
    return r;
}

namespace {

// ---------------------------------------------------------------- F_p[x]

using ZpPoly = std::vector<uint64_t>;  // lowest degree first, coeffs in [0,p)

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zp_deg(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    zp_trim(c);
    return c;
}

uint64_t zp_inv_scalar(uint64_t a, uint64_t p) {
    // extended Euclid
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(p), newr = static_cast<int64_t>(a % p);
    while (newr != 0) {
        int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

// a mod b; b nonzero
ZpPoly zp_rem(ZpPoly a, const ZpPoly& b, uint64_t p) {
    const int db = zp_deg(b);
    const uint64_t li = zp_inv_scalar(b.back(), p);
    while (zp_deg(a) >= db) {
        uint64_t q = (a.back() * li) % p;
        int shift = zp_deg(a) - db;
        for (int j = 0; j <= db; ++j) {
            uint64_t sub = (q * b[static_cast<size_t>(j)]) % p;
            uint64_t& t = a[static_cast<size_t>(j + shift)];
            t = (t + p - sub) % p;
        }
        zp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

ZpPoly zp_monic(ZpPoly a, uint64_t p) {
    if (a.empty()) return a;
    uint64_t li = zp_inv_scalar(a.back(), p);
    for (auto& c : a) c = (c * li) % p;
    return a;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, uint64_t p) {
    while (!b.empty()) {
        ZpPoly r = zp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(std::move(a), p);
}

ZpPoly zp_derivative(const ZpPoly& a, uint64_t p) {
    if (a.size() <= 1) return {};
    ZpPoly d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = (a[i] * (i % p)) % p;
    zp_trim(d);
    return d;
}

// x^(p^?) style powering: base^e mod f
ZpPoly zp_powmod(ZpPoly base, uint64_t e, const ZpPoly& f, uint64_t p) {
    ZpPoly result{1};
    base = zp_rem(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) result = zp_rem(zp_mul(result, base, p), f, p);
        base = zp_rem(zp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

// Berlekamp factorization of a monic squarefree f over F_p (small p).
std::vector<ZpPoly> berlekamp(const ZpPoly& f, uint64_t p) {
    const int n = zp_deg(f);
    if (n <= 1) return {f};
    // rows[j] = x^(j*p) mod f
    std::vector<ZpPoly> rows(static_cast<size_t>(n));
    ZpPoly xp = zp_powmod(ZpPoly{0, 1}, p, f, p);
    rows[0] = ZpPoly{1};
    for (int j = 1; j < n; ++j) rows[static_cast<size_t>(j)] = zp_rem(zp_mul(rows[static_cast<size_t>(j - 1)], xp, p), f, p);
    // kernel of (M - I)^T where M[j][k] = coeff_k(rows[j]); v M = v
    std::vector<std::vector<uint64_t>> m(static_cast<size_t>(n), std::vector<uint64_t>(static_cast<size_t>(n), 0));
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k <= zp_deg(rows[static_cast<size_t>(j)]); ++k)
            m[static_cast<size_t>(k)][static_cast<size_t>(j)] = rows[static_cast<size_t>(j)][static_cast<size_t>(k)];
        m[static_cast<size_t>(j)][static_cast<size_t>(j)] = (m[static_cast<size_t>(j)][static_cast<size_t>(j)] + p - 1) % p;
    }
    // Gaussian elimination; collect kernel basis
    std::vector<int> pivot_col_of_row;
    std::vector<bool> is_pivot_col(static_cast<size_t>(n), false);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int i = row; i < n; ++i)
            if (m[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[static_cast<size_t>(row)], m[static_cast<size_t>(pr)]);
        uint64_t li = zp_inv_scalar(m[static_cast<size_t>(row)][static_cast<size_t>(col)], p);
        for (int k = 0; k < n; ++k) m[static_cast<size_t>(row)][static_cast<size_t>(k)] = (m[static_cast<size_t>(row)][static_cast<size_t>(k)] * li) % p;
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            uint64_t c = m[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (c == 0) continue;
            for (int k = 0; k < n; ++k) {
                uint64_t sub = (c * m[static_cast<size_t>(row)][static_cast<size_t>(k)]) % p;
                m[static_cast<size_t>(i)][static_cast<size_t>(k)] = (m[static_cast<size_t>(i)][static_cast<size_t>(k)] + p - sub) % p;
            }
        }
        pivot_col_of_row.push_back(col);
        is_pivot_col[static_cast<size_t>(col)] = true;
        ++row;
    }
    std::vector<ZpPoly> basis;
    for (int col = 0; col < n; ++col) {
        if (is_pivot_col[static_cast<size_t>(col)]) continue;
        ZpPoly v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(col)] = 1;
        for (size_t r2 = 0; r2 < pivot_col_of_row.size(); ++r2) {
            uint64_t c = m[r2][static_cast<size_t>(col)];
            if (c != 0) v[static_cast<size_t>(pivot_col_of_row[r2])] = p - c;
        }
        zp_trim(v);
        basis.push_back(std::move(v));
    }
    const size_t r = basis.size();  // Berlekamp subalgebra dimension = #factors
    std::vector<ZpPoly> factors{f};
    if (r <= 1) return factors;
    for (const auto& v : basis) {
        if (zp_deg(v) < 1) continue;
        for (uint64_t s = 0; s < p && factors.size() < r; ++s) {
            ZpPoly vs = v;
            if (vs.empty()) vs.push_back(0);
            vs[0] = (vs[0] + p - s % p) % p;
            zp_trim(vs);
            std::vector<ZpPoly> next;
            for (auto& g : factors) {
                if (zp_deg(g) <= 1) { next.push_back(std::move(g)); continue; }
                ZpPoly d = zp_gcd(g, vs, p);
                if (zp_deg(d) > 0 && zp_deg(d) < zp_deg(g)) {
                    ZpPoly q = g;
                    // exact division g / d
                    ZpPoly quo;
                    {
                        ZpPoly rem = g;
                        int dd = zp_deg(d);
                        quo.assign(static_cast<size_t>(zp_deg(g) - dd) + 1, 0);
                        uint64_t li = zp_inv_scalar(d.back(), p);
                        while (zp_deg(rem) >= dd && !rem.empty()) {
                            uint64_t qc = (rem.back() * li) % p;
                            int shift = zp_deg(rem) - dd;
                            quo[static_cast<size_t>(shift)] = qc;
                            for (int j = 0; j <= dd; ++j) {
                                uint64_t sub = (qc * d[static_cast<size_t>(j)]) % p;
                                uint64_t& t = rem[static_cast<size_t>(j + shift)];
                                t = (t + p - sub) % p;
                            }
                            zp_trim(rem);
                        }
                    }
                    next.push_back(std::move(d));
                    next.push_back(std::move(quo));
                } else {
                    next.push_back(std::move(g));
                }
            }
            factors = std::move(next);
        }
        if (factors.size() >= r) break;
    }
    for (auto& g : factors) g = zp_monic(std::move(g), p);
    std::sort(factors.begin(), factors.end());
    return factors;
}

// ------------------------------------------------------- Z/m[x] (m = p^k)

using ZmPoly = std::vector<Int>;  // lowest degree first, coeffs in [0,m)

void zm_trim(ZmPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zm_deg(const ZmPoly& a) { return static_cast<int>(a.size()) - 1; }

ZmPoly zm_reduce(ZmPoly a, const Int& m) {
    for (auto& c : a) {
        mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    }
    zm_trim(a);
    return a;
}

ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
    return zm_reduce(std::move(c), m);
}

ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly c(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return zm_reduce(std::move(c), m);
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return zm_reduce(std::move(c), m);
}

// divrem by monic b
std::pair<ZmPoly, ZmPoly> zm_divrem_monic(ZmPoly a, const ZmPoly& b, const Int& m) {
    const int db = zm_deg(b);
    if (zm_deg(a) < db) return {{}, std::move(a)};
    ZmPoly q(static_cast<size_t>(zm_deg(a) - db) + 1, Int(0));
    for (int k = zm_deg(a) - db; k >= 0; --k) {
        Int qc = a[static_cast<size_t>(k + db)];
        if (qc == 0) continue;
        q[static_cast<size_t>(k)] = qc;
        for (int j = 0; j <= db; ++j) {
            a[static_cast<size_t>(k + j)] -= qc * b[static_cast<size_t>(j)];
            mpz_mod(a[static_cast<size_t>(k + j)].get_mpz_t(), a[static_cast<size_t>(k + j)].get_mpz_t(), m.get_mpz_t());
        }
    }
    zm_trim(a);
    return {std::move(q), std::move(a)};
}

ZmPoly from_zp(const ZpPoly& a) {
    ZmPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<unsigned long>(a[i]));
    return r;
}

// One quadratic Hensel step: given f = g*h (mod m), s*g + t*h = 1 (mod m),
// h monic, lc(g) invertible mod m. Returns data valid mod m^2.
struct HenselPair {
    ZmPoly g, h, s, t;
};

HenselPair hensel_step(const ZmPoly& f, const HenselPair& in, const Int& m) {
    Int m2 = m * m;
    ZmPoly e = zm_sub(zm_reduce(f, m2), zm_mul(in.g, in.h, m2), m2);
    auto [q, r] = zm_divrem_monic(zm_mul(in.s, e, m2), in.h, m2);
    ZmPoly g2 = zm_add(in.g, zm_add(zm_mul(in.t, e, m2), zm_mul(q, in.g, m2), m2), m2);
    ZmPoly h2 = zm_add(in.h, r, m2);
    ZmPoly b = zm_sub(zm_add(zm_mul(in.s, g2, m2), zm_mul(in.t, h2, m2), m2), ZmPoly{Int(1)}, m2);
    auto [c, d] = zm_divrem_monic(zm_mul(in.s, b, m2), h2, m2);
    ZmPoly s2 = zm_sub(in.s, d, m2);
    ZmPoly t2 = zm_sub(in.t, zm_add(zm_mul(in.t, b, m2), zm_mul(c, g2, m2), m2), m2);
    return {std::move(g2), std::move(h2), std::move(s2), std::move(t2)};
}

// extended Euclid over F_p: s*a + t*b = gcd (monic)
void zp_extgcd(const ZpPoly& a, const ZpPoly& b, uint64_t p, ZpPoly& s, ZpPoly& t) {
    ZpPoly r0 = a, r1 = b;
    ZpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        // quotient of r0 by r1
        ZpPoly q;
        {
            ZpPoly rem = r0;
            int d1 = zp_deg(r1);
            if (zp_deg(rem) >= d1) {
                q.assign(static_cast<size_t>(zp_deg(rem) - d1) + 1, 0);
                uint64_t li = zp_inv_scalar(r1.back(), p);
                while (!rem.empty() && zp_deg(rem) >= d1) {
                    uint64_t qc = (rem.back() * li) % p;
                    int shift = zp_deg(rem) - d1;
                    q[static_cast<size_t>(shift)] = qc;
                    for (int j = 0; j <= d1; ++j) {
                        uint64_t sub = (qc * r1[static_cast<size_t>(j)]) % p;
                        uint64_t& x = rem[static_cast<size_t>(j + shift)];
                        x = (x + p - sub) % p;
                    }
                    zp_trim(rem);
                }
            }
            r0 = std::move(rem);
        }
        std::swap(r0, r1);
        auto combine = [&](ZpPoly& u0, ZpPoly& u1) {
            ZpPoly qu = zp_mul(q, u1, p);
            ZpPoly nu(std::max(u0.size(), qu.size()), 0);
            for (size_t i = 0; i < u0.size(); ++i) nu[i] = u0[i];
            for (size_t i = 0; i < qu.size(); ++i) nu[i] = (nu[i] + p - qu[i]) % p;
            zp_trim(nu);
            u0 = std::move(u1);
            u1 = std::move(nu);
        };
        combine(s0, s1);
        combine(t0, t1);
    }
    // normalize gcd to monic
    uint64_t li = zp_inv_scalar(r0.back(), p);
    for (auto& c : s0) c = (c * li) % p;
    for (auto& c : t0) c = (c * li) % p;
    s = std::move(s0);
    t = std::move(t0);
}

// Multifactor Hensel lifting: f primitive in Z[x], f = lc(f) * prod(w_i) mod p
// with w_i monic mod p. Lift to modulus >= target. Returns monic lifted
// factors mod the final modulus (written to mod_out).
std::vector<ZmPoly> hensel_lift_tree(const std::vector<Int>& f, const std::vector<ZpPoly>& w,
                                     uint64_t p, const Int& target, Int& mod_out) {
    Int m(static_cast<unsigned long>(p));
    Int final_mod = m;
    while (final_mod < target) final_mod = final_mod * final_mod;
    mod_out = final_mod;
    // recursive lift: h = u*v mod p^k, u carries lc(h), v monic
    std::vector<ZmPoly> result(w.size());

    // lift recursively
    std::function<void(const ZmPoly&, std::vector<size_t>)> lift =
        [&](const ZmPoly& h, std::vector<size_t> idx) {
            if (idx.size() == 1) {
                result[idx[0]] = h;
                return;
            }
            size_t half = idx.size() / 2;
            std::vector<size_t> left(idx.begin(), idx.begin() + static_cast<long>(half));
            std::vector<size_t> right(idx.begin() + static_cast<long>(half), idx.end());
            // build products mod p
            ZpPoly gl{1}, gr{1};
            for (size_t k : left) gl = zp_mul(gl, w[k], p);
            for (size_t k : right) gr = zp_mul(gr, w[k], p);
            // scale gl by lc(h) mod p
            uint64_t lcp = 0;
            {
                Int lc = h.back();
                Int pp(static_cast<unsigned long>(p));
                Int r;
                mpz_mod(r.get_mpz_t(), lc.get_mpz_t(), pp.get_mpz_t());
                lcp = r.get_ui();
            }
            ZpPoly gls = gl;
            for (auto& c : gls) c = (c * lcp) % p;
            ZpPoly s, t;
            zp_extgcd(gls, gr, p, s, t);
            HenselPair hp{from_zp(gls), from_zp(gr), from_zp(s), from_zp(t)};
            Int mm(static_cast<unsigned long>(p));
            while (mm < final_mod) {
                hp = hensel_step(h, hp, mm);
                mm = mm * mm;
            }
            // sanity: h ≡ g*h2 mod final
            lift(hp.g, left);
            lift(hp.h, right);
        };

    ZmPoly froot(f.begin(), f.end());
    froot = zm_reduce(std::move(froot), final_mod);
    std::vector<size_t> all(w.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    lift(froot, all);
    // make each lifted factor monic mod final_mod (leftmost carries lc)
    for (auto& g : result) {
        Int lc = g.back();
        Int li;
        if (mpz_invert(li.get_mpz_t(), lc.get_mpz_t(), final_mod.get_mpz_t()) == 0)
            throw std::runtime_error("hensel_lift_tree: non-invertible leading coefficient");
        for (auto& c : g) {
            c *= li;
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), final_mod.get_mpz_t());
        }
    }
    return result;
}

// ------------------------------------------------------------ Z[x] helpers

PolyQ zx_to_polyq(const std::vector<Int>& a) {
    std::vector<Rat> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = Rat(a[i]);
    return PolyQ(std::move(v));
}

Int zx_norm_inf(const std::vector<Int>& a) {
    Int n(0);
    for (const auto& c : a) {
        Int ab = abs(c);
        if (ab > n) n = ab;
    }
    return n;
}

Int symmetric_mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (r * 2 > m) r -= m;
    return r;
}

// Zassenhaus factorization of a primitive squarefree integer polynomial with
// positive leading coefficient. Returns irreducible integer factors.
std::vector<std::vector<Int>> zassenhaus(const std::vector<Int>& f) {
    const int n = static_cast<int>(f.size()) - 1;
    if (n == 1) return {f};
    const Int lc = f.back();

    // prime selection: smallest primes with p /| lc and f squarefree mod p;
    // keep the candidate with the fewest modular factors (degenerate degree
    // patterns trigger the retries).
    struct ModFact {
        uint64_t p = 0;
        std::vector<ZpPoly> factors;
    };
    ModFact best;
    int tried = 0;
    for (uint64_t p = 2; tried < 5 && p < 2000; ++p) {
        bool prime = p >= 2;
        for (uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) { prime = false; break; }
        if (!prime) continue;
        if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        ZpPoly fp(f.size());
        for (size_t i = 0; i < f.size(); ++i) {
            Int r;
            mpz_mod_ui(r.get_mpz_t(), f[i].get_mpz_t(), static_cast<unsigned long>(p));
            fp[i] = r.get_ui();
        }
        zp_trim(fp);
        if (zp_deg(fp) != n) continue;
        ZpPoly g = zp_gcd(fp, zp_derivative(fp, p), p);
        if (zp_deg(g) != 0) continue;  // not squarefree mod p
        ModFact cand;
        cand.p = p;
        cand.factors = berlekamp(zp_monic(fp, p), p);
        ++tried;
        if (cand.factors.size() == 1) return {f};  // irreducible
        if (best.p == 0 || cand.factors.size() < best.factors.size()) best = std::move(cand);
        if (best.factors.size() <= 3) break;
    }
    if (best.p == 0) throw std::runtime_error("zassenhaus: no usable prime found");
    const uint64_t p = best.p;

    // Landau-Mignotte style bound on coefficients of lc-scaled monic factors
    Int bound = zx_norm_inf(f);
    Int two_n(1);
    mpz_mul_2exp(two_n.get_mpz_t(), two_n.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    bound = bound * two_n * Int(n + 1) * abs(lc);
    Int target = bound * 2 + 1;

    Int modulus;
    std::vector<ZmPoly> lifted = hensel_lift_tree(f, best.factors, p, target, modulus);

    // subset recombination
    std::vector<std::vector<Int>> out;
    std::vector<ZmPoly> pool = std::move(lifted);
    std::vector<Int> g = f;

    auto try_subset = [&](const std::vector<size_t>& idx) -> bool {
        Int lcg = g.back();
        // cheap filter: candidate constant term must divide lc(g)*g(0)
        if (g[0] != 0) {
            Int c0 = lcg;
            for (size_t k : idx) {
                c0 *= pool[k][0];
                mpz_mod(c0.get_mpz_t(), c0.get_mpz_t(), modulus.get_mpz_t());
            }
            c0 = symmetric_mod(c0, modulus);
            if (c0 == 0) return false;
            Int prod0 = lcg * g[0];
            if (!mpz_divisible_p(prod0.get_mpz_t(), c0.get_mpz_t())) return false;
        }
        ZmPoly prod{lcg};
        prod = zm_reduce(std::move(prod), modulus);
        for (size_t k : idx) prod = zm_mul(prod, pool[k], modulus);
        std::vector<Int> cand(prod.size());
        for (size_t i = 0; i < prod.size(); ++i) cand[i] = symmetric_mod(prod[i], modulus);
        // primitive part
        Int cont(0);
        for (const auto& c : cand) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
        if (cont == 0) return false;
        for (auto& c : cand) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), cont.get_mpz_t());
        if (cand.back() < 0)
            for (auto& c : cand) c = -c;
        // exact division test over Q
        PolyQ qg = zx_to_polyq(g), qc = zx_to_polyq(cand);
        auto [quot, rem] = poly_divrem(qg, qc);
        if (!rem.is_zero()) return false;
        out.push_back(cand);
        // g := quotient (primitive by Gauss's lemma)
        ContentSplit cs = content_split(quot);
        g = cs.pp;
        std::vector<ZmPoly> rest;
        for (size_t k = 0; k < pool.size(); ++k)
            if (std::find(idx.begin(), idx.end(), k) == idx.end()) rest.push_back(std::move(pool[k]));
        pool = std::move(rest);
        return true;
    };

    auto next_combination = [](std::vector<size_t>& idx, size_t n) -> bool {
        size_t d = idx.size();
        size_t i = d;
        while (i-- > 0) {
            if (idx[i] < n - d + i) {
                ++idx[i];
                for (size_t j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    long budget = 1L << 24;
    size_t d = 1;
    while (!pool.empty() && 2 * d <= pool.size()) {
        std::vector<size_t> idx(d);
        for (size_t i = 0; i < d; ++i) idx[i] = i;
        bool removed = false;
        while (true) {
            if (--budget < 0) throw std::runtime_error("zassenhaus: recombination budget exceeded");
            if (try_subset(idx)) { removed = true; break; }
            if (!next_combination(idx, pool.size())) break;
        }
        if (!removed) ++d;
    }
    if (static_cast<int>(g.size()) - 1 > 0) out.push_back(g);
    return out;
}

}  // namespace

Factorization factor_q(const PolyQ& a) {
    if (a.is_zero()) throw std::invalid_argument("factor_q: zero polynomial");
    if (a.degree() > kFactorDegreeCap)
        throw std::invalid_argument("factor_q: degree exceeds cap of 128");
    Factorization out;
    out.unit = a.lc();
    if (a.degree() == 0) return out;
    PolyQ f = a.monic();

    // Yun squarefree decomposition: f = prod a_i^i with a_i monic squarefree
    std::vector<std::pair<PolyQ, int>> squarefree_parts;
    {
        PolyQ d = poly_gcd(f, f.derivative());
        PolyQ b = poly_divexact(f, d);
        PolyQ c = poly_divexact(f.derivative(), d);
        PolyQ z = c - b.derivative();
        int i = 1;
        while (b.degree() > 0) {
            PolyQ ai = poly_gcd(b, z);
            if (ai.degree() > 0) squarefree_parts.emplace_back(ai, i);
            b = poly_divexact(b, ai);
            c = poly_divexact(z, ai);
            z = c - b.derivative();
            ++i;
        }
    }

    for (const auto& [sq, mult] : squarefree_parts) {
        ContentSplit cs = content_split(sq);
        auto ifactors = zassenhaus(cs.pp);
        for (const auto& zf : ifactors) {
            PolyQ monic_factor = zx_to_polyq(zf).monic();
            out.factors.emplace_back(monic_factor, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) {
                  if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
                  for (int k = x.first.degree(); k >= 0; --k) {
                      if (x.first.coeff(k) != y.first.coeff(k)) return x.first.coeff(k) < y.first.coeff(k);
                  }
                  return x.second < y.second;
              });
    return out;
}

}  // namespace shaforge
