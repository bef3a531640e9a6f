#include "shaforge/pencil.hpp"

#include <random>
#include <stdexcept>

#include "shaforge/factor.hpp"

namespace shaforge {

namespace {

// Q[t] as a ring object for determinant work.
struct QtRing {
    using Elem = PolyQ;
    PolyQ zero() const { return PolyQ(); }
    PolyQ one() const { return PolyQ::constant(Rat(1)); }
    PolyQ from_int(long n) const { return PolyQ::constant(Rat(n)); }
    PolyQ add(const PolyQ& a, const PolyQ& b) const { return a + b; }
    PolyQ sub(const PolyQ& a, const PolyQ& b) const { return a - b; }
    PolyQ mul(const PolyQ& a, const PolyQ& b) const { return a * b; }
    PolyQ neg(const PolyQ& a) const { return -a; }
    PolyQ divexact(const PolyQ& a, const PolyQ& b) const { return poly_divexact(a, b); }
    bool is_zero(const PolyQ& a) const { return a.is_zero(); }
    bool eq(const PolyQ& a, const PolyQ& b) const { return a == b; }
    PolyQ inv(const PolyQ&) const { throw std::logic_error("QtRing: not a field"); }
};

std::vector<PolyQ> line_covector(const PencilLine& line) {
    std::vector<PolyQ> cov(5);
    for (size_t i = 0; i < 5; ++i)
        cov[i] = PolyQ({line.h0.coeffs()[i], line.hinf.coeffs()[i]});
    return cov;
}

// entries of the restricted gram as polynomials in t (affine substitution
// at the eliminated variable, whose covector coordinate is constant 1)
Mat<QtRing> restrict_gram_t(const GramQ& g, const std::vector<PolyQ>& cov, int e) {
    QtRing R;
    std::vector<size_t> keep;
    for (size_t i = 0; i < 5; ++i)
        if (static_cast<int>(i) != e) keep.push_back(i);
    Mat<QtRing> out(4, std::vector<PolyQ>(4));
    const size_t se = static_cast<size_t>(e);
    for (size_t p = 0; p < 4; ++p)
        for (size_t q = 0; q < 4; ++q) {
            size_t i = keep[p], j = keep[q];
            PolyQ v = PolyQ::constant(g[i][j]);
            v = v - cov[i] * g[se][j];
            v = v - cov[j] * g[i][se];
            v = v + cov[i] * cov[j] * g[se][se];
            out[p][q] = v;
        }
    return out;
}

}  // namespace

PolyQ line_disc_t(const DP4Surface& x, const Hyperplane& h0, const Hyperplane& hinf) {
    // requires hinf coordinate zero at h0's eliminated variable (PencilLine
    // construction guarantees it)
    const int e = h0.eliminated_var();
    if (!hinf.coeffs()[static_cast<size_t>(e)].is_zero())
        throw std::logic_error("line_disc_t: hinf not reduced against h0");
    QtRing R;
    std::vector<PolyQ> cov(5);
    for (size_t i = 0; i < 5; ++i) cov[i] = PolyQ({h0.coeffs()[i], hinf.coeffs()[i]});
    Mat<QtRing> r0 = restrict_gram_t(x.q0().gram(), cov, e);
    Mat<QtRing> ri = restrict_gram_t(x.qinf().gram(), cov, e);
    // P_t(lambda) = det(r0 + lambda ri), coefficients in Q[t]
    FPoly<QtRing> p = pencil_det(R, r0, ri);
    int m = fp_deg(p);
    if (m < 1) return PolyQ();
    // d/dlambda
    FPoly<QtRing> dp(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) dp[i - 1] = p[i] * Rat(static_cast<long>(i));
    int n = fp_deg(dp);
    // Sylvester matrix over Q[t], rows of P first
    const size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<PolyQ>> syl(N, std::vector<PolyQ>(N, PolyQ()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) syl[static_cast<size_t>(i)][static_cast<size_t>(i + j)] = p[static_cast<size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) syl[static_cast<size_t>(n + i)][static_cast<size_t>(i + j)] = dp[static_cast<size_t>(n - j)];
    return det_bareiss(R, syl);
}

PencilLine::PencilLine(const DP4Surface& x, const Hyperplane& a, const Hyperplane& b)
    : h0(a), hinf(b) {
    // independence
    QQ q;
    Mat<QQ> m(2, std::vector<Rat>(5));
    for (size_t i = 0; i < 5; ++i) {
        m[0][i] = a.coeffs()[i];
        m[1][i] = b.coeffs()[i];
    }
    if (mat_rank(q, m) != 2) throw std::invalid_argument("PencilLine: dependent hyperplanes");
    // re-base hinf within the line so hinf[e] = 0 (h0[e] = 1)
    const size_t e = static_cast<size_t>(a.eliminated_var());
    std::vector<Rat> nb = b.coeffs();
    if (!nb[e].is_zero()) {
        Rat c = nb[e];
        for (size_t i = 0; i < 5; ++i) nb[i] -= c * a.coeffs()[i];
    }
    hinf = Hyperplane(std::move(nb));
    disc_t = line_disc_t(x, h0, hinf);
}

Hyperplane fiber_hyperplane(const PencilLine& line, const FiberParam& t) {
    if (t.is_infinity()) return line.hinf;
    Rat tv = t.value();
    std::vector<Rat> c(5);
    for (size_t i = 0; i < 5; ++i) c[i] = line.h0.coeffs()[i] + tv * line.hinf.coeffs()[i];
    return Hyperplane(std::move(c));
}

SectionPencil fiber_section(const DP4Surface& x, const PencilLine& line, const FiberParam& t) {
    return restrict_to_hyperplane(x, fiber_hyperplane(line, t));
}

namespace {

SectionClass classify_fiber_at_root(const DP4Surface& x, const PencilLine& line, const PolyQ& minpoly) {
    if (minpoly.degree() == 1) {
        Rat t0 = -minpoly.coeff(0);
        return classify_section(fiber_section(x, line, FiberParam::finite(t0))).cls;
    }
    auto K = NumberField::create(minpoly);
    NFElem t0 = K->generator();
    std::vector<NFElem> cov;
    cov.reserve(5);
    for (size_t i = 0; i < 5; ++i)
        cov.push_back(K->add(K->from_rat(line.h0.coeffs()[i]),
                             K->mul(t0, K->from_rat(line.hinf.coeffs()[i]))));
    auto lift = [&](const GramQ& g) {
        Mat<NumberField> out(5, std::vector<NFElem>(5, K->zero()));
        for (size_t i = 0; i < 5; ++i)
            for (size_t j = 0; j < 5; ++j) out[i][j] = K->from_rat(g[i][j]);
        return out;
    };
    Mat<NumberField> g0 = restrict_gram(*K, lift(x.q0().gram()), cov);
    Mat<NumberField> gi = restrict_gram(*K, lift(x.qinf().gram()), cov);
    return classify_pencil_over(*K, std::move(g0), std::move(gi));
}

}  // namespace

std::optional<std::string> validate_line(const DP4Surface& x, PencilLine& line) {
    line.validated = false;
    line.fiber_classes.clear();
    if (line.disc_t.is_zero()) return "disc_t identically zero";
    Factorization fac = factor_q(line.disc_t);
    for (const auto& [m, mult] : fac.factors) {
        if (m.degree() < 1) continue;
        FiberClassRecord rec;
        rec.factor = m;
        rec.multiplicity = mult;
        rec.cls = classify_fiber_at_root(x, line, m);
        line.fiber_classes.push_back(rec);
        if (rec.cls != SectionClass::Smooth && rec.cls != SectionClass::IntegralNodal)
            return "fiber at root of " + m.str("t") + " classifies " + section_class_name(rec.cls);
    }
    line.infinity_class = classify_section(fiber_section(x, line, FiberParam::infinity())).cls;
    if (line.infinity_class != SectionClass::Smooth && line.infinity_class != SectionClass::IntegralNodal)
        return "fiber at infinity classifies " + section_class_name(line.infinity_class);
    try {
        line.base = base_locus(x, line);
    } catch (const std::domain_error& e) {
        return std::string(e.what());
    }
    line.validated = true;
    return std::nullopt;
}

namespace {

// deterministic list of unimodular 3x3 coordinate changes for the
// base-locus elimination
std::vector<Mat<QQ>> plane_transforms() {
    std::vector<Mat<QQ>> out;
    auto mk = [](long a, long b, long c, long d, long e, long f, long g, long h, long i) {
        Mat<QQ> m(3, std::vector<Rat>(3));
        m[0] = {Rat(a), Rat(b), Rat(c)};
        m[1] = {Rat(d), Rat(e), Rat(f)};
        m[2] = {Rat(g), Rat(h), Rat(i)};
        return m;
    };
    out.push_back(mk(1, 0, 0, 0, 1, 0, 0, 0, 1));
    out.push_back(mk(1, 0, 1, 0, 1, 0, 0, 0, 1));
    out.push_back(mk(1, 0, 0, 0, 1, 1, 0, 0, 1));
    out.push_back(mk(1, 1, 0, 0, 1, 1, 1, 0, 1));
    out.push_back(mk(0, 0, 1, 1, 0, 0, 0, 1, 0));
    out.push_back(mk(1, 2, 0, 0, 1, 2, 0, 0, 1));
    out.push_back(mk(1, 0, 2, 2, 1, 0, 1, 1, 1));
    out.push_back(mk(1, -1, 0, 1, 1, 1, 0, 1, 1));
    out.push_back(mk(2, 1, 1, 1, 1, 0, 1, 0, 2));
    out.push_back(mk(1, 3, 1, 0, 1, -2, 1, 0, 1));
    out.push_back(mk(1, -2, 1, 2, 1, -1, 1, 1, 1));
    out.push_back(mk(3, 1, 2, 1, 0, 1, 1, 1, 1));
    return out;
}

}  // namespace

BaseLocus base_locus(const DP4Surface& x, const PencilLine& line) {
    QQ q;
    // plane = H0 cap Hinf
    Mat<QQ> rows(2, std::vector<Rat>(5));
    for (size_t i = 0; i < 5; ++i) {
        rows[0][i] = line.h0.coeffs()[i];
        rows[1][i] = line.hinf.coeffs()[i];
    }
    auto plane = mat_kernel(q, rows);  // 3 vectors in Q^5
    if (plane.size() != 3) throw std::logic_error("base_locus: plane dimension wrong");

    auto conic = [&](const GramQ& g, const std::vector<std::vector<Rat>>& basis) {
        Mat<QQ> c(3, std::vector<Rat>(3, Rat(0)));
        for (size_t p = 0; p < 3; ++p)
            for (size_t s = 0; s < 3; ++s) {
                Rat v(0);
                for (size_t i = 0; i < 5; ++i)
                    for (size_t j = 0; j < 5; ++j) v += g[i][j] * basis[p][i] * basis[s][j];
                c[p][s] = v;
            }
        return c;
    };

    for (const auto& U : plane_transforms()) {
        // transformed plane basis: columns of (plane^T * U)
        std::vector<std::vector<Rat>> basis(3, std::vector<Rat>(5, Rat(0)));
        for (size_t newb = 0; newb < 3; ++newb)
            for (size_t oldb = 0; oldb < 3; ++oldb)
                for (size_t i = 0; i < 5; ++i)
                    basis[newb][i] += plane[oldb][i] * U[oldb][newb];
        Mat<QQ> c0 = conic(x.q0().gram(), basis);
        Mat<QQ> ci = conic(x.qinf().gram(), basis);
        if (c0[2][2].is_zero() || ci[2][2].is_zero()) continue;

        // conics as quadratics in the last plane coordinate z:
        //   a2 z^2 + a1(x,y) z + a0(x,y)
        // resultant = (a2 b0 - a0 b2)^2 - (a2 b1 - a1 b2)(a1 b0 - a0 b1)
        // with a1, b1 linear and a0, b0 quadratic in (x, y); we carry
        // (x, y) = (s, 1) and track the homogeneous degree-4 part separately
        QtRing R;
        auto coeffs_in_z = [&](const Mat<QQ>& c) {
            // returns [a0(s), a1(s), a2] as polynomials in s with y = 1
            PolyQ a0({c[1][1], Rat(2) * c[0][1], c[0][0]});
            PolyQ a1({Rat(2) * c[1][2], Rat(2) * c[0][2]});
            PolyQ a2 = PolyQ::constant(c[2][2]);
            return std::array<PolyQ, 3>{a0, a1, a2};
        };
        auto A = coeffs_in_z(c0);
        auto B = coeffs_in_z(ci);
        PolyQ r1 = A[2] * B[0] - A[0] * B[2];
        PolyQ r2 = A[2] * B[1] - A[1] * B[2];
        PolyQ r3 = A[1] * B[0] - A[0] * B[1];
        PolyQ quartic = r1 * r1 - r2 * r3;
        if (quartic.degree() != 4) continue;
        if (poly_gcd(quartic, quartic.derivative()).degree() != 0) continue;

        // factor into closed points
        Factorization fac = factor_q(quartic);
        BaseLocus out;
        out.plane_basis = basis;
        out.quartic = quartic;
        int degree_sum = 0;
        bool ok = true;
        for (const auto& [m, mult] : fac.factors) {
            if (m.degree() < 1) continue;
            if (mult != 1) { ok = false; break; }
            ClosedPoint pt;
            pt.degree = m.degree();
            auto solve_z_and_emit = [&](auto&& field_like, auto&& to_elem, auto&& elem_to_poly) -> bool {
                // two quadratics in z over the residue field; common root
                using KT = std::decay_t<decltype(field_like)>;
                const KT& K = field_like;
                FPoly<KT> qa{to_elem(A[0]), to_elem(A[1]), to_elem(A[2])};
                FPoly<KT> qb{to_elem(B[0]), to_elem(B[1]), to_elem(B[2])};
                fp_trim(K, qa);
                fp_trim(K, qb);
                FPoly<KT> g = fp_gcd(K, qa, qb);
                if (fp_deg(g) != 1) return false;
                auto z = K.neg(g[0]);  // monic linear
                // plane coords (s, 1, z) -> P^4
                for (size_t i = 0; i < 5; ++i) {
                    auto v = K.add(K.add(K.mul(to_elem(PolyQ::x()), K.mul(K.one(), to_elem(PolyQ::constant(basis[0][i])))),
                                         to_elem(PolyQ::constant(basis[1][i]))),
                                   K.mul(z, to_elem(PolyQ::constant(basis[2][i]))));
                    pt.coords.push_back(elem_to_poly(v));
                }
                return true;
            };
            if (m.degree() == 1) {
                Rat s0 = -m.coeff(0);
                // specialize A, B at s = s0 over Q
                QQ K;
                FPoly<QQ> qa{A[0].eval(s0), A[1].eval(s0), A[2].eval(s0)};
                FPoly<QQ> qb{B[0].eval(s0), B[1].eval(s0), B[2].eval(s0)};
                fp_trim(K, qa);
                fp_trim(K, qb);
                FPoly<QQ> g = fp_gcd(K, qa, qb);
                if (fp_deg(g) != 1) { ok = false; break; }
                Rat z = -g[0];
                for (size_t i = 0; i < 5; ++i)
                    pt.coords.push_back(PolyQ::constant(s0 * basis[0][i] + basis[1][i] + z * basis[2][i]));
            } else {
                auto K = NumberField::create(m);
                NFElem shat = K->generator();
                auto ev = [&](const PolyQ& a) {
                    NFElem r = K->zero();
                    for (int d = a.degree(); d >= 0; --d)
                        r = K->add(K->mul(r, shat), K->from_rat(a.coeff(d)));
                    return r;
                };
                FPoly<NumberField> qa{ev(A[0]), ev(A[1]), ev(A[2])};
                FPoly<NumberField> qb{ev(B[0]), ev(B[1]), ev(B[2])};
                fp_trim(*K, qa);
                fp_trim(*K, qb);
                FPoly<NumberField> g = fp_gcd(*K, qa, qb);
                if (fp_deg(g) != 1) { ok = false; break; }
                NFElem z = K->neg(g[0]);
                pt.minpoly = m;
                for (size_t i = 0; i < 5; ++i) {
                    NFElem v = K->add(K->add(K->mul(shat, K->from_rat(basis[0][i])),
                                             K->from_rat(basis[1][i])),
                                      K->mul(z, K->from_rat(basis[2][i])));
                    pt.coords.push_back(v.c);
                }
            }
            degree_sum += pt.degree;
            out.points.push_back(std::move(pt));
        }
        if (!ok || degree_sum != 4) continue;
        return out;
    }
    throw std::domain_error("base locus not reduced");
}

PencilLine find_good_pencil(const DP4Surface& x, uint64_t rng_seed, long max_attempts) {
    std::mt19937_64 rng(rng_seed);
    long height = 10;
    for (long attempt = 1; attempt <= max_attempts; ++attempt) {
        if (attempt % 64 == 0) height *= 2;
        std::uniform_int_distribution<long> coeff(-height, height);
        auto sample = [&]() -> std::optional<Hyperplane> {
            std::vector<Rat> c(5);
            bool nonzero = false;
            for (auto& v : c) {
                long r = coeff(rng);
                v = Rat(r);
                nonzero = nonzero || r != 0;
            }
            if (!nonzero) return std::nullopt;
            return Hyperplane(std::move(c));
        };
        auto h0 = sample();
        if (!h0) continue;
        // H0 off the dual variety
        try {
            if (section_disc(x, *h0).is_zero()) continue;
        } catch (const std::domain_error&) {
            continue;
        }
        auto hinf = sample();
        if (!hinf) continue;
        try {
            PencilLine line(x, *h0, *hinf);
            if (!validate_line(x, line)) return line;
        } catch (const std::invalid_argument&) {
            continue;  // dependent pair
        }
    }
    throw std::runtime_error("no good pencil found in max_attempts");
}

}  // namespace shaforge
