#include "shaforge/sections.hpp"

#include <stdexcept>

#include "shaforge/factor.hpp"

namespace shaforge {

Hyperplane::Hyperplane(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)), lead_(-1) {
    if (coeffs_.size() != 5) throw std::invalid_argument("Hyperplane: need 5 coordinates");
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) { lead_ = static_cast<int>(i); break; }
    if (lead_ < 0) throw std::invalid_argument("Hyperplane: zero coordinates");
    Rat li = coeffs_[static_cast<size_t>(lead_)].inv();
    for (auto& c : coeffs_) c *= li;
}

std::string section_class_name(SectionClass c) {
    switch (c) {
        case SectionClass::Smooth: return "Smooth";
        case SectionClass::IntegralNodal: return "IntegralNodal";
        case SectionClass::TwoComponents: return "TwoComponents";
        case SectionClass::Rejected: return "Rejected";
    }
    return "Rejected";
}

SectionPencil restrict_to_hyperplane(const DP4Surface& x, const Hyperplane& h) {
    QQ q;
    GramQ r0 = restrict_gram(q, x.q0().gram(), h.coeffs());
    GramQ ri = restrict_gram(q, x.qinf().gram(), h.coeffs());
    return SectionPencil{h, h.eliminated_var(),
                         QuadricPencil(QuadraticForm(4, std::move(r0)), QuadraticForm(4, std::move(ri)))};
}

Rat section_disc_raw(const QuadricPencil& surface_pencil, const std::vector<Rat>& coeffs) {
    const size_t n = coeffs.size();
    size_t e = n;
    for (size_t i = 0; i < n; ++i)
        if (!coeffs[i].is_zero()) { e = i; break; }
    if (e == n) throw std::invalid_argument("section_disc_raw: zero covector");
    // polynomial kernel basis b_i = c_e e_i - c_i e_e (degree-2 homogeneous
    // in the covector once pulled through the grams)
    QQ q;
    auto restrict_poly = [&](const GramQ& g) {
        GramQ out(n - 1, std::vector<Rat>(n - 1, Rat(0)));
        std::vector<size_t> keep;
        for (size_t i = 0; i < n; ++i)
            if (i != e) keep.push_back(i);
        for (size_t p = 0; p < keep.size(); ++p)
            for (size_t s = 0; s < keep.size(); ++s) {
                size_t i = keep[p], j = keep[s];
                Rat v = coeffs[e] * coeffs[e] * g[i][j];
                v -= coeffs[e] * coeffs[i] * g[e][j];
                v -= coeffs[e] * coeffs[j] * g[i][e];
                v += coeffs[i] * coeffs[j] * g[e][e];
                out[p][s] = v;
            }
        return out;
    };
    GramQ r0 = restrict_poly(surface_pencil.q0().gram());
    GramQ ri = restrict_poly(surface_pencil.qinf().gram());
    PolyQ detp(pencil_det(q, r0, ri));
    if (detp.is_zero()) throw std::domain_error("pencil fully degenerate");
    if (detp.degree() < 4) {
        // singular at infinity of the lambda-line; still on the dual variety
        // iff the re-based full-degree polynomial has a repeated root. A
        // degenerate qinf' member of the section pencil already forces a
        // repeated projective root unless re-basing restores full degree.
        QuadricPencil sp(QuadraticForm(4, r0), QuadraticForm(4, ri));
        auto t = nondegenerate_member(sp);
        if (!t) throw std::domain_error("pencil fully degenerate");
        GramQ member(4, std::vector<Rat>(4, Rat(0)));
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) member[i][j] = r0[i][j] + *t * ri[i][j];
        PolyQ rebased(pencil_det(q, ri, member));
        if (rebased.degree() != 4) throw std::domain_error("pencil fully degenerate");
        return resultant(rebased, rebased.derivative());
    }
    return resultant(detp, detp.derivative());
}

Rat section_disc(const DP4Surface& x, const Hyperplane& h) {
    return section_disc_raw(x.pencil(), h.coeffs());
}

namespace {

// Singular points of a dim-4 pencil at a rational double root with kernel
// data already computed. kernel basis vectors are over Q.
void extract_singular_points(IntegralityClass& out, const GramQ& gi,
                             const std::vector<std::vector<Rat>>& kernel) {
    QQ q;
    if (kernel.size() == 1) {
        out.rational_points.push_back(kernel[0]);
        return;
    }
    // two components: zeros of qinf on the kernel plane X w1 + Y w2
    const auto& w1 = kernel[0];
    const auto& w2 = kernel[1];
    Rat a(0), b(0), c(0);
    for (size_t i = 0; i < gi.size(); ++i)
        for (size_t j = 0; j < gi.size(); ++j) {
            a += gi[i][j] * w1[i] * w1[j];
            b += gi[i][j] * w1[i] * w2[j];
            c += gi[i][j] * w2[i] * w2[j];
        }
    auto combine_rat = [&](const Rat& X, const Rat& Y) {
        std::vector<Rat> v(w1.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = X * w1[i] + Y * w2[i];
        return v;
    };
    if (a.is_zero() && b.is_zero() && c.is_zero()) return;  // no isolated points to report
    if (a.is_zero()) {
        // Y (2bX + cY) = 0
        out.rational_points.push_back(combine_rat(Rat(1), Rat(0)));
        if (!b.is_zero()) out.rational_points.push_back(combine_rat(-c, Rat(2) * b));
        return;
    }
    Rat disc = b * b - a * c;
    // rational square test on disc
    Int dn = disc.num() * disc.den();
    if (disc.sign() >= 0 && mpz_perfect_square_p(dn.get_mpz_t())) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), dn.get_mpz_t());
        Rat root(s, disc.den());
        out.rational_points.push_back(combine_rat((-b + root) / a, Rat(1)));
        if (!root.is_zero()) out.rational_points.push_back(combine_rat((-b - root) / a, Rat(1)));
        return;
    }
    // conjugate pair over Q[T]/(T^2 + (2b/a) T + c/a)
    PolyQ m({c / a, Rat(2) * b / a, Rat(1)});
    auto K = NumberField::create(m);
    NFElem T = K->generator();
    NFElem other = K->sub(K->from_rat(Rat(-2) * b / a), T);
    auto combine_nf = [&](const NFElem& X) {
        std::vector<NFElem> v;
        v.reserve(w1.size());
        for (size_t i = 0; i < w1.size(); ++i)
            v.push_back(K->add(K->mul(X, K->from_rat(w1[i])), K->from_rat(w2[i])));
        return v;
    };
    out.point_field = K;
    out.nf_points.push_back(combine_nf(T));
    out.nf_points.push_back(combine_nf(other));
}

}  // namespace

IntegralityClass classify_pencil(const QuadricPencil& p) {
    IntegralityClass out;
    QQ q;
    Mat<QQ> g0 = p.q0().gram(), gi = p.qinf().gram();
    const int n = p.dim();
    PolyQ detp = p.detpoly();
    if (detp.is_zero()) {
        out.reject_reason = "detpoly degenerate";
        return out;
    }
    if (detp.degree() < n) {
        auto t = nondegenerate_member(p);
        if (!t) {
            out.reject_reason = "detpoly degenerate";
            return out;
        }
        GramQ member(g0.size(), std::vector<Rat>(g0.size(), Rat(0)));
        for (size_t i = 0; i < g0.size(); ++i)
            for (size_t j = 0; j < g0.size(); ++j) member[i][j] = g0[i][j] + *t * gi[i][j];
        g0 = gi;
        gi = std::move(member);
        detp = PolyQ(pencil_det(q, g0, gi));
        if (detp.degree() != n) {
            out.reject_reason = "detpoly degenerate";
            return out;
        }
    }
    PolyQ g = poly_gcd(detp, detp.derivative());
    if (g.degree() == 0) {
        out.cls = SectionClass::Smooth;
        return out;
    }
    if (g.degree() > 1) {
        out.reject_reason = "gcd degree > 1";
        return out;
    }
    Rat r = -g.coeff(0);
    out.double_root_minpoly = g;
    GramQ member(g0.size(), std::vector<Rat>(g0.size(), Rat(0)));
    for (size_t i = 0; i < g0.size(); ++i)
        for (size_t j = 0; j < g0.size(); ++j) member[i][j] = g0[i][j] + r * gi[i][j];
    auto kernel = mat_kernel(q, member);
    out.kernel_dim = static_cast<int>(kernel.size());
    if (out.kernel_dim == 1)
        out.cls = SectionClass::IntegralNodal;
    else if (out.kernel_dim == 2)
        out.cls = SectionClass::TwoComponents;
    else {
        out.reject_reason = "kernel dimension out of range";
        return out;
    }
    extract_singular_points(out, gi, kernel);
    return out;
}

IntegralityClass classify_section(const SectionPencil& s) { return classify_pencil(s.restricted); }

}  // namespace shaforge
