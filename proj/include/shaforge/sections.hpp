#ifndef SHAFORGE_SECTIONS_HPP
#define SHAFORGE_SECTIONS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "shaforge/quadform.hpp"
#include "shaforge/surfaces.hpp"

namespace shaforge {

// A point of (P^4)*: hyperplane sum y_i x_i = 0, normalized so the first
// nonzero coordinate is 1 (that variable gets eliminated on restriction).
class Hyperplane {
public:
    explicit Hyperplane(std::vector<Rat> coeffs);

    const std::vector<Rat>& coeffs() const { return coeffs_; }
    int eliminated_var() const { return lead_; }

    friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Rat> coeffs_;
    int lead_;
};

enum class SectionClass { Smooth, IntegralNodal, TwoComponents, Rejected };

std::string section_class_name(SectionClass c);

// Classification of a hyperplane section per the kernel-dimension dichotomy:
// Smooth (squarefree degree-4 determinant polynomial), an integral curve
// with one node, two components meeting in two singular points, or Rejected
// (hypotheses of the dichotomy fail).
struct IntegralityClass {
    SectionClass cls = SectionClass::Rejected;
    std::string reject_reason;

    // set when cls is IntegralNodal or TwoComponents
    PolyQ double_root_minpoly;                 // of the double root of P(lambda)
    int kernel_dim = 0;

    // singular points, when the base field is Q: either rational coordinates
    // or conjugate points over a quadratic extension
    std::vector<std::vector<Rat>> rational_points;
    std::shared_ptr<const NumberField> point_field;
    std::vector<std::vector<NFElem>> nf_points;
};

// Restriction of the surface to H: substitute the eliminated variable and
// produce the induced pencil of 4x4 forms on the section coordinates (the
// remaining variables in increasing index order).
struct SectionPencil {
    Hyperplane hyperplane;
    int eliminated_var;
    QuadricPencil restricted;  // dim 4
};

SectionPencil restrict_to_hyperplane(const DP4Surface& x, const Hyperplane& h);

// Res(P, P') of the section's determinant polynomial; zero iff h lies on the
// dual variety X* (i.e. the section is singular). Throws
// std::domain_error("pencil fully degenerate") when the section's detpoly
// vanishes identically.
Rat section_disc(const DP4Surface& x, const Hyperplane& h);

// Raw-coefficient variant (no normalization): restriction along the
// polynomial kernel basis of the covector. Homogeneous of degree 56 in the
// coefficient vector; used where scaling behaviour matters.
Rat section_disc_raw(const QuadricPencil& surface_pencil, const std::vector<Rat>& coeffs);

IntegralityClass classify_section(const SectionPencil& s);

// Core classifier on a dim-4 pencil over Q (normal forms, fibers at
// rational parameters).
IntegralityClass classify_pencil(const QuadricPencil& p);

// Field-generic classification (no singular-point extraction): used for
// fibers whose parameter generates a number field.
template <class K>
SectionClass classify_pencil_over(const K& k, Mat<K> g0, Mat<K> gi, std::string* why = nullptr);

// Field-generic restriction of a 5x5 gram to the hyperplane with the given
// covector (first K-nonzero coordinate eliminated).
template <class K>
Mat<K> restrict_gram(const K& k, const Mat<K>& gram5, const std::vector<typename K::Elem>& coeffs);

// ------------------------------------------------------------ templates

template <class K>
Mat<K> restrict_gram(const K& k, const Mat<K>& gram5, const std::vector<typename K::Elem>& coeffs) {
    const size_t n = gram5.size();
    size_t e = n;
    for (size_t i = 0; i < n; ++i)
        if (!k.is_zero(coeffs[i])) { e = i; break; }
    if (e == n) throw std::invalid_argument("restrict_gram: zero covector");
    auto ce_inv = k.inv(coeffs[e]);
    // substitution x_e = -sum_{i != e} (c_i / c_e) x_i
    std::vector<size_t> keep;
    for (size_t i = 0; i < n; ++i)
        if (i != e) keep.push_back(i);
    // column vectors a_i = e_i - (c_i/c_e) e_e
    Mat<K> out(n - 1, std::vector<typename K::Elem>(n - 1, k.zero()));
    for (size_t p = 0; p < keep.size(); ++p) {
        for (size_t q = 0; q < keep.size(); ++q) {
            size_t i = keep[p], j = keep[q];
            auto li = k.neg(k.mul(coeffs[i], ce_inv));
            auto lj = k.neg(k.mul(coeffs[j], ce_inv));
            auto v = gram5[i][j];
            v = k.add(v, k.mul(li, gram5[e][j]));
            v = k.add(v, k.mul(lj, gram5[i][e]));
            v = k.add(v, k.mul(k.mul(li, lj), gram5[e][e]));
            out[p][q] = v;
        }
    }
    return out;
}

template <class K>
SectionClass classify_pencil_over(const K& k, Mat<K> g0, Mat<K> gi, std::string* why) {
    auto fail = [&](const char* r) {
        if (why) *why = r;
        return SectionClass::Rejected;
    };
    const int n = static_cast<int>(g0.size());
    FPoly<K> detp = pencil_det(k, g0, gi);
    if (detp.empty()) return fail("detpoly degenerate");
    if (fp_deg(detp) < n) {
        // re-base so the member at infinity is nondegenerate
        bool done = false;
        for (long t = 0; t <= n && !done; ++t) {
            auto tv = k.from_int(t);
            if (k.is_zero(fp_eval(k, detp, tv))) continue;
            Mat<K> member = g0;
            for (size_t i = 0; i < member.size(); ++i)
                for (size_t j = 0; j < member.size(); ++j)
                    member[i][j] = k.add(g0[i][j], k.mul(tv, gi[i][j]));
            g0 = gi;
            gi = std::move(member);
            done = true;
        }
        if (!done) return fail("detpoly degenerate");
        detp = pencil_det(k, g0, gi);
        if (fp_deg(detp) != n) return fail("detpoly degenerate");
    }
    FPoly<K> g = fp_gcd(k, detp, fp_derivative(k, detp));
    if (fp_deg(g) == 0) return SectionClass::Smooth;
    if (fp_deg(g) > 1) return fail("gcd degree > 1");
    // double root r = -g[0] (g monic of degree 1)
    auto r = k.neg(g[0]);
    Mat<K> member(g0.size(), std::vector<typename K::Elem>(g0.size(), k.zero()));
    for (size_t i = 0; i < g0.size(); ++i)
        for (size_t j = 0; j < g0.size(); ++j)
            member[i][j] = k.add(g0[i][j], k.mul(r, gi[i][j]));
    int kernel = n - mat_rank(k, member);
    if (kernel == 1) return SectionClass::IntegralNodal;
    if (kernel == 2) return SectionClass::TwoComponents;
    return fail("kernel dimension out of range");
}

}  // namespace shaforge

#endif
