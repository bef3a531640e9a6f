#include "shaforge/numberfield.hpp"

#include <stdexcept>

#include "shaforge/factor.hpp"

namespace shaforge {

ExtGcd poly_extgcd(const PolyQ& a, const PolyQ& b) {
    PolyQ r0 = a, r1 = b;
    PolyQ s0 = PolyQ::constant(Rat(1)), s1;
    PolyQ t0, t1 = PolyQ::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        PolyQ ns = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(ns);
        PolyQ nt = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(nt);
    }
    if (r0.is_zero()) return {PolyQ(), PolyQ(), PolyQ()};
    Rat li = r0.lc().inv();
    return {r0 * li, s0 * li, t0 * li};
}

std::shared_ptr<const NumberField> NumberField::create(const PolyQ& modulus) {
    if (modulus.degree() < 1) throw std::invalid_argument("NumberField: modulus must be nonconstant");
    if (!modulus.lc().is_one()) throw std::invalid_argument("NumberField: modulus must be monic");
    Factorization f = factor_q(modulus);
    if (f.factors.size() != 1 || f.factors[0].second != 1)
        throw std::invalid_argument("NumberField: modulus is reducible over Q");
    return std::shared_ptr<const NumberField>(new NumberField(modulus));
}

NFElem NumberField::elem(const PolyQ& coords) const {
    PolyQ r = poly_divrem(coords, modulus_).second;
    return NFElem{shared_from_this(), std::move(r)};
}

void NumberField::check_same_field(const NFElem& a, const NFElem& b) const {
    if (a.field.get() != this || b.field.get() != this)
        throw std::invalid_argument("NFElem: mixed number fields");
}

NFElem NumberField::add(const NFElem& a, const NFElem& b) const {
    check_same_field(a, b);
    return NFElem{shared_from_this(), a.c + b.c};
}

NFElem NumberField::sub(const NFElem& a, const NFElem& b) const {
    check_same_field(a, b);
    return NFElem{shared_from_this(), a.c - b.c};
}

NFElem NumberField::mul(const NFElem& a, const NFElem& b) const {
    check_same_field(a, b);
    return elem(a.c * b.c);
}

NFElem NumberField::neg(const NFElem& a) const { return NFElem{shared_from_this(), -a.c}; }

NFElem NumberField::inv(const NFElem& a) const {
    if (a.c.is_zero()) throw std::invalid_argument("NFElem: inverse of zero");
    // s*a + t*m = 1 with the modulus irreducible, so gcd(a, m) = 1
    ExtGcd e = poly_extgcd(a.c, modulus_);
    if (e.g.degree() != 0)
        throw std::logic_error("NFElem: element not invertible (modulus reducible?)");
    return elem(e.s);
}

NFElem nf_invert(const NFElem& x) {
    if (!x.field) throw std::invalid_argument("nf_invert: detached element");
    return x.field->inv(x);
}

int nf_matrix_rank(const NumberField& field, const Mat<NumberField>& mat) {
    return mat_rank(field, mat);
}

}  // namespace shaforge
