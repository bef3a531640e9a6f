#ifndef SHAFORGE_NUMBERFIELD_HPP
#define SHAFORGE_NUMBERFIELD_HPP

#include <memory>
#include <vector>

#include "shaforge/algebra.hpp"
#include "shaforge/poly.hpp"

namespace shaforge {

class NumberField;

// Element of Q[t]/(m): coordinate polynomial of degree < deg(m).
struct NFElem {
    std::shared_ptr<const NumberField> field;
    PolyQ c;
};

// Simple extension Q[t]/(m(t)), m monic irreducible over Q (certified by
// factor_q at construction). One layer only; the pencil analysis never
// needs towers because the determinant polynomials have degree <= 5 in
// lambda (and any degree in t, still a single layer).
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    using Elem = NFElem;

    // Throws std::invalid_argument unless modulus is monic irreducible of
    // degree >= 1.
    static std::shared_ptr<const NumberField> create(const PolyQ& modulus);

    const PolyQ& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }

    NFElem elem(const PolyQ& coords) const;  // reduces mod modulus
    NFElem from_rat(const Rat& r) const { return elem(PolyQ::constant(r)); }
    NFElem generator() const { return elem(PolyQ::x()); }

    NFElem zero() const { return from_rat(Rat(0)); }
    NFElem one() const { return from_rat(Rat(1)); }
    NFElem from_int(long n) const { return from_rat(Rat(n)); }
    NFElem add(const NFElem& a, const NFElem& b) const;
    NFElem sub(const NFElem& a, const NFElem& b) const;
    NFElem mul(const NFElem& a, const NFElem& b) const;
    NFElem neg(const NFElem& a) const;
    NFElem inv(const NFElem& a) const;  // extended Euclid against modulus
    bool is_zero(const NFElem& a) const { return a.c.is_zero(); }
    bool eq(const NFElem& a, const NFElem& b) const { return a.c == b.c; }

private:
    explicit NumberField(PolyQ m) : modulus_(std::move(m)) {}
    void check_same_field(const NFElem& a, const NFElem& b) const;
    PolyQ modulus_;
};

// x^-1 in its parent field; rejects zero.
NFElem nf_invert(const NFElem& x);

// Rank over Q[t]/(m) via Gaussian elimination with exact inversion.
int nf_matrix_rank(const NumberField& field, const Mat<NumberField>& mat);

// g, s, t with s*a + t*b = g = gcd(a,b) (monic unless g = 0).
struct ExtGcd {
    PolyQ g, s, t;
};
ExtGcd poly_extgcd(const PolyQ& a, const PolyQ& b);

}  // namespace shaforge

#endif
