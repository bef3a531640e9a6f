#ifndef SHAFORGE_POLY_HPP
#define SHAFORGE_POLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "shaforge/rational.hpp"

namespace shaforge {

// Univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial is the empty coefficient list; otherwise the
// leading coefficient is nonzero.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    PolyQ(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

    static PolyQ constant(const Rat& r) { return PolyQ({r}); }
    static PolyQ x() { return PolyQ({Rat(0), Rat(1)}); }
    // c * x^k
    static PolyQ monomial(const Rat& c, int k);

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rat coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Rat(0);
    }
    Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }

    PolyQ operator-() const;
    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    PolyQ operator*(const Rat& s) const;
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

    Rat eval(const Rat& x) const;
    PolyQ derivative() const;
    PolyQ monic() const;  // error on zero
    // x -> a*x + b
    PolyQ compose_linear(const Rat& a, const Rat& b) const;

    std::string str(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// quotient/remainder with b != 0
std::pair<PolyQ, PolyQ> poly_divrem(const PolyQ& a, const PolyQ& b);
// exact division; throws if remainder nonzero
PolyQ poly_divexact(const PolyQ& a, const PolyQ& b);

// Monic gcd; zero iff both inputs are zero.
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);

// Sylvester-matrix determinant with the rows of `a` first (deg b rows of a,
// then deg a rows of b, coefficients written highest degree leftmost).
// Zero iff a and b share a root over the algebraic closure.
// Inputs must be nonzero.
Rat resultant(const PolyQ& a, const PolyQ& b);

// a / gcd(a, a'), made monic. Input nonzero.
PolyQ squarefree_part(const PolyQ& a);

// (-1)^(n(n-1)/2) * resultant(a, a') / lc(a), n = deg a >= 1.
Rat discriminant(const PolyQ& a);

// Content (as a positive rational making the primitive part integral with
// positive leading coefficient) and primitive integer part: a = content * pp.
struct ContentSplit {
    Rat content;
    std::vector<Int> pp;  // primitive, lowest degree first
};
ContentSplit content_split(const PolyQ& a);

// Number of distinct real roots of a in the half-open interval (lo, hi],
// via a Sturm chain. a must be nonzero; endpoint values of a must be nonzero.
int sturm_count(const PolyQ& a, const Rat& lo, const Rat& hi);

}  // namespace shaforge

#endif
