#ifndef SHAFORGE_QUADFORM_HPP
#define SHAFORGE_QUADFORM_HPP

#include <memory>
#include <optional>
#include <vector>

#include "shaforge/algebra.hpp"
#include "shaforge/numberfield.hpp"
#include "shaforge/poly.hpp"

namespace shaforge {

using GramQ = Mat<QQ>;  // symmetric matrix of rationals

// Quadratic form x^T gram x on n variables (n = 4 or 5 here), cross terms
// split evenly between the two symmetric entries.
class QuadraticForm {
public:
    QuadraticForm(int dim, GramQ gram);

    int dim() const { return dim_; }
    const GramQ& gram() const { return gram_; }

    Rat value(const std::vector<Rat>& x) const;
    // gradient = 2 * gram * x
    std::vector<Rat> gradient(const std::vector<Rat>& x) const;

    friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) {
        return a.dim_ == b.dim_ && a.gram_ == b.gram_;
    }

private:
    int dim_;
    GramQ gram_;
};

// Pencil Q_0 + lambda Q_inf with its determinant polynomial P(lambda).
class QuadricPencil {
public:
    QuadricPencil(QuadraticForm q0, QuadraticForm qinf);

    const QuadraticForm& q0() const { return q0_; }
    const QuadraticForm& qinf() const { return qinf_; }
    const PolyQ& detpoly() const { return detpoly_; }
    int dim() const { return q0_.dim(); }

private:
    QuadraticForm q0_, qinf_;
    PolyQ detpoly_;
};

// det(gram(q0) + lambda gram(qinf)), exact, degree <= dim.
PolyQ pencil_detpoly(const QuadraticForm& q0, const QuadraticForm& qinf);

// True iff the base locus of the pencil is a smooth complete intersection:
// after re-basing so the member at infinity is nondegenerate, the
// determinant polynomial is squarefree of full degree. Throws
// std::domain_error("entire pencil degenerate") when detpoly of every basis
// vanishes identically.
bool is_smooth_intersection(const QuadricPencil& p);

// One singular member of a pencil: the root location of det(Q_lambda)
// (rational, or a coset of a number field), the multiplicity of its
// irreducible factor, and dim Ker of the member there.
struct SingularMember {
    PolyQ minpoly;                               // irreducible over Q; empty for the member at infinity
    std::optional<Rat> rational_root;            // set iff deg(minpoly) == 1
    std::shared_ptr<const NumberField> field;    // set iff deg(minpoly) >= 2
    bool at_infinity = false;                    // the member qinf itself, when degenerate
    int multiplicity = 0;
    int kernel_dim = 0;
};

// Singular members of the pencil, one entry per irreducible factor of
// detpoly (plus the member at infinity if qinf is degenerate).
// Requires detpoly != 0.
std::vector<SingularMember> singular_members(const QuadricPencil& p);

// Members q0 + t*qinf with t in a small search set until det != 0; used to
// re-base pencils with degenerate qinf. Returns nullopt if detpoly == 0.
std::optional<Rat> nondegenerate_member(const QuadricPencil& p);

}  // namespace shaforge

#endif
