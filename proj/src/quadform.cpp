#include "shaforge/quadform.hpp"

#include <stdexcept>

#include "shaforge/factor.hpp"

namespace shaforge {

QuadraticForm::QuadraticForm(int dim, GramQ gram) : dim_(dim), gram_(std::move(gram)) {
    if (dim_ != 4 && dim_ != 5)
        throw std::invalid_argument("QuadraticForm: dim must be 4 or 5");
    if (gram_.size() != static_cast<size_t>(dim_))
        throw std::invalid_argument("QuadraticForm: gram size mismatch");
    for (size_t i = 0; i < gram_.size(); ++i) {
        if (gram_[i].size() != static_cast<size_t>(dim_))
            throw std::invalid_argument("QuadraticForm: gram not square");
        for (size_t j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i])
                throw std::invalid_argument("QuadraticForm: gram not symmetric");
    }
}

Rat QuadraticForm::value(const std::vector<Rat>& x) const {
    QQ q;
    return quad_value(q, gram_, x);
}

std::vector<Rat> QuadraticForm::gradient(const std::vector<Rat>& x) const {
    QQ q;
    auto gx = mat_apply(q, gram_, x);
    for (auto& v : gx) v *= Rat(2);
    return gx;
}

PolyQ pencil_detpoly(const QuadraticForm& q0, const QuadraticForm& qinf) {
    if (q0.dim() != qinf.dim())
        throw std::invalid_argument("pencil_detpoly: dimension mismatch");
    QQ q;
    FPoly<QQ> d = pencil_det(q, q0.gram(), qinf.gram());
    return PolyQ(std::move(d));
}

QuadricPencil::QuadricPencil(QuadraticForm q0, QuadraticForm qinf)
    : q0_(std::move(q0)), qinf_(std::move(qinf)), detpoly_(pencil_detpoly(q0_, qinf_)) {}

std::optional<Rat> nondegenerate_member(const QuadricPencil& p) {
    if (p.detpoly().is_zero()) return std::nullopt;
    // detpoly has at most dim roots; dim+1 sample points suffice
    for (long t = 0; t <= p.dim(); ++t) {
        if (!p.detpoly().eval(Rat(t)).is_zero()) return Rat(t);
    }
    return std::nullopt;  // unreachable for nonzero detpoly
}

bool is_smooth_intersection(const QuadricPencil& p) {
    const PolyQ& dp = p.detpoly();
    if (dp.is_zero()) throw std::domain_error("entire pencil degenerate");
    const int n = p.dim();
    if (dp.degree() == n) return discriminant(dp) != Rat(0);
    // qinf degenerate: re-base to (q0, q0 + t* qinf) with a nondegenerate
    // second member, then apply the full-degree criterion.
    std::optional<Rat> tstar = nondegenerate_member(p);
    if (!tstar) throw std::domain_error("entire pencil degenerate");
    QQ q;
    const GramQ& a = p.q0().gram();
    const GramQ& b = p.qinf().gram();
    GramQ member(a.size(), std::vector<Rat>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) member[i][j] = a[i][j] + *tstar * b[i][j];
    PolyQ rebased = pencil_detpoly(QuadraticForm(n, b), QuadraticForm(n, member));
    if (rebased.degree() != n) throw std::logic_error("is_smooth_intersection: re-basing failed");
    return !discriminant(rebased).is_zero();
}

std::vector<SingularMember> singular_members(const QuadricPencil& p) {
    const PolyQ& dp = p.detpoly();
    if (dp.is_zero()) throw std::domain_error("singular_members: detpoly is zero");
    const int n = p.dim();
    QQ q;
    std::vector<SingularMember> out;
    Factorization fac = factor_q(dp);
    for (const auto& [m, mult] : fac.factors) {
        SingularMember sm;
        sm.minpoly = m;
        sm.multiplicity = mult;
        if (m.degree() == 1) {
            Rat root = -m.coeff(0);
            sm.rational_root = root;
            GramQ g(p.q0().gram());
            for (size_t i = 0; i < g.size(); ++i)
                for (size_t j = 0; j < g.size(); ++j) g[i][j] += root * p.qinf().gram()[i][j];
            sm.kernel_dim = n - mat_rank(q, g);
        } else {
            auto K = NumberField::create(m);
            NFElem root = K->generator();
            Mat<NumberField> g(static_cast<size_t>(n), std::vector<NFElem>(static_cast<size_t>(n), K->zero()));
            for (size_t i = 0; i < g.size(); ++i)
                for (size_t j = 0; j < g.size(); ++j)
                    g[i][j] = K->add(K->from_rat(p.q0().gram()[i][j]),
                                     K->mul(root, K->from_rat(p.qinf().gram()[i][j])));
            sm.field = K;
            sm.kernel_dim = n - nf_matrix_rank(*K, g);
        }
        out.push_back(std::move(sm));
    }
    if (dp.degree() < n) {
        // qinf itself is a singular member (the root "at infinity")
        SingularMember sm;
        sm.at_infinity = true;
        sm.multiplicity = n - dp.degree();
        sm.kernel_dim = n - mat_rank(q, p.qinf().gram());
        out.push_back(std::move(sm));
    }
    return out;
}

}  // namespace shaforge
