#include "shaforge/surfaces.hpp"

#include <stdexcept>

namespace shaforge {

namespace {

GramQ zero5() { return GramQ(5, std::vector<Rat>(5, Rat(0))); }

void set_cross(GramQ& g, int i, int j, const Rat& coeff) {
    // coefficient of x_i x_j (i != j) splits evenly
    g[static_cast<size_t>(i)][static_cast<size_t>(j)] += coeff / Rat(2);
    g[static_cast<size_t>(j)][static_cast<size_t>(i)] += coeff / Rat(2);
}

}  // namespace

DP4Surface::DP4Surface(QuadricPencil pencil, SurfaceFamily family, std::vector<Rat> params,
                       bool lgp_violation_cited)
    : pencil_(std::move(pencil)), family_(family), params_(std::move(params)), cited_(lgp_violation_cited) {
    if (pencil_.dim() != 5) throw std::invalid_argument("DP4Surface: pencil must live in P^4");
    bool smooth = false;
    try {
        smooth = is_smooth_intersection(pencil_);
    } catch (const std::domain_error&) {
        smooth = false;
    }
    if (!smooth) throw std::domain_error("singular surface");
}

QuadricPencil bsd_pencil() {
    // coordinates (x:y:z:u:v) = indices (0,1,2,3,4)
    GramQ g0 = zero5();
    g0[0][0] = Rat(-1);  // -x^2
    g0[1][1] = Rat(5);   // +5y^2
    set_cross(g0, 3, 4, Rat(1));  // uv
    GramQ gi = zero5();
    gi[0][0] = Rat(-1);
    gi[2][2] = Rat(5);
    gi[3][3] = Rat(1);           // u^2
    gi[4][4] = Rat(2);           // 2v^2
    set_cross(gi, 3, 4, Rat(3));  // 3uv
    return QuadricPencil(QuadraticForm(5, std::move(g0)), QuadraticForm(5, std::move(gi)));
}

QuadricPencil viray_pencil(const Rat& a, const Rat& b, const Rat& c) {
    GramQ g0 = zero5();
    g0[0][0] = Rat(-1);
    g0[1][1] = a;
    set_cross(g0, 3, 4, Rat(1));
    // (u - b^2 c v)(c u + (1 - b^2 c^2) v) = c u^2 + (1 - 2 b^2 c^2) uv - b^2 c (1 - b^2 c^2) v^2
    Rat b2c2 = b * b * c * c;
    GramQ gi = zero5();
    gi[0][0] = Rat(-1);
    gi[2][2] = a;
    gi[3][3] = c;
    gi[4][4] = -(b * b * c) * (Rat(1) - b2c2);
    set_cross(gi, 3, 4, Rat(1) - Rat(2) * b2c2);
    return QuadricPencil(QuadraticForm(5, std::move(g0)), QuadraticForm(5, std::move(gi)));
}

QuadricPencil js_pencil(const Rat& A, const Rat& B, const Rat& D) {
    // coordinates (x0:x1:x2:x3:x4)
    GramQ g0 = zero5();
    set_cross(g0, 0, 1, Rat(1));  // x0 x1
    g0[2][2] = Rat(-1);
    g0[3][3] = D;
    GramQ gi = zero5();
    gi[0][0] = Rat(1);
    gi[1][1] = A * B;
    set_cross(gi, 0, 1, A + B);
    gi[2][2] = Rat(-1);
    gi[4][4] = D;
    return QuadricPencil(QuadraticForm(5, std::move(g0)), QuadraticForm(5, std::move(gi)));
}

DP4Surface bsd_surface() {
    return DP4Surface(bsd_pencil(), SurfaceFamily::BSD, {}, true);
}

DP4Surface viray_surface(const Rat& a, const Rat& b, const Rat& c, bool assert_lgp_violation) {
    return DP4Surface(viray_pencil(a, b, c), SurfaceFamily::Viray, {a, b, c}, assert_lgp_violation);
}

DP4Surface js_surface(const Rat& A, const Rat& B, const Rat& D, bool assert_lgp_violation) {
    return DP4Surface(js_pencil(A, B, D), SurfaceFamily::JahnelSchindler, {A, B, D}, assert_lgp_violation);
}

DP4Surface user_surface(QuadricPencil pencil) {
    return DP4Surface(std::move(pencil), SurfaceFamily::UserSupplied, {}, false);
}

std::string family_name(SurfaceFamily f) {
    switch (f) {
        case SurfaceFamily::BSD: return "bsd";
        case SurfaceFamily::Viray: return "viray";
        case SurfaceFamily::JahnelSchindler: return "js";
        case SurfaceFamily::UserSupplied: return "user";
    }
    return "user";
}

}  // namespace shaforge
