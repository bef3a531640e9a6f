#ifndef SHAFORGE_SURFACES_HPP
#define SHAFORGE_SURFACES_HPP

#include <string>
#include <vector>

#include "shaforge/quadform.hpp"

namespace shaforge {

enum class SurfaceFamily { BSD, Viray, JahnelSchindler, UserSupplied };

// Smooth intersection of two quadrics in P^4 (a degree-4 del Pezzo
// surface). Coordinates are ordered (x:y:z:u:v) for the BSD and Viray
// families and (x0:x1:x2:x3:x4) for Jahnel-Schindler.
class DP4Surface {
public:
    // Validates smoothness (degree-5 squarefree determinant polynomial);
    // throws std::domain_error("singular surface") otherwise.
    DP4Surface(QuadricPencil pencil, SurfaceFamily family, std::vector<Rat> params,
               bool lgp_violation_cited);

    const QuadricPencil& pencil() const { return pencil_; }
    const QuadraticForm& q0() const { return pencil_.q0(); }
    const QuadraticForm& qinf() const { return pencil_.qinf(); }
    SurfaceFamily family() const { return family_; }
    const std::vector<Rat>& params() const { return params_; }
    bool lgp_violation_cited() const { return cited_; }

private:
    QuadricPencil pencil_;
    SurfaceFamily family_;
    std::vector<Rat> params_;
    bool cited_;
};

// Raw family pencils (no smoothness requirement); the surface constructors
// below validate.
QuadricPencil bsd_pencil();
QuadricPencil viray_pencil(const Rat& a, const Rat& b, const Rat& c);
QuadricPencil js_pencil(const Rat& A, const Rat& B, const Rat& D);

// Birch--Swinnerton-Dyer surface: uv = x^2 - 5y^2, (u+v)(u+2v) = x^2 - 5z^2.
DP4Surface bsd_surface();

// Viray family: uv = x^2 - a y^2, (u - b^2 c v)(c u + (1 - b^2 c^2) v) = x^2 - a z^2.
// Whether (a,b,c) yields a local-global violation is caller-asserted.
DP4Surface viray_surface(const Rat& a, const Rat& b, const Rat& c, bool assert_lgp_violation = false);

// Jahnel-Schindler family: x0 x1 = x2^2 - D x3^2, (x0 + A x1)(x0 + B x1) = x2^2 - D x4^2.
DP4Surface js_surface(const Rat& A, const Rat& B, const Rat& D, bool assert_lgp_violation = false);

// Arbitrary user pencil; searched in full, never cited.
DP4Surface user_surface(QuadricPencil pencil);

std::string family_name(SurfaceFamily f);

}  // namespace shaforge

#endif
