#ifndef SHAFORGE_PENCIL_HPP
#define SHAFORGE_PENCIL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shaforge/sections.hpp"

namespace shaforge {

// Fiber classification at one root class of disc_t.
struct FiberClassRecord {
    PolyQ factor;  // irreducible over Q
    int multiplicity = 0;
    SectionClass cls = SectionClass::Rejected;
};

// One closed point of the degree-4 base locus: coordinates in the residue
// field Q[s]/(minpoly) written as polynomials in the field generator
// (minpoly empty <=> rational point, coordinates constant).
struct ClosedPoint {
    PolyQ minpoly;               // empty for a rational point
    int degree = 1;              // residue degree
    std::vector<PolyQ> coords;   // 5 projective coordinates
};

// The degree-4 zero-dimensional scheme X cap H0 cap Hinf.
struct BaseLocus {
    std::vector<std::vector<Rat>> plane_basis;  // 3 spanning vectors of H0 cap Hinf
    PolyQ quartic;                              // elimination quartic on the plane
    std::vector<ClosedPoint> points;            // residue degrees sum to 4
};

// A line H0 + t Hinf in (P^4)*. The stored hinf is re-based within the line
// so its coordinate at h0's eliminated variable vanishes; then the covector
// of every finite fiber has the same leading coordinate and disc_t comes
// from one uniform polynomial family.
struct PencilLine {
    Hyperplane h0;
    Hyperplane hinf;
    PolyQ disc_t;  // Res_lambda(P_t, P_t') for the section family
    bool validated = false;
    std::vector<FiberClassRecord> fiber_classes;
    SectionClass infinity_class = SectionClass::Rejected;
    std::optional<BaseLocus> base;

    PencilLine(const DP4Surface& x, const Hyperplane& a, const Hyperplane& b);
};

// disc_t of the section family along the line (no validation).
PolyQ line_disc_t(const DP4Surface& x, const Hyperplane& h0, const Hyperplane& hinf);

// Classify every fiber over a root class of disc_t plus the fiber at
// infinity; sets validated iff all classes are Smooth or IntegralNodal and
// the base locus is reduced of degree 4. Returns a human-readable reason on
// failure.
std::optional<std::string> validate_line(const DP4Surface& x, PencilLine& line);

// Restriction of the surface to the plane H0 cap Hinf, eliminated to a
// quartic; throws std::domain_error("base locus not reduced") when no
// coordinate change exhibits a squarefree degree-4 elimination quartic with
// simple fibers.
BaseLocus base_locus(const DP4Surface& x, const PencilLine& line);

// Rejection-sample hyperplane pairs of growing height until a validated
// line is found. Deterministic in (seed); throws std::runtime_error
// ("no good pencil found ...") after max_attempts.
PencilLine find_good_pencil(const DP4Surface& x, uint64_t rng_seed, long max_attempts);

// Fiber parameter value: rational t or infinity (den == 0).
struct FiberParam {
    Rat num;
    Rat den;  // zero <=> fiber at infinity

    static FiberParam finite(const Rat& t) { return {t, Rat(1)}; }
    static FiberParam infinity() { return {Rat(1), Rat(0)}; }
    bool is_infinity() const { return den.is_zero(); }
    Rat value() const { return num / den; }
};

// Hyperplane of the fiber at t (h0 + t hinf, or hinf at infinity).
Hyperplane fiber_hyperplane(const PencilLine& line, const FiberParam& t);

// Section of the surface by the fiber hyperplane.
SectionPencil fiber_section(const DP4Surface& x, const PencilLine& line, const FiberParam& t);

}  // namespace shaforge

#endif
