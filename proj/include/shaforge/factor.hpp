#ifndef SHAFORGE_FACTOR_HPP
#define SHAFORGE_FACTOR_HPP

#include <utility>
#include <vector>

#include "shaforge/poly.hpp"

namespace shaforge {

// Complete factorization over Q: input = unit * prod factor^mult,
// factors monic irreducible over Q, pairwise distinct.
struct Factorization {
    Rat unit;
    std::vector<std::pair<PolyQ, int>> factors;

    PolyQ expand() const;
};

// Irreducible factorization over Q of a nonzero polynomial.
// Zassenhaus: factor the squarefree parts modulo a good prime, Hensel-lift,
// recombine factor subsets. Degree is capped at 128.
Factorization factor_q(const PolyQ& a);

inline constexpr int kFactorDegreeCap = 128;

}  // namespace shaforge

#endif
