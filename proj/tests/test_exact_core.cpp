#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shaforge/factor.hpp"
#include "shaforge/poly.hpp"

using namespace shaforge;

namespace {

PolyQ from_ints(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return PolyQ(std::move(v));
}

// independent resultant oracle for polynomials with known rational roots:
// Res(a, b) = lc(a)^deg(b) * prod b(alpha_i)
Rat resultant_from_roots(const std::vector<Rat>& roots_of_a, const Rat& lc_a, const PolyQ& b) {
    Rat r(1);
    for (int i = 0; i < b.degree(); ++i) r *= lc_a;
    for (const auto& alpha : roots_of_a) r *= b.eval(alpha);
    return r;
}

PolyQ random_poly(std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> dd(0, maxdeg);
    std::uniform_int_distribution<long> dc(-9, 9);
    int d = dd(rng);
    std::vector<Rat> v(static_cast<size_t>(d) + 1);
    for (auto& c : v) c = Rat(dc(rng));
    if (v.back().is_zero()) v.back() = Rat(1);
    return PolyQ(std::move(v));
}

}  // namespace

TEST_CASE("rational normal form") {
    Rat a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK(Rat::from_string("-3/2") == a);
    CHECK(Rat::from_string("7").den() == 1);
    CHECK((Rat(1, 3) + Rat(2, 3)).is_one());
    CHECK_THROWS(Rat(Int(1), Int(0)));
    // arithmetic keeps gcd(|num|, den) = 1, den >= 1
    Rat b = Rat(10, 4) * Rat(2, 5);
    CHECK(b.num() == 1);
    CHECK(b.den() == 1);
}

TEST_CASE("poly_gcd basics") {
    PolyQ a = from_ints({-1, 0, 1});  // x^2 - 1
    PolyQ b = from_ints({-1, 1});     // x - 1
    CHECK(poly_gcd(a, b) == b);

    CHECK(poly_gcd(from_ints({1, 0, 1}), from_ints({0, 1})) == PolyQ::constant(Rat(1)));

    // x^2(x-1)(x-2) = x^4 - 3x^3 + 2x^2 against its derivative -> x
    PolyQ c = from_ints({0, 0, 2, -3, 1});
    CHECK(poly_gcd(c, c.derivative()) == PolyQ::x());

    CHECK(poly_gcd(PolyQ(), PolyQ()).is_zero());
    CHECK(poly_gcd(PolyQ(), b) == b);
}

TEST_CASE("resultant pinned values") {
    // Sylvester determinant, rows of a first, expanded by hand:
    // | 1 0 -1 |
    // | 2 0  0 | = -4
    // | 0 2  0 |
    CHECK(resultant(from_ints({-1, 0, 1}), from_ints({0, 2})) == Rat(-4));

    PolyQ shared = from_ints({-3, 1});
    CHECK(resultant(shared, shared).is_zero());

    // Res(x, x-1) with the row convention: det [[1,0],[1,-1]] = -1,
    // matching lc(a)^deg(b) * b(0) = -1
    CHECK(resultant(PolyQ::x(), from_ints({-1, 1})) == Rat(-1));
    CHECK(resultant(PolyQ::x(), from_ints({-1, 1})) ==
          resultant_from_roots({Rat(0)}, Rat(1), from_ints({-1, 1})));

    CHECK_THROWS(resultant(PolyQ(), PolyQ::x()));
}

TEST_CASE("resultant vanishes iff gcd nontrivial (random)") {
    std::mt19937_64 rng(20240901);
    for (int iter = 0; iter < 200; ++iter) {
        PolyQ a = random_poly(rng, 6), b = random_poly(rng, 6);
        if (a.is_zero() || b.is_zero() || (a.degree() == 0 && b.degree() == 0)) continue;
        if (a.degree() == 0 || b.degree() == 0) continue;
        bool res_zero = resultant(a, b).is_zero();
        bool gcd_nontrivial = poly_gcd(a, b).degree() >= 1;
        CHECK(res_zero == gcd_nontrivial);
    }
    // force shared factors explicitly
    for (int iter = 0; iter < 50; ++iter) {
        PolyQ f = random_poly(rng, 3), g = random_poly(rng, 3);
        PolyQ common = from_ints({static_cast<long>(iter % 7) - 3, 1});
        PolyQ a = f * common, b = g * common;
        if (a.degree() < 1 || b.degree() < 1) continue;
        CHECK(resultant(a, b).is_zero());
    }
}

TEST_CASE("squarefree_part") {
    PolyQ a = from_ints({0, 0, 2, -3, 1}) * Rat(3);  // 3x^2(x-1)(x-2)... degree check
    // x^2 (x-1): coefficients x^3 - x^2
    PolyQ b = from_ints({0, 0, -1, 1});
    CHECK(squarefree_part(b) == from_ints({0, -1, 1}).monic());  // x(x-1)
    PolyQ sq = from_ints({3, 1, 7, 2});
    CHECK(squarefree_part(sq) == sq.monic());
    CHECK(squarefree_part(PolyQ::monomial(Rat(1), 4)) == PolyQ::x());  // x^4 -> x
    CHECK(squarefree_part(a).degree() == 3);
    // divides and has nonzero discriminant
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 60; ++iter) {
        PolyQ f = random_poly(rng, 4);
        if (f.degree() < 1) continue;
        PolyQ s = squarefree_part(f * f);
        CHECK(poly_divrem(f * f, s).second.is_zero());
        if (s.degree() >= 1) CHECK(!discriminant(s).is_zero());
    }
}

TEST_CASE("discriminant pinned values") {
    // disc(x^4+1): resultant(x^4+1, 4x^3) = 4^4 * (prod of roots)^3 = 256
    PolyQ q = from_ints({1, 0, 0, 0, 1});
    CHECK(resultant(q, q.derivative()) == Rat(256));
    CHECK(discriminant(q) == Rat(256));
    CHECK(discriminant(from_ints({-1, 0, 1})) == Rat(4));  // (r1 - r2)^2 = 4
    CHECK(discriminant(from_ints({1, -2, 1})).is_zero());  // (x-1)^2
    CHECK_THROWS(discriminant(PolyQ::constant(Rat(5))));
}

TEST_CASE("factor_q basics") {
    // x^4 - 1 = (x-1)(x+1)(x^2+1)
    Factorization f = factor_q(from_ints({-1, 0, 0, 0, 1}));
    REQUIRE(f.factors.size() == 3);
    CHECK(f.unit.is_one());
    CHECK(f.factors[0].first == from_ints({-1, 1}));
    CHECK(f.factors[1].first == from_ints({1, 1}));
    CHECK(f.factors[2].first == from_ints({1, 0, 1}));
    for (const auto& [p, m] : f.factors) CHECK(m == 1);

    Factorization g = factor_q(from_ints({1, 0, 1}));
    CHECK(g.factors.size() == 1);
    CHECK(g.factors[0].second == 1);

    // x^2(x-1)(x-2) already split
    Factorization h = factor_q(from_ints({0, 0, 2, -3, 1}));
    REQUIRE(h.factors.size() == 3);
    bool found_x = false;
    for (const auto& [p, m] : h.factors)
        if (p == PolyQ::x()) {
            found_x = true;
            CHECK(m == 2);
        } else {
            CHECK(m == 1);
        }
    CHECK(found_x);
}

TEST_CASE("factor_q round trip (random)") {
    std::mt19937_64 rng(20240902);
    for (int iter = 0; iter < 40; ++iter) {
        PolyQ f = random_poly(rng, 5);
        if (f.degree() < 1) continue;
        Factorization fac = factor_q(f);
        CHECK(fac.expand() == f);
        for (const auto& [p, m] : fac.factors) {
            CHECK(p.lc().is_one());
            // each factor irreducible: re-factor returns itself
            Factorization inner = factor_q(p);
            CHECK(inner.factors.size() == 1);
            CHECK(inner.factors[0].second == 1);
        }
    }
    // products of repeated factors
    for (int iter = 0; iter < 20; ++iter) {
        PolyQ a = random_poly(rng, 2), b = random_poly(rng, 2);
        if (a.degree() < 1 || b.degree() < 1) continue;
        PolyQ f = a * a * b;
        CHECK(factor_q(f).expand() == f);
    }
}

TEST_CASE("factor_q bigger fixtures") {
    // (x^2+1)(x^2-2)(x-3)^2
    PolyQ f = from_ints({1, 0, 1}) * from_ints({-2, 0, 1}) * from_ints({-3, 1}) * from_ints({-3, 1});
    Factorization fac = factor_q(f);
    CHECK(fac.expand() == f);
    REQUIRE(fac.factors.size() == 3);
    // degree cap
    std::vector<Rat> big(131, Rat(0));
    big[0] = Rat(1);
    big.back() = Rat(1);
    CHECK_THROWS(factor_q(PolyQ(std::move(big))));
    CHECK_THROWS(factor_q(PolyQ()));
}

TEST_CASE("sturm root counting") {
    // (x-1)(x-2)(x-5)
    PolyQ f = from_ints({-1, 1}) * from_ints({-2, 1}) * from_ints({-5, 1});
    CHECK(sturm_count(f, Rat(0), Rat(3)) == 2);
    CHECK(sturm_count(f, Rat(0), Rat(10)) == 3);
    CHECK(sturm_count(f, Rat(3), Rat(4)) == 0);
    CHECK(sturm_count(f * f, Rat(0), Rat(10)) == 3);  // multiplicities collapsed
}
