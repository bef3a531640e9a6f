#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shaforge/numberfield.hpp"

using namespace shaforge;

namespace {
PolyQ from_ints(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return PolyQ(std::move(v));
}
}  // namespace

TEST_CASE("construction rejects reducible moduli") {
    CHECK_THROWS(NumberField::create(from_ints({0, 0, 1})));   // t^2
    CHECK_THROWS(NumberField::create(from_ints({-1, 0, 1})));  // t^2 - 1
    CHECK_THROWS(NumberField::create(from_ints({0, 2})));      // not monic
    CHECK_NOTHROW(NumberField::create(from_ints({1, 0, 1})));
}

TEST_CASE("inversion in Q[t]/(t^2+1)") {
    auto K = NumberField::create(from_ints({1, 0, 1}));
    NFElem t = K->generator();
    // t * (-t) = -t^2 = 1
    CHECK(K->eq(nf_invert(t), K->neg(t)));
    CHECK(K->eq(nf_invert(K->one()), K->one()));
    CHECK_THROWS(nf_invert(K->zero()));
}

TEST_CASE("inversion in Q[t]/(t^2-2)") {
    auto K = NumberField::create(from_ints({-2, 0, 1}));
    NFElem x = K->elem(from_ints({1, 1}));  // 1 + t
    NFElem expect = K->elem(from_ints({-1, 1}));
    CHECK(K->eq(nf_invert(x), expect));
    CHECK(K->eq(K->mul(x, expect), K->one()));
}

TEST_CASE("invert is an involution (random)") {
    auto K = NumberField::create(from_ints({2, -1, 0, 1}));  // t^3 - t + 2
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dc(-5, 5);
    for (int iter = 0; iter < 100; ++iter) {
        PolyQ c({Rat(dc(rng)), Rat(dc(rng)), Rat(dc(rng))});
        NFElem x = K->elem(c);
        if (K->is_zero(x)) continue;
        CHECK(K->eq(nf_invert(nf_invert(x)), x));
        CHECK(K->eq(K->mul(x, nf_invert(x)), K->one()));
    }
}

TEST_CASE("matrix rank over a number field") {
    auto K = NumberField::create(from_ints({1, 0, 1}));
    auto z = K->zero();
    auto t = K->generator();

    Mat<NumberField> id(4, std::vector<NFElem>(4, z));
    for (int i = 0; i < 4; ++i) id[static_cast<size_t>(i)][static_cast<size_t>(i)] = K->one();
    CHECK(nf_matrix_rank(*K, id) == 4);

    Mat<NumberField> zero(4, std::vector<NFElem>(4, z));
    CHECK(nf_matrix_rank(*K, zero) == 0);

    // rank 2: rows (t, 1, 0, 0), (t, 1, 0, 0), (0, 0, 1+t, 0)
    Mat<NumberField> m(3, std::vector<NFElem>(4, z));
    m[0][0] = t;
    m[0][1] = K->one();
    m[1][0] = t;
    m[1][1] = K->one();
    m[2][2] = K->add(K->one(), t);
    CHECK(nf_matrix_rank(*K, m) == 2);
}

TEST_CASE("rank + kernel dimension = n, kernel vectors annihilate") {
    auto K = NumberField::create(from_ints({-2, 0, 1}));
    auto t = K->generator();
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> dc(-3, 3);
    for (int iter = 0; iter < 40; ++iter) {
        Mat<NumberField> m(4, std::vector<NFElem>(4, K->zero()));
        for (auto& row : m)
            for (auto& e : row)
                e = K->add(K->from_int(dc(rng)), K->mul(t, K->from_int(dc(rng) % 2)));
        int r = nf_matrix_rank(*K, m);
        auto kernel = mat_kernel(*K, m);
        CHECK(r + static_cast<int>(kernel.size()) == 4);
        for (const auto& v : kernel) {
            auto mv = mat_apply(*K, m, v);
            for (const auto& e : mv) CHECK(K->is_zero(e));
        }
    }
}

TEST_CASE("degree-1 modulus matches rational rank") {
    auto K = NumberField::create(from_ints({-3, 1}));  // t - 3: Q itself
    QQ q;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> dc(-4, 4);
    for (int iter = 0; iter < 30; ++iter) {
        Mat<NumberField> m(3, std::vector<NFElem>(3, K->zero()));
        Mat<QQ> mq(3, std::vector<Rat>(3, Rat(0)));
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                long c = dc(rng);
                m[static_cast<size_t>(i)][static_cast<size_t>(j)] = K->from_int(c);
                mq[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rat(c);
            }
        CHECK(nf_matrix_rank(*K, m) == mat_rank(q, mq));
    }
}
