#include <gtest/gtest.h>

#include <random>

#include "gl2w/oracle/module.hpp"

using namespace gl2w;
using namespace gl2w::oracle;

class FieldTest : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(FieldTest, FieldAxioms) {
    auto [p, f] = GetParam();
    Params P(p, f);
    Fq F(P);
    const int q = F.q();
    EXPECT_EQ(F.gpow(q - 1), 1);
    for (int e = 1; e < q - 1; ++e) EXPECT_NE(F.gpow(e), 1);
    for (int a = 0; a < q; ++a) {
        EXPECT_EQ(F.add(a, F.neg(a)), 0);
        EXPECT_EQ(F.pow(a, q), a);
        if (a) {
            EXPECT_EQ(F.mul(a, F.inv(a)), 1);
        }
        int s = 0;
        for (int k = 0; k < p; ++k) s = F.add(s, a);
        EXPECT_EQ(s, 0);
        for (int b = 0; b < q; b += 3)
            for (int c = 0; c < q; c += 5)
                EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
    }
}

TEST_P(FieldTest, GaloisRing) {
    auto [p, f] = GetParam();
    Params P(p, f);
    Fq F(P);
    GR R(F);
    const int q = F.q();
    for (int a = 0; a < q; ++a) {
        GRElem t = R.teich(a);
        EXPECT_EQ(R.reduce(t), a);
        EXPECT_EQ(R.pow(t, q), t);
        EXPECT_EQ(R.div_p(R.times_p(a)), a);
        EXPECT_TRUE(R.divisible_by_p(R.times_p(a)));
        for (int b = 0; b < q; b += 7) EXPECT_EQ(R.mul(t, R.teich(b)), R.teich(F.mul(a, b)));
    }
    EXPECT_FALSE(R.is_unit(R.from_int(p)));
    EXPECT_NE(R.from_int(p), R.zero());
    EXPECT_EQ(R.from_int(p * p), R.zero());
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        GRElem x = R.random(rng), y = R.random(rng), z = R.random(rng);
        EXPECT_EQ(R.mul(R.mul(x, y), z), R.mul(x, R.mul(y, z)));
        EXPECT_EQ(R.mul(x, R.add(y, z)), R.add(R.mul(x, y), R.mul(x, z)));
        EXPECT_EQ(R.reduce(R.mul(x, y)), F.mul(R.reduce(x), R.reduce(y)));
        if (R.is_unit(x)) {
            EXPECT_EQ(R.mul(x, R.inv(x)), R.one());
        }
    }
}

TEST_P(FieldTest, CosetDecomposition) {
    auto [p, f] = GetParam();
    Params P(p, f);
    GroupContext G(P);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 200; ++k) {
        M2 g = G.random_K(rng);
        auto [l, i] = G.coset_decompose(g);
        EXPECT_TRUE(in_I(G.R, i));
        EXPECT_EQ(mat_mul(G.R, G.coset_rep(l), i), g);
        M2 h = G.random_I(rng);
        EXPECT_TRUE(in_I(G.R, G.pi_conj(h)));
        EXPECT_EQ(mat_mul(G.R, h, mat_inv(G.R, h)), G.id());
    }
    for (int l = 0; l < G.num_cosets(); ++l) EXPECT_EQ(G.coset_decompose(G.coset_rep(l)).first, l);
}

INSTANTIATE_TEST_SUITE_P(Small, FieldTest, ::testing::Values(std::pair{5, 1}, std::pair{7, 1}, std::pair{5, 2}, std::pair{3, 3}));

TEST(Linalg, RankNullspaceSpin) {
    Params P(5, 1);
    Fq F(P);
    Mat A(2, 3);
    A(0, 0) = 1, A(0, 1) = 2, A(0, 2) = 3;
    A(1, 0) = 2, A(1, 1) = 4, A(1, 2) = 2;
    EXPECT_EQ(rank(F, A), 2);
    auto N = nullspace(F, A);
    ASSERT_EQ(N.size(), 1u);
    EXPECT_TRUE(is_zero(apply(F, A, N[0])));
    Mat S(3, 3);
    S(1, 0) = 1, S(2, 1) = 1;
    EXPECT_EQ(spin(F, {S}, {unit(3, 0)}, 3).dim(), 3);
    EXPECT_EQ(spin(F, {S}, {unit(3, 1)}, 3).dim(), 2);
}
