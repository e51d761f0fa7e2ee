#include <gtest/gtest.h>

#include <set>

#include "gen.hpp"
#include "gl2w/tuples.hpp"

using namespace gl2w;
using enum Sym;

TEST(Enumerate, Counts) {
    EXPECT_EQ(enumerate_P(1), (std::vector<Tuple>{{X}, {P1MX}}));
    EXPECT_EQ(enumerate_P(2).size(), 4u);
    EXPECT_EQ(enumerate_RD(1).size(), 2u);
    EXPECT_EQ(enumerate_ID(1).size(), 2u);
    for (int f = 1; f <= 5; ++f) {
        EXPECT_EQ(enumerate_P(f).size(), 1u << f) << f;
        EXPECT_EQ(enumerate_RD(f).size(), 1u << f) << f;
        EXPECT_EQ(enumerate_ID(f).size(), 1u << f) << f;
    }
    auto mu1 = enumerate_Imu(1);
    EXPECT_EQ(std::set<Tuple>(mu1.begin(), mu1.end()), (std::set<Tuple>{{X}, {P1MX}, {P3MX}}));
}

// the dfs enumeration and the brute-force filter over the whole alphabet product agree
TEST(Enumerate, TwoImplementationsAgree) {
    for (Family fam : {Family::P, Family::RD, Family::ID, Family::Imu})
        for (int f = 1; f <= 4; ++f) {
            EXPECT_EQ(enumerate(fam, f), enumerate_by_filter(fam, f)) << static_cast<int>(fam) << " f=" << f;
            for (const auto& t : enumerate(fam, f)) EXPECT_TRUE(validate(fam, t));
        }
}

TEST(Enumerate, ImuContainsIdentity) {
    for (int f = 1; f <= 4; ++f) {
        const auto& m = enumerate_Imu(f);
        EXPECT_NE(std::find(m.begin(), m.end(), Tuple(f, X)), m.end());
    }
}

TEST(EvalTuple, Examples) {
    EXPECT_EQ(eval_tuple(7, {XM1}, {0}), (std::vector<long>{-1}));
    EXPECT_EQ(eval_tuple(7, {P2MX}, {3}), (std::vector<long>{2}));
    Tuple t{X, P2MX, P1MX};
    auto v = eval_tuple(7, t, {1, 2, 3});
    for (int i = 0; i < 3; ++i) EXPECT_EQ(v[i], eval_tuple(7, {t[i]}, {std::vector<int>{1, 2, 3}[i]})[0]);
}

TEST(ELambda, Examples) {
    Params P51(5, 1), P73(7, 3);
    EXPECT_EQ(e_of_lambda(P73, Tuple(3, X), {1, 2, 3}), 0);
    EXPECT_EQ(e_of_lambda(P51, {P1MX}, {2}), 2);
}

TEST(JLambda, Examples) {
    EXPECT_EQ(J_of_lambda(Tuple(3, X)), 0u);
    EXPECT_EQ(J_of_lambda(Tuple(3, P1MX)), full_set(3));
    EXPECT_EQ(J_of_lambda({X, P2MX}), bit(1));
}

TEST(SLambda, Bijective) {
    EXPECT_EQ(S_of_lambda(Family::RD, Tuple(3, X)), 0u);
    EXPECT_FALSE(validate(Family::RD, Tuple(2, XP1)));
    for (Family fam : {Family::RD, Family::ID})
        for (int f = 1; f <= 4; ++f) {
            std::set<Subset> seen;
            for (const auto& t : enumerate(fam, f)) seen.insert(S_of_lambda(fam, t));
            EXPECT_EQ(seen.size(), 1u << f);
        }
}

TEST(MuLambda, Examples) {
    EXPECT_EQ(mu_of_lambda(Family::RD, Tuple(3, X)), Tuple(3, P1MX));
    for (const auto& lam : enumerate_RD(3))
        if (lam[0] == XP1) {
            EXPECT_EQ(mu_of_lambda(Family::RD, lam)[0], P3MX);
        }
    Tuple special{XP1, P2MX, XP1, P2MX};
    ASSERT_TRUE(validate(Family::RD, special));
    EXPECT_EQ(mu_of_lambda(Family::RD, special), Tuple(4, P3MX));
}

TEST(Compatible, Examples) {
    EXPECT_TRUE(compatible(Tuple(2, X), Tuple(2, X)));
    EXPECT_FALSE(compatible({XP1}, {XM1}));
    for (Sym a : all_syms) EXPECT_TRUE(compatible({P2MX}, {a}));
}

TEST(SMu, Examples) {
    EXPECT_EQ(S_of_mu(Tuple(3, X)), 0u);
    EXPECT_EQ(S_of_mu(Tuple(3, P1MX)), full_set(3));
}

TEST(Delta, Examples) {
    EXPECT_EQ(delta_red(0, 3), 0u);
    EXPECT_EQ(delta_red(bit(0), 3), bit(2));
    EXPECT_TRUE(has(delta_irr(0, 3), 0));
    for (int f = 1; f <= 5; ++f)
        for (Subset S = 0; S <= full_set(f); ++S) EXPECT_EQ(has(delta_irr(S, f), 0), !has(S, 1 % f));
}

TEST(TupleProperties, DeltaIsBijective) {
    for (int f = 1; f <= 6; ++f) {
        std::set<Subset> a, b;
        for (Subset S = 0; S <= full_set(f); ++S) {
            a.insert(delta_red(S, f));
            b.insert(delta_irr(S, f));
        }
        EXPECT_EQ(a.size(), 1u << f);
        EXPECT_EQ(b.size(), 1u << f);
    }
}

// e() never throws on an odd bracket, for every tuple of every family and random digits
TEST(TupleProperties, EIsIntegral) {
    gen::Rng rng(3);
    for (int n = 0; n < 200; ++n) {
        Params P = gen::params(rng, 4);
        auto r = gen::digits(rng, P, 0, P.p - 1);
        for (Family fam : {Family::P, Family::RD, Family::ID})
            for (const auto& t : enumerate(fam, P.f)) EXPECT_NO_THROW(e_of_lambda(P, t, r));
    }
}

// if mu_i = mu'_i then i+1 in S(mu) iff i+1 in S(mu')
TEST(TupleProperties, SMuLocalConsistency) {
    for (int f = 2; f <= 4; ++f) {
        const auto& all = enumerate_Imu(f);
        for (const auto& a : all)
            for (const auto& b : all)
                for (int i = 0; i < f; ++i)
                    if (a[i] == b[i]) {
                        int k = (i + 1) % f;
                        EXPECT_EQ(has(S_of_mu(a), k), has(S_of_mu(b), k));
                    }
    }
}
