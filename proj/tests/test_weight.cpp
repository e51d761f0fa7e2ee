#include <gtest/gtest.h>

#include <set>

#include "gen.hpp"
#include "gl2w/weight.hpp"

using namespace gl2w;

TEST(Params, RejectsBadInput) {
    EXPECT_THROW(Params(4, 1), domain_error);
    EXPECT_THROW(Params(2, 1), domain_error);
    EXPECT_THROW(Params(5, 0), domain_error);
    Params P(7, 2);
    EXPECT_EQ(P.q, 49);
    EXPECT_EQ(P.idx(-1), 1);
    EXPECT_EQ(P.pw(1), 7);
}

TEST(Weight, MakeWeightChecksDigits) {
    Params P(5, 2);
    EXPECT_THROW(make_weight(P, {5, 0}, 0), domain_error);
    EXPECT_THROW(make_weight(P, {1}, 0), domain_error);
    EXPECT_EQ(make_weight(P, {1, 2}, -1).twist, 23);
}

TEST(ChiOfWeight, Examples) {
    Params P72(7, 2), P51(5, 1);
    EXPECT_EQ(chi_of_weight(P72, make_weight(P72, {2, 1}, 0)), (ICharacter{9, 0}));
    EXPECT_EQ(chi_of_weight(P72, make_weight(P72, {0, 0}, 3)), (ICharacter{3, 3}));
    // (4,2) and (0,2) are the same character mod q-1 = 4
    EXPECT_EQ(chi_of_weight(P51, make_weight(P51, {2}, 2)), make_char(P51, 4, 2));
}

TEST(ConjugateChar, Examples) {
    EXPECT_EQ(conjugate_char({9, 0}), (ICharacter{0, 9}));
    EXPECT_EQ(conjugate_char({3, 3}), (ICharacter{3, 3}));
}

TEST(Alpha, Examples) {
    Params P51(5, 1), P72(7, 2);
    EXPECT_EQ(alpha(P51), (ICharacter{1, 3}));
    EXPECT_EQ(alpha(P72), (ICharacter{1, 47}));
    EXPECT_EQ(char_pow(P72, alpha(P72), P72.qm1()), (ICharacter{0, 0}));
}

TEST(NormalForm, Examples) {
    Params P(7, 2);
    auto a = char_normal_form(P, {9, 0});
    EXPECT_EQ(a.s, (std::vector<int>{2, 1}));
    EXPECT_EQ(a.t, 0);
    auto b = char_normal_form(P, {0, 9});
    EXPECT_EQ(b.s, (std::vector<int>{4, 5}));
    EXPECT_EQ(b.t, 9);
    auto c = char_normal_form(P, {3, 3});
    EXPECT_EQ(c.s, (std::vector<int>{0, 0}));
    EXPECT_EQ(c.t, 3);
}

TEST(CharTimesAlphaPower, Examples) {
    Params P(7, 2);
    ICharacter c = chi_of_weight(P, make_weight(P, {3, 1}, 0));
    EXPECT_EQ(c, (ICharacter{10, 0}));
    ICharacter d = char_times_alpha_power(P, c, 0, -1);
    EXPECT_EQ(d, (ICharacter{9, 1}));
    EXPECT_EQ(weight_of_normal_form(P, char_normal_form(P, d)), make_weight(P, {1, 1}, 1));
    EXPECT_EQ(char_times_alpha_power(P, c, 1, 0), c);
    EXPECT_THROW(char_times_alpha_power(P, c, 2, 1), domain_error);
}

// r'_0 = p-2 as stated; slot 1 is forced to 6 by sum p^i s_i = -1 mod 48
TEST(CharTimesAlphaPower, BoundaryCaseNormalForm) {
    Params P(7, 2);
    ICharacter c = chi_of_weight(P, make_weight(P, {1, 0}, 0));
    auto w = weight_of_normal_form(P, char_normal_form(P, char_times_alpha_power(P, c, 0, -1)));
    EXPECT_EQ(w, make_weight(P, {5, 6}, 1));
    EXPECT_NE(w, make_weight(P, {5, 0}, 1));
}

TEST(WeightsOfChar, Examples) {
    Params P51(5, 1), P72(7, 2);
    auto a = weights_of_char(P51, {3, 3});
    std::sort(a.begin(), a.end());
    EXPECT_EQ(a, (std::vector<Weight>{make_weight(P51, {0}, 3), make_weight(P51, {4}, 3)}));
    EXPECT_EQ(weights_of_char(P72, {9, 0}), (std::vector<Weight>{make_weight(P72, {2, 1}, 0)}));
}

TEST(SigmaS, Examples) {
    Params P(7, 2);
    EXPECT_EQ(sigma_s(P, make_weight(P, {2, 1}, 0)), make_weight(P, {4, 5}, 9));
    EXPECT_EQ(sigma_s(P, make_weight(P, {0, 0}, 5)), make_weight(P, {6, 6}, 5));
}

TEST(WeightDim, Examples) {
    Params P(7, 2);
    EXPECT_EQ(weight_dim(make_weight(P, {2, 1}, 0)), 6);
    EXPECT_EQ(weight_dim(make_weight(P, {0, 0}, 0)), 1);
    EXPECT_EQ(weight_dim(make_weight(P, {6, 6}, 0)), P.q);
}

TEST(Ext1I, Examples) {
    Params P(7, 2);
    ICharacter chi{9, 0};
    EXPECT_EQ(ext1_dim_I(P, chi, chi, ExtLevel::modZ1).dim, 0);
    auto a = ext1_dim_I(P, char_times_alpha_power(P, chi, 1, -1), chi, ExtLevel::modK1);
    EXPECT_EQ(a.dim, 1);
    EXPECT_EQ(a.j, 1);
    ICharacter up = char_times_alpha_power(P, chi, 0, 1);
    EXPECT_EQ(ext1_dim_I(P, up, chi, ExtLevel::modK1).dim, 0);
    auto b = ext1_dim_I(P, up, chi, ExtLevel::modZ1);
    EXPECT_EQ(b.dim, 1);
    EXPECT_EQ(b.j, 0);
}

TEST(WeightProperties, RoundTripsAndInvolutions) {
    gen::Rng rng(11);
    for (int n = 0; n < 500; ++n) {
        Params P = gen::params(rng);
        Weight w = gen::weight(rng, P);
        ICharacter c = gen::character(rng, P);
        auto ws = weights_of_char(P, chi_of_weight(P, w));
        if (std::find(ws.begin(), ws.end(), w) == ws.end()) {
            // (p-1,..,p-1)(x)det^t and (0,..,0)(x)det^t share a character; only the former can be missing
            EXPECT_EQ(chi_of_weight(P, w).a, chi_of_weight(P, w).b);
        }
        for (const auto& x : weights_of_char(P, c)) EXPECT_EQ(chi_of_weight(P, x), c);
        EXPECT_EQ(sigma_s(P, sigma_s(P, w)), w);
        EXPECT_EQ(chi_of_weight(P, sigma_s(P, w)), conjugate_char(chi_of_weight(P, w)));
        EXPECT_EQ(conjugate_char(conjugate_char(c)), c);
        for (int j = 0; j < P.f; ++j)
            EXPECT_EQ(char_times_alpha_power(P, char_times_alpha_power(P, c, j, -1), j, 1), c);
        auto nf = char_normal_form(P, c);
        EXPECT_EQ(make_char(P, digit_sum(P, nf.s) + nf.t, nf.t), c);
        for (ICharacter x : {c, char_times_alpha_power(P, c, 0, -1)}) {
            auto k1 = ext1_dim_I(P, x, c, ExtLevel::modK1), z1 = ext1_dim_I(P, x, c, ExtLevel::modZ1);
            EXPECT_LE(k1.dim, z1.dim);
            if (k1.dim && z1.sign < 0) {
                EXPECT_EQ(k1.j, z1.j);
            }
        }
    }
}

TEST(NormalFormProperty, IsBijective) {
    Params P(5, 2);
    std::set<std::pair<std::vector<int>, long>> seen;
    for (long a = 0; a < P.qm1(); ++a)
        for (long b = 0; b < P.qm1(); ++b) {
            auto nf = char_normal_form(P, {a, b});
            EXPECT_TRUE(seen.insert({nf.s, nf.t}).second);
            EXPECT_NE(nf.s, std::vector<int>(P.f, P.p - 1));
        }
}
