#include <gtest/gtest.h>

#include "gen.hpp"
#include "gl2w/couples.hpp"

using namespace gl2w;

namespace {
Params P72(7, 2);
// sigma_1, sigma_2, sigma_4 for r = (2,1)
Weight s1 = make_weight(P72, {2, 1}, 0);
Weight s2 = make_weight(P72, {1, 4}, 14);
Weight s4 = make_weight(P72, {3, 2}, 44);
} // namespace

TEST(CoupleType, F2Instances) {
    EXPECT_EQ(couple_type(P72, s1, s4), (CoupleType{+1, 1}));
    EXPECT_EQ(couple_type(P72, s1, s2), (CoupleType{-1, 0}));
    EXPECT_FALSE(couple_type(P72, s1, s1));
}

TEST(CoupleType, NoneForF1) {
    Params P(5, 1);
    Weight s = make_weight(P, {2}, 0);
    EXPECT_FALSE(plus_partner(P, s, 0));
    EXPECT_FALSE(couple_type(P, s, s));
}

TEST(CoupleType, PartnerPreconditions) {
    EXPECT_FALSE(plus_partner(P72, make_weight(P72, {6, 1}, 0), 1));
    EXPECT_FALSE(minus_partner(P72, make_weight(P72, {2, 0}, 0), 1));
}

// (+1,j): chi_tau alpha^{-p^j} = chi_sigma alpha^{-p^{j-1}(r_{j-1}+1)}
TEST(CoupleProperties, PlusPartnerCharacter) {
    gen::Rng rng(7);
    for (int n = 0; n < 400; ++n) {
        Params P(rng.coin() ? 5 : 7, static_cast<int>(rng.uniform(2, 4)));
        Weight s = gen::weight(rng, P);
        int j = static_cast<int>(rng.uniform(0, P.f - 1));
        auto t = plus_partner(P, s, j);
        if (!t) continue;
        int jm = P.idx(j - 1);
        EXPECT_EQ(char_times_alpha_power(P, chi_of_weight(P, *t), j, -1),
                  char_times_alpha_power(P, chi_of_weight(P, s), jm, -(s.r[jm] + 1)));
        auto ct = couple_type(P, s, *t);
        ASSERT_TRUE(ct);
        EXPECT_EQ(ct->sign, +1);
    }
}
