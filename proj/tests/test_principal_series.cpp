#include <gtest/gtest.h>

#include "gen.hpp"
#include "gl2w/principal_series.hpp"

using namespace gl2w;

TEST(JhOfInduced, F1Example) {
    Params P(5, 1);
    auto c = jh_of_induced(P, chi_of_weight(P, make_weight(P, {2}, 0)));
    EXPECT_EQ(weights_of(c.factors), (std::vector<Weight>{make_weight(P, {2}, 0), make_weight(P, {2}, 2)}));
    EXPECT_EQ(total_dim(c.factors), 6);
}

TEST(JhOfInduced, P7F2Example) {
    Params P(7, 2);
    auto c = jh_of_induced(P, chi_of_weight(P, make_weight(P, {2, 1}, 0)));
    EXPECT_EQ(c.factors.size(), 4u);
    EXPECT_EQ(total_dim(c.factors), 50);
    EXPECT_TRUE(c.dropped.empty());
}

TEST(JhOfInduced, SplitCharacter) {
    Params P(7, 2);
    ICharacter c{3, 3};
    auto pc = jh_of_induced(P, c);
    Weight s = make_weight(P, {0, 0}, 3);
    EXPECT_EQ(weights_of(pc.factors), (std::vector<Weight>{s, sigma_s(P, s)}));
    EXPECT_EQ(pc.dropped.size(), 2u);
    EXPECT_EQ(socle_of_induced(P, c).size(), 2u);
}

TEST(JhOfInduced, SocleIsAllXTuple) {
    Params P(7, 2);
    ICharacter chi = chi_of_weight(P, make_weight(P, {2, 1}, 0));
    auto pc = jh_of_induced(P, chi);
    auto soc = socle_of_induced(P, chi);
    ASSERT_EQ(soc.size(), 1u);
    EXPECT_EQ(soc[0], make_weight(P, {2, 1}, 0));
    EXPECT_EQ(find_factor(pc, soc[0])->lambda, Tuple(2, Sym::X));
}

TEST(UContents, Examples) {
    Params P(7, 2);
    ICharacter chi = chi_of_weight(P, make_weight(P, {2, 1}, 0));
    auto pc = jh_of_induced(P, chi);
    auto soc = *find_factor_J(pc, 0);
    EXPECT_EQ(U_contents(P, soc, chi), (std::vector<PSFactor>{soc}));
    auto top = *find_factor_J(pc, full_set(2));
    EXPECT_EQ(U_contents(P, top, chi).size(), pc.factors.size());
    EXPECT_THROW(U_contents(P, PSFactor{make_weight(P, {6, 6}, 0), {}, 0}, chi), domain_error);
}

TEST(PrincipalSeriesProperties, MultiplicityOneAndDimensions) {
    for (int p : {5, 7})
        for (int f = 1; f <= 3; ++f) {
            Params P(p, f);
            for (long a = 0; a < P.qm1(); a += (f == 3 ? 7 : 1)) {
                ICharacter chi = make_char(P, a, 0);
                auto pc = jh_of_induced(P, chi);
                auto w = weights_of(pc.factors);
                EXPECT_EQ(std::adjacent_find(w.begin(), w.end()), w.end());
                EXPECT_EQ(pc.factors.size() + pc.dropped.size(), 1u << f);
                auto s = char_normal_form(P, chi).s;
                if (std::all_of(s.begin(), s.end(), [&](int x) { return x >= 1 && x <= p - 2; })) {
                    EXPECT_EQ(total_dim(pc.factors), P.q + 1);
                    EXPECT_TRUE(pc.dropped.empty());
                }
                for (const auto& x : pc.factors) EXPECT_EQ(x.J, J_of_lambda(x.lambda));
            }
        }
}

// J(t1) in J(t2) implies U(t1) in U(t2)
TEST(PrincipalSeriesProperties, UContentsMonotone) {
    gen::Rng rng(5);
    for (int n = 0; n < 100; ++n) {
        Params P(rng.coin() ? 5 : 7, static_cast<int>(rng.uniform(1, 3)));
        ICharacter chi = gen::character(rng, P);
        if (chi.a == chi.b) continue;
        auto pc = jh_of_induced(P, chi);
        for (const auto& a : pc.factors)
            for (const auto& b : pc.factors) {
                if ((a.J & ~b.J) != 0) continue;
                auto ua = weights_of(U_contents(P, a, chi)), ub = weights_of(U_contents(P, b, chi));
                EXPECT_TRUE(std::includes(ub.begin(), ub.end(), ua.begin(), ua.end()));
            }
    }
}
