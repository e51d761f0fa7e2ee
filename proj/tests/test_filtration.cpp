#include <gtest/gtest.h>

#include <set>

#include "gen.hpp"
#include "gl2w/filtration.hpp"

using namespace gl2w;
using enum Sym;

TEST(JPrime, Examples) {
    Params P(5, 3);
    EXPECT_EQ(J_prime(P, chi_of_weight(P, make_weight(P, {3, 1, 1}, 0)), 0), 0u);
    // r' = (4,4,1): the run of p-1 between j = 0 and the next nonzero slot
    EXPECT_EQ(J_prime(P, chi_of_weight(P, make_weight(P, {1, 0, 2}, 0)), 0), bit(1));
    EXPECT_EQ(J_prime(P, chi_of_weight(P, make_weight(P, {1, 0, 0}, 0)), 0), bit(1) | bit(2));
}

TEST(Epsilon, OnlyForSplitCharacterAndOneDimensionalOmega) {
    Params P(5, 2);
    ICharacter chi = char_times_alpha_power(P, {3, 3}, 0, 1);
    EXPECT_TRUE(epsilon(P, chi, 0, make_weight(P, {0, 0}, 3)));
    EXPECT_FALSE(epsilon(P, chi, 0, make_weight(P, {4, 4}, 3)));
    EXPECT_FALSE(epsilon(P, {9, 0}, 0, make_weight(P, {0, 0}, 3)));
}

TEST(WContainsU, Examples) {
    Params P1(5, 1);
    ICharacter c1 = chi_of_weight(P1, make_weight(P1, {3}, 0));
    for (const auto& th : enumerate_P(1))
        for (const auto& la : enumerate_P(1)) EXPECT_TRUE(w_contains_U(P1, th, la, c1, 0));
    Params P(7, 2);
    ICharacter split{4, 4};
    for (const auto& th : enumerate_P(2)) {
        EXPECT_TRUE(w_contains_U(P, th, Tuple(2, P1MX), split, 0));
        bool full = ((J_of_lambda(th) | bit(1)) == full_set(2));
        EXPECT_EQ(w_contains_U(P, th, Tuple(2, X), split, 0), full);
    }
    ICharacter chi = chi_of_weight(P, make_weight(P, {3, 2}, 0));
    for (const auto& th : enumerate_P(2)) EXPECT_TRUE(w_contains_U(P, th, Tuple(2, X), chi, 0));
    EXPECT_THROW(w_contains_U(P, Tuple{X}, Tuple(2, X), chi, 0), domain_error);
}

TEST(WContentsTwoChar, Examples) {
    Params P(7, 3);
    Weight s = make_weight(P, {2, 2, 2}, 0);
    auto t = plus_partner(P, s, 0);
    ASSERT_TRUE(t);
    const Subset jm2 = bit(P.idx(-2));
    EXPECT_TRUE(w_contents_two_char(P, 0, 0, TwoCharSide::sigma, s, *t, 0));
    EXPECT_FALSE(w_contents_two_char(P, 0, jm2, TwoCharSide::tau, s, *t, 0));
    EXPECT_TRUE(w_contents_two_char(P, 0, jm2, TwoCharSide::sigma, s, *t, 0));
    EXPECT_THROW(w_contents_two_char(P, 0, 0, TwoCharSide::sigma, s, s, 0), domain_error);
}

TEST(Example1, ShapeForF3) {
    Params P(7, 3);
    Weight s = make_weight(P, {2, 2, 2}, 0);
    auto ex = example1_filtration(P, s, 0);
    const int r = s.r[P.idx(-1)];
    std::set<int> groups(ex.diagram.group.begin(), ex.diagram.group.end());
    EXPECT_EQ(static_cast<int>(groups.size()), r + 2);
    EXPECT_EQ(ex.diagram.rows.size(), 3u);
    for (const auto& [a, b] : ex.coincidences) EXPECT_EQ(a, b);
    EXPECT_FALSE(render(ex.diagram).empty());
}

// closed forms against the principal-series lookup, and the coincidence index
TEST(Example1, ClosedFormsAndCoincidences) {
    for (int p : {5, 7})
        for (int f : {3, 4}) {
            if (p == 7 && f == 4) continue;
            Params P(p, f);
            std::vector<int> r(f, 0);
            for (;;) {
                Weight s = make_weight(P, r, 0);
                for (int j = 0; j < f; ++j) {
                    const int a = P.idx(j - 1), b = P.idx(j - 2);
                    if (!plus_partner(P, s, j) || s.r[j] < 1 || s.r[b] == p - 1) continue;
                    const int t = s.r[a] / 2;
                    for (int i = 0; i <= s.r[a]; ++i)
                        for (Slot sl : {Slot::empty, Slot::jm1, Slot::jm2, Slot::both}) {
                            if (i > t && (sl == Slot::jm1 || sl == Slot::both)) continue;
                            Weight w;
                            try {
                                w = example1_explicit(P, s, j, i, sl);
                            } catch (const domain_error&) {
                                continue;
                            }
                            auto look = example1_factor(P, s, j, i, sl);
                            ASSERT_TRUE(look);
                            EXPECT_EQ(*look, w);
                        }
                    try {
                        auto ex = example1_filtration(P, s, j);
                        for (const auto& [x, y] : ex.coincidences) EXPECT_EQ(x, y) << to_string(s) << " j=" << j;
                    } catch (const domain_error&) {
                    }
                }
                int i = 0;
                while (i < f && ++r[i] > p - 1) r[i++] = 0;
                if (i == f) break;
            }
        }
}

// sigma^{(i)}_{j-1} = sigma^{(r_{j-1}-i)}_empty as printed does not hold
TEST(Example1, PrintedCoincidenceIndexFails) {
    Params P(7, 3);
    Weight s = make_weight(P, {2, 2, 2}, 0);
    const int r = 2;
    int agree = 0;
    for (int i = 1; i <= r / 2; ++i)
        agree += example1_explicit(P, s, 0, i, Slot::jm1) == example1_explicit(P, s, 0, r - i, Slot::empty);
    EXPECT_EQ(agree, 0);
}

TEST(F2Tables, SigmaThree) {
    Params P(7, 2);
    auto T = f2_tables(P, {false, {2, 1}, 0});
    EXPECT_EQ(T.rows[1].sigma, make_weight(P, {1, 4}, 14));
    EXPECT_EQ(T.rows[2].sigma, make_weight(P, {4, 3}, 16));
    EXPECT_EQ(T.rows[3].sigma, make_weight(P, {3, 2}, 44));
    std::set<std::vector<int>> mid(T.rows[2].middle.begin(), T.rows[2].middle.end());
    EXPECT_EQ(mid, (std::set<std::vector<int>>{{1, 2}, {5, 2}}));
    EXPECT_EQ(T.rows[0].last, (std::vector<int>{2, 5}));
    EXPECT_EQ(T.delta, (std::vector<int>{1, 2, 3, 0}));
    EXPECT_THROW(f2_tables(P, {true, {2, 1}, 0}), domain_error);
}

TEST(F2Tables, AgreeWithD0Everywhere) {
    for (int p : {5, 7}) {
        Params P(p, 2);
        for (int r0 = 1; r0 <= p - 2; ++r0)
            for (int r1 = 0; r1 <= p - 3; ++r1) {
                auto c = f2_tables_check(P, {false, {r0, r1}, 0});
                EXPECT_TRUE(c.ok) << p << " " << r0 << "," << r1 << " " << (c.failures.empty() ? "" : c.failures[0]);
            }
    }
}

TEST(V1S1, Structure) {
    for (int p : {5, 7}) {
        Params P(p, 2);
        for (int r0 = 1; r0 <= p - 2; ++r0)
            for (int r1 = 0; r1 <= p - 3; ++r1) {
                GaloisParams g{false, {r0, r1}, 0};
                auto x = v1_s1_filtrations(P, g);
                auto T = f2_tables(P, g);
                EXPECT_EQ(x.tau[0], T.rows[2].sigma);
                EXPECT_TRUE(x.tau_in_D[0]);
                for (int i = 1; i <= r0; ++i) EXPECT_FALSE(x.tau_in_D[i]);
                for (int i = 0; i < r0; ++i) EXPECT_EQ(couple_type(P, x.tau[i], x.tau[i + 1]), (CoupleType{+1, 0}));
                EXPECT_EQ(static_cast<int>(x.v1.layers.size()), 2 * r0 + 2);
                EXPECT_EQ(x.s1.layers.size() + 1, x.v1.layers.size());
                for (size_t i = 0; i < x.s1.rows[0].size(); ++i)
                    EXPECT_EQ(x.s1.rows[0][i]->weight, x.v1.rows[0][i]->weight);
            }
    }
}

TEST(ExtVanishing, Examples) {
    Params P(7, 2);
    Weight s = make_weight(P, {2, 3}, 0);
    EXPECT_EQ(ext_vanishing(P, s, s), ExtVanishing::vanishes_known);
    EXPECT_EQ(ext_vanishing(P, s, make_weight(P, {2, 5}, -7)), ExtVanishing::vanishes_known);
    EXPECT_EQ(ext_vanishing(P, s, make_weight(P, {6, 0}, 11)), ExtVanishing::unknown);
    EXPECT_EQ(ext_vanishing(P, s, *plus_partner(P, s, 1)), ExtVanishing::nonvanishing_allowed);
}
