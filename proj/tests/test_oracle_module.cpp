#include <gtest/gtest.h>

#include <random>

#include "gl2w/oracle/structure.hpp"
#include "gl2w/principal_series.hpp"

using namespace gl2w;
using namespace gl2w::oracle;

namespace {

bool multiplicative_K(const ExplicitModule& M, int trials, std::uint64_t seed) {
    const auto& G = *M.G;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        M2 g = G.random_K(rng), h = G.random_K(rng);
        if (M(mat_mul(G.R, g, h)) != mat_mul(G.F, M(g), M(h))) return false;
    }
    return true;
}

bool multiplicative_I(const ExplicitModule& M, int trials, std::uint64_t seed) {
    const auto& G = *M.G;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        M2 g = G.random_I(rng), h = G.random_I(rng);
        if (M(mat_mul(G.R, g, h)) != mat_mul(G.F, M(g), M(h))) return false;
    }
    return true;
}

} // namespace

TEST(WeightModule, IsARepresentationTrivialOnK1) {
    for (auto [p, f] : {std::pair{5, 1}, std::pair{5, 2}, std::pair{3, 3}}) {
        auto G = make_context(Params(p, f));
        std::vector<int> r(f, 1);
        r[0] = 2;
        Weight s = make_weight(G->P, r, 1);
        auto M = weight_module(G, s);
        EXPECT_EQ(M.dim, weight_dim(s));
        EXPECT_TRUE(multiplicative_K(M, 20, p * 10 + f));
        std::mt19937_64 rng(3);
        for (int t = 0; t < 10; ++t) EXPECT_EQ(M(G->random_K1(rng)), identity(M.dim));
        EXPECT_THROW(weight_module(G, Weight{std::vector<int>(f, p), 0}), domain_error);
    }
}

TEST(WeightModule, IrreducibleWithExpectedSocleAndDual) {
    auto G = make_context(Params(5, 2));
    for (auto s : {make_weight(G->P, {2, 1}, 0), make_weight(G->P, {4, 4}, 3), make_weight(G->P, {0, 3}, 7)}) {
        auto M = weight_module(G, s);
        EXPECT_EQ(socle(M).weights, std::vector<Weight>{s});
        EXPECT_EQ(cosocle(M), std::vector<Weight>{s});
        EXPECT_EQ(socle(dual(M)).weights, std::vector<Weight>{dual_weight(G->P, s)});
        EXPECT_EQ(hom_space(M, M).size(), 1u);
        EXPECT_TRUE(is_isomorphic(M, weight_module(G, s)));
    }
    auto a = weight_module(G, make_weight(G->P, {2, 1}, 0)), b = weight_module(G, make_weight(G->P, {2, 1}, 1));
    EXPECT_TRUE(hom_space(a, b).empty());
    EXPECT_FALSE(is_isomorphic(a, b));
}

TEST(InducedModule, DimensionsAndAction) {
    auto G = make_context(Params(5, 2));
    ICharacter chi = make_char(G->P, 7, 2);
    auto V = induce(pi_twist(char_module(G, chi)));
    EXPECT_EQ(V.dim, G->P.q + 1);
    EXPECT_TRUE(multiplicative_K(V, 10, 1));
    auto E = ej_module(G, chi, 1);
    EXPECT_TRUE(multiplicative_I(E, 30, 2));
    EXPECT_TRUE(multiplicative_I(pi_twist(E), 30, 3));
    auto W = induce(pi_twist(E));
    EXPECT_EQ(W.dim, 2 * (G->P.q + 1));
    EXPECT_TRUE(multiplicative_K(W, 5, 4));
    EXPECT_THROW(induce(V), domain_error);
}

// socle of Ind Pi(chi) by linear algebra against the combinatorial prediction
TEST(InducedModule, SocleMatchesPrediction) {
    for (auto [p, f] : {std::pair{5, 1}, std::pair{7, 1}, std::pair{3, 2}}) {
        auto G = make_context(Params(p, f));
        for (long a = 0; a < G->P.q - 1; a += 2)
            for (long b = 0; b < G->P.q - 1; b += 3) {
                ICharacter chi = make_char(G->P, a, b);
                auto V = induce(pi_twist(char_module(G, chi)));
                auto want = socle_of_induced(G->P, chi);
                std::sort(want.begin(), want.end());
                EXPECT_EQ(socle(V).weights, want) << p << " " << f << " " << to_string(chi);
            }
    }
}

TEST(QuotientModule, DimensionsAdd) {
    auto G = make_context(Params(5, 1));
    auto V = induce(pi_twist(char_module(G, make_char(G->P, 2, 0))));
    auto soc = socle(V);
    Echelon S(G->F, V.dim);
    S.add_all(soc.space);
    auto Q = quotient_module(V, S);
    EXPECT_EQ(Q.dim + S.dim(), V.dim);
    EXPECT_TRUE(multiplicative_K(Q, 10, 5));
    auto layers = socle_series(V);
    EXPECT_EQ(layers.size(), 2u);
    long total = 0;
    for (const auto& l : layers)
        for (const auto& w : l) total += weight_dim(w);
    EXPECT_EQ(total, V.dim);
}
