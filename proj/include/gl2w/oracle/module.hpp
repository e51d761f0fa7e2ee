#pragma once

#include <functional>
#include <memory>
#include <random>
#include <utility>

#include "linalg.hpp"

namespace gl2w::oracle {

// K = GL2(O) mod p^2 with its standard subgroups, realized over GR(p^2, f)
class GroupContext {
public:
    explicit GroupContext(const Params& P_) : P(P_), F(P_), R(F) {
        const int f = P.f;
        for (int i = 0; i < f; ++i) {
            T.push_back(R.teich(F.gpow(i)));
            pT.push_back(R.scale(T.back(), P.p));
        }
        gamma = R.teich(F.gen());
        for (int i = 0; i < f; ++i) {
            uplus.push_back(E12(T[i]));
            uplus.push_back(E12(pT[i]));
            uminus.push_back(E21(pT[i]));
        }
        H = {diag(gamma, R.one()), diag(R.one(), gamma)};
        std::vector<M2> tor1;
        for (int i = 0; i < f; ++i) {
            GRElem u = R.add(R.one(), pT[i]);
            tor1.push_back(diag(u, R.one()));
            tor1.push_back(diag(R.one(), u));
        }
        I1 = uplus;
        I1.insert(I1.end(), uminus.begin(), uminus.end());
        I1.insert(I1.end(), tor1.begin(), tor1.end());
        I = I1;
        I.insert(I.end(), H.begin(), H.end());
        K = I;
        for (int i = 0; i < f; ++i) {
            K.push_back(E21(T[i]));
        }
    }
    GroupContext(const GroupContext&) = delete;
    GroupContext& operator=(const GroupContext&) = delete;

    Params P;
    Fq F;
    GR R;
    std::vector<GRElem> T, pT; // [g^i], p[g^i]
    GRElem gamma;              // [g], g a generator of F_q^x
    std::vector<M2> K, I, I1, H, uplus, uminus;

    M2 E12(const GRElem& t) const { return {R.one(), t, R.zero(), R.one()}; }
    M2 E21(const GRElem& t) const { return {R.one(), R.zero(), t, R.one()}; }
    M2 diag(const GRElem& x, const GRElem& y) const { return {x, R.zero(), R.zero(), y}; }
    M2 id() const { return mat_id(R); }
    M2 Pi_w() const { return {R.zero(), R.one(), R.one(), R.zero()}; }

    int num_cosets() const { return static_cast<int>(P.q) + 1; }
    // ([lambda] 1; 1 0) for l < q, identity for l = q
    M2 coset_rep(int l) const {
        if (l == P.q) return id();
        return {R.teich(l), R.one(), R.one(), R.zero()};
    }
    // g = rep(l) * i with i in I
    std::pair<int, M2> coset_decompose(const M2& g) const {
        if (!mat_invertible(R, g)) throw domain_error("matrix not invertible mod p");
        const int cbar = R.reduce(g.c);
        if (cbar == 0) return {static_cast<int>(P.q), g};
        const int lam = F.div(R.reduce(g.a), cbar);
        const GRElem t = R.teich(lam);
        return {lam, {g.c, g.d, R.sub(g.a, R.mul(t, g.c)), R.sub(g.b, R.mul(t, g.d))}};
    }
    // Pi^{-1} h Pi for h = (a b; c d) in I: (d, c/p; p b, a)
    M2 pi_conj(const M2& h) const { return {h.d, R.lift(R.div_p(h.c)), R.scale(h.b, P.p), h.a}; }

    M2 random_K(std::mt19937_64& rng) const {
        for (;;) {
            M2 g{R.random(rng), R.random(rng), R.random(rng), R.random(rng)};
            if (mat_invertible(R, g)) return g;
        }
    }
    M2 random_I(std::mt19937_64& rng) const {
        for (;;) {
            M2 g{R.random(rng), R.random(rng), R.scale(R.random(rng), P.p), R.random(rng)};
            if (mat_invertible(R, g)) return g;
        }
    }
    M2 random_I1(std::mt19937_64& rng) const {
        M2 g = random_I(rng);
        g.a = R.add(R.one(), R.scale(g.a, P.p));
        g.d = R.add(R.one(), R.scale(g.d, P.p));
        return g;
    }
    M2 random_K1(std::mt19937_64& rng) const {
        M2 g = random_I1(rng);
        g.b = R.scale(g.b, P.p);
        return g;
    }
};

using Context = std::shared_ptr<const GroupContext>;
inline Context make_context(const Params& P) { return std::make_shared<const GroupContext>(P); }

enum class Domain { K, I };
enum class Level { K1_trivial, K2_trivial, I2_trivial };

struct ExplicitModule {
    Context G;
    int dim = 0;
    Domain domain = Domain::K;
    Level level = Level::K1_trivial;
    std::function<Mat(const M2&)> act;

    Mat operator()(const M2& g) const { return act(g); }
    const std::vector<M2>& gens() const { return domain == Domain::K ? G->K : G->I; }
};

inline std::vector<Mat> mats(const ExplicitModule& M, const std::vector<M2>& gs) {
    std::vector<Mat> out;
    out.reserve(gs.size());
    for (const auto& g : gs) out.push_back(M.act(g));
    return out;
}

// Frobenius-twisted symmetric powers tensored with det^twist; basis index sum k_i prod_{l<i}(r_l+1)
inline ExplicitModule weight_module(const Context& G, const Weight& s) {
    if (!valid_weight(G->P, s)) throw domain_error("invalid weight");
    int dim = static_cast<int>(weight_dim(s));
    auto act = [G, s](const M2& g) {
        const Fq& F = G->F;
        M2bar x = reduce(G->R, g);
        int det = F.sub(F.mul(x.a, x.d), F.mul(x.b, x.c));
        Mat out(1, 1);
        out(0, 0) = F.pow(det, s.twist);
        long fr = 1;
        for (int i = 0; i < G->P.f; ++i, fr *= G->P.p) {
            int a = F.pow(x.a, fr), b = F.pow(x.b, fr), c = F.pow(x.c, fr), d = F.pow(x.d, fr);
            const int r = s.r[i];
            Mat S(r + 1, r + 1);
            // x^{r-k} y^k -> (a x + c y)^{r-k} (b x + d y)^k, coefficient list by power of y
            for (int k = 0; k <= r; ++k) {
                Vec poly{1};
                auto times = [&](int u, int v) {
                    Vec n(poly.size() + 1, 0);
                    for (size_t m = 0; m < poly.size(); ++m) {
                        n[m] = F.add(n[m], F.mul(poly[m], u));
                        n[m + 1] = F.add(n[m + 1], F.mul(poly[m], v));
                    }
                    poly = std::move(n);
                };
                for (int e = 0; e < r - k; ++e) times(a, c);
                for (int e = 0; e < k; ++e) times(b, d);
                for (int m = 0; m <= r; ++m) S(m, k) = poly[m];
            }
            // new index = old + stride * k_i, so S is the slow factor
            Mat K(out.rows * S.rows, out.cols * S.cols);
            for (int i1 = 0; i1 < S.rows; ++i1)
                for (int j1 = 0; j1 < S.cols; ++j1) {
                    if (!S(i1, j1)) continue;
                    for (int i0 = 0; i0 < out.rows; ++i0)
                        for (int j0 = 0; j0 < out.cols; ++j0)
                            K(i1 * out.rows + i0, j1 * out.cols + j0) = F.mul(S(i1, j1), out(i0, j0));
                }
            out = std::move(K);
        }
        return out;
    };
    return {G, dim, Domain::K, Level::K1_trivial, act};
}

// value of the character abar^a dbar^b on h in I
inline int char_value(const GroupContext& G, const ICharacter& chi, const M2& h) {
    return G.F.mul(G.F.pow(G.R.reduce(h.a), chi.a), G.F.pow(G.R.reduce(h.d), chi.b));
}

inline ExplicitModule char_module(const Context& G, const ICharacter& chi) {
    return {G, 1, Domain::I, Level::K1_trivial, [G, chi](const M2& h) {
                Mat m(1, 1);
                m(0, 0) = char_value(*G, chi, h);
                return m;
            }};
}

// basis {v, w}: h v = chi(h) v, h w = chi alpha^{-p^j}(h) (w + (b/d)^{p^j} v)
inline ExplicitModule ej_module(const Context& G, const ICharacter& chi, int j) {
    const ICharacter chi2 = char_times_alpha_power(G->P, chi, G->P.idx(j), -1);
    const long pj = G->P.pw(j);
    return {G, 2, Domain::I, Level::K1_trivial, [G, chi, chi2, pj](const M2& h) {
                const Fq& F = G->F;
                int c1 = char_value(*G, chi, h), c2 = char_value(*G, chi2, h);
                int bd = F.pow(F.div(G->R.reduce(h.b), G->R.reduce(h.d)), pj);
                Mat m(2, 2);
                m(0, 0) = c1;
                m(0, 1) = F.mul(c2, bd);
                m(1, 1) = c2;
                return m;
            }};
}

inline ExplicitModule pi_twist(const ExplicitModule& M) {
    if (M.domain != Domain::I) throw domain_error("pi_twist needs an I-module");
    auto G = M.G;
    auto inner = M.act;
    return {G, M.dim, Domain::I, Level::I2_trivial, [G, inner](const M2& h) { return inner(G->pi_conj(h)); }};
}

// basis [rep(l), e_s] at index l * dim M + s
inline ExplicitModule induce(const ExplicitModule& M) {
    if (M.domain != Domain::I) throw domain_error("induce needs an I-module");
    auto G = M.G;
    auto inner = M.act;
    const int m = M.dim, n = G->num_cosets();
    return {G, n * m, Domain::K, Level::K2_trivial, [G, inner, m, n](const M2& g) {
                Mat out(n * m, n * m);
                for (int l = 0; l < n; ++l) {
                    auto [l2, i] = G->coset_decompose(mat_mul(G->R, g, G->coset_rep(l)));
                    Mat b = inner(i);
                    for (int r = 0; r < m; ++r)
                        for (int c = 0; c < m; ++c) out(l2 * m + r, l * m + c) = b(r, c);
                }
                return out;
            }};
}

inline ExplicitModule direct_sum(const ExplicitModule& A, const ExplicitModule& B) {
    auto fa = A.act, fb = B.act;
    const int da = A.dim, db = B.dim;
    Domain d = (A.domain == Domain::I || B.domain == Domain::I) ? Domain::I : Domain::K;
    return {A.G, da + db, d, A.level, [fa, fb, da, db](const M2& g) {
                Mat a = fa(g), b = fb(g), out(da + db, da + db);
                for (int i = 0; i < da; ++i)
                    for (int j = 0; j < da; ++j) out(i, j) = a(i, j);
                for (int i = 0; i < db; ++i)
                    for (int j = 0; j < db; ++j) out(da + i, da + j) = b(i, j);
                return out;
            }};
}

// g -> M(g^{-1})^T
inline ExplicitModule dual(const ExplicitModule& M) {
    auto G = M.G;
    auto inner = M.act;
    return {G, M.dim, M.domain, M.level, [G, inner](const M2& g) { return transpose(inner(mat_inv(G->R, g))); }};
}

// action restricted to a stable subspace, in the echelon basis of S
inline ExplicitModule sub_module(const ExplicitModule& M, const Echelon& S, Domain d) {
    auto inner = M.act;
    auto Sp = std::make_shared<Echelon>(S);
    auto G = M.G;
    return {G, S.dim(), d, M.level, [G, inner, Sp](const M2& g) {
                Mat a = inner(g);
                const int k = Sp->dim();
                Mat out(k, k);
                for (int c = 0; c < k; ++c) {
                    Vec v = apply(G->F, a, Sp->rows()[c]);
                    Vec x = Sp->coords(v);
                    for (int r = 0; r < k; ++r) out(r, c) = x[r];
                }
                return out;
            }};
}
inline ExplicitModule sub_module(const ExplicitModule& M, const Echelon& S) { return sub_module(M, S, M.domain); }

inline std::vector<int> complement_columns(const Echelon& S) {
    std::vector<char> piv(S.ambient(), 0);
    for (int c : S.pivots()) piv[c] = 1;
    std::vector<int> out;
    for (int c = 0; c < S.ambient(); ++c)
        if (!piv[c]) out.push_back(c);
    return out;
}

// image of v in M/S, coordinates on the non-pivot columns of S
inline Vec project(const Echelon& S, const Vec& v) {
    Vec r = S.reduce(v), out;
    for (int c : complement_columns(S)) out.push_back(r[c]);
    return out;
}

inline Vec lift_from_quotient(const Echelon& S, const Vec& x) {
    Vec v(S.ambient(), 0);
    auto cols = complement_columns(S);
    for (size_t j = 0; j < cols.size(); ++j) v[cols[j]] = x[j];
    return v;
}

inline ExplicitModule quotient_module(const ExplicitModule& M, const Echelon& S) {
    auto inner = M.act;
    auto Sp = std::make_shared<Echelon>(S);
    auto cols = std::make_shared<std::vector<int>>(complement_columns(S));
    auto G = M.G;
    const int k = static_cast<int>(cols->size());
    return {G, k, M.domain, M.level, [G, inner, Sp, cols, k](const M2& g) {
                Mat a = inner(g);
                Mat out(k, k);
                for (int j = 0; j < k; ++j) {
                    Vec v(a.rows);
                    for (int r = 0; r < a.rows; ++r) v[r] = a(r, (*cols)[j]);
                    v = Sp->reduce(v);
                    for (int i = 0; i < k; ++i) out(i, j) = v[(*cols)[i]];
                }
                return out;
            }};
}

// sum_lambda lambda^k [rep(lambda), e_s] in an induced module with inner dimension m
inline Vec sum_vector(const GroupContext& G, long k, int m, int s) {
    const int q = static_cast<int>(G.P.q);
    Vec v(static_cast<size_t>(q + 1) * m, 0);
    for (int lam = 0; lam < q; ++lam) v[static_cast<size_t>(lam) * m + s] = G.F.pow(lam, k);
    return v;
}

// W = Ind Pi(E_j(chi)); inner basis Pi(v) = 0, Pi(w) = 1
struct WSpace {
    ICharacter chi;
    int j = 0;
    ExplicitModule W;
};

inline WSpace make_W(const Context& G, const ICharacter& chi, int j) {
    return {chi, G->P.idx(j), induce(pi_twist(ej_module(G, chi, j)))};
}

inline Vec f_vector(const WSpace& W, long k) {
    if (k < 0 || k > W.W.G->P.q - 1) throw domain_error("f_k needs 0 <= k <= q-1");
    return sum_vector(*W.W.G, k, 2, 0);
}
inline Vec F_vector(const WSpace& W, long k) {
    if (k < 0 || k > W.W.G->P.q - 1) throw domain_error("F_k needs 0 <= k <= q-1");
    return sum_vector(*W.W.G, k, 2, 1);
}
// [1, m] sits at the identity coset
inline Vec bracket_one(const GroupContext& G, int m, int s) {
    Vec v(static_cast<size_t>(G.num_cosets()) * m, 0);
    v[static_cast<size_t>(G.P.q) * m + s] = 1;
    return v;
}

} // namespace gl2w::oracle
