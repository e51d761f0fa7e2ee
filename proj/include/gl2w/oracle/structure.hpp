#pragma once

#include <algorithm>
#include <map>

#include "module.hpp"

namespace gl2w::oracle {

// generator matrices of a module; gens() lists I1 first, then H
struct Prepared {
    ExplicitModule M;
    std::vector<Mat> gm;

    explicit Prepared(ExplicitModule m) : M(std::move(m)), gm(mats(M, M.gens())) {}
    const Fq& F() const { return M.G->F; }
    int n() const { return M.dim; }
    std::vector<Mat> I1() const { return {gm.begin(), gm.begin() + static_cast<long>(M.G->I1.size())}; }
    std::vector<Mat> H() const {
        auto b = gm.begin() + static_cast<long>(M.G->I1.size());
        return {b, b + 2};
    }
};

inline Mat inverse(const Fq& F, const Mat& A) {
    const int n = A.rows;
    Mat M(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) M(i, j) = A(i, j);
        M(i, n + i) = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (M(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) throw domain_error("singular matrix");
        for (int j = 0; j < 2 * n; ++j) std::swap(M(c, j), M(piv, j));
        int iv = F.inv(M(c, c));
        for (int j = 0; j < 2 * n; ++j) M(c, j) = F.mul(M(c, j), iv);
        for (int r = 0; r < n; ++r) {
            if (r == c || !M(r, c)) continue;
            int t = M(r, c);
            for (int j = 0; j < 2 * n; ++j) M(r, j) = F.sub(M(r, j), F.mul(t, M(c, j)));
        }
    }
    Mat out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = M(i, n + j);
    return out;
}

// common fixed vectors of the given matrices
inline std::vector<Vec> invariants(const Fq& F, const std::vector<Mat>& gs, int n) {
    Echelon E(F, n);
    for (const auto& g : gs)
        for (int i = 0; i < n; ++i) {
            Vec row(g.a.begin() + static_cast<long>(i) * n, g.a.begin() + static_cast<long>(i + 1) * n);
            row[i] = F.sub(row[i], 1);
            E.add(row);
            if (E.dim() == n) return {};
        }
    std::vector<char> piv(n, 0);
    for (int c : E.pivots()) piv[c] = 1;
    std::vector<Vec> out;
    for (int fr = 0; fr < n; ++fr) {
        if (piv[fr]) continue;
        Vec x(n, 0);
        x[fr] = 1;
        for (int k = 0; k < E.dim(); ++k) x[E.pivots()[k]] = F.neg(E.rows()[k][fr]);
        out.push_back(std::move(x));
    }
    return out;
}

struct Eigenspace {
    ICharacter chi;
    std::vector<Vec> basis;
};

// joint eigenspaces of the torus on an H-stable subspace
inline std::vector<Eigenspace> h_eigenspaces(const GroupContext& G, const std::vector<Mat>& Hm, const std::vector<Vec>& space,
                                             int n) {
    const Fq& F = G.F;
    Echelon E = span_of(F, n, space);
    const int k = E.dim();
    if (k == 0) return {};
    std::vector<Mat> D;
    for (const auto& h : Hm) {
        Mat d(k, k);
        for (int c = 0; c < k; ++c) {
            Vec x = E.coords(apply(F, h, E.rows()[c]));
            for (int r = 0; r < k; ++r) d(r, c) = x[r];
        }
        D.push_back(d);
    }
    auto shifted = [&](const Mat& d, int ev) {
        Mat m = d;
        for (int i = 0; i < k; ++i) m(i, i) = F.sub(m(i, i), ev);
        return m;
    };
    std::vector<Eigenspace> out;
    const long m = G.P.q - 1;
    int found = 0;
    for (long a = 0; a < m && found < k; ++a) {
        Mat A = shifted(D[0], F.gpow(a));
        if (nullspace(F, A).empty()) continue;
        for (long b = 0; b < m && found < k; ++b) {
            Mat B = shifted(D[1], F.gpow(b));
            Mat S(2 * k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) S(i, j) = A(i, j), S(k + i, j) = B(i, j);
            auto ns = nullspace(F, S);
            if (ns.empty()) continue;
            Eigenspace es{make_char(G.P, a, b), {}};
            for (const auto& c : ns) {
                Vec v(n, 0);
                for (int r = 0; r < k; ++r)
                    if (c[r]) v = vadd(F, v, vscale(F, E.rows()[r], c[r]));
                es.basis.push_back(std::move(v));
            }
            found += static_cast<int>(es.basis.size());
            out.push_back(std::move(es));
        }
    }
    return out;
}

inline Mat column_matrix(const std::vector<Vec>& cols, int n) {
    Mat m(n, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < n; ++i) m(i, static_cast<int>(j)) = cols[j][i];
    return m;
}

// K-homs from the weight s into V; the I1-fixed generator must land in `candidates`
inline std::vector<Mat> hom_from_weight(const Weight& s, const Prepared& V, const std::vector<Vec>& candidates) {
    const auto& G = V.M.G;
    const Fq& F = G->F;
    if (candidates.empty()) return {};
    Prepared S(weight_module(G, s));
    const int d = S.n(), n = V.n(), m = static_cast<int>(candidates.size());
    const int ng = static_cast<int>(S.gm.size());
    // words spanning s from its highest vector
    std::vector<Vec> b{unit(d, 0)};
    std::vector<std::pair<int, int>> word{{-1, -1}};
    Echelon E(F, d);
    E.add(b[0]);
    for (size_t i = 0; i < b.size() && E.dim() < d; ++i)
        for (int g = 0; g < ng; ++g) {
            Vec w = apply(F, S.gm[g], b[i]);
            if (E.add(w)) {
                b.push_back(w);
                word.push_back({static_cast<int>(i), g});
            }
        }
    Mat Binv = inverse(F, column_matrix(b, d));
    std::vector<std::vector<Vec>> y(d, std::vector<Vec>(m));
    for (int l = 0; l < m; ++l) y[0][l] = candidates[l];
    for (int i = 1; i < d; ++i)
        for (int l = 0; l < m; ++l) y[i][l] = apply(F, V.gm[word[i].second], y[word[i].first][l]);
    Echelon C(F, m);
    for (int i = 0; i < d && C.dim() < m; ++i)
        for (int g = 0; g < ng && C.dim() < m; ++g) {
            Vec c = apply(F, Binv, apply(F, S.gm[g], b[i]));
            std::vector<Vec> cols(m);
            for (int l = 0; l < m; ++l) {
                Vec r = apply(F, V.gm[g], y[i][l]);
                for (int k = 0; k < d; ++k)
                    if (c[k]) r = vsub(F, r, vscale(F, y[k][l], c[k]));
                cols[l] = std::move(r);
            }
            for (int row = 0; row < n; ++row) {
                Vec eq(m);
                for (int l = 0; l < m; ++l) eq[l] = cols[l][row];
                C.add(eq);
            }
        }
    std::vector<Mat> out;
    for (const auto& alpha : nullspace(F, stack(C.rows(), m))) {
        std::vector<Vec> imgs(d, Vec(n, 0));
        for (int i = 0; i < d; ++i)
            for (int l = 0; l < m; ++l)
                if (alpha[l]) imgs[i] = vadd(F, imgs[i], vscale(F, y[i][l], alpha[l]));
        out.push_back(mat_mul(F, column_matrix(imgs, n), Binv));
    }
    return out;
}

inline std::vector<Mat> hom_from_weight(const Weight& s, const Prepared& V) {
    const auto& G = *V.M.G;
    auto inv = invariants(G.F, V.I1(), V.n());
    ICharacter chi = chi_of_weight(G.P, s);
    for (auto& es : h_eigenspaces(G, V.H(), inv, V.n()))
        if (es.chi == chi) return hom_from_weight(s, V, es.basis);
    return {};
}

// intertwiners A -> B as dim B x dim A matrices, by solving on the generator list
inline std::vector<Mat> hom_space(const ExplicitModule& A, const ExplicitModule& B) {
    if (A.domain != B.domain) throw domain_error("hom_space needs modules over the same group");
    const Fq& F = A.G->F;
    const int na = A.dim, nb = B.dim, N = na * nb;
    auto ga = mats(A, A.gens()), gb = mats(B, A.gens());
    Echelon E(F, N);
    for (size_t g = 0; g < ga.size() && E.dim() < N; ++g)
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < na; ++j) {
                // (Phi A - B Phi)_{ij}, Phi_{ik} at i * na + k
                Vec eq(N, 0);
                for (int k = 0; k < na; ++k) eq[i * na + k] = F.add(eq[i * na + k], ga[g](k, j));
                for (int k = 0; k < nb; ++k) eq[k * na + j] = F.sub(eq[k * na + j], gb[g](i, k));
                E.add(eq);
            }
    std::vector<Mat> out;
    for (const auto& x : nullspace(F, stack(E.rows(), N))) {
        Mat phi(nb, na);
        phi.a = x;
        out.push_back(std::move(phi));
    }
    return out;
}

inline bool is_isomorphic(const ExplicitModule& A, const ExplicitModule& B) {
    if (A.dim != B.dim) return false;
    const Fq& F = A.G->F;
    auto hs = hom_space(A, B);
    std::mt19937_64 rng(7);
    for (int t = 0; t < 16 && !hs.empty(); ++t) {
        Mat phi(B.dim, A.dim);
        for (const auto& h : hs) {
            int c = static_cast<int>(rng() % F.q());
            for (size_t e = 0; e < phi.a.size(); ++e) phi.a[e] = F.add(phi.a[e], F.mul(c, h.a[e]));
        }
        if (rank(F, phi) == A.dim) return true;
    }
    return false;
}

struct SocleResult {
    std::vector<Weight> weights;
    std::vector<Vec> space; // basis of the socle inside V
};

inline SocleResult socle(const Prepared& V) {
    if (V.M.domain != Domain::K) throw domain_error("socle needs a K-module");
    const auto& G = *V.M.G;
    SocleResult out;
    auto inv = invariants(G.F, V.I1(), V.n());
    Echelon span(G.F, V.n());
    for (auto& es : h_eigenspaces(G, V.H(), inv, V.n()))
        for (const Weight& s : weights_of_char(G.P, es.chi))
            for (const Mat& phi : hom_from_weight(s, V, es.basis)) {
                out.weights.push_back(s);
                for (int c = 0; c < phi.cols; ++c) {
                    Vec v(phi.rows);
                    for (int r = 0; r < phi.rows; ++r) v[r] = phi(r, c);
                    span.add(v);
                }
            }
    std::sort(out.weights.begin(), out.weights.end());
    out.space = span.rows();
    return out;
}
inline SocleResult socle(const ExplicitModule& V) { return socle(Prepared(V)); }

inline Weight dual_weight(const Params& P, const Weight& s) { return make_weight(P, s.r, -s.twist - digit_sum(P, s.r)); }

inline std::vector<Weight> cosocle(const ExplicitModule& V) {
    auto w = socle(dual(V)).weights;
    for (auto& s : w) s = dual_weight(V.G->P, s);
    std::sort(w.begin(), w.end());
    return w;
}

// socle layers from the bottom
inline std::vector<std::vector<Weight>> socle_series(const ExplicitModule& V) {
    const Fq& F = V.G->F;
    Echelon S(F, V.dim);
    std::vector<std::vector<Weight>> layers;
    while (S.dim() < V.dim) {
        Prepared Q(S.dim() == 0 ? V : quotient_module(V, S));
        SocleResult soc = socle(Q);
        if (soc.space.empty()) throw domain_error("empty socle in a nonzero module");
        layers.push_back(soc.weights);
        Echelon next = S;
        for (const auto& v : soc.space) next.add(lift_from_quotient(S, v));
        S = std::move(next);
    }
    return layers;
}

inline std::vector<Weight> jh_multiset(const ExplicitModule& V) {
    std::vector<Weight> out;
    for (auto& l : socle_series(V)) out.insert(out.end(), l.begin(), l.end());
    std::sort(out.begin(), out.end());
    return out;
}

// I-module socle layers: characters from the bottom
inline std::vector<std::vector<ICharacter>> socle_series_I(const ExplicitModule& V) {
    const auto& G = *V.G;
    Echelon S(G.F, V.dim);
    std::vector<std::vector<ICharacter>> layers;
    while (S.dim() < V.dim) {
        ExplicitModule Q = S.dim() == 0 ? V : quotient_module(V, S);
        auto I1m = mats(Q, G.I1), Hm = mats(Q, G.H);
        auto inv = invariants(G.F, I1m, Q.dim);
        if (inv.empty()) throw domain_error("empty socle in a nonzero module");
        std::vector<ICharacter> layer;
        for (auto& es : h_eigenspaces(G, Hm, inv, Q.dim))
            for (size_t t = 0; t < es.basis.size(); ++t) layer.push_back(es.chi);
        std::sort(layer.begin(), layer.end());
        layers.push_back(layer);
        Echelon next = S;
        for (const auto& v : inv) next.add(lift_from_quotient(S, v));
        S = std::move(next);
    }
    return layers;
}

// vectors of V lying in the k-th socle for the group generated by gs, k = 1, 2, ...
inline std::vector<Echelon> pgroup_socle_filtration(const ExplicitModule& V, const std::vector<M2>& gs) {
    const Fq& F = V.G->F;
    Echelon S(F, V.dim);
    std::vector<Echelon> out;
    while (S.dim() < V.dim) {
        ExplicitModule Q = S.dim() == 0 ? V : quotient_module(V, S);
        auto inv = invariants(F, mats(Q, gs), Q.dim);
        if (inv.empty()) throw domain_error("p-group without fixed vectors");
        Echelon next = S;
        for (const auto& v : inv) next.add(lift_from_quotient(S, v));
        S = std::move(next);
        out.push_back(S);
    }
    return out;
}

enum class Unipotent { plus, minus };

inline int restricted_loewy(const ExplicitModule& V, Unipotent u) {
    const auto& G = *V.G;
    return static_cast<int>(pgroup_socle_filtration(V, u == Unipotent::plus ? G.uplus : G.uminus).size());
}

struct NonDiamondQuotient {
    ExplicitModule module;
    std::vector<Vec> kernel;
    std::vector<Weight> removed;
};

// quotient by irreducible submodules outside D until the socle lies in D
inline NonDiamondQuotient quotient_by_non_diamond_socle(const ExplicitModule& V, const std::vector<Weight>& D) {
    const Fq& F = V.G->F;
    Echelon S(F, V.dim);
    std::vector<Weight> removed;
    for (;;) {
        Prepared Q(S.dim() == 0 ? V : quotient_module(V, S));
        auto inv = invariants(F, Q.I1(), Q.n());
        std::vector<Vec> kill;
        for (auto& es : h_eigenspaces(*V.G, Q.H(), inv, Q.n()))
            for (const Weight& s : weights_of_char(V.G->P, es.chi)) {
                if (std::find(D.begin(), D.end(), s) != D.end()) continue;
                for (const Mat& phi : hom_from_weight(s, Q, es.basis)) {
                    removed.push_back(s);
                    for (int c = 0; c < phi.cols; ++c) {
                        Vec v(phi.rows);
                        for (int r = 0; r < phi.rows; ++r) v[r] = phi(r, c);
                        kill.push_back(v);
                    }
                }
            }
        if (kill.empty()) break;
        Echelon next = S;
        for (const auto& v : kill) next.add(lift_from_quotient(S, v));
        S = std::move(next);
    }
    std::sort(removed.begin(), removed.end());
    return {S.dim() == 0 ? V : quotient_module(V, S), S.rows(), removed};
}

} // namespace gl2w::oracle
