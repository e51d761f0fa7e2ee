#pragma once

#include <map>
#include <sstream>

#include "../diamond.hpp"
#include "../filtration.hpp"
#include "../principal_series.hpp"
#include "structure.hpp"

namespace gl2w::oracle {

struct CheckItem {
    std::string anchor;
    std::string instance;
    std::string expected;
    std::string got;
    bool ok = false;
};

struct Report {
    std::vector<CheckItem> items;
    bool ok() const {
        return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.ok; });
    }
    int failures() const {
        return static_cast<int>(std::count_if(items.begin(), items.end(), [](const CheckItem& c) { return !c.ok; }));
    }
    void add(std::string anchor, std::string inst, std::string exp, std::string got) {
        bool ok = exp == got;
        items.push_back({std::move(anchor), std::move(inst), std::move(exp), std::move(got), ok});
    }
    void add_bool(std::string anchor, std::string inst, bool ok) {
        items.push_back({std::move(anchor), std::move(inst), "true", ok ? "true" : "false", ok});
    }
    void append(const Report& r) { items.insert(items.end(), r.items.begin(), r.items.end()); }
};

inline std::string to_string(const std::vector<Weight>& ws) {
    std::string s = "{";
    for (size_t i = 0; i < ws.size(); ++i) s += (i ? ", " : "") + to_string(ws[i]);
    return s + "}";
}
inline std::string to_string(const std::vector<ICharacter>& cs) {
    std::string s = "{";
    for (size_t i = 0; i < cs.size(); ++i) s += (i ? ", " : "") + to_string(cs[i]);
    return s + "}";
}

// H-character of v, if v is a joint eigenvector of the torus generators
inline std::optional<ICharacter> h_character(const GroupContext& G, const std::vector<Mat>& Hm, const Vec& v) {
    if (is_zero(v)) return std::nullopt;
    const Fq& F = G.F;
    int piv = 0;
    while (!v[piv]) ++piv;
    long e[2];
    for (int t = 0; t < 2; ++t) {
        Vec w = apply(F, Hm[t], v);
        int c = F.div(w[piv], v[piv]);
        if (w != vscale(F, v, c) || c == 0) return std::nullopt;
        e[t] = F.log(c);
    }
    return make_char(G.P, e[0], e[1]);
}

inline std::string chi_inst(const Params& P, const ICharacter& chi, int j) {
    std::ostringstream o;
    o << "p=" << P.p << " f=" << P.f << " chi=" << to_string(chi) << " j=" << j;
    return o.str();
}

// index k + m p^j, folded back into [1, q-1] once it passes q-1
inline long wrap_index(const Params& P, long k) { return k >= P.q ? k - (P.q - 1) : k; }

inline Report verify_witt(const Context& G, const ICharacter& chi, int j) {
    const Params& P = G->P;
    const Fq& F = G->F;
    WSpace W = make_W(G, chi, j);
    j = W.j;
    const long pj = P.pw(j);
    Mat A = W.W(G->E12(G->R.from_int(P.p))), B = W.W(G->E21(G->R.from_int(P.p))),
        C = W.W(G->diag(G->R.from_int(1 + P.p), G->R.one())), Id = W.W(G->id());
    auto Hm = mats(W.W, G->H);
    Report r;
    const std::string base = chi_inst(P, chi, j);
    for (long k = 0; k <= P.q - 1; ++k) {
        const std::string inst = base + " k=" + std::to_string(k);
        Vec Fk = F_vector(W, k), fk = f_vector(W, k);
        auto cF = h_character(*G, Hm, Fk), cf = h_character(*G, Hm, fk);
        ICharacter eF = char_mul(P, chi, char_pow(P, alpha(P), -(k + pj))), ef = char_mul(P, chi, char_pow(P, alpha(P), -k));
        r.add("Witt (i) F_k", inst, to_string(eF), cF ? to_string(*cF) : "not an eigenvector");
        r.add("Witt (i) f_k", inst, to_string(ef), cf ? to_string(*cf) : "not an eigenvector");
        r.add_bool("Witt (ii) (1 p;0 1)F_k = F_k + f_k", inst, apply(F, A, Fk) == vadd(F, Fk, fk));
        r.add_bool("Witt (iii) (1 0;p 1)F_k = F_k - f_{k+2p^j}", inst,
                   apply(F, B, Fk) == vsub(F, Fk, f_vector(W, wrap_index(P, k + 2 * pj))));
        r.add_bool("Witt (iv) (1+p 0;0 1)F_k = F_k + f_{k+p^j}", inst,
                   apply(F, C, Fk) == vadd(F, Fk, f_vector(W, wrap_index(P, k + pj))));
        r.add_bool("identity fixes F_k", inst, apply(F, Id, Fk) == Fk);
    }
    return r;
}

// R = sum a_k F_k + sum b_k f_k
inline Report verify_calcul_H(const Context& G, const ICharacter& chi, int j, const std::map<long, int>& a,
                              const std::map<long, int>& b) {
    const Fq& F = G->F;
    WSpace W = make_W(G, chi, j);
    Vec R(W.W.dim, 0);
    for (auto [k, c] : a) R = vadd(F, R, vscale(F, F_vector(W, k), c));
    for (auto [k, c] : b) R = vadd(F, R, vscale(F, f_vector(W, k), c));
    Echelon S = spin(F, mats(W.W, G->I), {R}, W.W.dim);
    Report r;
    const std::string base = chi_inst(G->P, chi, W.j);
    for (auto [k, c] : a)
        if (c) r.add_bool("I-span of R: F_k in <I.R>", base + " k=" + std::to_string(k), S.contains(F_vector(W, k)));
    for (auto [k, c] : b)
        if (c) r.add_bool("I-span of R: f_k in <I.R>", base + " k=" + std::to_string(k), S.contains(f_vector(W, k)));
    return r;
}

inline std::vector<int> digits(const Params& P, long k) {
    std::vector<int> d(P.f);
    for (int i = 0; i < P.f; ++i, k /= P.p) d[i] = static_cast<int>(k % P.p);
    return d;
}

inline Report verify_uplus(const Context& G, const ICharacter& chi, int j, long k) {
    const Params& P = G->P;
    const Fq& F = G->F;
    WSpace W = make_W(G, chi, j);
    j = W.j;
    auto U = mats(W.W, G->uplus);
    const std::string inst = chi_inst(P, chi, j) + " k=" + std::to_string(k);
    auto kd = digits(P, k);
    Report r;
    Echelon Sf = spin(F, U, {f_vector(W, k)}, W.W.dim);
    Echelon expect(F, W.W.dim);
    for (long k2 = 0; k2 < P.q; ++k2) {
        auto d = digits(P, k2);
        bool le = true;
        for (int i = 0; i < P.f; ++i) le = le && d[i] <= kd[i];
        if (le) expect.add(f_vector(W, k2));
    }
    bool same = Sf.dim() == expect.dim();
    for (const auto& v : expect.rows()) same = same && Sf.contains(v);
    r.add_bool("U+-action (i) basis of <U+ f_k>", inst, same);
    r.add_bool("U+-action (i) <U+ f_k> is I-stable", inst,
               spin(F, mats(W.W, G->I), Sf.rows(), W.W.dim).dim() == Sf.dim());
    Echelon SF = spin(F, U, {F_vector(W, k)}, W.W.dim);
    bool all_in = true;
    const int jm = P.idx(j - 1);
    for (long k2 = 0; k2 < P.q; ++k2) {
        auto d = digits(P, k2);
        bool ok = true;
        for (int i = 0; i < P.f; ++i)
            if (i != jm) ok = ok && d[i] <= kd[i];
        if (ok) all_in = all_in && SF.contains(f_vector(W, k2));
    }
    r.add_bool("U+-action (ii) f_k' in <U+ F_k>", inst, all_in);
    return r;
}

inline Report verify_ind_ej(const Context& G, const ICharacter& chi, int j) {
    const Params& P = G->P;
    const Fq& F = G->F;
    j = P.idx(j);
    const ICharacter chi2 = char_times_alpha_power(P, chi, j, -1);
    NormalForm nf = char_normal_form(P, chi2);
    if (nf.s[j] > P.p - 2) throw domain_error("Ind(E_j) needs r'_j <= p-2");
    ExplicitModule V = induce(ej_module(G, chi, j));
    const std::string inst = chi_inst(P, chi, j);
    std::vector<int> r2(P.f);
    for (int i = 0; i < P.f; ++i) r2[i] = P.p - 1 - nf.s[i];
    const Weight expect = make_weight(P, r2, digit_sum(P, nf.s) + nf.t);
    Vec R0 = sum_vector(*G, 0, 2, 1), Rq = sum_vector(*G, P.q - 1, 2, 1);
    Report r;
    bool fixed = true;
    for (const auto& g : mats(V, G->I1)) fixed = fixed && apply(F, g, R0) == R0;
    r.add_bool("Ind(Ej) (i) R_0 is I1-fixed", inst, fixed);
    Echelon S = spin(F, mats(V, G->K), {R0}, V.dim);
    ExplicitModule sub = sub_module(V, S);
    r.add("Ind(Ej) (i) <K R_0> is the weight", inst, to_string(std::vector<Weight>{expect}), to_string(jh_multiset(sub)));
    r.add("Ind(Ej) (ii) dim <K R_{q-1}>", inst, std::to_string(V.dim),
          std::to_string(spin(F, mats(V, G->K), {Rq}, V.dim).dim()));
    r.add_bool("Ind(Ej) (0 1;1 0)[1,w] = R_0 - R_{q-1}", inst,
               apply(F, V(G->Pi_w()), bracket_one(*G, 2, 1)) == vsub(F, R0, Rq));
    return r;
}


// the I1-invariants of Ind E_j(chi) with the character of the weight in (i) are more than a line,
// so R_0 need not be its highest vector
inline bool ind_ej_degenerate(const Context& G, const ICharacter& chi, int j) {
    const Params& P = G->P;
    j = P.idx(j);
    NormalForm nf = char_normal_form(P, char_times_alpha_power(P, chi, j, -1));
    std::vector<int> r2(P.f);
    for (int i = 0; i < P.f; ++i) r2[i] = P.p - 1 - nf.s[i];
    const ICharacter c = chi_of_weight(P, make_weight(P, r2, digit_sum(P, nf.s) + nf.t));
    ExplicitModule V = induce(ej_module(G, chi, j));
    Prepared pv(V);
    for (const auto& e : h_eigenspaces(*G, pv.H(), invariants(G->F, pv.I1(), V.dim), V.dim))
        if (e.chi == c) return e.basis.size() > 1;
    return false;
}

// exponent sum_{i in J(theta)} p^i (p-1-theta_i(r'_i))
inline long W_exponent(const Params& P, const ICharacter& chi2, const PSFactor& omega) {
    auto v = eval_tuple(P.p, omega.lambda, char_normal_form(P, chi2).s);
    long k = 0;
    for (int i = 0; i < P.f; ++i)
        if (has(omega.J, i)) k += P.pw(i) * (P.p - 1 - v[i]);
    return k;
}

struct WOmega {
    WSpace W;
    Vec F;
    Echelon span;
};

inline WOmega build_W_omega(const Context& G, const ICharacter& chi, int j, const PSFactor& omega) {
    const Params& P = G->P;
    const Fq& F = G->F;
    WSpace W = make_W(G, chi, j);
    const ICharacter chi2 = char_times_alpha_power(P, chi, W.j, -1);
    Vec v = F_vector(W, W_exponent(P, chi2, omega));
    if (epsilon(P, chi, W.j, omega.weight)) {
        long t = char_normal_form(P, chi2).t;
        v = vadd(F, v, vscale(F, bracket_one(*G, 2, 1), t % 2 ? F.neg(1) : 1));
    }
    Echelon S = spin(F, mats(W.W, G->K), {v}, W.W.dim);
    return {W, v, S};
}

inline Report verify_W_omega(const Context& G, const ICharacter& chi, int j, const PSFactor& omega) {
    const Params& P = G->P;
    const Fq& F = G->F;
    WOmega wo = build_W_omega(G, chi, j, omega);
    j = wo.W.j;
    const ICharacter chi2 = char_times_alpha_power(P, chi, j, -1);
    const std::string inst = chi_inst(P, chi, j) + " omega=" + to_string(omega.weight);
    Report r;
    auto cF = h_character(*G, mats(wo.W.W, G->H), wo.F);
    r.add("W_omega: character of F", inst, to_string(chi_of_weight(P, omega.weight)), cF ? to_string(*cF) : "none");
    ExplicitModule sub = sub_module(wo.W.W, wo.span);
    r.add("W_omega (i) cosocle", inst, to_string(std::vector<Weight>{omega.weight}), to_string(cosocle(sub)));
    // image in Ind Pi(chi alpha^{-p^j}) and intersection with Ind Pi(chi)
    const int n = G->num_cosets();
    Echelon top(F, n), bottom_amb(F, wo.W.W.dim);
    for (const auto& v : wo.span.rows()) {
        Vec t(n);
        for (int l = 0; l < n; ++l) t[l] = v[2 * l + 1];
        top.add(t);
    }
    Echelon lowerW(F, wo.W.W.dim);
    for (int l = 0; l < n; ++l) lowerW.add(unit(wo.W.W.dim, 2 * l));
    Echelon bottom(F, n);
    for (const auto& v : intersect(F, wo.span, lowerW)) {
        Vec b(n);
        for (int l = 0; l < n; ++l) b[l] = v[2 * l];
        bottom.add(b);
    }
    ExplicitModule ind_top = induce(pi_twist(char_module(G, chi2)));
    ExplicitModule ind_bot = induce(pi_twist(char_module(G, chi)));
    auto got_top = top.dim() ? jh_multiset(sub_module(ind_top, top)) : std::vector<Weight>{};
    r.add("W_omega (ii) image mod Ind Pi(chi) is U(omega)", inst,
          to_string(weights_of(U_contents(P, omega, chi2))), to_string(got_top));
    PSContents pc = jh_of_induced(P, chi);
    std::vector<Weight> expect_bot;
    for (const auto& tau : pc.factors)
        if (w_contains_U(P, omega.lambda, tau.lambda, chi, j)) expect_bot.push_back(tau.weight);
    std::sort(expect_bot.begin(), expect_bot.end());
    auto got_bot = bottom.dim() ? jh_multiset(sub_module(ind_bot, bottom)) : std::vector<Weight>{};
    r.add("W_omega: U(tau) contents", inst, to_string(expect_bot), to_string(got_bot));
    return r;
}

// generator of U(tau) inside Ind Pi(chi) (inner dimension m, component s)
inline Vec u_generator(const GroupContext& G, const ICharacter& chi, const PSFactor& tau, int m = 1, int s = 0) {
    const Params& P = G.P;
    Vec v = sum_vector(G, W_exponent(P, chi, tau), m, s);
    if (chi.a == chi.b && weight_dim(tau.weight) == 1) {
        long t = char_normal_form(P, chi).t;
        Vec e(v.size(), 0);
        e[static_cast<size_t>(P.q) * m + s] = t % 2 ? G.F.neg(1) : 1;
        v = vadd(G.F, v, e);
    }
    return v;
}

inline Report verify_U_tau(const Context& G, const ICharacter& chi) {
    const Params& P = G->P;
    ExplicitModule V = induce(pi_twist(char_module(G, chi)));
    auto K = mats(V, G->K);
    Report r;
    for (const auto& tau : jh_of_induced(P, chi).factors) {
        const std::string inst = chi_inst(P, chi, 0) + " tau=" + to_string(tau.weight);
        ExplicitModule U = sub_module(V, spin(G->F, K, {u_generator(*G, chi, tau)}, V.dim));
        r.add("U(tau) cosocle", inst, to_string(std::vector<Weight>{tau.weight}), to_string(cosocle(U)));
        r.add("U(tau) contents", inst, to_string(weights_of(U_contents(P, tau, chi))), to_string(jh_multiset(U)));
    }
    return r;
}

// f_{p^j s} spun under I inside Ind Pi(chi)
inline ExplicitModule ej_chain_module(const Context& G, const ICharacter& chi, int j, int s) {
    const Params& P = G->P;
    if (s < 0 || s > P.p - 1) throw domain_error("E_j(chi,s) needs 0 <= s <= p-1");
    ExplicitModule V = induce(pi_twist(char_module(G, chi)));
    Vec f = sum_vector(*G, P.pw(j) * s, 1, 0);
    Echelon S = spin(G->F, mats(V, G->I), {f}, V.dim);
    return sub_module(V, S, Domain::I);
}

// kernel of E_{j-1}(chi, s+1) + E_j(chi') -> chi alpha^{-p^{j-1}(s+1)}
inline ExplicitModule e_two_char_module(const Context& G, const ICharacter& chi, const ICharacter& chi2, int j, int s1) {
    const Params& P = G->P;
    const Fq& F = G->F;
    const int jm = P.idx(j - 1);
    j = P.idx(j);
    if (s1 < 1 || s1 > P.p - 1) throw domain_error("E_{j-1}(chi,chi',s+1) needs 0 <= s <= p-2");
    ICharacter top = char_times_alpha_power(P, chi, jm, -s1);
    if (top != char_times_alpha_power(P, chi2, j, -1)) throw domain_error("characters are not compatible");
    ExplicitModule A = ej_chain_module(G, chi, jm, s1), B = ej_module(G, chi2, j);
    auto filt = pgroup_socle_filtration(A, G->I1);
    const Echelon& rad = filt[filt.size() - 2];
    auto cols = complement_columns(rad);
    if (cols.size() != 1) throw domain_error("chain module is not uniserial");
    // h1(x) = top coordinate of x, h2(y) = w-coordinate of y
    Vec h(A.dim + 2, 0);
    for (int c = 0; c < A.dim; ++c) h[c] = rad.reduce(unit(A.dim, c))[cols[0]];
    h[A.dim + 1] = F.neg(1);
    Mat hm(1, A.dim + 2);
    hm.a = h;
    ExplicitModule sum = direct_sum(A, B);
    return sub_module(sum, span_of(F, sum.dim, nullspace(F, hm)), Domain::I);
}

struct S1Check {
    int r_plus_v = 0;
    int r_minus_M = 0;
    int r_plus_ker = 0;
    bool holds = false;
};

inline S1Check verify_S1_condition(const ExplicitModule& M, const Vec& v) {
    const auto& G = *M.G;
    const Fq& F = G.F;
    auto Hm = mats(M, G.H);
    auto chi = h_character(G, Hm, v);
    if (!chi) throw domain_error("v is not an H-eigenvector");
    Echelon rad(F, M.dim);
    for (const auto& g : mats(M, G.I1))
        for (int c = 0; c < M.dim; ++c) {
            Vec x = apply(F, g, unit(M.dim, c));
            x[c] = F.sub(x[c], 1);
            rad.add(x);
        }
    if (rad.contains(v)) throw domain_error("v lies in the radical");
    std::vector<Vec> all;
    for (int c = 0; c < M.dim; ++c) all.push_back(unit(M.dim, c));
    Echelon ker = rad;
    std::vector<Vec> same;
    for (auto& es : h_eigenspaces(G, Hm, all, M.dim)) {
        if (es.chi == *chi) same = es.basis;
        else ker.add_all(es.basis);
    }
    for (const auto& e : same) {
        Echelon trial = ker;
        trial.add(e);
        if (!trial.contains(v)) ker = std::move(trial);
    }
    S1Check out;
    Echelon Iv = spin(F, mats(M, G.I), {v}, M.dim);
    out.r_plus_v = restricted_loewy(sub_module(M, Iv), Unipotent::plus);
    out.r_minus_M = restricted_loewy(M, Unipotent::minus);
    out.r_plus_ker = ker.dim() ? restricted_loewy(sub_module(M, ker), Unipotent::plus) : 0;
    out.holds = out.r_plus_v > std::max(out.r_minus_M, out.r_plus_ker);
    return out;
}

// H-eigenvector of M with the given character (first basis vector of the eigenspace)
inline std::optional<Vec> eigenvector(const ExplicitModule& M, const ICharacter& chi) {
    std::vector<Vec> all;
    for (int c = 0; c < M.dim; ++c) all.push_back(unit(M.dim, c));
    for (auto& es : h_eigenspaces(*M.G, mats(M, M.G->H), all, M.dim))
        if (es.chi == chi) return es.basis.front();
    return std::nullopt;
}

struct F2SubRep {
    Weight sigma3, sigma4, omega;
    int dim_W_omega = 0;
    std::vector<std::vector<Weight>> layers;
};

// image of W_omega in pi for f = 2, rho irreducible: kill the kernel of Ind Pi(chi_3) -> I(sigma_4, sigma_3^[s]),
// then quotient by non-Diamond socles. W_omega is built inside Ind Pi(E_1(chi_3)).
inline F2SubRep example_f2_subrep(const Context& G, int r0, int r1) {
    const Params& P = G->P;
    const int p = P.p;
    if (P.f != 2 || r0 < 1 || r0 > p - 2 || r1 < 0 || r1 > p - 4) throw domain_error("needs f=2, 1<=r0<=p-2, 0<=r1<=p-4");
    F2SubRep out;
    out.sigma3 = make_weight(P, {p - 1 - r0, p - 3 - r1}, r0 + p * (r1 + 1));
    out.sigma4 = make_weight(P, {p - 2 - r0, r1 + 1}, r0 + p * (p - 1));
    out.omega = make_weight(P, {p - 2 - r0, r1 + 3}, r0 + p * (p - 2));
    const ICharacter c3 = chi_of_weight(P, out.sigma3);
    PSContents top = jh_of_induced(P, char_times_alpha_power(P, c3, 1, -1));
    const PSFactor* om = find_factor(top, out.omega);
    if (!om) throw domain_error("omega is not a factor");
    WOmega wo = build_W_omega(G, c3, 1, *om);
    out.dim_W_omega = wo.span.dim();
    ExplicitModule sub = sub_module(wo.W.W, wo.span);
    const Weight s3s = sigma_s(P, out.sigma3);
    auto K = mats(wo.W.W, G->K);
    Echelon kill(G->F, sub.dim);
    for (const auto& tau : jh_of_induced(P, c3).factors) {
        if (tau.weight == out.sigma4 || tau.weight == s3s) continue;
        Echelon U = spin(G->F, K, {u_generator(*G, c3, tau, 2, 0)}, wo.W.W.dim);
        for (const auto& v : U.rows()) kill.add(wo.span.coords(v));
    }
    ExplicitModule img = kill.dim() ? quotient_module(sub, kill) : sub;
    GaloisParams rho{false, {r0, r1}, 0};
    std::vector<Weight> D;
    for (const auto& d : diamond_set(P, rho)) D.push_back(d.weight);
    out.layers = socle_series(quotient_by_non_diamond_socle(img, D).module);
    return out;
}

} // namespace gl2w::oracle
