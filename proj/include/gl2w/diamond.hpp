#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "couples.hpp"
#include "principal_series.hpp"
#include "tuples.hpp"
#include "weight.hpp"

namespace gl2w {

struct GaloisParams {
    bool reducible = true;
    std::vector<int> r;
    long twist = 0;
};

struct DiamondWeight {
    Weight weight;
    Tuple lambda;
    Subset S = 0;
    int ell = 0;
    bool operator==(const DiamondWeight&) const = default;
};

struct D0Factor {
    Weight weight;
    Tuple mu;
    Subset base_S = 0;
    bool lifts = false;
    bool operator==(const D0Factor&) const = default;
};

inline Family family_of(const GaloisParams& rho) { return rho.reducible ? Family::RD : Family::ID; }

inline bool is_generic(const Params& P, const GaloisParams& rho) {
    if (static_cast<int>(rho.r.size()) != P.f) return false;
    const int p = P.p;
    if (rho.reducible) {
        for (int x : rho.r)
            if (x < 0 || x > p - 3) return false;
        bool all0 = std::all_of(rho.r.begin(), rho.r.end(), [](int x) { return x == 0; });
        bool allp3 = std::all_of(rho.r.begin(), rho.r.end(), [&](int x) { return x == p - 3; });
        return !all0 && !allp3;
    }
    if (rho.r[0] < 1 || rho.r[0] > p - 2) return false;
    for (int i = 1; i < P.f; ++i)
        if (rho.r[i] < 0 || rho.r[i] > p - 3) return false;
    return true;
}

// all generic parameters for (p, f), reducible and irreducible, twist 0
inline std::vector<GaloisParams> all_generic(const Params& P) {
    std::vector<GaloisParams> out;
    for (bool red : {true, false}) {
        std::vector<int> r(P.f, 0);
        for (;;) {
            GaloisParams g{red, r, 0};
            if (is_generic(P, g)) out.push_back(g);
            int i = 0;
            while (i < P.f && ++r[i] > P.p - 1) r[i++] = 0;
            if (i == P.f) break;
        }
    }
    return out;
}

inline std::vector<DiamondWeight> diamond_set(const Params& P, const GaloisParams& rho) {
    if (!is_generic(P, rho)) throw domain_error("Galois parameter is not generic");
    const Family fam = family_of(rho);
    std::vector<DiamondWeight> out;
    for (const Tuple& lam : enumerate(fam, P.f)) {
        auto v = eval_tuple(P.p, lam, rho.r);
        if (!in_range(P, v)) continue;
        Subset S = S_of_lambda(fam, lam);
        long e = e_of_lambda(P, lam, rho.r);
        out.push_back({make_weight(P, {v.begin(), v.end()}, e + rho.twist), lam, S, popcount(S)});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.S < b.S; });
    return out;
}

inline const DiamondWeight* find_by_S(const std::vector<DiamondWeight>& D, Subset S) {
    for (const auto& d : D)
        if (d.S == S) return &d;
    return nullptr;
}

inline const DiamondWeight* find_by_weight(const std::vector<DiamondWeight>& D, const Weight& w) {
    for (const auto& d : D)
        if (d.weight == w) return &d;
    return nullptr;
}

inline bool lifts(const Tuple& mu) {
    return std::all_of(mu.begin(), mu.end(),
                       [](Sym a) { return in(a, {Sym::P2MX, Sym::P1MX, Sym::X, Sym::XP1}); });
}
inline bool lifts(const D0Factor& t) { return lifts(t.mu); }

inline std::vector<Lin> composed(const Tuple& mu, const Tuple& lam) {
    std::vector<Lin> c(mu.size());
    for (size_t i = 0; i < mu.size(); ++i) c[i] = compose(lin_of(mu[i]), lin_of(lam[i]));
    return c;
}

inline std::vector<D0Factor> d0_factors(const Params& P, const GaloisParams& rho, const DiamondWeight& s) {
    auto D = diamond_set(P, rho);
    if (!find_by_weight(D, s.weight)) throw domain_error("weight is not a Diamond weight");
    Tuple mul = mu_of_lambda(family_of(rho), s.lambda);
    std::vector<D0Factor> out;
    for (const Tuple& mu : enumerate_Imu(P.f)) {
        if (!compatible(mu, mul)) continue;
        auto c = composed(mu, s.lambda);
        auto v = eval_lins(P.p, c, rho.r);
        if (!in_range(P, v)) continue;
        long e = e_of_lins(P, c, rho.r);
        out.push_back({make_weight(P, {v.begin(), v.end()}, e + rho.twist), mu, s.S, lifts(mu)});
    }
    return out;
}

inline const D0Factor* find_factor(const std::vector<D0Factor>& fs, const Weight& w) {
    for (const auto& x : fs)
        if (x.weight == w) return &x;
    return nullptr;
}

inline const D0Factor* find_factor_mu(const std::vector<D0Factor>& fs, const Tuple& mu) {
    for (const auto& x : fs)
        if (x.mu == mu) return &x;
    return nullptr;
}

struct SPlusMinus {
    Subset minus = 0;
    Subset plus = 0;
};

inline bool lin_in(const Lin& l, std::initializer_list<Lin> set) {
    for (const Lin& m : set)
        if (l == m) return true;
    return false;
}

// literal_plus = true uses x in place of x+2 in the generic S^+ set; kept to show it disagrees with delta_by_search
inline SPlusMinus S_plus_minus(const Params& P, const GaloisParams& rho, const DiamondWeight& s,
                               const D0Factor& tau, bool literal_plus = false) {
    if (!lifts(tau)) throw domain_error("S^+- needs a lifting factor");
    auto c = composed(tau.mu, s.lambda);
    const Lin x{1, 0, 0}, xp1{1, 0, 1}, xm1{1, 0, -1}, xp2{1, 0, 2};
    const Lin p1mx{-1, 1, -1}, p2mx{-1, 1, -2}, p3mx{-1, 1, -3}, pmx{-1, 1, 0};
    SPlusMinus out;
    for (int i = 0; i < P.f; ++i) {
        const Lin& prev = c[P.idx(i - 1)];
        bool inS = has(s.S, i);
        bool m, pl;
        if (!rho.reducible && i == P.idx(1)) {
            m = lin_in(prev, {xm1, x, pmx});
            pl = lin_in(prev, {p2mx, p1mx, xp1});
        } else {
            m = lin_in(prev, {x, xp1, p1mx});
            pl = lin_in(prev, {p3mx, p2mx, literal_plus ? x : xp2});
        }
        if (inS && m) out.minus |= bit(i);
        if (!inS && pl) out.plus |= bit(i);
    }
    return out;
}

inline Subset delta_subset(const Params& P, const GaloisParams& rho, const DiamondWeight& s, const D0Factor& tau,
                           bool literal_plus = false) {
    auto pm = S_plus_minus(P, rho, s, tau, literal_plus);
    Subset T = (s.S & ~pm.minus) | pm.plus;
    return rho.reducible ? delta_red(T, P.f) : delta_irr(T, P.f);
}

inline DiamondWeight delta_of_tau(const Params& P, const GaloisParams& rho, const DiamondWeight& s,
                                  const D0Factor& tau) {
    auto D = diamond_set(P, rho);
    const DiamondWeight* d = find_by_S(D, delta_subset(P, rho, s, tau));
    if (!d) throw std::logic_error("delta: no Diamond weight with the computed subset");
    return *d;
}

// the Diamond weight whose D0 block contains tau^[s], found by scanning every block
inline std::optional<DiamondWeight> delta_by_search(const Params& P, const GaloisParams& rho, const Weight& tau) {
    Weight ts = sigma_s(P, tau);
    std::optional<DiamondWeight> hit;
    for (const auto& d : diamond_set(P, rho)) {
        if (find_factor(d0_factors(P, rho, d), ts)) {
            if (hit) throw std::logic_error("delta: tau^[s] occurs in two D0 blocks");
            hit = d;
        }
    }
    return hit;
}

// theta: the I(y)-tuple of tau^[s] inside the block of delta(tau)
inline std::optional<Tuple> theta_of(const Params& P, const GaloisParams& rho, const DiamondWeight& delta,
                                     const Weight& tau) {
    auto fs = d0_factors(P, rho, delta);
    if (auto x = find_factor(fs, sigma_s(P, tau))) return x->mu;
    return std::nullopt;
}

struct XiJ {
    Tuple xi;
    Subset J = 0;
    Tuple theta;
    Subset J_theta = 0;    // {i : theta_i in {y, y+1}}
    Subset J_shift = 0;    // {i : i+1 not in S(theta)}
};

inline XiJ xi_and_J(const Params& P, const GaloisParams& rho, const DiamondWeight&, const D0Factor& tau) {
    if (!lifts(tau)) throw domain_error("xi_and_J needs a lifting factor");
    auto ds = delta_by_search(P, rho, tau.weight);
    if (!ds) throw std::logic_error("tau^[s] occurs in no D0 block");
    const DiamondWeight& d = *ds;
    auto ps = jh_of_induced(P, chi_of_weight(P, tau.weight));
    const PSFactor* x = find_factor(ps, d.weight);
    if (!x) throw std::logic_error("delta(tau) is not a factor of Ind chi_tau^s");
    XiJ out{x->lambda, x->J, {}, 0, 0};
    auto th = theta_of(P, rho, d, tau.weight);
    if (!th) throw std::logic_error("tau^[s] missing from the block of delta(tau)");
    out.theta = *th;
    Subset St = S_of_mu(*th);
    for (int i = 0; i < P.f; ++i) {
        if (in((*th)[i], {Sym::X, Sym::XP1})) out.J_theta |= bit(i);
        if (!has(St, P.idx(i + 1))) out.J_shift |= bit(i);
    }
    return out;
}

inline std::map<int, std::vector<DiamondWeight>> ell_decomposition(const Params& P, const GaloisParams& rho) {
    if (!rho.reducible) throw domain_error("ell decomposition is for reducible parameters");
    std::map<int, std::vector<DiamondWeight>> out;
    for (int l = 0; l <= P.f; ++l) out[l];
    for (const auto& d : diamond_set(P, rho)) out[d.ell].push_back(d);
    return out;
}

// ---- the (+1,j) couples of a block and the comparison clauses ----

struct CombinationReport {
    int j = 0;
    int couples = 0;
    bool couple_type_ok = true;
    bool mu_shapes = true;    // mu shapes of the couple
    bool theta_values = true; // theta values
    bool S_lambdas = true;    // S_{lambda_1} vs S_{lambda_2}
    bool lambdas = true;      // lambda_1 vs lambda_2
    bool S_theta = true;      // S(theta_1) vs S(theta_2)
    bool J_xi = true;         // J(xi_1) vs J(xi_2)
    bool xi_equiv = true;     // J(xi) = {theta in {y,y+1}} = {i+1 not in S(theta)}
    bool delta_ok = true;     // formula agrees with search
    std::vector<std::string> failures;
    bool ok() const {
        return couple_type_ok && mu_shapes && theta_values && S_lambdas && lambdas && S_theta && J_xi && xi_equiv &&
               delta_ok;
    }
};

// (mu_1, mu_2) shapes at (j-1, j) given mu_lambda
inline std::pair<std::pair<Sym, Sym>, std::pair<Sym, Sym>> couple_shape(Sym mul_j) {
    if (mul_j == Sym::P3MX) return {{Sym::X, Sym::X}, {Sym::P2MX, Sym::XP1}};
    return {{Sym::X, Sym::P2MX}, {Sym::P2MX, Sym::P1MX}};
}

inline std::vector<std::pair<D0Factor, D0Factor>> plus_couples(const Params& P, const GaloisParams& rho,
                                                               const DiamondWeight& s, int j) {
    std::vector<std::pair<D0Factor, D0Factor>> out;
    if (P.f < 2) return out;
    const int jm = P.idx(j - 1);
    Tuple mul = mu_of_lambda(family_of(rho), s.lambda);
    auto [sh1, sh2] = couple_shape(mul[j]);
    auto fs = d0_factors(P, rho, s);
    for (const auto& a : fs) {
        if (!a.lifts || a.mu[jm] != sh1.first || a.mu[j] != sh1.second) continue;
        Tuple m2 = a.mu;
        m2[jm] = sh2.first;
        m2[j] = sh2.second;
        const D0Factor* b = find_factor_mu(fs, m2);
        if (b && b->lifts) out.push_back({a, *b});
    }
    return out;
}

inline std::vector<long> theta_values(const Params& P, const GaloisParams& rho, const Tuple& theta,
                                      const DiamondWeight& d) {
    return eval_lins(P.p, composed(theta, d.lambda), rho.r);
}

inline CombinationReport verify_combination(const Params& P, const GaloisParams& rho, const DiamondWeight& s, int j) {
    CombinationReport rep;
    rep.j = j;
    const int f = P.f;
    const int jm = P.idx(j - 1), jmm = P.idx(j - 2);
    const Subset pair = bit(jm) | bit(j);
    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        rep.failures.push_back(what);
    };
    for (const auto& [t1, t2] : plus_couples(P, rho, s, j)) {
        ++rep.couples;
        auto ct = couple_type(P, t1.weight, t2.weight);
        if (!ct || *ct != CoupleType{+1, j}) fail(rep.couple_type_ok, "couple type of " + to_string(t1.weight));
        for (int i = 0; i < f; ++i)
            if (!has(pair, i) && t1.mu[i] != t2.mu[i]) fail(rep.mu_shapes, "mu differ off {j-1,j}");

        auto s1 = delta_by_search(P, rho, t1.weight), s2 = delta_by_search(P, rho, t2.weight);
        if (!s1 || !s2) {
            fail(rep.delta_ok, "tau^[s] found in no block");
            continue;
        }
        const DiamondWeight &d1 = *s1, &d2 = *s2;
        if (delta_subset(P, rho, s, t1) != d1.S || delta_subset(P, rho, s, t2) != d2.S)
            fail(rep.delta_ok, "delta formula vs search");

        XiJ x1 = xi_and_J(P, rho, s, t1), x2 = xi_and_J(P, rho, s, t2);
        for (const XiJ* x : {&x1, &x2})
            if (x->J != x->J_theta || x->J != x->J_shift) fail(rep.xi_equiv, "J(xi) equivalence chain");

        auto v1 = theta_values(P, rho, x1.theta, d1), v2 = theta_values(P, rho, x2.theta, d2);
        auto m1 = eval_lins(P.p, composed(t1.mu, s.lambda), rho.r);
        auto m2 = eval_lins(P.p, composed(t2.mu, s.lambda), rho.r);
        for (int i = 0; i < f; ++i) {
            if (v1[i] + m1[i] != P.p - 1 || v2[i] + m2[i] != P.p - 1) fail(rep.theta_values, "theta + mu != p-1");
            if (!has(pair, i) && v1[i] != v2[i]) fail(rep.theta_values, "theta values differ off {j-1,j}");
        }
        if (v1[j] != v2[j] + 1) fail(rep.theta_values, "theta_1,j != theta_2,j + 1");
        if (v1[jm] + v2[jm] != P.p) fail(rep.theta_values, "theta_1,j-1 + theta_2,j-1 != p");

        if ((d1.S ^ d2.S) != pair) fail(rep.S_lambdas, "S_lambda1 xor S_lambda2 = " + subset_name(d1.S ^ d2.S, f));
        Subset diffl = 0;
        for (int i = 0; i < f; ++i)
            if (d1.lambda[i] != d2.lambda[i]) diffl |= bit(i);
        if (diffl != (pair | bit(jmm))) fail(rep.lambdas, "lambda_1, lambda_2 differ at " + subset_name(diffl, f));
        if ((S_of_mu(x1.theta) ^ S_of_mu(x2.theta)) != bit(jm)) fail(rep.S_theta, "S(theta) difference");
        if ((x1.J ^ x2.J) != bit(jmm)) fail(rep.J_xi, "J(xi) difference " + subset_name(x1.J ^ x2.J, f));
    }
    return rep;
}

// ---- the special weight with mu_lambda = (p-3-y, ..., p-3-y) ----

inline Tuple special_lambda(const Params& P, const GaloisParams& rho) {
    const int f = P.f;
    Tuple lam(f);
    if (!rho.reducible && f >= 3 && f % 2 == 1) {
        lam[0] = Sym::P1MX;
        for (int i = 1; i < f; ++i) lam[i] = (i % 2 == 1) ? Sym::XP1 : Sym::P2MX;
        return lam;
    }
    if (rho.reducible && f >= 4 && f % 2 == 0) {
        for (int i = 0; i < f; ++i) lam[i] = (i % 2 == 0) ? Sym::XP1 : Sym::P2MX;
        return lam;
    }
    throw domain_error("special weight needs f odd >= 3 irreducible or f even >= 4 reducible");
}

inline DiamondWeight find_special_sigma(const Params& P, const GaloisParams& rho) {
    Tuple lam = special_lambda(P, rho);
    auto D = diamond_set(P, rho);
    for (const auto& d : D) {
        if (d.lambda != lam) continue;
        Tuple mul = mu_of_lambda(family_of(rho), lam);
        if (!std::all_of(mul.begin(), mul.end(), [](Sym a) { return a == Sym::P3MX; }))
            throw std::logic_error("special weight: mu_lambda is not all p-3-y");
        if (!find_by_weight(D, sigma_s(P, d.weight))) throw std::logic_error("special weight: sigma^[s] not Diamond");
        return d;
    }
    throw std::logic_error("special weight: lambda not realized");
}

// tau_j: mu = y everywhere except p-2-y at j-1 and y+1 at j
inline D0Factor special_tau(const Params& P, const GaloisParams& rho, const DiamondWeight& s, int j) {
    Tuple mu(P.f, Sym::X);
    mu[P.idx(j - 1)] = Sym::P2MX;
    mu[j] = Sym::XP1;
    auto fs = d0_factors(P, rho, s);
    const D0Factor* t = find_factor_mu(fs, mu);
    if (!t) throw std::logic_error("special tau_j is not a factor of the block");
    return *t;
}

} // namespace gl2w
