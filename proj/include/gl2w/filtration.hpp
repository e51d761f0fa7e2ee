#pragma once

#include <optional>
#include <string>
#include <vector>

#include "couples.hpp"
#include "diamond.hpp"
#include "principal_series.hpp"
#include "tuples.hpp"
#include "weight.hpp"

namespace gl2w {

// Layered display: rows[0] is the top line, every row has the same width.
// Adjacent filled cells in a row are linked, a filled cell is linked to the one below it.
struct Cell {
    std::string label;
    Weight weight;
};

struct FiltrationLayer {
    std::vector<std::vector<std::optional<Cell>>> rows;
    std::vector<int> group; // column -> column group
    std::vector<std::vector<Weight>> layers; // socle layers when known, S_0 first

    int width() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        for (const auto& row : rows)
            for (const auto& c : row)
                if (c) out.push_back(*c);
        return out;
    }
    std::vector<Weight> weights() const {
        std::vector<Weight> w;
        for (const auto& c : cells()) w.push_back(c.weight);
        std::sort(w.begin(), w.end());
        return w;
    }
};

inline std::string render(const FiltrationLayer& F) {
    const int w = F.width();
    std::vector<size_t> colw(w, 0);
    for (const auto& row : F.rows)
        for (int c = 0; c < w; ++c)
            if (row[c]) colw[c] = std::max(colw[c], row[c]->label.size());
    std::string out;
    for (size_t r = 0; r < F.rows.size(); ++r) {
        std::string line, bars;
        for (int c = 0; c < w; ++c) {
            const auto& cell = F.rows[r][c];
            std::string s = cell ? cell->label : "";
            s.resize(colw[c], ' ');
            bool link = c > 0 && cell && F.rows[r][c - 1];
            line += c == 0 ? "" : (link ? " -- " : "    ");
            line += s;
            std::string b = (cell && r + 1 < F.rows.size() && F.rows[r + 1][c]) ? "|" : "";
            b.resize(colw[c], ' ');
            bars += (c == 0 ? "" : "    ") + b;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        while (!bars.empty() && bars.back() == ' ') bars.pop_back();
        out += line + "\n";
        if (!bars.empty()) out += bars + "\n";
    }
    return out;
}

// J' = {i : r'_i = p-1, r_i = 0} where chi alpha^{-p^j} = (r') (x) eta'
inline Subset J_prime(const Params& P, const ICharacter& chi, int j) {
    auto r = char_normal_form(P, chi).s;
    auto rp = char_normal_form(P, char_times_alpha_power(P, chi, j, -1)).s;
    Subset J = 0;
    for (int i = 0; i < P.f; ++i)
        if (rp[i] == P.p - 1 && r[i] == 0) J |= bit(i);
    return J;
}

// epsilon(omega): chi alpha^{-p^j} is s-invariant and omega is 1-dimensional
inline bool epsilon(const Params& P, const ICharacter& chi, int j, const Weight& omega) {
    ICharacter c = char_times_alpha_power(P, chi, j, -1);
    return c.a == c.b && weight_dim(omega) == 1;
}

// U(tau) in W_omega inside Ind Pi(E_j(chi)); theta labels omega in Ind Pi(chi alpha^{-p^j}),
// lambda labels tau in Ind Pi(chi)
inline bool w_contains_U(const Params& P, const Tuple& theta, const Tuple& lambda, const ICharacter& chi, int j) {
    if (!validate(Family::P, theta) || !validate(Family::P, lambda) || static_cast<int>(theta.size()) != P.f ||
        theta.size() != lambda.size())
        throw domain_error("tuples must lie in P(x) with length f");
    j = P.idx(j);
    if (P.f == 1) return true;
    const Subset Jt = J_of_lambda(theta), Jl = J_of_lambda(lambda), full = full_set(P.f);
    const Subset jm = bit(P.idx(j - 1));
    if (chi.a == chi.b) {
        if (is_constant(lambda, Sym::P1MX)) return true;
        if (is_constant(lambda, Sym::X)) return (Jt | jm) == full;
        throw domain_error("tuple does not label a factor of a split principal series");
    }
    const int rj = char_normal_form(P, chi).s[j];
    if (rj >= 2) return (Jl & ~(Jt | jm)) == 0;
    return (Jl & ~(Jt | J_prime(P, chi, j) | bit(j) | jm)) == 0;
}

enum class TwoCharSide { sigma, tau };

// U(sigma') or U(tau') in W_omega inside Ind Pi(E_{j-1}(chi_sigma, chi_tau, r_{j-1}+1))
inline bool w_contents_two_char(const Params& P, Subset J_omega, Subset J_factor, TwoCharSide side, const Weight& sigma,
                                const Weight& tau, int j) {
    j = P.idx(j);
    auto ct = couple_type(P, sigma, tau);
    auto pp = plus_partner(P, sigma, j);
    if (!pp || *pp != tau || !ct || sigma.r[j] < 1) throw domain_error("need a couple of type (+1,j) with r_j >= 1");
    Subset allowed = J_omega | bit(P.idx(j - 1));
    if (side == TwoCharSide::sigma) allowed |= bit(P.idx(j - 2));
    return (J_factor & ~allowed) == 0;
}

struct Example1 {
    FiltrationLayer diagram;
    int t = 0;
    Weight omega;
    std::vector<std::pair<Weight, Weight>> coincidences;
};

enum class Slot { empty, jm1, jm2, both };

inline Subset slot_set(const Params& P, int j, Slot s) {
    Subset a = bit(P.idx(j - 1)), b = bit(P.idx(j - 2));
    switch (s) {
    case Slot::empty: return 0;
    case Slot::jm1: return a;
    case Slot::jm2: return b;
    case Slot::both: return a | b;
    }
    return 0;
}

// sigma^{(i)}_* of the example, as the factor of Ind Pi(chi_sigma alpha^{-p^{j-1} i}) with J = *
inline std::optional<Weight> example1_factor(const Params& P, const Weight& sigma, int j, int i, Slot s) {
    ICharacter c = char_times_alpha_power(P, chi_of_weight(P, sigma), P.idx(j - 1), -i);
    auto pc = jh_of_induced(P, c);
    auto f = find_factor_J(pc, slot_set(P, j, s));
    if (!f) return std::nullopt;
    return f->weight;
}

// closed forms, f >= 3
inline Weight example1_explicit(const Params& P, const Weight& sigma, int j, int i, Slot s) {
    if (P.f < 3) throw domain_error("closed forms need f >= 3");
    const int p = P.p, a = P.idx(j - 1), b = P.idx(j - 2);
    j = P.idx(j);
    const auto& r = sigma.r;
    const int t = r[a] / 2;
    std::vector<int> x = r;
    long tw = sigma.twist;
    const long pa = P.pw(a), pb = P.pw(b) * (r[b] + 1);
    if (i <= t) {
        switch (s) {
        case Slot::empty: x[a] = r[a] - 2 * i; tw += pa * i; break;
        case Slot::jm2: x[b] = p - 2 - r[b]; x[a] = r[a] - 1 - 2 * i; tw += pa * i + pb; break;
        case Slot::jm1: x[a] = p - 2 - r[a] + 2 * i; x[j] = r[j] - 1; tw += pa * (r[a] + 1 - i); break;
        case Slot::both:
            x[b] = p - 2 - r[b]; x[a] = p - 1 - r[a] + 2 * i; x[j] = r[j] - 1;
            tw += pa * (r[a] - i) + pb;
            break;
        }
    } else {
        switch (s) {
        case Slot::empty: x[a] = p + r[a] - 2 * i; x[j] = r[j] - 1; tw += pa * i; break;
        case Slot::jm2:
            x[b] = p - 2 - r[b]; x[a] = p + r[a] - 1 - 2 * i; x[j] = r[j] - 1;
            tw += pa * i + pb;
            break;
        default: throw domain_error("no closed form past t for this slot");
        }
    }
    for (int v : x)
        if (v < 0 || v > p - 1) throw domain_error("closed form out of range");
    return make_weight(P, x, tw);
}

inline std::string slot_label(Slot s) {
    switch (s) {
    case Slot::empty: return "0";
    case Slot::jm1: return "{j-1}";
    case Slot::jm2: return "{j-2}";
    case Slot::both: return "J";
    }
    return "";
}

// socle filtration of W_omega for J(omega) = empty, (sigma, tau) of type (+1,j)
inline Example1 example1_filtration(const Params& P, const Weight& sigma, int j) {
    j = P.idx(j);
    const int a = P.idx(j - 1), b = P.idx(j - 2);
    auto tau = plus_partner(P, sigma, j);
    if (P.f < 2 || !tau) throw domain_error("sigma has no (+1,j) partner");
    if (sigma.r[j] < 1) throw domain_error("need r_j >= 1");
    if (sigma.r[b] == P.p - 1) throw domain_error("need r_{j-2} != p-1");
    const int r = sigma.r[a];
    Example1 ex;
    ex.t = r / 2;
    auto get = [&](int i, Slot s) -> Weight {
        if (P.f >= 3) return example1_explicit(P, sigma, j, i, s);
        auto w = example1_factor(P, sigma, j, i, s);
        if (!w) throw domain_error("missing factor in the principal series");
        return *w;
    };
    auto lab = [](int i, Slot s) { return "s" + std::to_string(i) + "_" + slot_label(s); };
    auto cell = [&](int i, Slot s) { return std::optional<Cell>(Cell{lab(i, s) + "=" + to_string(get(i, s)), get(i, s)}); };

    ICharacter top = char_times_alpha_power(P, chi_of_weight(P, sigma), a, -(r + 1));
    auto ptop = jh_of_induced(P, top);
    auto om = find_factor_J(ptop, 0);
    if (!om) throw domain_error("omega not found");
    ex.omega = om->weight;

    auto pt = jh_of_induced(P, chi_of_weight(P, *tau));
    auto t0 = find_factor_J(pt, 0), t1 = find_factor_J(pt, bit(a));
    if (!t0 || !t1) throw domain_error("tau factors not found");

    std::vector<std::optional<Cell>> r0, r1, r2;
    auto push = [&](std::optional<Cell> x, std::optional<Cell> y, std::optional<Cell> z, int g) {
        r0.push_back(std::move(x));
        r1.push_back(std::move(y));
        r2.push_back(std::move(z));
        ex.diagram.group.push_back(g);
    };
    for (int i = 0; i <= ex.t; ++i) {
        push(cell(i, Slot::jm1), cell(i, Slot::empty), std::nullopt, i);
        bool skip = (i == ex.t && r % 2 == 0);
        push(cell(i, Slot::both), skip ? std::nullopt : cell(i, Slot::jm2), std::nullopt, i);
    }
    for (int i = ex.t + 1; i <= r; ++i) {
        push(cell(i, Slot::empty), std::nullopt, std::nullopt, i);
        push(cell(i, Slot::jm2), std::nullopt, std::nullopt, i);
    }
    push(Cell{"omega=" + to_string(ex.omega), ex.omega}, Cell{"tau_{j-1}=" + to_string(t1->weight), t1->weight},
         Cell{"tau_0=" + to_string(t0->weight), t0->weight}, r + 1);
    ex.diagram.rows = {r0, r1, r2};

    ex.coincidences.push_back({get(0, Slot::jm1), ex.omega});
    for (int i = 1; i <= ex.t; ++i) {
        ex.coincidences.push_back({get(i, Slot::jm1), get(r + 1 - i, Slot::empty)});
        ex.coincidences.push_back({get(i - 1, Slot::both), get(r + 1 - i, Slot::jm2)});
    }
    return ex;
}

// f = 2, irreducible, 1 <= r_0 <= p-2, 0 <= r_1 <= p-3
struct F2Row {
    Weight sigma;
    std::vector<std::vector<int>> middle; // S_i, up to twist
    std::vector<int> last;
};

struct F2Tables {
    std::vector<F2Row> rows;
    std::vector<int> delta; // delta(sigma_i) = sigma_{delta[i]}
};

inline GaloisParams check_f2(const Params& P, const GaloisParams& rho) {
    if (P.f != 2 || rho.reducible || rho.r.size() != 2 || rho.r[0] < 1 || rho.r[0] > P.p - 2 || rho.r[1] < 0 ||
        rho.r[1] > P.p - 3)
        throw domain_error("need f = 2, irreducible, 1 <= r_0 <= p-2, 0 <= r_1 <= p-3");
    return rho;
}

inline F2Tables f2_tables(const Params& P, const GaloisParams& rho) {
    check_f2(P, rho);
    const int p = P.p, r0 = rho.r[0], r1 = rho.r[1];
    const long e = rho.twist;
    F2Tables T;
    auto W = [&](int a, int b, long t) { return make_weight(P, {a, b}, t + e); };
    T.rows = {
        {W(r0, r1, 0), {{p - 2 - r0, r1 - 1}, {r0 + 1, p - 2 - r1}}, {p - 3 - r0, p - 1 - r1}},
        {W(r0 - 1, p - 2 - r1, p * (r1 + 1)), {{r0 - 2, r1}, {p - 1 - r0, p - 1 - r1}}, {p - r0, r1 - 1}},
        {W(p - 1 - r0, p - 3 - r1, r0 + p * (r1 + 1)), {{r0 - 1, p - 4 - r1}, {p - r0, r1 + 1}}, {r0 - 2, r1 + 2}},
        {W(p - 2 - r0, r1 + 1, r0 + p * (p - 1)), {{p - 3 - r0, p - 3 - r1}, {r0, r1 + 2}}, {r0 + 1, p - 4 - r1}},
    };
    T.delta = {1, 2, 3, 0};
    return T;
}

inline bool in_range(const Params& P, const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [&](int x) { return x >= 0 && x <= P.p - 1; });
}

// socle layer of a D0 factor inside its block
inline int mu_depth(const Tuple& mu) { return popcount(S_of_mu(mu)); }

struct F2Check {
    bool ok = true;
    std::vector<std::string> failures;
};

// compare the closed-form tables with diamond_set / d0_factors / delta_by_search
inline F2Check f2_tables_check(const Params& P, const GaloisParams& rho) {
    F2Check out;
    auto fail = [&](std::string s) {
        out.ok = false;
        out.failures.push_back(std::move(s));
    };
    auto T = f2_tables(P, rho);
    auto D = diamond_set(P, rho);
    std::vector<const DiamondWeight*> ds;
    for (const auto& row : T.rows) {
        auto d = find_by_weight(D, row.sigma);
        if (!d) fail("sigma not a Diamond weight: " + to_string(row.sigma));
        ds.push_back(d);
    }
    if (!out.ok) return out;
    for (size_t i = 0; i < T.rows.size(); ++i) {
        const auto& row = T.rows[i];
        auto fs = d0_factors(P, rho, *ds[i]);
        std::vector<std::vector<int>> got_mid, want_mid;
        std::vector<std::vector<int>> got_last;
        for (const auto& x : fs) {
            int d = mu_depth(x.mu);
            if (d == 0 && x.weight != row.sigma) fail("socle mismatch for " + to_string(row.sigma));
            if (d == 1) got_mid.push_back(x.weight.r);
            if (d == 2) got_last.push_back(x.weight.r);
        }
        for (const auto& m : row.middle)
            if (in_range(P, m)) want_mid.push_back(m);
        std::sort(got_mid.begin(), got_mid.end());
        std::sort(want_mid.begin(), want_mid.end());
        if (got_mid != want_mid) fail("middle layer mismatch for " + to_string(row.sigma));
        std::vector<std::vector<int>> want_last;
        if (in_range(P, row.last)) want_last.push_back(row.last);
        if (got_last != want_last) fail("last layer mismatch for " + to_string(row.sigma));
        auto del = delta_by_search(P, rho, row.sigma);
        if (!del || del->weight != T.rows[T.delta[i]].sigma) fail("delta mismatch for " + to_string(row.sigma));
    }
    return out;
}

// tau_0 = sigma_3, tau_{i+1} the (+1,0) partner of tau_i
inline std::vector<Weight> v1_taus(const Params& P, const GaloisParams& rho) {
    auto T = f2_tables(P, rho);
    std::vector<Weight> tau{T.rows[2].sigma};
    for (int i = 0; i < rho.r[0]; ++i) {
        auto n = plus_partner(P, tau.back(), 0);
        if (!n) throw domain_error("tau chain breaks");
        tau.push_back(*n);
    }
    return tau;
}

struct V1S1 {
    FiltrationLayer v1, s1;
    std::vector<Weight> tau;
    std::vector<bool> tau_in_D;
};

inline V1S1 v1_s1_filtrations(const Params& P, const GaloisParams& rho) {
    auto T = f2_tables(P, rho);
    auto D = diamond_set(P, rho);
    const int r0 = rho.r[0];
    V1S1 out;
    out.tau = v1_taus(P, rho);
    for (const auto& t : out.tau) out.tau_in_D.push_back(find_by_weight(D, t) != nullptr);
    std::vector<Weight> chain;
    for (int i = 0; i <= 2 * r0; ++i) chain.push_back(out.tau[i <= r0 ? i : 2 * r0 - i]);
    auto label = [&](int i) { return "tau_" + std::to_string(i <= r0 ? i : 2 * r0 - i); };
    auto build = [&](bool tail) {
        FiltrationLayer F;
        std::vector<std::optional<Cell>> top, bot;
        for (int i = 0; i <= 2 * r0; ++i) {
            top.push_back(Cell{label(i) + "=" + to_string(chain[i]), chain[i]});
            bot.push_back(std::nullopt);
            F.group.push_back(i);
            F.layers.push_back({chain[i]});
        }
        if (tail) {
            const Weight s4 = T.rows[3].sigma, s1 = T.rows[0].sigma;
            top.push_back(Cell{"sigma_4=" + to_string(s4), s4});
            bot.push_back(Cell{"sigma_1=" + to_string(s1), s1});
            F.group.push_back(2 * r0 + 1);
            F.layers.push_back({s4});
            F.layers[0].push_back(s1);
        }
        F.rows = {top};
        if (tail) F.rows.push_back(bot);
        return F;
    };
    out.v1 = build(true);
    out.s1 = build(false);
    return out;
}

enum class ExtVanishing { vanishes_known, nonvanishing_allowed, unknown };

// sufficient conditions for Ext^1_K(tau, sigma) = 0 (Ext^1_{K/Z_1} when sigma = tau)
inline ExtVanishing ext_vanishing(const Params& P, const Weight& sigma, const Weight& tau) {
    if (P.f < 2) return ExtVanishing::unknown;
    const int p = P.p;
    const auto& r = sigma.r;
    if (sigma == tau)
        return std::all_of(r.begin(), r.end(), [&](int x) { return x <= p - 2; }) ? ExtVanishing::vanishes_known
                                                                                  : ExtVanishing::unknown;
    for (int j = 0; j < P.f; ++j) {
        if (r[P.idx(j - 1)] > p - 2) continue;
        std::vector<int> x = r;
        if (r[j] <= p - 3) {
            x[j] = r[j] + 2;
            if (make_weight(P, x, sigma.twist - P.pw(j)) == tau) return ExtVanishing::vanishes_known;
        }
        x = r;
        if (r[j] >= 2) {
            x[j] = r[j] - 2;
            if (make_weight(P, x, sigma.twist + P.pw(j)) == tau) return ExtVanishing::vanishes_known;
        }
    }
    if (couple_type(P, sigma, tau)) return ExtVanishing::nonvanishing_allowed;
    return ExtVanishing::unknown;
}

inline std::string to_string(ExtVanishing e) {
    switch (e) {
    case ExtVanishing::vanishes_known: return "vanishes";
    case ExtVanishing::nonvanishing_allowed: return "nonvanishing-allowed";
    case ExtVanishing::unknown: return "unknown";
    }
    return "";
}

} // namespace gl2w
