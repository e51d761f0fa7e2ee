#pragma once

#include <algorithm>
#include <vector>

#include "tuples.hpp"
#include "weight.hpp"

namespace gl2w {

struct PSFactor {
    Weight weight;
    Tuple lambda;
    Subset J = 0;
    bool operator==(const PSFactor&) const = default;
};

struct PSContents {
    std::vector<PSFactor> factors;
    std::vector<Tuple> dropped;
};

inline bool is_constant(const Tuple& t, Sym a) {
    return std::all_of(t.begin(), t.end(), [&](Sym b) { return b == a; });
}

inline bool in_range(const Params& P, const std::vector<long>& v) {
    return std::all_of(v.begin(), v.end(), [&](long x) { return x >= 0 && x <= P.p - 1; });
}

// JH factors of Ind chi^s, labelled so that the all-x tuple is the socle (chi_sigma = chi).
// For chi = chi^s the digits are (0,...,0) and only the all-x and all-(p-1-x) tuples are kept.
inline PSContents jh_of_induced(const Params& P, const ICharacter& chi) {
    NormalForm nf = char_normal_form(P, chi);
    const bool split = chi.a == chi.b;
    PSContents out;
    for (const Tuple& lam : enumerate_P(P.f)) {
        auto v = eval_tuple(P.p, lam, nf.s);
        bool keep = split ? (is_constant(lam, Sym::X) || is_constant(lam, Sym::P1MX)) : in_range(P, v);
        if (!keep) {
            out.dropped.push_back(lam);
            continue;
        }
        std::vector<int> r(v.begin(), v.end());
        long e = e_of_lambda(P, lam, nf.s);
        out.factors.push_back({make_weight(P, r, e + nf.t), lam, J_of_lambda(lam)});
    }
    return out;
}

inline std::vector<Weight> weights_of(const std::vector<PSFactor>& fs) {
    std::vector<Weight> w;
    for (const auto& x : fs) w.push_back(x.weight);
    std::sort(w.begin(), w.end());
    return w;
}

inline long total_dim(const std::vector<PSFactor>& fs) {
    long d = 0;
    for (const auto& x : fs) d += weight_dim(x.weight);
    return d;
}

inline const PSFactor* find_factor(const PSContents& c, const Weight& w) {
    for (const auto& x : c.factors)
        if (x.weight == w) return &x;
    return nullptr;
}

inline const PSFactor* find_factor_J(const PSContents& c, Subset J) {
    for (const auto& x : c.factors)
        if (x.J == J) return &x;
    return nullptr;
}

// JH content of U(tau)
inline std::vector<PSFactor> U_contents(const Params& P, const PSFactor& tau, const ICharacter& chi) {
    PSContents c = jh_of_induced(P, chi);
    if (!find_factor(c, tau.weight)) throw domain_error("weight is not a factor of the principal series");
    if (chi.a == chi.b) return {tau};
    std::vector<PSFactor> out;
    for (const auto& x : c.factors)
        if ((x.J & ~tau.J) == 0) out.push_back(x);
    return out;
}

inline std::vector<Weight> socle_of_induced(const Params& P, const ICharacter& chi) {
    PSContents c = jh_of_induced(P, chi);
    std::vector<Weight> out;
    if (chi.a == chi.b) {
        for (const auto& x : c.factors) out.push_back(x.weight);
        return out;
    }
    for (const auto& x : c.factors)
        if (x.J == 0) out.push_back(x.weight);
    return out;
}

} // namespace gl2w
