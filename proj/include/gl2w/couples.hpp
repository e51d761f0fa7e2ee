#pragma once

#include <optional>

#include "weight.hpp"

namespace gl2w {

struct CoupleType {
    int sign = 0;
    int j = 0;
    bool operator==(const CoupleType&) const = default;
};

// (r_0,..,p-2-r_{j-1}, r_j+1,..) (x) det^{p^{j-1}(r_{j-1}+1) - p^j}
inline std::optional<Weight> plus_partner(const Params& P, const Weight& s, int j) {
    int jm = P.idx(j - 1);
    if (P.f < 2 || s.r[jm] > P.p - 2 || s.r[j] > P.p - 2) return std::nullopt;
    std::vector<int> r = s.r;
    r[jm] = P.p - 2 - s.r[jm];
    r[j] = s.r[j] + 1;
    return make_weight(P, r, s.twist + P.pw(jm) * (s.r[jm] + 1) - P.pw(j));
}

// (r_0,..,p-2-r_{j-1}, r_j-1,..) (x) det^{p^{j-1}(r_{j-1}+1)}
inline std::optional<Weight> minus_partner(const Params& P, const Weight& s, int j) {
    int jm = P.idx(j - 1);
    if (P.f < 2 || s.r[jm] > P.p - 2 || s.r[j] < 1) return std::nullopt;
    std::vector<int> r = s.r;
    r[jm] = P.p - 2 - s.r[jm];
    r[j] = s.r[j] - 1;
    return make_weight(P, r, s.twist + P.pw(jm) * (s.r[jm] + 1));
}

inline std::optional<CoupleType> couple_type(const Params& P, const Weight& s, const Weight& t) {
    if (P.f < 2) return std::nullopt;
    for (int j = 0; j < P.f; ++j) {
        if (auto w = plus_partner(P, s, j); w && *w == t) return CoupleType{+1, j};
        if (auto w = minus_partner(P, s, j); w && *w == t) return CoupleType{-1, j};
    }
    return std::nullopt;
}

} // namespace gl2w
