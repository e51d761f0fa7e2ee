#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "weight.hpp"

namespace gl2w {

// Affine symbols s*x + kp*p + c. The same alphabet serves x-tuples and y-tuples.
enum class Sym : std::uint8_t { X, XM1, XP1, P1MX, P2MX, P3MX };

inline constexpr std::array<Sym, 6> all_syms{Sym::X, Sym::XM1, Sym::XP1, Sym::P1MX, Sym::P2MX, Sym::P3MX};

using Tuple = std::vector<Sym>;
using Subset = std::uint32_t;

enum class Family { P, RD, ID, Imu };

struct Lin {
    int s = 1;
    int kp = 0;
    int c = 0;
    long eval(int p, long x) const { return s * x + static_cast<long>(kp) * p + c; }
    bool operator==(const Lin&) const = default;
};

inline Lin lin_of(Sym a) {
    switch (a) {
    case Sym::X: return {1, 0, 0};
    case Sym::XM1: return {1, 0, -1};
    case Sym::XP1: return {1, 0, 1};
    case Sym::P1MX: return {-1, 1, -1};
    case Sym::P2MX: return {-1, 1, -2};
    case Sym::P3MX: return {-1, 1, -3};
    }
    return {};
}

// (outer o inner)(x) = outer(inner(x))
inline Lin compose(const Lin& outer, const Lin& inner) {
    return {outer.s * inner.s, outer.kp + outer.s * inner.kp, outer.c + outer.s * inner.c};
}

inline std::string sym_name(Sym a, char v = 'x') {
    std::string x(1, v);
    switch (a) {
    case Sym::X: return x;
    case Sym::XM1: return x + "-1";
    case Sym::XP1: return x + "+1";
    case Sym::P1MX: return "p-1-" + x;
    case Sym::P2MX: return "p-2-" + x;
    case Sym::P3MX: return "p-3-" + x;
    }
    return "?";
}

inline std::string lin_name(const Lin& l, char v = 'x') {
    std::string out;
    if (l.s < 0) {
        if (l.kp == 1) out = "p";
        else if (l.kp) out = std::to_string(l.kp) + "p";
        if (l.c) out += (l.c > 0 ? "+" : "") + std::to_string(l.c);
        out += "-";
        out += v;
        return out;
    }
    out = std::string(1, v);
    if (l.kp) out += (l.kp > 0 ? "+" : "") + std::to_string(l.kp) + "p";
    if (l.c) out += (l.c > 0 ? "+" : "") + std::to_string(l.c);
    return out;
}

inline std::string tuple_name(const Tuple& t, char v = 'x') {
    std::string out = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out += ", ";
        out += sym_name(t[i], v);
    }
    return out + ")";
}

inline bool in(Sym a, std::initializer_list<Sym> set) {
    for (Sym b : set)
        if (a == b) return true;
    return false;
}

inline bool has(Subset S, int i) { return (S >> i) & 1u; }
inline Subset bit(int i) { return Subset(1) << i; }
inline Subset full_set(int f) { return f >= 32 ? ~Subset(0) : (bit(f) - 1); }
inline int popcount(Subset S) { return __builtin_popcount(S); }

inline std::vector<int> subset_elems(Subset S, int f) {
    std::vector<int> v;
    for (int i = 0; i < f; ++i)
        if (has(S, i)) v.push_back(i);
    return v;
}

inline std::string subset_name(Subset S, int f) {
    std::string out = "{";
    bool first = true;
    for (int i : subset_elems(S, f)) {
        out += (first ? "" : ",") + std::to_string(i);
        first = false;
    }
    return out + "}";
}

// ---- alphabets and adjacency rules ----

inline std::vector<Sym> alphabet(Family fam, int f, int i) {
    using enum Sym;
    switch (fam) {
    case Family::P:
        if (f == 1) return {X, P1MX};
        return {X, XM1, P2MX, P1MX};
    case Family::RD:
        if (f == 1) return {X, P3MX};
        return {X, XP1, P2MX, P3MX};
    case Family::ID:
        if (f == 1) return {X, P1MX};
        if (i == 0) return {X, XM1, P2MX, P1MX};
        return {X, XP1, P2MX, P3MX};
    case Family::Imu:
        if (f == 1) return {X, P1MX, P3MX};
        return {X, XM1, XP1, P2MX, P3MX, P1MX};
    }
    return {};
}

// rule linking position i (symbol a) to position i+1 (symbol b)
inline bool adjacent_ok(Family fam, int f, int i, Sym a, Sym b) {
    using enum Sym;
    if (f == 1) return true;
    switch (fam) {
    case Family::P:
        if (in(a, {X, XM1})) return in(b, {X, P2MX});
        return in(b, {P1MX, XM1});
    case Family::RD:
        if (in(a, {X, XP1})) return in(b, {X, P2MX});
        return in(b, {P3MX, XP1});
    case Family::ID:
        if (i == 0) {
            if (in(a, {X, XM1})) return in(b, {X, P2MX});
            return in(b, {P3MX, XP1});
        }
        if (in(a, {X, XP1})) return in(b, {X, P2MX});
        if (i < f - 1) return in(b, {P3MX, XP1});
        return in(b, {P1MX, XM1});
    case Family::Imu:
        if (in(a, {X, XM1, XP1})) return in(b, {X, P2MX});
        return in(b, {XM1, XP1, P3MX, P1MX});
    }
    return false;
}

// Validator: restates the rule lists clause by clause, independent of adjacent_ok.
inline bool validate(Family fam, const Tuple& t) {
    using enum Sym;
    const int f = static_cast<int>(t.size());
    if (f < 1) return false;
    auto nx = [&](int i) { return t[(i + 1) % f]; };
    if (f == 1) {
        switch (fam) {
        case Family::P: return in(t[0], {X, P1MX});
        case Family::RD: return in(t[0], {X, P3MX});
        case Family::ID: return in(t[0], {X, P1MX});
        case Family::Imu: return in(t[0], {X, P1MX, P3MX});
        }
    }
    for (int i = 0; i < f; ++i) {
        Sym a = t[i], b = nx(i);
        switch (fam) {
        case Family::P:
            if (!in(a, {X, XM1, P2MX, P1MX})) return false;
            if (in(a, {X, XM1}) && !in(b, {X, P2MX})) return false;
            if (in(a, {P2MX, P1MX}) && !in(b, {P1MX, XM1})) return false;
            break;
        case Family::RD:
            if (!in(a, {X, XP1, P2MX, P3MX})) return false;
            if (in(a, {X, XP1}) && !in(b, {X, P2MX})) return false;
            if (in(a, {P2MX, P3MX}) && !in(b, {P3MX, XP1})) return false;
            break;
        case Family::ID:
            if (i == 0 && !in(a, {X, XM1, P2MX, P1MX})) return false;
            if (i > 0 && !in(a, {X, XP1, P2MX, P3MX})) return false;
            if (i > 0 && in(a, {X, XP1}) && !in(b, {X, P2MX})) return false;
            if (i == 0 && in(a, {X, XM1}) && !in(b, {X, P2MX})) return false;
            if (i > 0 && i < f - 1 && in(a, {P2MX, P3MX}) && !in(b, {P3MX, XP1})) return false;
            if (i == 0 && in(a, {P1MX, P2MX}) && !in(b, {P3MX, XP1})) return false;
            if (i == f - 1 && in(a, {P2MX, P3MX}) && !in(b, {P1MX, XM1})) return false;
            break;
        case Family::Imu:
            if (in(a, {X, XM1, XP1}) && !in(b, {X, P2MX})) return false;
            if (in(a, {P2MX, P3MX, P1MX}) && !in(b, {XM1, XP1, P3MX, P1MX})) return false;
            break;
        }
    }
    return true;
}

namespace detail {
inline std::vector<Tuple> enumerate_dfs(Family fam, int f) {
    std::vector<Tuple> out;
    Tuple cur(f);
    std::function<void(int)> rec = [&](int i) {
        if (i == f) {
            if (adjacent_ok(fam, f, f - 1, cur[f - 1], cur[0])) out.push_back(cur);
            return;
        }
        for (Sym a : alphabet(fam, f, i)) {
            if (i > 0 && !adjacent_ok(fam, f, i - 1, cur[i - 1], a)) continue;
            cur[i] = a;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}
} // namespace detail

// Cached per (family, f); the cache is filled under a mutex and never mutated afterwards.
inline const std::vector<Tuple>& enumerate(Family fam, int f) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<Tuple>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(static_cast<int>(fam), f);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, detail::enumerate_dfs(fam, f)).first;
    return it->second;
}

inline const std::vector<Tuple>& enumerate_P(int f) { return enumerate(Family::P, f); }
inline const std::vector<Tuple>& enumerate_RD(int f) { return enumerate(Family::RD, f); }
inline const std::vector<Tuple>& enumerate_ID(int f) { return enumerate(Family::ID, f); }
inline const std::vector<Tuple>& enumerate_Imu(int f) { return enumerate(Family::Imu, f); }

// brute force over the whole alphabet product, filtered by validate()
inline std::vector<Tuple> enumerate_by_filter(Family fam, int f) {
    std::vector<Sym> alpha = fam == Family::Imu ? std::vector<Sym>(all_syms.begin(), all_syms.end())
                                                : std::vector<Sym>{Sym::X, Sym::XM1, Sym::XP1, Sym::P1MX,
                                                                   Sym::P2MX, Sym::P3MX};
    std::vector<Tuple> out;
    Tuple cur(f);
    long total = 1;
    for (int i = 0; i < f; ++i) total *= static_cast<long>(alpha.size());
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < f; ++i) {
            cur[i] = alpha[c % alpha.size()];
            c /= static_cast<long>(alpha.size());
        }
        if (validate(fam, cur)) out.push_back(cur);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- evaluation ----

inline std::vector<Lin> lins(const Tuple& t) {
    std::vector<Lin> v;
    for (Sym a : t) v.push_back(lin_of(a));
    return v;
}

inline std::vector<long> eval_lins(int p, const std::vector<Lin>& t, const std::vector<int>& r) {
    if (t.size() != r.size()) throw domain_error("tuple/vector length mismatch");
    std::vector<long> v(t.size());
    for (size_t i = 0; i < t.size(); ++i) v[i] = t[i].eval(p, r[i]);
    return v;
}

inline std::vector<long> eval_tuple(int p, const Tuple& t, const std::vector<int>& r) {
    return eval_lins(p, lins(t), r);
}

// e() of an affine tuple: first branch iff the last component is +x + const.
inline long e_of_lins(const Params& P, const std::vector<Lin>& t, const std::vector<int>& r) {
    long bracket = 0;
    for (int i = P.f - 1; i >= 0; --i) bracket = bracket * P.p + (r[i] - t[i].eval(P.p, r[i]));
    if (t[P.f - 1].s < 0) bracket += P.q - 1;
    if (bracket % 2 != 0) throw std::logic_error("e(): odd bracket for tuple");
    return bracket / 2;
}

inline long e_of_lambda(const Params& P, const Tuple& t, const std::vector<int>& r) {
    return e_of_lins(P, lins(t), r);
}

inline Subset J_of_lambda(const Tuple& t) {
    Subset S = 0;
    for (size_t i = 0; i < t.size(); ++i)
        if (in(t[i], {Sym::P2MX, Sym::P1MX})) S |= bit(static_cast<int>(i));
    return S;
}

inline Subset S_of_lambda(Family fam, const Tuple& t) {
    Subset S = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        bool mem = (fam == Family::ID && i == 0) ? in(t[i], {Sym::P1MX, Sym::XM1})
                                                  : in(t[i], {Sym::P3MX, Sym::XP1});
        if (mem) S |= bit(static_cast<int>(i));
    }
    return S;
}

inline Tuple mu_of_lambda(Family fam, const Tuple& t) {
    Tuple mu(t.size());
    for (size_t i = 0; i < t.size(); ++i) {
        bool first;
        if (fam == Family::ID && i == 0) first = in(t[i], {Sym::P2MX, Sym::XM1});
        else first = in(t[i], {Sym::P3MX, Sym::X});
        mu[i] = first ? Sym::P1MX : Sym::P3MX;
    }
    return mu;
}

inline bool compatible(const Tuple& mu, const Tuple& nu) {
    if (mu.size() != nu.size()) return false;
    for (size_t i = 0; i < mu.size(); ++i) {
        bool a = in(mu[i], {Sym::X, Sym::P2MX, Sym::XP1, Sym::P3MX}) && in(nu[i], {Sym::X, Sym::P2MX, Sym::XP1, Sym::P3MX});
        bool b = in(mu[i], {Sym::X, Sym::P2MX, Sym::XM1, Sym::P1MX}) && in(nu[i], {Sym::X, Sym::P2MX, Sym::XM1, Sym::P1MX});
        if (!a && !b) return false;
    }
    return true;
}

inline Subset S_of_mu(const Tuple& mu) {
    Subset S = 0;
    for (size_t i = 0; i < mu.size(); ++i)
        if (in(mu[i], {Sym::XM1, Sym::XP1, Sym::P3MX, Sym::P1MX})) S |= bit(static_cast<int>(i));
    return S;
}

inline Subset delta_red(Subset S, int f) {
    Subset out = 0;
    for (int i = 0; i < f; ++i)
        if (has(S, (i + 1) % f)) out |= bit(i);
    return out;
}

inline Subset delta_irr(Subset S, int f) {
    Subset out = 0;
    for (int i = 1; i < f; ++i)
        if (has(S, (i + 1) % f)) out |= bit(i);
    if (!has(S, 1 % f)) out |= bit(0);
    return out;
}

} // namespace gl2w
