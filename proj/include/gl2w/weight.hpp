#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gl2w {

struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct Params {
    int p = 0;
    int f = 0;
    long q = 0;

    Params() = default;
    Params(int p_, int f_) : p(p_), f(f_) {
        if (p < 3 || !is_prime(p)) throw domain_error("p must be an odd prime");
        if (f < 1 || f > 12) throw domain_error("f must be in [1,12]");
        q = 1;
        for (int i = 0; i < f; ++i) q *= p;
    }

    long qm1() const { return q - 1; }
    int idx(long j) const { return static_cast<int>(((j % f) + f) % f); }
    long mod(long x) const {
        long m = q - 1;
        return ((x % m) + m) % m;
    }
    long pw(long i) const {
        long r = 1;
        for (int k = 0; k < idx(i); ++k) r *= p;
        return r;
    }
    bool operator==(const Params&) const = default;
};

// (r_0,...,r_{f-1}) (x) det^twist
struct Weight {
    std::vector<int> r;
    long twist = 0;
    bool operator==(const Weight&) const = default;
    auto operator<=>(const Weight&) const = default;
};

// (a b; pc d) -> abar^a dbar^b
struct ICharacter {
    long a = 0;
    long b = 0;
    bool operator==(const ICharacter&) const = default;
    auto operator<=>(const ICharacter&) const = default;
};

struct NormalForm {
    std::vector<int> s;
    long t = 0;
    bool operator==(const NormalForm&) const = default;
};

inline Weight make_weight(const Params& P, std::vector<int> r, long twist) {
    if (static_cast<int>(r.size()) != P.f) throw domain_error("weight length != f");
    for (int x : r)
        if (x < 0 || x > P.p - 1) throw domain_error("weight digit out of range");
    return Weight{std::move(r), P.mod(twist)};
}

inline bool valid_weight(const Params& P, const Weight& w) {
    if (static_cast<int>(w.r.size()) != P.f) return false;
    for (int x : w.r)
        if (x < 0 || x > P.p - 1) return false;
    return w.twist >= 0 && w.twist < P.qm1();
}

inline ICharacter make_char(const Params& P, long a, long b) { return {P.mod(a), P.mod(b)}; }

inline long digit_sum(const Params& P, const std::vector<int>& r) {
    long s = 0;
    for (int i = P.f - 1; i >= 0; --i) s = s * P.p + r[i];
    return s;
}

inline ICharacter chi_of_weight(const Params& P, const Weight& w) {
    return make_char(P, digit_sum(P, w.r) + w.twist, w.twist);
}

inline ICharacter conjugate_char(const ICharacter& c) { return {c.b, c.a}; }

inline ICharacter alpha(const Params& P) { return make_char(P, 1, -1); }

inline ICharacter char_mul(const Params& P, const ICharacter& x, const ICharacter& y) {
    return make_char(P, x.a + y.a, x.b + y.b);
}

inline ICharacter char_pow(const Params& P, const ICharacter& x, long k) {
    return make_char(P, x.a * (k % P.qm1()), x.b * (k % P.qm1()));
}

inline NormalForm char_normal_form(const Params& P, const ICharacter& c) {
    NormalForm nf;
    nf.t = c.b;
    long d = P.mod(c.a - c.b);
    nf.s.assign(P.f, 0);
    for (int i = 0; i < P.f; ++i) {
        nf.s[i] = static_cast<int>(d % P.p);
        d /= P.p;
    }
    return nf;
}

inline Weight weight_of_normal_form(const Params& P, const NormalForm& nf) {
    return make_weight(P, nf.s, nf.t);
}

// chi * alpha^{k p^j}
inline ICharacter char_times_alpha_power(const Params& P, const ICharacter& c, int j, long k) {
    if (j < 0 || j >= P.f) throw domain_error("index j out of range");
    long e = P.mod(k) * P.pw(j) % P.qm1();
    return make_char(P, c.a + e, c.b - e);
}

inline std::vector<Weight> weights_of_char(const Params& P, const ICharacter& c) {
    NormalForm nf = char_normal_form(P, c);
    std::vector<Weight> out{weight_of_normal_form(P, nf)};
    if (c.a == c.b) out.push_back(make_weight(P, std::vector<int>(P.f, P.p - 1), nf.t));
    return out;
}

inline Weight sigma_s(const Params& P, const Weight& w) {
    std::vector<int> r(P.f);
    for (int i = 0; i < P.f; ++i) r[i] = P.p - 1 - w.r[i];
    return make_weight(P, r, w.twist + digit_sum(P, w.r));
}

inline long weight_dim(const Weight& w) {
    long d = 1;
    for (int x : w.r) d *= x + 1;
    return d;
}

inline bool same_up_to_twist(const Weight& a, const Weight& b) { return a.r == b.r; }

enum class ExtLevel { modZ1, modK1 };

struct Ext1Result {
    int dim = 0;
    int j = -1;
    int sign = 0;
};

// Ext^1_I(chi', chi) per the alpha^{+-p^j} criterion
inline Ext1Result ext1_dim_I(const Params& P, const ICharacter& chi_prime, const ICharacter& chi,
                             ExtLevel level) {
    for (int j = 0; j < P.f; ++j) {
        if (char_times_alpha_power(P, chi, j, -1) == chi_prime) return {1, j, -1};
    }
    if (level == ExtLevel::modZ1) {
        for (int j = 0; j < P.f; ++j)
            if (char_times_alpha_power(P, chi, j, 1) == chi_prime) return {1, j, +1};
    }
    return {};
}

inline std::string to_string(const Weight& w) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < w.r.size(); ++i) os << (i ? "," : "") << w.r[i];
    os << ')';
    if (w.twist) os << "(x)det^" << w.twist;
    return os.str();
}

inline std::string to_string(const ICharacter& c) {
    return "[" + std::to_string(c.a) + "," + std::to_string(c.b) + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << to_string(w); }
inline std::ostream& operator<<(std::ostream& os, const ICharacter& c) { return os << to_string(c); }

} // namespace gl2w
