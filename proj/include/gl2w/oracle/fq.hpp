#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "../weight.hpp"

namespace gl2w::oracle {

// F_q as integer codes sum c_i p^i, c the coefficient vector mod a primitive polynomial
class Fq {
public:
    explicit Fq(const Params& P) : p_(P.p), f_(P.f), q_(static_cast<int>(P.q)) {
        if (P.q > 2401) throw domain_error("oracle field too large");
        find_poly();
        build_tables();
    }

    int p() const { return p_; }
    int f() const { return f_; }
    int q() const { return q_; }
    const std::vector<int>& poly() const { return poly_; }
    int gen() const { return exp_[1]; }

    int add(int a, int b) const { return add_[a * q_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg_[b]); }
    int mul(int a, int b) const { return (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]]; }
    int inv(int a) const {
        if (a == 0) throw domain_error("inverse of zero");
        return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    }
    int div(int a, int b) const { return mul(a, inv(b)); }
    // 0^0 = 1
    int pow(int a, long e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        long m = q_ - 1;
        long k = ((log_[a] * (e % m)) % m + m) % m;
        return exp_[k];
    }
    int gpow(long e) const { return pow(gen(), e); }
    int log(int a) const { return log_[a]; }
    int from_int(long n) const { return static_cast<int>(((n % p_) + p_) % p_); }
    int digit(int a, int i) const {
        for (int k = 0; k < i; ++k) a /= p_;
        return a % p_;
    }

private:
    int p_, f_, q_;
    std::vector<int> poly_; // monic, low to high, size f+1
    std::vector<int> add_, neg_, log_, exp_;

    std::vector<int> times_x(const std::vector<int>& c, const std::vector<int>& m) const {
        std::vector<int> r(f_, 0);
        int top = c[f_ - 1];
        for (int i = f_ - 1; i > 0; --i) r[i] = c[i - 1];
        for (int i = 0; i < f_; ++i) r[i] = ((r[i] - top * m[i]) % p_ + p_) % p_;
        return r;
    }

    // x has order q-1 modulo the polynomial
    bool primitive(const std::vector<int>& m) const {
        std::vector<int> one(f_, 0), c(f_, 0);
        one[0] = 1;
        if (f_ == 1) c[0] = ((-m[0]) % p_ + p_) % p_;
        else c[1] = 1;
        for (long k = 1; k < q_ - 1; ++k) {
            if (c == one || std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) return false;
            c = times_x(c, m);
        }
        return c == one;
    }

    void find_poly() {
        std::vector<int> m(f_, 0);
        for (long code = 0; code < q_; ++code) {
            long x = code;
            for (int i = 0; i < f_; ++i) {
                m[i] = static_cast<int>(x % p_);
                x /= p_;
            }
            if (m[0] == 0) continue;
            if (primitive(m)) {
                poly_ = m;
                poly_.push_back(1);
                return;
            }
        }
        throw domain_error("no primitive polynomial found");
    }

    int encode(const std::vector<int>& c) const {
        int v = 0;
        for (int i = f_ - 1; i >= 0; --i) v = v * p_ + c[i];
        return v;
    }

    void build_tables() {
        add_.resize(static_cast<size_t>(q_) * q_);
        neg_.resize(q_);
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                int x = a, y = b, r = 0, pw = 1;
                for (int i = 0; i < f_; ++i) {
                    r += ((x % p_ + y % p_) % p_) * pw;
                    x /= p_, y /= p_, pw *= p_;
                }
                add_[a * q_ + b] = r;
            }
            int x = a, r = 0, pw = 1;
            for (int i = 0; i < f_; ++i) {
                r += ((p_ - x % p_) % p_) * pw;
                x /= p_, pw *= p_;
            }
            neg_[a] = r;
        }
        std::vector<int> c(f_, 0);
        c[0] = 1;
        exp_.assign(2 * q_, 0);
        log_.assign(q_, 0);
        for (int k = 0; k < q_ - 1; ++k) {
            int e = encode(c);
            exp_[k] = exp_[k + q_ - 1] = e;
            log_[e] = k;
            c = times_x(c, poly_);
        }
    }
};

// Galois ring GR(p^2, f) = (Z/p^2)[x] / (monic lift of the F_q polynomial)
struct GRElem {
    std::array<int, 12> c{};
    bool operator==(const GRElem&) const = default;
};

class GR {
public:
    explicit GR(const Fq& F) : F_(F), p_(F.p()), f_(F.f()), m_(F.p() * F.p()) {
        teich_.resize(F.q());
        for (int a = 0; a < F.q(); ++a) teich_[a] = pow(lift(a), F.q());
    }

    const Fq& field() const { return F_; }
    int p() const { return p_; }

    GRElem zero() const { return {}; }
    GRElem one() const { return from_int(1); }
    GRElem from_int(long n) const {
        GRElem x;
        x.c[0] = static_cast<int>(((n % m_) + m_) % m_);
        return x;
    }
    GRElem add(const GRElem& x, const GRElem& y) const {
        GRElem r;
        for (int i = 0; i < f_; ++i) r.c[i] = (x.c[i] + y.c[i]) % m_;
        return r;
    }
    GRElem neg(const GRElem& x) const {
        GRElem r;
        for (int i = 0; i < f_; ++i) r.c[i] = (m_ - x.c[i]) % m_;
        return r;
    }
    GRElem sub(const GRElem& x, const GRElem& y) const { return add(x, neg(y)); }
    GRElem mul(const GRElem& x, const GRElem& y) const {
        std::array<long, 24> t{};
        for (int i = 0; i < f_; ++i)
            if (x.c[i])
                for (int j = 0; j < f_; ++j) t[i + j] += static_cast<long>(x.c[i]) * y.c[j];
        const auto& m = F_.poly();
        for (int k = 2 * f_ - 2; k >= f_; --k) {
            long top = t[k] % m_;
            t[k] = 0;
            if (!top) continue;
            for (int i = 0; i < f_; ++i) t[k - f_ + i] -= top * m[i];
        }
        GRElem r;
        for (int i = 0; i < f_; ++i) r.c[i] = static_cast<int>(((t[i] % m_) + m_) % m_);
        return r;
    }
    GRElem scale(const GRElem& x, long n) const { return mul(x, from_int(n)); }
    GRElem pow(GRElem x, long e) const {
        GRElem r = one();
        while (e > 0) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }
    bool is_unit(const GRElem& x) const { return reduce(x) != 0; }
    GRElem inv(const GRElem& x) const {
        if (!is_unit(x)) throw domain_error("non-unit in GR");
        // |GR^x| = (q-1) q
        return pow(x, static_cast<long>(F_.q() - 1) * F_.q() - 1);
    }

    int reduce(const GRElem& x) const {
        int v = 0;
        for (int i = f_ - 1; i >= 0; --i) v = v * p_ + x.c[i] % p_;
        return v;
    }
    bool divisible_by_p(const GRElem& x) const { return reduce(x) == 0; }
    // (x / p) mod p, for x in pO
    int div_p(const GRElem& x) const {
        if (!divisible_by_p(x)) throw domain_error("element not divisible by p");
        int v = 0;
        for (int i = f_ - 1; i >= 0; --i) v = v * p_ + x.c[i] / p_;
        return v;
    }
    // digit lift of a field element
    GRElem lift(int a) const {
        GRElem x;
        for (int i = 0; i < f_; ++i) {
            x.c[i] = a % p_;
            a /= p_;
        }
        return x;
    }
    GRElem teich(int a) const { return teich_[a]; }
    GRElem times_p(int a) const { return scale(lift(a), p_); }

    GRElem random(std::mt19937_64& rng) const {
        GRElem x;
        for (int i = 0; i < f_; ++i) x.c[i] = static_cast<int>(rng() % m_);
        return x;
    }

private:
    const Fq& F_;
    int p_, f_, m_;
    std::vector<GRElem> teich_;
};

inline GRElem teichmuller(const GR& R, int lambda) { return R.teich(lambda); }

// (a b; c d) over GR
struct M2 {
    GRElem a, b, c, d;
    bool operator==(const M2&) const = default;
};

inline M2 mat_mul(const GR& R, const M2& x, const M2& y) {
    return {R.add(R.mul(x.a, y.a), R.mul(x.b, y.c)), R.add(R.mul(x.a, y.b), R.mul(x.b, y.d)),
            R.add(R.mul(x.c, y.a), R.mul(x.d, y.c)), R.add(R.mul(x.c, y.b), R.mul(x.d, y.d))};
}
inline GRElem mat_det(const GR& R, const M2& x) { return R.sub(R.mul(x.a, x.d), R.mul(x.b, x.c)); }
inline bool mat_invertible(const GR& R, const M2& x) { return R.is_unit(mat_det(R, x)); }
inline M2 mat_inv(const GR& R, const M2& x) {
    GRElem di = R.inv(mat_det(R, x));
    return {R.mul(di, x.d), R.mul(di, R.neg(x.b)), R.mul(di, R.neg(x.c)), R.mul(di, x.a)};
}
inline M2 mat_id(const GR& R) { return {R.one(), R.zero(), R.zero(), R.one()}; }
inline bool in_I(const GR& R, const M2& x) { return mat_invertible(R, x) && R.divisible_by_p(x.c); }

// entries mod p
struct M2bar {
    int a, b, c, d;
};
inline M2bar reduce(const GR& R, const M2& x) { return {R.reduce(x.a), R.reduce(x.b), R.reduce(x.c), R.reduce(x.d)}; }

} // namespace gl2w::oracle
