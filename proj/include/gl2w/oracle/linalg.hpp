#pragma once

#include <deque>
#include <vector>

#include "fq.hpp"

namespace gl2w::oracle {

using Vec = std::vector<int>;

// dense row-major matrix over F_q
struct Mat {
    int rows = 0, cols = 0;
    std::vector<int> a;
    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    int& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    int operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    bool operator==(const Mat&) const = default;
};

inline Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

inline bool is_zero(const Vec& v) {
    for (int x : v)
        if (x) return false;
    return true;
}

inline Mat mat_mul(const Fq& F, const Mat& x, const Mat& y) {
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int c = x(i, k);
            if (!c) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y(k, j)) r(i, j) = F.add(r(i, j), F.mul(c, y(k, j)));
        }
    return r;
}

inline Vec apply(const Fq& F, const Mat& m, const Vec& v) {
    Vec r(m.rows, 0);
    for (int j = 0; j < m.cols; ++j) {
        if (!v[j]) continue;
        for (int i = 0; i < m.rows; ++i)
            if (m(i, j)) r[i] = F.add(r[i], F.mul(m(i, j), v[j]));
    }
    return r;
}

inline Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

inline Vec vadd(const Fq& F, Vec x, const Vec& y) {
    for (size_t i = 0; i < x.size(); ++i) x[i] = F.add(x[i], y[i]);
    return x;
}
inline Vec vsub(const Fq& F, Vec x, const Vec& y) {
    for (size_t i = 0; i < x.size(); ++i) x[i] = F.sub(x[i], y[i]);
    return x;
}
inline Vec vscale(const Fq& F, Vec x, int c) {
    for (int& e : x) e = F.mul(e, c);
    return x;
}
inline Vec unit(int n, int i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

// reduced row echelon basis of a subspace, grown incrementally
class Echelon {
public:
    Echelon(const Fq& F, int n) : F_(&F), n_(n) {}

    int ambient() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return piv_; }

    Vec reduce(Vec v) const {
        for (size_t k = 0; k < rows_.size(); ++k) {
            int c = v[piv_[k]];
            if (!c) continue;
            const Vec& r = rows_[k];
            for (int i = 0; i < n_; ++i)
                if (r[i]) v[i] = F_->sub(v[i], F_->mul(c, r[i]));
        }
        return v;
    }
    bool contains(const Vec& v) const { return is_zero(reduce(v)); }

    bool add(const Vec& v0) {
        Vec v = reduce(v0);
        int pv = -1;
        for (int i = 0; i < n_; ++i)
            if (v[i]) {
                pv = i;
                break;
            }
        if (pv < 0) return false;
        v = vscale(*F_, v, F_->inv(v[pv]));
        for (auto& r : rows_) {
            int c = r[pv];
            if (!c) continue;
            for (int i = 0; i < n_; ++i)
                if (v[i]) r[i] = F_->sub(r[i], F_->mul(c, v[i]));
        }
        rows_.push_back(std::move(v));
        piv_.push_back(pv);
        return true;
    }
    void add_all(const std::vector<Vec>& vs) {
        for (const auto& v : vs) add(v);
    }

    // coordinates of v in the basis rows (v must lie in the span)
    Vec coords(const Vec& v) const {
        Vec c(rows_.size());
        for (size_t k = 0; k < rows_.size(); ++k) c[k] = v[piv_[k]];
        return c;
    }

private:
    const Fq* F_;
    int n_;
    std::vector<Vec> rows_;
    std::vector<int> piv_;
};

inline Echelon span_of(const Fq& F, int n, const std::vector<Vec>& vs) {
    Echelon E(F, n);
    E.add_all(vs);
    return E;
}

inline int rank(const Fq& F, const Mat& m) {
    Echelon E(F, m.cols);
    for (int i = 0; i < m.rows; ++i) E.add(Vec(m.a.begin() + static_cast<long>(i) * m.cols, m.a.begin() + static_cast<long>(i + 1) * m.cols));
    return E.dim();
}

// basis of {x : A x = 0}
inline std::vector<Vec> nullspace(const Fq& F, const Mat& A) {
    Echelon E(F, A.cols);
    for (int i = 0; i < A.rows; ++i) E.add(Vec(A.a.begin() + static_cast<long>(i) * A.cols, A.a.begin() + static_cast<long>(i + 1) * A.cols));
    std::vector<char> is_piv(A.cols, 0);
    for (int pv : E.pivots()) is_piv[pv] = 1;
    std::vector<Vec> out;
    for (int free = 0; free < A.cols; ++free) {
        if (is_piv[free]) continue;
        Vec x(A.cols, 0);
        x[free] = 1;
        for (int k = 0; k < E.dim(); ++k) x[E.pivots()[k]] = F.neg(E.rows()[k][free]);
        out.push_back(std::move(x));
    }
    return out;
}

// stacked rows -> matrix
inline Mat stack(const std::vector<Vec>& rows, int n) {
    Mat m(static_cast<int>(rows.size()), n);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < n; ++j) m(static_cast<int>(i), j) = rows[i][j];
    return m;
}

inline std::vector<Vec> intersect(const Fq& F, const Echelon& A, const Echelon& B) {
    // x = sum a_i A_i = sum b_k B_k  <=>  [A^T | -B^T] (a,b) = 0
    const int n = A.ambient(), da = A.dim(), db = B.dim();
    Mat M(n, da + db);
    for (int i = 0; i < da; ++i)
        for (int r = 0; r < n; ++r) M(r, i) = A.rows()[i][r];
    for (int k = 0; k < db; ++k)
        for (int r = 0; r < n; ++r) M(r, da + k) = F.neg(B.rows()[k][r]);
    std::vector<Vec> out;
    for (const auto& s : nullspace(F, M)) {
        Vec x(n, 0);
        for (int i = 0; i < da; ++i)
            if (s[i]) x = vadd(F, x, vscale(F, A.rows()[i], s[i]));
        out.push_back(std::move(x));
    }
    return out;
}

// smallest subspace containing start and stable under the given matrices
inline Echelon spin(const Fq& F, const std::vector<Mat>& gens, const std::vector<Vec>& start, int n) {
    Echelon E(F, n);
    std::deque<Vec> todo;
    for (const auto& v : start)
        if (E.add(v)) todo.push_back(v);
    while (!todo.empty()) {
        Vec v = std::move(todo.front());
        todo.pop_front();
        for (const auto& g : gens) {
            Vec w = apply(F, g, v);
            if (E.add(w)) todo.push_back(std::move(w));
        }
    }
    return E;
}

} // namespace gl2w::oracle
