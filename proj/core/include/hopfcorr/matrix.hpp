// Dense matrices over an exact field. Vectors are column vectors; a matrix
// f with shape (rows, cols) is a linear map K^cols -> K^rows.
// Tensor coordinates follow index(i,j) = i*dim_second + j throughout.

#ifndef HOPFCORR_MATRIX_HPP
#define HOPFCORR_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "hopfcorr/field.hpp"

namespace hopfcorr {

template <class K>
using Vec = std::vector<K>;

template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    K& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    const K& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }

    Vec<K> row(int i) const {
        return Vec<K>(e_.begin() + size_t(i) * cols_, e_.begin() + size_t(i + 1) * cols_);
    }
    Vec<K> col(int j) const {
        Vec<K> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }
    void set_row(int i, const Vec<K>& v) {
        for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
    }

    bool is_zero() const {
        for (const K& x : e_) if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b);
        Matrix r(a.rows_, a.cols_);
        for (size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] - b.e_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw hc_error("matrix product: shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const K& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const K& bkj = b.at(k, j);
                    if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != b.e_[i]) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Vec<K> apply(const Vec<K>& v) const {
        if (int(v.size()) != cols_) throw hc_error("matrix apply: shape mismatch");
        Vec<K> r(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        return r;
    }

    // Kronecker product: acts on tensor coordinates (i,j) = i*b.cols + j.
    Matrix kron(const Matrix& b) const {
        Matrix r(rows_ * b.rows_, cols_ * b.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const K& aij = at(i, j);
                if (aij.is_zero()) continue;
                for (int k = 0; k < b.rows_; ++k)
                    for (int l = 0; l < b.cols_; ++l)
                        if (!b.at(k, l).is_zero())
                            r.at(i * b.rows_ + k, j * b.cols_ + l) = aij * b.at(k, l);
            }
        return r;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.cols_) throw hc_error("vstack: shape mismatch");
        Matrix r(a.rows_ + b.rows_, a.cols_);
        for (int i = 0; i < a.rows_; ++i) r.set_row(i, a.row(i));
        for (int i = 0; i < b.rows_; ++i) r.set_row(a.rows_ + i, b.row(i));
        return r;
    }

    static Matrix from_rows(int cols, const std::vector<Vec<K>>& rows) {
        Matrix r(int(rows.size()), cols);
        for (int i = 0; i < int(rows.size()); ++i) {
            if (int(rows[i].size()) != cols) throw hc_error("from_rows: ragged rows");
            r.set_row(i, rows[i]);
        }
        return r;
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw hc_error("matrix op: shape mismatch");
    }
    int rows_, cols_;
    std::vector<K> e_;
};

// Vector helpers.
template <class K>
Vec<K> zero_vec(int n) { return Vec<K>(n); }

template <class K>
Vec<K> basis_vec(int n, int i) {
    Vec<K> v(n);
    v[i] = K(1);
    return v;
}

template <class K>
bool vec_is_zero(const Vec<K>& v) {
    for (const K& x : v) if (!x.is_zero()) return false;
    return true;
}

template <class K>
Vec<K> vec_add(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class K>
Vec<K> vec_sub(const Vec<K>& a, const Vec<K>& b) {
    Vec<K> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class K>
Vec<K> vec_scale(const K& c, const Vec<K>& v) {
    Vec<K> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

// Tensor coordinates of v (x) w, index (i,j) = i*dim(w) + j.
template <class K>
Vec<K> vec_tensor(const Vec<K>& v, const Vec<K>& w) {
    Vec<K> r(v.size() * w.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        for (size_t j = 0; j < w.size(); ++j)
            if (!w[j].is_zero()) r[i * w.size() + j] = v[i] * w[j];
    }
    return r;
}

// Permutation matrix reordering tensor legs. dims are the source leg
// dimensions; perm[t] is the source leg placed at target position t.
template <class K>
Matrix<K> tensor_permutation(const std::vector<int>& dims, const std::vector<int>& perm) {
    int total = 1;
    for (int d : dims) total *= d;
    Matrix<K> p(total, total);
    int m = int(dims.size());
    std::vector<int> idx(m, 0);
    for (int src = 0; src < total; ++src) {
        // decode src into leg indices (leg 0 is the slowest-varying)
        int rem = src;
        for (int t = m - 1; t >= 0; --t) {
            idx[t] = rem % dims[t];
            rem /= dims[t];
        }
        int dst = 0;
        for (int t = 0; t < m; ++t) dst = dst * dims[perm[t]] + idx[perm[t]];
        p.at(dst, src) = K(1);
    }
    return p;
}

}  // namespace hopfcorr

#endif
