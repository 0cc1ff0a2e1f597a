// Canonical subspaces and the four categorical primitives: kernel, quotient,
// equalizer, coequalizer. A subspace is stored as its reduced row-echelon
// basis, which is the unique canonical representative, so equality of
// subspaces is entrywise equality of bases.

#ifndef HOPFCORR_SUBSPACE_HPP
#define HOPFCORR_SUBSPACE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hopfcorr/matrix.hpp"

namespace hopfcorr {

// In-place reduced row echelon form; returns pivot column indices.
template <class K>
std::vector<int> rref(Matrix<K>& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        K inv = m.at(r, c).inv();
        for (int j = c; j < m.cols(); ++j) m.at(r, j) = inv * m.at(r, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            K f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class K>
int rank(Matrix<K> m) {
    return int(rref(m).size());
}

template <class K>
class Subspace {
public:
    Subspace() : ambient_(0) {}
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span(int ambient, const std::vector<Vec<K>>& vectors) {
        Matrix<K> m = Matrix<K>::from_rows(ambient, vectors);
        return span_rows(m);
    }
    // Rows of m span the subspace.
    static Subspace span_rows(Matrix<K> m) {
        auto pivots = rref(m);
        Subspace s(m.cols());
        s.basis_ = Matrix<K>(int(pivots.size()), m.cols());
        for (int i = 0; i < int(pivots.size()); ++i) s.basis_.set_row(i, m.row(i));
        s.pivots_ = std::move(pivots);
        return s;
    }
    static Subspace full(int ambient) { return span_rows(Matrix<K>::identity(ambient)); }

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix<K>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    Vec<K> basis_vector(int i) const { return basis_.row(i); }

    // Residue of v modulo the subspace (zero iff v is a member).
    Vec<K> reduce(Vec<K> v) const {
        for (int i = 0; i < dim(); ++i) {
            K c = v[pivots_[i]];
            if (c.is_zero()) continue;
            for (int j = 0; j < ambient_; ++j) v[j] -= c * basis_.at(i, j);
        }
        return v;
    }
    bool contains(const Vec<K>& v) const { return vec_is_zero(reduce(v)); }
    bool contains(const Subspace& other) const {
        for (int i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    // Coordinates of a member with respect to the canonical basis.
    Vec<K> coords(const Vec<K>& v) const {
        if (!contains(v)) throw hc_error("subspace: coords of a non-member");
        Vec<K> c(dim());
        for (int i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
        return c;
    }
    // Ambient embedding matrix, one basis vector per column.
    Matrix<K> embedding() const { return basis_.transpose(); }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw hc_error("subspace sum: ambient mismatch");
        return span_rows(Matrix<K>::vstack(a.basis_, b.basis_));
    }
    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    int ambient_;
    Matrix<K> basis_;
    std::vector<int> pivots_;
};

// kernel(f) = {v : f v = 0}, canonical.
template <class K>
Subspace<K> kernel(Matrix<K> f) {
    int n = f.cols();
    auto pivots = rref(f);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vec<K>> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        Vec<K> v(n);
        v[c] = K(1);
        for (int i = 0; i < int(pivots.size()); ++i) v[pivots[i]] = -f.at(i, c);
        basis.push_back(v);
    }
    return Subspace<K>::span(n, basis);
}

// image(f) = column span, canonical.
template <class K>
Subspace<K> image(const Matrix<K>& f) {
    return Subspace<K>::span_rows(f.transpose());
}

// Canonical quotient of the ambient space by U: projection || section with
// projection * section = id and kernel(projection) = U. The section spans the
// non-pivot coordinate axes of U's echelon basis.
template <class K>
struct Quotient {
    Matrix<K> projection;  // (ambient - dim U) x ambient
    Matrix<K> section;     // ambient x (ambient - dim U)
};

template <class K>
Quotient<K> quotient(int ambient_dim, const Subspace<K>& u) {
    if (u.ambient_dim() != ambient_dim) throw hc_error("quotient: ambient mismatch");
    std::vector<bool> is_pivot(ambient_dim, false);
    for (int c : u.pivots()) is_pivot[c] = true;
    std::vector<int> free;
    for (int c = 0; c < ambient_dim; ++c)
        if (!is_pivot[c]) free.push_back(c);
    int q = int(free.size());
    Quotient<K> result{Matrix<K>(q, ambient_dim), Matrix<K>(ambient_dim, q)};
    for (int j = 0; j < q; ++j) {
        result.section.at(free[j], j) = K(1);
        result.projection.at(j, free[j]) = K(1);
        for (int i = 0; i < u.dim(); ++i)
            result.projection.at(j, u.pivots()[i]) = -u.basis().at(i, free[j]);
    }
    return result;
}

template <class K>
Subspace<K> equalizer(const Matrix<K>& f, const Matrix<K>& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw hc_error("equalizer: shape mismatch");
    return kernel(f - g);
}

template <class K>
Quotient<K> coequalizer(const Matrix<K>& f, const Matrix<K>& g) {
    if (f.rows() != g.rows() || f.cols() != g.cols())
        throw hc_error("coequalizer: shape mismatch");
    return quotient(f.rows(), image(f - g));
}

template <class K>
Subspace<K> intersect(const Subspace<K>& a, const Subspace<K>& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw hc_error("intersect: ambient mismatch");
    // x in both spans: x = a^T s = b^T t; solve [a^T | -b^T] and read off a^T s.
    Matrix<K> at = a.embedding(), bt = b.embedding();
    Matrix<K> joint(a.ambient_dim(), a.dim() + b.dim());
    for (int i = 0; i < a.ambient_dim(); ++i) {
        for (int j = 0; j < a.dim(); ++j) joint.at(i, j) = at.at(i, j);
        for (int j = 0; j < b.dim(); ++j) joint.at(i, a.dim() + j) = -bt.at(i, j);
    }
    Subspace<K> null = kernel(joint);
    std::vector<Vec<K>> vectors;
    for (int i = 0; i < null.dim(); ++i) {
        Vec<K> both = null.basis_vector(i);
        Vec<K> s(both.begin(), both.begin() + a.dim());
        vectors.push_back(at.apply(s));
    }
    return Subspace<K>::span(a.ambient_dim(), vectors);
}

// Particular solution of f x = b: the reduced-echelon solution with all free
// variables set to zero (the lexicographically first pivot solution).
template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& f, const Vec<K>& b) {
    if (int(b.size()) != f.rows()) throw hc_error("solve: shape mismatch");
    Matrix<K> aug(f.rows(), f.cols() + 1);
    for (int i = 0; i < f.rows(); ++i) {
        for (int j = 0; j < f.cols(); ++j) aug.at(i, j) = f.at(i, j);
        aug.at(i, f.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == f.cols()) return std::nullopt;
    Vec<K> x(f.cols());
    for (int i = 0; i < int(pivots.size()); ++i) x[pivots[i]] = aug.at(i, f.cols());
    return x;
}

}  // namespace hopfcorr

#endif
