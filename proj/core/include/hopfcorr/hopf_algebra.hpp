// Structure-constant presentation of a finite-dimensional Hopf algebra and
// the axiom checker gating every construction downstream.
//
// Conventions: mult[i][j][k] is the coefficient of e_k in e_i e_j,
// comult[i][j][k] the coefficient of e_j (x) e_k in Delta(e_i), and the
// antipode matrix acts on column vectors. Tensor-square coordinates are
// (i,j) = i*dim + j.

#ifndef HOPFCORR_HOPF_ALGEBRA_HPP
#define HOPFCORR_HOPF_ALGEBRA_HPP

#include <string>
#include <vector>

#include "hopfcorr/subspace.hpp"

namespace hopfcorr {

template <class K>
class Cubic {
public:
    Cubic() : n0_(0), n1_(0), n2_(0) {}
    Cubic(int n0, int n1, int n2) : n0_(n0), n1_(n1), n2_(n2), t_(size_t(n0) * n1 * n2) {}

    int dim0() const { return n0_; }
    int dim1() const { return n1_; }
    int dim2() const { return n2_; }
    K& at(int i, int j, int k) { return t_[(size_t(i) * n1_ + j) * n2_ + k]; }
    const K& at(int i, int j, int k) const { return t_[(size_t(i) * n1_ + j) * n2_ + k]; }
    friend bool operator==(const Cubic& a, const Cubic& b) {
        return a.n0_ == b.n0_ && a.n1_ == b.n1_ && a.n2_ == b.n2_ && a.t_ == b.t_;
    }
    friend bool operator!=(const Cubic& a, const Cubic& b) { return !(a == b); }

private:
    int n0_, n1_, n2_;
    std::vector<K> t_;
};

struct AxiomCheck {
    std::string family;
    bool pass = true;
    std::vector<int> witness;  // basis indices of the first failure
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return c.family;
        return "";
    }
};

template <class K>
struct HopfAlgebra {
    int dim = 0;
    FieldDesc field;
    std::vector<std::string> labels;
    Cubic<K> mult;     // (i,j) -> k
    Vec<K> unit;       // coordinates of 1
    Cubic<K> comult;   // i -> (j,k)
    Vec<K> counit;     // eps(e_i)
    Matrix<K> antipode;
    bool verified = false;

    // --- arithmetic on coordinate vectors ---
    Vec<K> mul(const Vec<K>& a, const Vec<K>& b) const {
        Vec<K> r(dim);
        for (int i = 0; i < dim; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j) {
                if (b[j].is_zero()) continue;
                K c = a[i] * b[j];
                for (int k = 0; k < dim; ++k)
                    if (!mult.at(i, j, k).is_zero()) r[k] += c * mult.at(i, j, k);
            }
        }
        return r;
    }
    Vec<K> delta(const Vec<K>& v) const {
        Vec<K> r(size_t(dim) * dim);
        for (int i = 0; i < dim; ++i) {
            if (v[i].is_zero()) continue;
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k)
                    if (!comult.at(i, j, k).is_zero())
                        r[size_t(j) * dim + k] += v[i] * comult.at(i, j, k);
        }
        return r;
    }
    K eps(const Vec<K>& v) const {
        K r;
        for (int i = 0; i < dim; ++i)
            if (!v[i].is_zero()) r += counit[i] * v[i];
        return r;
    }
    Vec<K> apply_antipode(const Vec<K>& v) const { return antipode.apply(v); }

    // product in the tensor-square algebra H (x) H
    Vec<K> mul2(const Vec<K>& x, const Vec<K>& y) const {
        Vec<K> r(size_t(dim) * dim);
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) {
                const K& xa = x[size_t(a) * dim + b];
                if (xa.is_zero()) continue;
                for (int c = 0; c < dim; ++c)
                    for (int d = 0; d < dim; ++d) {
                        const K& yc = y[size_t(c) * dim + d];
                        if (yc.is_zero()) continue;
                        K coeff = xa * yc;
                        for (int k = 0; k < dim; ++k) {
                            if (mult.at(a, c, k).is_zero()) continue;
                            K ck = coeff * mult.at(a, c, k);
                            for (int l = 0; l < dim; ++l)
                                if (!mult.at(b, d, l).is_zero())
                                    r[size_t(k) * dim + l] += ck * mult.at(b, d, l);
                        }
                    }
            }
        return r;
    }

    // --- matrix forms of the structure maps ---
    Matrix<K> mult_matrix() const {  // H (x) H -> H
        Matrix<K> m(dim, dim * dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k) m.at(k, i * dim + j) = mult.at(i, j, k);
        return m;
    }
    Matrix<K> comult_matrix() const {  // H -> H (x) H
        Matrix<K> m(dim * dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k) m.at(j * dim + k, i) = comult.at(i, j, k);
        return m;
    }
    Matrix<K> counit_matrix() const {
        Matrix<K> m(1, dim);
        for (int i = 0; i < dim; ++i) m.at(0, i) = counit[i];
        return m;
    }
    Matrix<K> antipode_inverse() const {
        Matrix<K> aug = antipode;
        Matrix<K> inv = Matrix<K>::identity(dim);
        // invert by solving S x = e_i column by column
        Matrix<K> joined(dim, 2 * dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                joined.at(i, j) = aug.at(i, j);
                joined.at(i, dim + j) = (i == j) ? K(1) : K();
            }
        auto pivots = rref(joined);
        if (int(pivots.size()) != dim || pivots.back() != dim - 1)
            throw hc_error("antipode is not invertible");
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) inv.at(i, j) = joined.at(i, dim + j);
        return inv;
    }

    Subspace<K> augmentation_ideal() const {  // H^+ = Ker eps
        return kernel(counit_matrix());
    }

    const HopfAlgebra& require_verified() const {
        if (!verified) throw hc_error("unverified Hopf algebra passed downstream");
        return *this;
    }

    // table-for-table equality (verification status not included)
    friend bool operator==(const HopfAlgebra& a, const HopfAlgebra& b) {
        return a.dim == b.dim && a.field == b.field && a.labels == b.labels &&
               a.mult == b.mult && a.unit == b.unit && a.comult == b.comult &&
               a.counit == b.counit && a.antipode == b.antipode;
    }
    friend bool operator!=(const HopfAlgebra& a, const HopfAlgebra& b) { return !(a == b); }
};

template <class K>
AxiomReport verify_axioms(const HopfAlgebra<K>& h);

template <class K>
HopfAlgebra<K> make_hopf_algebra(int dim, FieldDesc field, std::vector<std::string> labels,
                                 Cubic<K> mult, Vec<K> unit, Cubic<K> comult, Vec<K> counit,
                                 Matrix<K> antipode) {
    HopfAlgebra<K> h{dim, field, std::move(labels), std::move(mult), std::move(unit),
                     std::move(comult), std::move(counit), std::move(antipode), false};
    AxiomReport report = verify_axioms(h);
    if (!report.all_pass())
        throw hc_error("Hopf axiom failure: " + report.first_failure());
    h.verified = true;
    return h;
}

// For negative tests only: skips verification and leaves the value unusable
// by the correspondence engine.
template <class K>
HopfAlgebra<K> make_hopf_algebra_unchecked(int dim, FieldDesc field,
                                           std::vector<std::string> labels, Cubic<K> mult,
                                           Vec<K> unit, Cubic<K> comult, Vec<K> counit,
                                           Matrix<K> antipode) {
    return HopfAlgebra<K>{dim,
                          field,
                          std::move(labels),
                          std::move(mult),
                          std::move(unit),
                          std::move(comult),
                          std::move(counit),
                          std::move(antipode),
                          false};
}

template <class K>
AxiomReport verify_axioms(const HopfAlgebra<K>& h) {
    const int n = h.dim;
    if (h.mult.dim0() != n || h.mult.dim1() != n || h.mult.dim2() != n ||
        h.comult.dim0() != n || h.comult.dim1() != n || h.comult.dim2() != n ||
        int(h.unit.size()) != n || int(h.counit.size()) != n || h.antipode.rows() != n ||
        h.antipode.cols() != n)
        throw hc_error("verify_axioms: dimension-inconsistent tables");

    AxiomReport report;
    auto add = [&report](const std::string& family, bool pass, std::vector<int> witness) {
        report.checks.push_back({family, pass, pass ? std::vector<int>{} : std::move(witness)});
    };
    auto e = [n](int i) { return basis_vec<K>(n, i); };

    {  // associativity
        bool ok = true;
        std::vector<int> w;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                for (int k = 0; k < n && ok; ++k)
                    if (h.mul(h.mul(e(i), e(j)), e(k)) != h.mul(e(i), h.mul(e(j), e(k)))) {
                        ok = false;
                        w = {i, j, k};
                    }
        add("associativity", ok, w);
    }
    {  // unit
        bool ok = true;
        std::vector<int> w;
        for (int i = 0; i < n && ok; ++i)
            if (h.mul(h.unit, e(i)) != e(i) || h.mul(e(i), h.unit) != e(i)) {
                ok = false;
                w = {i};
            }
        add("unit", ok, w);
    }
    {  // coassociativity: (Delta (x) id)Delta = (id (x) Delta)Delta
        bool ok = true;
        std::vector<int> w;
        for (int i = 0; i < n && ok; ++i) {
            Vec<K> lhs(size_t(n) * n * n), rhs(size_t(n) * n * n);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const K& t = h.comult.at(i, j, k);
                    if (t.is_zero()) continue;
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b) {
                            if (!h.comult.at(j, a, b).is_zero())
                                lhs[(size_t(a) * n + b) * n + k] += t * h.comult.at(j, a, b);
                            if (!h.comult.at(k, a, b).is_zero())
                                rhs[(size_t(j) * n + a) * n + b] += t * h.comult.at(k, a, b);
                        }
                }
            if (lhs != rhs) {
                ok = false;
                w = {i};
            }
        }
        add("coassociativity", ok, w);
    }
    {  // counit law
        bool ok = true;
        std::vector<int> w;
        for (int i = 0; i < n && ok; ++i) {
            Vec<K> left(n), right(n);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const K& t = h.comult.at(i, j, k);
                    if (t.is_zero()) continue;
                    left[k] += h.counit[j] * t;
                    right[j] += h.counit[k] * t;
                }
            if (left != e(i) || right != e(i)) {
                ok = false;
                w = {i};
            }
        }
        add("counit", ok, w);
    }
    {  // comultiplication is an algebra map (including Delta(1) = 1 (x) 1)
        bool ok = vec_is_zero(vec_sub(h.delta(h.unit), vec_tensor(h.unit, h.unit)));
        std::vector<int> w = ok ? std::vector<int>{} : std::vector<int>{-1};
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (h.delta(h.mul(e(i), e(j))) != h.mul2(h.delta(e(i)), h.delta(e(j)))) {
                    ok = false;
                    w = {i, j};
                }
        add("comult_algebra_map", ok, w);
    }
    {  // counit is an algebra map
        bool ok = h.eps(h.unit) == K(1);
        std::vector<int> w = ok ? std::vector<int>{} : std::vector<int>{-1};
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j)
                if (h.eps(h.mul(e(i), e(j))) != h.counit[i] * h.counit[j]) {
                    ok = false;
                    w = {i, j};
                }
        add("counit_algebra_map", ok, w);
    }
    {  // antipode axiom: m(S (x) id)Delta = unit.counit = m(id (x) S)Delta
        bool ok = true;
        std::vector<int> w;
        for (int i = 0; i < n && ok; ++i) {
            Vec<K> left(n), right(n);
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const K& t = h.comult.at(i, j, k);
                    if (t.is_zero()) continue;
                    left = vec_add(left, vec_scale(t, h.mul(h.apply_antipode(e(j)), e(k))));
                    right = vec_add(right, vec_scale(t, h.mul(e(j), h.apply_antipode(e(k)))));
                }
            Vec<K> target = vec_scale(h.counit[i], h.unit);
            if (left != target || right != target) {
                ok = false;
                w = {i};
            }
        }
        add("antipode", ok, w);
    }
    {
        bool ok = rank(h.antipode) == n;
        add("antipode_bijective", ok, ok ? std::vector<int>{} : std::vector<int>{-1});
    }
    return report;
}

// Dual Hopf algebra on the dual basis: multiplication and comultiplication
// tables transpose into each other, the antipode transposes.
template <class K>
HopfAlgebra<K> dual(const HopfAlgebra<K>& h) {
    const int n = h.dim;
    Cubic<K> mult(n, n, n), comult(n, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                mult.at(i, j, k) = h.comult.at(k, i, j);
                comult.at(i, j, k) = h.mult.at(j, k, i);
            }
    std::vector<std::string> labels;
    for (const auto& l : h.labels) labels.push_back(l + "*");
    return make_hopf_algebra<K>(n, h.field, std::move(labels), std::move(mult), h.counit,
                                std::move(comult), h.unit, h.antipode.transpose());
}

enum class Twist { op, cop, opcop };

// H^op / H^cop / H^op,cop. The antipode of H^op and H^cop is S^{-1}.
template <class K>
HopfAlgebra<K> twist(const HopfAlgebra<K>& h, Twist which) {
    const int n = h.dim;
    Cubic<K> mult(n, n, n), comult(n, n, n);
    bool flip_mult = which != Twist::cop;
    bool flip_comult = which != Twist::op;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                mult.at(i, j, k) = flip_mult ? h.mult.at(j, i, k) : h.mult.at(i, j, k);
                comult.at(i, j, k) = flip_comult ? h.comult.at(i, k, j) : h.comult.at(i, j, k);
            }
    Matrix<K> s = (which == Twist::opcop) ? h.antipode : h.antipode_inverse();
    return make_hopf_algebra<K>(n, h.field, h.labels, std::move(mult), h.unit,
                                std::move(comult), h.counit, std::move(s));
}

}  // namespace hopfcorr

#endif
