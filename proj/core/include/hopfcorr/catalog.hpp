// Builders for the concrete Hopf algebras exercised by the test suite:
// abelian group algebras kG, their duals, Sweedler's 4-dimensional algebra,
// and Taft algebras of dimension n^2.

#ifndef HOPFCORR_CATALOG_HPP
#define HOPFCORR_CATALOG_HPP

#include <numeric>
#include <string>
#include <vector>

#include "hopfcorr/hopf_algebra.hpp"

namespace hopfcorr {

struct AlgebraSpec {
    enum class Family { group_algebra, dual_group_algebra, sweedler4, taft };
    Family family = Family::group_algebra;
    std::vector<int> cyclic_orders;  // direct product of cyclic groups
    int taft_n = 0;
    long taft_q = 0;  // root of unity, as an integer image in the field
    FieldDesc field;

    std::string name() const;
};

// kG for G a direct product of cyclic groups: Delta g = g (x) g, S(g) = g^{-1}.
template <class K>
HopfAlgebra<K> build_group_algebra(const std::vector<int>& orders, FieldDesc field) {
    if (orders.empty()) throw hc_error("group algebra: empty presentation");
    for (int n : orders)
        if (n < 1) throw hc_error("group algebra: cyclic order must be >= 1");
    int dim = 1;
    for (int n : orders) dim *= n;
    int factors = int(orders.size());

    auto index_of = [&](const std::vector<int>& exps) {
        int idx = 0;
        for (int t = 0; t < factors; ++t) idx = idx * orders[t] + exps[t];
        return idx;
    };
    auto exps_of = [&](int idx) {
        std::vector<int> e(factors);
        for (int t = factors - 1; t >= 0; --t) {
            e[t] = idx % orders[t];
            idx /= orders[t];
        }
        return e;
    };
    auto label_of = [&](const std::vector<int>& e) {
        std::string s;
        for (int t = 0; t < factors; ++t) {
            if (e[t] == 0) continue;
            std::string gen = factors == 1 ? "g" : "g" + std::to_string(t + 1);
            s += s.empty() ? "" : "*";
            s += gen + (e[t] == 1 ? "" : "^" + std::to_string(e[t]));
        }
        return s.empty() ? std::string("1") : s;
    };

    Cubic<K> mult(dim, dim, dim), comult(dim, dim, dim);
    Vec<K> unit(dim), counit(dim);
    Matrix<K> antipode(dim, dim);
    std::vector<std::string> labels(dim);
    K one = field_of<K>::from_long(1, field);
    for (int a = 0; a < dim; ++a) {
        auto ea = exps_of(a);
        labels[a] = label_of(ea);
        counit[a] = one;
        comult.at(a, a, a) = one;
        std::vector<int> inv(factors);
        for (int t = 0; t < factors; ++t) inv[t] = (orders[t] - ea[t]) % orders[t];
        antipode.at(index_of(inv), a) = one;
        for (int b = 0; b < dim; ++b) {
            auto eb = exps_of(b);
            std::vector<int> sum(factors);
            for (int t = 0; t < factors; ++t) sum[t] = (ea[t] + eb[t]) % orders[t];
            mult.at(a, b, index_of(sum)) = one;
        }
    }
    unit[0] = one;
    return make_hopf_algebra<K>(dim, field, std::move(labels), std::move(mult),
                                std::move(unit), std::move(comult), std::move(counit),
                                std::move(antipode));
}

// Taft algebra of dimension n^2: g^n = 1, x^n = 0, xg = q gx,
// Delta x = x (x) 1 + g (x) x, with q a primitive n-th root of unity.
// Basis g^i x^j at index j*n + i, so Taft(2, -1) lands on the Sweedler basis
// order 1, g, x, gx.
template <class K>
HopfAlgebra<K> build_taft(int n, long q_int, FieldDesc field) {
    if (n < 2) throw hc_error("taft: degree must be >= 2");
    K q = field_of<K>::from_long(q_int, field);
    K one = field_of<K>::from_long(1, field);
    // primitive n-th root: q^n = 1 and q^d != 1 for proper divisors d >= 1
    K power = one;
    std::vector<K> powers{one};
    for (int d = 1; d <= n; ++d) {
        power = power * q;
        powers.push_back(power);
    }
    if (powers[n] != one) throw hc_error("taft: q is not an n-th root of unity");
    for (int d = 1; d < n; ++d)
        if (n % d == 0 && powers[d] == one)
            throw hc_error("taft: q is not a primitive n-th root of unity");

    int dim = n * n;
    auto idx = [n](int i, int j) { return j * n + i; };
    std::vector<std::string> labels(dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::string s;
            if (i > 0) s += "g" + (i == 1 ? std::string() : "^" + std::to_string(i));
            if (j > 0) s += "x" + (j == 1 ? std::string() : "^" + std::to_string(j));
            labels[idx(i, j)] = s.empty() ? "1" : s;
        }

    // (g^i x^j)(g^k x^l) = q^{jk} g^{i+k} x^{j+l}
    Cubic<K> mult(dim, dim, dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    if (j + l >= n) continue;
                    K coeff = one;
                    for (int t = 0; t < j * k; ++t) coeff = coeff * q;
                    mult.at(idx(i, j), idx(k, l), idx((i + k) % n, j + l)) = coeff;
                }
    Vec<K> unit(dim), counit(dim);
    unit[idx(0, 0)] = one;
    for (int i = 0; i < n; ++i) counit[idx(i, 0)] = one;

    // Delta is the algebra map with Delta g = g (x) g, Delta x = x (x) 1 + g (x) x;
    // rows are computed as products in H (x) H so multiplicativity is built in.
    HopfAlgebra<K> scratch;
    scratch.dim = dim;
    scratch.mult = mult;
    Vec<K> delta_g(size_t(dim) * dim), delta_x(size_t(dim) * dim);
    delta_g[size_t(idx(1, 0)) * dim + idx(1, 0)] = one;
    delta_x[size_t(idx(0, 1)) * dim + idx(0, 0)] = one;
    delta_x[size_t(idx(1, 0)) * dim + idx(0, 1)] = one;
    Vec<K> delta_unit(size_t(dim) * dim);
    delta_unit[size_t(idx(0, 0)) * dim + idx(0, 0)] = one;

    Cubic<K> comult(dim, dim, dim);
    Vec<K> dgi = delta_unit;
    for (int i = 0; i < n; ++i) {
        Vec<K> d = dgi;
        for (int j = 0; j < n; ++j) {
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) comult.at(idx(i, j), a, b) = d[size_t(a) * dim + b];
            if (j + 1 < n) d = scratch.mul2(d, delta_x);
        }
        if (i + 1 < n) dgi = scratch.mul2(dgi, delta_g);
    }

    // S is the antialgebra map with S(g) = g^{-1}, S(x) = -g^{-1} x:
    // S(g^i x^j) = S(x)^j S(g)^i.
    Matrix<K> antipode(dim, dim);
    Vec<K> s_g = basis_vec<K>(dim, idx((n - 1) % n, 0));
    Vec<K> s_x = vec_scale(-one, scratch.mul(s_g, basis_vec<K>(dim, idx(0, 1))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<K> v = unit;
            for (int t = 0; t < j; ++t) v = scratch.mul(v, s_x);
            for (int t = 0; t < i; ++t) v = scratch.mul(v, s_g);
            for (int r = 0; r < dim; ++r) antipode.at(r, idx(i, j)) = v[r];
        }

    return make_hopf_algebra<K>(dim, field, std::move(labels), std::move(mult),
                                std::move(unit), std::move(comult), std::move(counit),
                                std::move(antipode));
}

template <class K>
HopfAlgebra<K> build_sweedler4(FieldDesc field) {
    return build_taft<K>(2, -1, field);
}

template <class K>
HopfAlgebra<K> build(const AlgebraSpec& spec) {
    switch (spec.family) {
        case AlgebraSpec::Family::group_algebra:
            return build_group_algebra<K>(spec.cyclic_orders, spec.field);
        case AlgebraSpec::Family::dual_group_algebra:
            return dual(build_group_algebra<K>(spec.cyclic_orders, spec.field));
        case AlgebraSpec::Family::sweedler4:
            return build_sweedler4<K>(spec.field);
        case AlgebraSpec::Family::taft:
            return build_taft<K>(spec.taft_n, spec.taft_q, spec.field);
    }
    throw hc_error("catalog: unknown family");
}

}  // namespace hopfcorr

#endif
