#pragma once

// Characteristic polynomials along two independent routes: division-free
// Faddeev-LeVerrier for domains containing Q (symbolic entries included), and a
// Hessenberg recurrence for arbitrary fields. A fraction-free Bareiss expansion
// of det(xI - A) serves as the cross-check route.

#include <functional>
#include <vector>

#include "pcalg/matrix.hpp"
#include "pcalg/unipoly.hpp"

namespace pcalg {

// trace / k stays exact in any domain with a rational action
template <class T>
UniPoly<T> charpoly_faddeev(const Matrix<T>& a) {
    size_t n = a.n();
    auto ctx = a.ctx();
    T zero = domain_traits<T>::zero(ctx);
    T one = domain_traits<T>::one(ctx);
    std::vector<T> c(n + 1, zero);
    c[n] = one;
    Matrix<T> m = a;
    for (size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            Matrix<T> shifted = m;
            for (size_t i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
            m = a * shifted;
        }
        T tr = zero;
        for (size_t i = 0; i < n; ++i) tr += m.at(i, i);
        c[n - k] = -(tr * domain_traits<T>::from_rational(Rational(1, static_cast<long>(k)), ctx));
    }
    return UniPoly<T>(std::move(c));
}

// ---------- Hessenberg route (any field) ----------

template <class T>
UniPoly<T> charpoly_hessenberg(const Matrix<T>& a) {
    size_t n = a.n();
    auto ctx = a.ctx();
    T zero = domain_traits<T>::zero(ctx);
    T one = domain_traits<T>::one(ctx);
    Matrix<T> h = a;
    // similarity reduction to upper Hessenberg with pivoting
    for (size_t m = 0; m + 2 < n; ++m) {
        size_t piv = m + 1;
        while (piv < n && h.at(piv, m).is_zero()) ++piv;
        if (piv == n) continue;
        if (piv != m + 1) {
            for (size_t j = 0; j < n; ++j) std::swap(h.at(m + 1, j), h.at(piv, j));
            for (size_t i = 0; i < n; ++i) std::swap(h.at(i, m + 1), h.at(i, piv));
        }
        T pinv = h.at(m + 1, m).inverse();
        for (size_t i = m + 2; i < n; ++i) {
            if (h.at(i, m).is_zero()) continue;
            T u = h.at(i, m) * pinv;
            for (size_t j = 0; j < n; ++j) h.at(i, j) -= u * h.at(m + 1, j);
            for (size_t k = 0; k < n; ++k) h.at(k, m + 1) += u * h.at(k, i);
        }
    }
    // p_m(x) = (x - h[m-1][m-1]) p_{m-1} - sum_k h[k-1][m-1] (prod subdiag) p_{k-1}
    std::vector<UniPoly<T>> p(n + 1);
    p[0] = UniPoly<T>(one);
    for (size_t m = 1; m <= n; ++m) {
        UniPoly<T> xt = UniPoly<T>::monomial(one, 1) - UniPoly<T>(h.at(m - 1, m - 1));
        p[m] = xt * p[m - 1];
        T prod = one;
        for (size_t k = m - 1; k >= 1; --k) {
            prod = prod * h.at(k, k - 1);
            if (!h.at(k - 1, m - 1).is_zero()) {
                p[m] = p[m] - p[k - 1].scale(prod * h.at(k - 1, m - 1));
            }
            if (prod.is_zero()) break;
        }
    }
    return p[n];
}

// ---------- Bareiss cross-check route ----------

// fraction-free determinant over an integral domain; div must perform exact
// division
template <class E, class Div>
E bareiss_det(std::vector<std::vector<E>> m, const E& one, const E& zero, Div div) {
    size_t n = m.size();
    if (n == 0) return one;
    E prev = one;
    bool neg = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == zero) ++piv;
        if (piv == n) return zero;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            neg = !neg;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                E num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = div(num, prev);
            }
            m[i][k] = zero;
        }
        prev = m[k][k];
    }
    E det = m[n - 1][n - 1];
    if (neg) det = zero - det;
    return det;
}

// det(xI - A) expanded fraction-free over UniPoly entries
template <class T>
UniPoly<T> charpoly_bareiss(const Matrix<T>& a) {
    size_t n = a.n();
    auto ctx = a.ctx();
    T zero = domain_traits<T>::zero(ctx);
    T one = domain_traits<T>::one(ctx);
    using P = UniPoly<T>;
    std::vector<std::vector<P>> m(n, std::vector<P>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            P e = P(zero - a.at(i, j));
            if (i == j) e = e + P::monomial(one, 1);
            m[i][j] = std::move(e);
        }
    }
    P pone(one), pzero;
    return bareiss_det<P>(std::move(m), pone, pzero,
                          [](const P& x, const P& y) { return exact_div(x, y); });
}

// default route picker: Faddeev-LeVerrier in characteristic 0, Hessenberg else
template <class T>
UniPoly<T> char_poly(const Matrix<T>& a) {
    if constexpr (domain_traits<T>::is_field) {
        if (domain_traits<T>::characteristic(a.ctx()) != 0 &&
            domain_traits<T>::characteristic(a.ctx()) <= a.n()) {
            return charpoly_hessenberg(a);
        }
    }
    return charpoly_faddeev(a);
}

}  // namespace pcalg
