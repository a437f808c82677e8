#pragma once

// Minimal polynomials by exact Krylov iteration: per basis vector, find the
// first linear dependence among iterates, take the lcm of the relations.

#include <vector>

#include "pcalg/charpoly.hpp"
#include "pcalg/fraction_field.hpp"
#include "pcalg/matrix.hpp"
#include "pcalg/parampoly.hpp"
#include "pcalg/unipoly.hpp"

namespace pcalg {

template <class T>
UniPoly<T> poly_lcm_field(const UniPoly<T>& f, const UniPoly<T>& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    UniPoly<T> d = gcd_field(f, g);
    UniPoly<T> l = exact_div(f * g, d);
    return l.scale(l.lead().inverse());
}

template <class T>
UniPoly<T> min_poly(const Matrix<T>& a) {
    static_assert(domain_traits<T>::is_field, "min_poly needs a field domain");
    size_t n = a.n();
    auto ctx = a.ctx();
    T zero = domain_traits<T>::zero(ctx);
    T one = domain_traits<T>::one(ctx);
    UniPoly<T> m;  // zero = lcm identity
    for (size_t start = 0; start < n; ++start) {
        if (static_cast<size_t>(m.degree()) == n) break;
        // reduced spanning rows with their expressions as polynomials in A
        struct Row {
            std::vector<T> v;
            size_t pivot;
            UniPoly<T> expr;
        };
        std::vector<Row> rows;
        std::vector<T> w(n, zero);
        w[start] = one;
        UniPoly<T> expr(one);
        bool found = false;
        for (size_t step = 0; step <= n; ++step) {
            // reduce (w, expr) against stored rows; the x^step term survives, so
            // a vanishing residual yields a monic degree-step relation
            std::vector<T> red = w;
            UniPoly<T> rede = expr;
            for (const Row& r : rows) {
                const T c = red[r.pivot];
                if (c.is_zero()) continue;
                for (size_t j = 0; j < n; ++j) red[j] -= c * r.v[j];
                rede = rede - r.expr.scale(c);
            }
            size_t piv = 0;
            while (piv < n && red[piv].is_zero()) ++piv;
            if (piv == n) {
                m = poly_lcm_field(m, rede);
                found = true;
                break;
            }
            T pinv = red[piv].inverse();
            for (size_t j = 0; j < n; ++j) red[j] = red[j] * pinv;
            rows.push_back({std::move(red), piv, rede.scale(pinv)});
            w = a.apply(w);
            expr = expr.shift_up(1);
        }
        if (!found) throw Error("min_poly: no Krylov relation found (bug)");
    }
    return m;
}

// minimal polynomial of a matrix with ParamPoly entries that are univariate in
// `var`: computed over the fraction field Q(var); by Gauss's lemma the monic
// result has polynomial coefficients, which are returned as ParamPoly
inline UniPoly<QParamPoly> min_poly_param(const Matrix<QParamPoly>& a, int var) {
    size_t n = a.n();
    Matrix<RationalFunction> m(n, RationalFunction());
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            m.at(i, j) = RationalFunction(a.at(i, j).as_unipoly(var, Rational(0)));
        }
    }
    UniPoly<RationalFunction> mp = min_poly(m);
    std::vector<QParamPoly> coeffs;
    coeffs.reserve(mp.degree() + 1);
    for (int i = 0; i <= mp.degree(); ++i) {
        const RationalFunction& c = mp[i];
        if (!c.is_polynomial()) throw Error("min_poly_param: non-polynomial coefficient");
        QParamPoly p;
        const QPoly& num = c.num();
        for (int k = 0; k <= num.degree(); ++k) {
            QParamPoly::Exps e{0, 0, 0, 0};
            e[var] = k;
            p.add_term(e, num[k]);
        }
        coeffs.push_back(std::move(p));
    }
    return UniPoly<QParamPoly>(std::move(coeffs));
}

// evaluate a polynomial at a matrix argument
template <class T>
Matrix<T> poly_at_matrix(const UniPoly<T>& f, const Matrix<T>& a) {
    auto ctx = a.ctx();
    Matrix<T> acc(a.n(), domain_traits<T>::zero(ctx));
    if (f.is_zero()) return acc;
    Matrix<T> id = Matrix<T>::identity(a.n(), ctx);
    for (int i = f.degree(); i >= 0; --i) {
        acc = acc * a;
        acc = acc + id.scale(f[i]);
    }
    return acc;
}

}  // namespace pcalg
