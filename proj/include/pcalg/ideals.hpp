#pragma once

// Ideal closure (span stabilized under multiplication by the algebra),
// automorphism fixed-point defects, quotient algebras, and the Gram-rank
// simplicity proxy.

#include <utility>
#include <vector>

#include "pcalg/algebra.hpp"
#include "pcalg/errors.hpp"
#include "pcalg/matrix.hpp"

namespace pcalg {

// row-reduced spanning set over a field domain
template <class T>
struct SpanBasis {
    std::vector<std::vector<T>> rows;  // rref rows, sorted by pivot
    std::vector<size_t> pivots;

    size_t dim() const { return rows.size(); }

    // reduce v against the rows in place
    void reduce(std::vector<T>& v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            const T& c = v[pivots[r]];
            if (c.is_zero()) continue;
            T f = c;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
        }
    }

    bool contains(const std::vector<T>& v) const {
        std::vector<T> w = v;
        reduce(w);
        return vec_is_zero(w);
    }

    // returns true if v enlarged the span
    bool insert(std::vector<T> v) {
        reduce(v);
        size_t piv = 0;
        while (piv < v.size() && v[piv].is_zero()) ++piv;
        if (piv == v.size()) return false;
        T inv = v[piv].inverse();
        for (auto& x : v) x = x * inv;
        // eliminate the new pivot from existing rows
        for (size_t r = 0; r < rows.size(); ++r) {
            const T& c = rows[r][piv];
            if (c.is_zero()) continue;
            T f = c;
            for (size_t j = 0; j < v.size(); ++j) rows[r][j] -= f * v[j];
        }
        size_t at = 0;
        while (at < pivots.size() && pivots[at] < piv) ++at;
        rows.insert(rows.begin() + at, std::move(v));
        pivots.insert(pivots.begin() + at, piv);
        return true;
    }
};

template <class T>
struct IdealBasis {
    SpanBasis<T> span;
    size_t parent_dim = 0;

    size_t dim() const { return span.dim(); }
    const std::vector<std::vector<T>>& vectors() const { return span.rows; }
};

// smallest subspace containing the seeds and closed under multiplication by
// every basis vector; fixpoint of span -> multiply -> span
template <class T>
IdealBasis<T> ideal_closure(const AlgebraTable<T>& t, const std::vector<std::vector<T>>& seeds) {
    IdealBasis<T> ideal;
    ideal.parent_dim = t.dim;
    for (const auto& s : seeds) ideal.span.insert(s);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<T>> snapshot = ideal.span.rows;
        for (const auto& v : snapshot) {
            for (size_t j = 0; j < t.dim; ++j) {
                if (ideal.span.insert(t.mult(v, t.basis_element(j)))) grew = true;
            }
        }
    }
    return ideal;
}

// {m^k x_i - x_i : i} for an automorphism m of t
template <class T>
std::vector<std::vector<T>> fixed_point_defect(const AlgebraTable<T>& t, const Matrix<T>& m,
                                               uint64_t k) {
    if (!is_automorphism(t, m)) throw NotAutomorphism("defect of a non-automorphism");
    Matrix<T> p = m.pow(k);
    std::vector<std::vector<T>> out;
    out.reserve(t.dim);
    for (size_t i = 0; i < t.dim; ++i) {
        out.push_back(vec_sub(p.apply(t.basis_element(i)), t.basis_element(i)));
    }
    return out;
}

template <class T>
struct Quotient {
    AlgebraTable<T> table;
    std::vector<size_t> completion;  // standard basis indices representing the quotient basis
    IdealBasis<T> ideal;

    std::vector<T> project(const std::vector<T>& v) const {
        std::vector<T> w = v;
        ideal.span.reduce(w);
        std::vector<T> out;
        out.reserve(completion.size());
        for (size_t c : completion) out.push_back(w[c]);
        return out;
    }

    std::vector<T> lift(const std::vector<T>& q) const {
        std::vector<T> v(ideal.parent_dim, domain_traits<T>::zero(table.ctx));
        for (size_t k = 0; k < completion.size(); ++k) v[completion[k]] = q[k];
        return v;
    }

    // matrix induced on the quotient by a parent-space matrix that fixes the ideal
    Matrix<T> induced(const Matrix<T>& m) const {
        for (const auto& v : ideal.vectors()) {
            if (!ideal.span.contains(m.apply(v))) {
                throw NotAutomorphism("matrix does not preserve the ideal");
            }
        }
        size_t q = completion.size();
        Matrix<T> r(q, domain_traits<T>::zero(table.ctx));
        for (size_t j = 0; j < q; ++j) {
            std::vector<T> col = project(m.apply(lift(table.basis_element(j))));
            for (size_t i = 0; i < q; ++i) r.at(i, j) = col[i];
        }
        return r;
    }
};

// quotient by a proper ideal; the quotient basis completes the ideal's pivots
// with standard basis vectors, so golden outputs are deterministic
template <class T>
Quotient<T> quotient(const AlgebraTable<T>& t, const IdealBasis<T>& ideal) {
    if (ideal.dim() >= t.dim) throw ImproperIdeal("ideal is the whole algebra");
    // the Gram form descends only when the ideal sits inside its radical
    for (const auto& v : ideal.vectors()) {
        for (size_t k = 0; k < t.dim; ++k) {
            if (!t.form(v, t.basis_element(k)).is_zero()) {
                throw GramNotInduced("ideal is not contained in the Gram radical");
            }
        }
    }
    std::vector<bool> is_pivot(t.dim, false);
    for (size_t p : ideal.span.pivots) is_pivot[p] = true;
    Quotient<T> q;
    q.ideal = ideal;
    for (size_t i = 0; i < t.dim; ++i) {
        if (!is_pivot[i]) q.completion.push_back(i);
    }
    size_t qd = q.completion.size();
    AlgebraTable<T>& qt = q.table;
    qt.dim = qd;
    qt.ctx = t.ctx;
    T zero = domain_traits<T>::zero(t.ctx);
    for (size_t c : q.completion) qt.labels.push_back(t.labels[c] + "+I");
    qt.prod.assign(qd, std::vector<std::vector<T>>(qd, std::vector<T>(qd, zero)));
    qt.gram = Matrix<T>(qd, zero);
    for (size_t a = 0; a < qd; ++a) {
        for (size_t b = 0; b < qd; ++b) {
            std::vector<T> p = t.product(q.completion[a], q.completion[b]);
            ideal.span.reduce(p);
            for (size_t k = 0; k < qd; ++k) qt.prod[a][b][k] = p[q.completion[k]];
            qt.gram.at(a, b) = t.gram.at(q.completion[a], q.completion[b]);
        }
    }
    return q;
}

template <class T>
size_t gram_rank(const AlgebraTable<T>& t) {
    return rank(t.gram);
}

// kernel of the Gram form as algebra elements
template <class T>
std::vector<std::vector<T>> gram_radical(const AlgebraTable<T>& t) {
    return kernel(t.gram);
}

}  // namespace pcalg
