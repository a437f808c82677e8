#pragma once

// Commutative algebra given by structure constants plus a Gram (Frobenius)
// matrix. Hosts the Miyamoto construction tau = (8 L^2 - 5 I)/3 and the
// specializations from the symbolic universal table to concrete scalar domains.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pcalg/domain.hpp"
#include "pcalg/errors.hpp"
#include "pcalg/matrix.hpp"
#include "pcalg/parampoly.hpp"

namespace pcalg {

template <class T>
struct AlgebraTable {
    using Ctx = typename domain_traits<T>::ctx_type;

    size_t dim = 0;
    std::vector<std::string> labels;
    // prod[i][j] = coordinates of (basis_i * basis_j); symmetric in i, j
    std::vector<std::vector<std::vector<T>>> prod;
    Matrix<T> gram;
    Ctx ctx;

    const std::vector<T>& product(size_t i, size_t j) const { return prod[i][j]; }

    std::vector<T> zero_vec() const { return std::vector<T>(dim, domain_traits<T>::zero(ctx)); }

    std::vector<T> basis_element(size_t i) const {
        auto v = zero_vec();
        v[i] = domain_traits<T>::one(ctx);
        return v;
    }

    std::vector<T> mult(const std::vector<T>& x, const std::vector<T>& y) const {
        T zero = domain_traits<T>::zero(ctx);
        std::vector<T> r(dim, zero);
        for (size_t i = 0; i < dim; ++i) {
            if (x[i] == zero) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (y[j] == zero) continue;
                T c = x[i] * y[j];
                const auto& pij = prod[i][j];
                for (size_t k = 0; k < dim; ++k) {
                    if (!(pij[k] == zero)) r[k] += c * pij[k];
                }
            }
        }
        return r;
    }

    T form(const std::vector<T>& x, const std::vector<T>& y) const {
        T zero = domain_traits<T>::zero(ctx);
        T r = zero;
        for (size_t i = 0; i < dim; ++i) {
            if (x[i] == zero) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (y[j] == zero) continue;
                r += x[i] * gram.at(i, j) * y[j];
            }
        }
        return r;
    }

    // adjoint (left multiplication) operator of x; columns are images of basis
    // vectors
    Matrix<T> left_mult(const std::vector<T>& x) const {
        Matrix<T> m(dim, domain_traits<T>::zero(ctx));
        for (size_t j = 0; j < dim; ++j) {
            std::vector<T> col = mult(x, basis_element(j));
            for (size_t i = 0; i < dim; ++i) m.at(i, j) = col[i];
        }
        return m;
    }

    bool is_idempotent(const std::vector<T>& x) const { return mult(x, x) == x; }
};

template <class T>
std::vector<T> vec_add(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

template <class T>
std::vector<T> vec_sub(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

template <class T>
std::vector<T> vec_scale(const std::vector<T>& a, const T& s) {
    std::vector<T> r = a;
    for (auto& x : r) x = x * s;
    return r;
}

template <class T>
bool vec_is_zero(const std::vector<T>& a) {
    for (const auto& x : a) {
        if (!x.is_zero()) return false;
    }
    return true;
}

// automorphism test on all basis products: m(x_i x_j) = m(x_i) m(x_j)
template <class T>
bool is_automorphism(const AlgebraTable<T>& t, const Matrix<T>& m) {
    for (size_t i = 0; i < t.dim; ++i) {
        std::vector<T> mi = m.apply(t.basis_element(i));
        for (size_t j = i; j < t.dim; ++j) {
            std::vector<T> mj = m.apply(t.basis_element(j));
            if (m.apply(t.product(i, j)) != t.mult(mi, mj)) return false;
        }
    }
    return true;
}

// Miyamoto involution of an idempotent axis: negates the 1/2-eigenspace of the
// adjoint; realized as (8 L^2 - 5 I)/3 for the fusion eigenvalues {1, -1, 1/2}
template <class T>
Matrix<T> miyamoto(const AlgebraTable<T>& t, const std::vector<T>& axis) {
    if (!t.is_idempotent(axis)) throw NotAnAxis("element is not idempotent");
    Matrix<T> L = t.left_mult(axis);
    Matrix<T> id = Matrix<T>::identity(t.dim, t.ctx);
    T one = domain_traits<T>::one(t.ctx);
    T half = domain_traits<T>::from_rational(Rational(1, 2), t.ctx);
    Matrix<T> fusion = (L - id) * (L + id) * (L - id.scale(half));
    Matrix<T> zero_m(t.dim, domain_traits<T>::zero(t.ctx));
    if (!(fusion == zero_m)) {
        throw NotAnAxis("adjoint eigenvalues are not contained in {1, -1, 1/2}");
    }
    (void)one;
    T c83 = domain_traits<T>::from_rational(Rational(8, 3), t.ctx);
    T c53 = domain_traits<T>::from_rational(Rational(5, 3), t.ctx);
    return (L * L).scale(c83) - id.scale(c53);
}

template <class T>
std::vector<T> conjugate_axis(const AlgebraTable<T>& t, const std::vector<T>& axis,
                              const Matrix<T>& m) {
    if (!is_automorphism(t, m)) throw NotAutomorphism("matrix does not preserve products");
    return m.apply(axis);
}

// restriction to a multiplicatively closed subset of basis vectors
template <class T>
AlgebraTable<T> sub_table(const AlgebraTable<T>& t, const std::vector<size_t>& idx) {
    std::vector<int> pos(t.dim, -1);
    for (size_t k = 0; k < idx.size(); ++k) pos[idx[k]] = static_cast<int>(k);
    AlgebraTable<T> s;
    s.dim = idx.size();
    s.ctx = t.ctx;
    for (size_t i : idx) s.labels.push_back(t.labels[i]);
    T zero = domain_traits<T>::zero(t.ctx);
    s.prod.assign(s.dim, std::vector<std::vector<T>>(s.dim, std::vector<T>(s.dim, zero)));
    s.gram = Matrix<T>(s.dim, zero);
    for (size_t a = 0; a < s.dim; ++a) {
        for (size_t b = 0; b < s.dim; ++b) {
            const auto& full = t.product(idx[a], idx[b]);
            for (size_t k = 0; k < t.dim; ++k) {
                if (full[k].is_zero()) continue;
                if (pos[k] < 0) throw Error("basis subset is not multiplicatively closed");
                s.prod[a][b][pos[k]] = full[k];
            }
            s.gram.at(a, b) = t.gram.at(idx[a], idx[b]);
        }
    }
    return s;
}

// structural invariants: commutativity, Gram symmetry, Frobenius association,
// and the trilinear law (xy)z + (yz)x + (zx)y = f(x,y)z + f(y,z)x + f(z,x)y
template <class T>
void verify_table(const AlgebraTable<T>& t) {
    for (size_t i = 0; i < t.dim; ++i) {
        for (size_t j = i; j < t.dim; ++j) {
            if (t.prod[i][j] != t.prod[j][i]) throw ClosureFailure("products not commutative");
            if (!(t.gram.at(i, j) == t.gram.at(j, i))) throw ClosureFailure("gram not symmetric");
        }
    }
    for (size_t x = 0; x < t.dim; ++x) {
        for (size_t y = x; y < t.dim; ++y) {
            const auto& xy = t.product(x, y);
            for (size_t z = y; z < t.dim; ++z) {
                auto lhs = t.mult(xy, t.basis_element(z));
                lhs = vec_add(lhs, t.mult(t.product(y, z), t.basis_element(x)));
                lhs = vec_add(lhs, t.mult(t.product(z, x), t.basis_element(y)));
                auto rhs = t.zero_vec();
                rhs[z] += t.gram.at(x, y);
                rhs[x] += t.gram.at(y, z);
                rhs[y] += t.gram.at(z, x);
                if (lhs != rhs) throw ClosureFailure("trilinear identity fails on basis triple");
            }
            for (size_t z = 0; z < t.dim; ++z) {
                // Frobenius: (xy, z) = (x, yz)
                T lhs = t.form(xy, t.basis_element(z));
                T rhs = t.form(t.basis_element(x), t.product(y, z));
                if (!(lhs == rhs)) throw ClosureFailure("Frobenius association fails");
            }
        }
    }
}

// ---------- specialization ----------

template <class D>
void require_good_characteristic(const typename domain_traits<D>::ctx_type& ctx) {
    uint64_t ch = domain_traits<D>::characteristic(ctx);
    if (ch == 2 || ch == 3) {
        throw UnsupportedCharacteristic("characteristic " + std::to_string(ch) +
                                        " (denominators 2 and 3 occur)");
    }
}

// full specialization of the symbolic table at a parameter point in domain D
template <class D>
AlgebraTable<D> specialize_table(const AlgebraTable<QParamPoly>& t, const std::array<D, 4>& point,
                                 const typename domain_traits<D>::ctx_type& ctx,
                                 bool verify = true) {
    require_good_characteristic<D>(ctx);
    std::array<std::optional<D>, 4> vals;
    for (int v = 0; v < 4; ++v) vals[v] = point[v];
    D zero = domain_traits<D>::zero(ctx);
    auto eval = [&](const QParamPoly& p) -> D {
        ParamPoly<D> mapped = p.map_coeff<D>(
            [&](const Rational& q) { return domain_traits<D>::from_rational(q, ctx); });
        ParamPoly<D> s = mapped.specialize(vals);
        if (!s.is_constant()) throw Error("specialize_table: parameters left unassigned");
        return s.constant_value(zero);
    };
    AlgebraTable<D> r;
    r.dim = t.dim;
    r.labels = t.labels;
    r.ctx = ctx;
    r.prod.assign(t.dim, std::vector<std::vector<D>>(t.dim, std::vector<D>(t.dim, zero)));
    r.gram = Matrix<D>(t.dim, zero);
    for (size_t i = 0; i < t.dim; ++i) {
        for (size_t j = 0; j < t.dim; ++j) {
            for (size_t k = 0; k < t.dim; ++k) r.prod[i][j][k] = eval(t.prod[i][j][k]);
            r.gram.at(i, j) = eval(t.gram.at(i, j));
        }
    }
    if (verify) verify_table(r);
    return r;
}

// change of coefficient domain Q -> C on a symbolic table (parameters stay)
template <class C>
AlgebraTable<ParamPoly<C>> table_to_coeff(const AlgebraTable<QParamPoly>& t,
                                          const typename domain_traits<C>::ctx_type& ctx) {
    require_good_characteristic<C>(ctx);
    AlgebraTable<ParamPoly<C>> r;
    r.dim = t.dim;
    r.labels = t.labels;
    r.ctx = ctx;
    ParamPoly<C> zero;
    auto conv = [&](const QParamPoly& p) {
        return p.map_coeff<C>(
            [&](const Rational& q) { return domain_traits<C>::from_rational(q, ctx); });
    };
    r.prod.assign(t.dim, std::vector<std::vector<ParamPoly<C>>>(
                             t.dim, std::vector<ParamPoly<C>>(t.dim, zero)));
    r.gram = Matrix<ParamPoly<C>>(t.dim, zero);
    for (size_t i = 0; i < t.dim; ++i) {
        for (size_t j = 0; j < t.dim; ++j) {
            for (size_t k = 0; k < t.dim; ++k) r.prod[i][j][k] = conv(t.prod[i][j][k]);
            r.gram.at(i, j) = conv(t.gram.at(i, j));
        }
    }
    return r;
}

// partial specialization: assign a subset of the parameters, keep the rest
// symbolic
template <class C>
AlgebraTable<ParamPoly<C>> partial_specialize(const AlgebraTable<ParamPoly<C>>& t,
                                              const std::array<std::optional<C>, 4>& vals) {
    AlgebraTable<ParamPoly<C>> r;
    r.dim = t.dim;
    r.labels = t.labels;
    r.ctx = t.ctx;
    ParamPoly<C> zero;
    r.prod.assign(t.dim, std::vector<std::vector<ParamPoly<C>>>(
                             t.dim, std::vector<ParamPoly<C>>(t.dim, zero)));
    r.gram = Matrix<ParamPoly<C>>(t.dim, zero);
    for (size_t i = 0; i < t.dim; ++i) {
        for (size_t j = 0; j < t.dim; ++j) {
            for (size_t k = 0; k < t.dim; ++k) r.prod[i][j][k] = t.prod[i][j][k].specialize(vals);
            r.gram.at(i, j) = t.gram.at(i, j).specialize(vals);
        }
    }
    return r;
}

}  // namespace pcalg
