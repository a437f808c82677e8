#pragma once

// Re-derives the universal 3-generated axial pseudo-composition algebra over
// Q[alpha, beta, gamma, psi]. Unknown basis products are solved from instances
// of the trilinear law
//     (xy)z + (yz)x + (zx)y = f(x,y) z + f(y,z) x + f(z,x) y
// harvested over basis triples; the system is linear with rational constant
// coefficients on the unknown product vectors. Gram entries follow by
// Frobenius peeling down to generator pairs.

#include <map>
#include <utility>
#include <vector>

#include "pcalg/algebra.hpp"
#include "pcalg/errors.hpp"
#include "pcalg/parampoly.hpp"
#include "pcalg/rational.hpp"

namespace pcalg {

namespace closure_detail {

using Vec = std::vector<QParamPoly>;
using Pair = std::pair<int, int>;

inline Pair key(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

struct Equation {
    std::map<Pair, Rational> unknowns;
    Vec known;  // moved to the left-hand side: sum coeff*U + known = 0
};

struct ClosureState {
    static constexpr int kDim = 8;
    std::map<Pair, Vec> products;
    std::map<Pair, QParamPoly> gram;

    bool has_prod(int i, int j) const { return products.count(key(i, j)) > 0; }
    const Vec& prod(int i, int j) const { return products.at(key(i, j)); }
    bool has_gram(int i, int j) const { return gram.count(key(i, j)) > 0; }
    const QParamPoly& gram_at(int i, int j) const { return gram.at(key(i, j)); }

    static Vec zero_vec() { return Vec(kDim); }
    static Vec unit(int i) {
        Vec v(kDim);
        v[i] = QParamPoly(Rational(1));
        return v;
    }
};

// each non-generator basis monomial written as a product of earlier ones;
// both factor orders are offered to the Frobenius peeler
inline const std::vector<std::pair<int, std::array<int, 2>>>& decompositions() {
    static const std::vector<std::pair<int, std::array<int, 2>>> d = {
        {3, {0, 1}},  // ab = a * b
        {4, {1, 2}},  // bc = b * c
        {5, {0, 2}},  // ac = a * c
        {6, {4, 0}},  // a(bc) = (bc) * a
        {7, {5, 1}},  // b(ac) = (ac) * b
    };
    return d;
}

// f(u, v) for v = y*z reduces to sum_i (u*y)_i f(i, z)
inline int peel_gram_once(ClosureState& st) {
    int added = 0;
    for (int u = 0; u < ClosureState::kDim; ++u) {
        for (int v = 0; v < ClosureState::kDim; ++v) {
            if (st.has_gram(u, v)) continue;
            for (const auto& [mono, factors] : decompositions()) {
                if (mono != v) continue;
                for (int ord = 0; ord < 2; ++ord) {
                    int y = ord == 0 ? factors[0] : factors[1];
                    int z = ord == 0 ? factors[1] : factors[0];
                    if (!st.has_prod(u, y)) continue;
                    const auto& uy = st.prod(u, y);
                    bool ok = true;
                    QParamPoly acc;
                    for (int i = 0; i < ClosureState::kDim; ++i) {
                        if (uy[i].is_zero()) continue;
                        if (!st.has_gram(i, z)) {
                            ok = false;
                            break;
                        }
                        acc += uy[i] * st.gram_at(i, z);
                    }
                    if (ok) {
                        st.gram[key(u, v)] = acc;
                        ++added;
                        break;
                    }
                }
                if (st.has_gram(u, v)) break;
            }
        }
    }
    return added;
}

// expand the term (uv)w of the trilinear law into the equation, if possible
inline bool add_term(const ClosureState& st, int u, int v, int w, Equation& eq,
                     std::map<Pair, QParamPoly>& raw_unknowns) {
    if (!st.has_prod(u, v)) return false;
    const Vec& p = st.prod(u, v);
    for (int i = 0; i < ClosureState::kDim; ++i) {
        if (p[i].is_zero()) continue;
        if (st.has_prod(i, w)) {
            const Vec& q = st.prod(i, w);
            for (int k = 0; k < ClosureState::kDim; ++k) {
                if (!q[k].is_zero()) eq.known[k] += p[i] * q[k];
            }
        } else {
            raw_unknowns[key(i, w)] += p[i];
        }
    }
    return true;
}

inline bool build_equation(const ClosureState& st, int x, int y, int z, Equation& eq) {
    if (!st.has_gram(x, y) || !st.has_gram(y, z) || !st.has_gram(z, x)) return false;
    eq.known = ClosureState::zero_vec();
    eq.unknowns.clear();
    std::map<Pair, QParamPoly> raw;
    if (!add_term(st, x, y, z, eq, raw)) return false;
    if (!add_term(st, y, z, x, eq, raw)) return false;
    if (!add_term(st, z, x, y, eq, raw)) return false;
    eq.known[z] -= st.gram_at(x, y);
    eq.known[x] -= st.gram_at(y, z);
    eq.known[y] -= st.gram_at(z, x);
    for (auto& [pair, coeff] : raw) {
        if (coeff.is_zero()) continue;
        if (!coeff.is_constant()) return false;  // would make the system nonlinear
        eq.unknowns[pair] = coeff.constant_value(Rational(0));
    }
    return true;
}

inline void scale_eq(Equation& eq, const Rational& s) {
    for (auto& [p, c] : eq.unknowns) c *= s;
    for (auto& v : eq.known) v = v.scale(s);
}

inline void axpy_eq(Equation& dst, const Rational& f, const Equation& src) {
    for (const auto& [p, c] : src.unknowns) {
        auto it = dst.unknowns.find(p);
        if (it == dst.unknowns.end()) {
            Rational nc = f * c;
            if (!nc.is_zero()) dst.unknowns[p] = nc;
        } else {
            it->second += f * c;
            if (it->second.is_zero()) dst.unknowns.erase(it);
        }
    }
    for (int k = 0; k < ClosureState::kDim; ++k) dst.known[k] += src.known[k].scale(f);
}

// Gauss-Jordan over the rational coefficients; rows that end with a single
// unknown are installed as solved products
inline int solve_equations(ClosureState& st, std::vector<Equation> eqs) {
    std::map<Pair, size_t> pivot_of;  // pivot pair -> row index
    std::vector<Equation> rows;
    for (auto& eq : eqs) {
        // reduce against existing pivot rows
        for (;;) {
            bool reduced = false;
            for (auto it = eq.unknowns.begin(); it != eq.unknowns.end();) {
                auto pit = pivot_of.find(it->first);
                if (pit == pivot_of.end()) {
                    ++it;
                    continue;
                }
                Rational c = it->second;
                axpy_eq(eq, -c, rows[pit->second]);
                reduced = true;
                break;  // iterator invalidated; restart scan
            }
            if (!reduced) break;
        }
        if (eq.unknowns.empty()) {
            if (!vec_is_zero(eq.known)) {
                throw ClosureFailure("inconsistent trilinear system");
            }
            continue;
        }
        Pair piv = eq.unknowns.begin()->first;
        scale_eq(eq, eq.unknowns.begin()->second.inverse());
        // eliminate the new pivot from stored rows
        for (auto& [p, idx] : pivot_of) {
            (void)p;
            auto it = rows[idx].unknowns.find(piv);
            if (it != rows[idx].unknowns.end()) {
                Rational c = it->second;
                axpy_eq(rows[idx], -c, eq);
            }
        }
        pivot_of[piv] = rows.size();
        rows.push_back(std::move(eq));
    }
    int installed = 0;
    for (auto& [piv, idx] : pivot_of) {
        Equation& row = rows[idx];
        if (row.unknowns.size() != 1) continue;
        Vec value = ClosureState::zero_vec();
        for (int k = 0; k < ClosureState::kDim; ++k) value[k] = -row.known[k];
        st.products[piv] = std::move(value);
        ++installed;
    }
    return installed;
}

}  // namespace closure_detail

// basis order: a, b, c, ab, bc, ac, a(bc), b(ac)
inline const std::vector<std::string>& universal_basis_labels() {
    static const std::vector<std::string> l = {"a", "b", "c", "ab", "bc", "ac", "a(bc)", "b(ac)"};
    return l;
}

inline AlgebraTable<QParamPoly> build_universal_table(bool verify = true) {
    using namespace closure_detail;
    constexpr int N = ClosureState::kDim;
    ClosureState st;

    QParamPoly one(Rational(1));
    QParamPoly alpha = QParamPoly::variable(0, Rational(1));
    QParamPoly beta = QParamPoly::variable(1, Rational(1));
    QParamPoly gamma = QParamPoly::variable(2, Rational(1));
    QParamPoly psi = QParamPoly::variable(3, Rational(1));

    // degree-0/1 rules: idempotent generators and products that are themselves
    // basis monomials
    st.products[key(0, 0)] = ClosureState::unit(0);
    st.products[key(1, 1)] = ClosureState::unit(1);
    st.products[key(2, 2)] = ClosureState::unit(2);
    st.products[key(0, 1)] = ClosureState::unit(3);
    st.products[key(1, 2)] = ClosureState::unit(4);
    st.products[key(0, 2)] = ClosureState::unit(5);
    st.products[key(0, 4)] = ClosureState::unit(6);  // a * bc
    st.products[key(1, 5)] = ClosureState::unit(7);  // b * ac

    // the defining form on generators and triple angles
    st.gram[key(0, 0)] = one;
    st.gram[key(1, 1)] = one;
    st.gram[key(2, 2)] = one;
    st.gram[key(0, 1)] = alpha;
    st.gram[key(1, 2)] = beta;
    st.gram[key(0, 2)] = gamma;
    st.gram[key(2, 3)] = psi;  // f(ab, c)
    st.gram[key(0, 4)] = psi;  // f(a, bc)
    st.gram[key(1, 5)] = psi;  // f(b, ac)

    const size_t all_products = N * (N + 1) / 2;
    const size_t all_gram = N * (N + 1) / 2;
    for (int round = 0; round < 64; ++round) {
        bool progress = false;
        while (peel_gram_once(st) > 0) progress = true;
        if (st.products.size() == all_products && st.gram.size() == all_gram) break;
        std::vector<Equation> eqs;
        for (int x = 0; x < N; ++x) {
            for (int y = x; y < N; ++y) {
                for (int z = y; z < N; ++z) {
                    Equation eq;
                    if (!build_equation(st, x, y, z, eq)) continue;
                    if (eq.unknowns.empty()) {
                        if (!vec_is_zero(eq.known)) {
                            throw ClosureFailure("trilinear law violated by derived products");
                        }
                        continue;
                    }
                    eqs.push_back(std::move(eq));
                }
            }
        }
        if (solve_equations(st, std::move(eqs)) > 0) progress = true;
        if (!progress) {
            throw ClosureFailure("no progress with " + std::to_string(st.products.size()) +
                                 "/36 products and " + std::to_string(st.gram.size()) +
                                 "/36 gram entries known");
        }
    }
    if (st.products.size() != all_products || st.gram.size() != all_gram) {
        throw ClosureFailure("closure incomplete after iteration limit");
    }

    AlgebraTable<QParamPoly> t;
    t.dim = N;
    t.labels = universal_basis_labels();
    t.ctx = QCtx{};
    QParamPoly zero;
    t.prod.assign(N, std::vector<std::vector<QParamPoly>>(N, std::vector<QParamPoly>(N, zero)));
    t.gram = Matrix<QParamPoly>(N, zero);
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            t.prod[i][j] = st.prod(i, j);
            t.gram.at(i, j) = st.gram_at(i, j);
        }
    }
    if (verify) verify_table(t);
    return t;
}

// the 2-generated subalgebra on (a, b, ab) of the universal table
inline AlgebraTable<QParamPoly> two_generated_table(const AlgebraTable<QParamPoly>& universal) {
    return sub_table(universal, {0, 1, 3});
}

}  // namespace pcalg
