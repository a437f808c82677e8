#pragma once

// Parameter solving for involution-product orders: the entry-gcd procedure on
// tau^k - I, candidate extraction through factorization and real-root
// isolation, and exact order verification inside Q[t]/(minpoly) (sound for
// every root of the minimal polynomial at once).

#include <array>
#include <optional>
#include <vector>

#include "pcalg/algebra.hpp"
#include "pcalg/closure.hpp"
#include "pcalg/factor.hpp"
#include "pcalg/matrix.hpp"
#include "pcalg/number_field.hpp"
#include "pcalg/parampoly.hpp"
#include "pcalg/unipoly.hpp"

namespace pcalg {

enum class TauWord {
    TwoGenAB,              // tau_a tau_b on the 3-dimensional subalgebra (a, b, ab)
    UniversalAB,           // tau_a tau_b on the universal 8-dimensional algebra
    UniversalConjugateABc  // tau_a tau_b^{tau_c} on the universal algebra
};

struct OrderCandidate {
    AlgebraicNumber value;
    uint64_t verified_order = 0;
    bool exact = false;  // verified_order == target
};

struct OrderSolution {
    uint64_t target = 0;
    int parameter = 0;  // which of alpha..psi the candidates assign
    QPoly entry_gcd;    // squarefree monic gcd of the entries of tau^k - I
    std::vector<std::pair<QPoly, uint64_t>> factor_orders;  // irreducible factor -> exact order
    std::vector<OrderCandidate> candidates;                 // one per real root
    std::vector<QPoly> nonreal_factors;
};

namespace order_detail {

inline Matrix<QParamPoly> word_matrix(const AlgebraTable<QParamPoly>& universal, TauWord word,
                                      const std::array<std::optional<Rational>, 4>& fixed) {
    switch (word) {
        case TauWord::TwoGenAB: {
            auto t2 = two_generated_table(universal);
            return miyamoto(t2, t2.basis_element(0)) * miyamoto(t2, t2.basis_element(1));
        }
        case TauWord::UniversalAB: {
            auto ts = partial_specialize(universal, fixed);
            return miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
        }
        case TauWord::UniversalConjugateABc: {
            auto ts = partial_specialize(universal, fixed);
            auto tau_a = miyamoto(ts, ts.basis_element(0));
            auto tau_b = miyamoto(ts, ts.basis_element(1));
            auto tau_c = miyamoto(ts, ts.basis_element(2));
            return tau_a * (tau_c * tau_b * tau_c);
        }
    }
    throw Error("unknown tau word");
}

// gcd of all entries of m^k - I as a univariate polynomial in `var`
inline QPoly entry_gcd_of_power(const Matrix<QParamPoly>& m, uint64_t k, int var) {
    auto pw = m.pow(k);
    auto id = Matrix<QParamPoly>::identity(m.n(), QCtx{});
    QPoly g;
    for (size_t i = 0; i < m.n(); ++i) {
        for (size_t j = 0; j < m.n(); ++j) {
            QParamPoly e = pw.at(i, j) - id.at(i, j);
            if (e.is_zero()) continue;
            QPoly eu = e.as_unipoly(var, Rational(0));
            g = g.is_zero() ? eu.scale(eu.lead().inverse()) : gcd_q(g, eu);
            if (g.degree() == 0) return g;
        }
    }
    return g;
}

}  // namespace order_detail

// exact multiplicative order of the selected tau-word in Q[t]/(minpoly), with
// the unassigned parameters left symbolic; valid for every root of minpoly.
// Throws unless the order divides k.
inline uint64_t verify_order_at(const QPoly& minpoly, int param_index, uint64_t k, TauWord word,
                                const AlgebraTable<QParamPoly>& universal,
                                const std::array<std::optional<Rational>, 4>& fixed_others = {}) {
    auto K = NumberField::create(minpoly);  // throws ReducibleMinpoly on failure
    NumberFieldElem t = NumberFieldElem::generator(K);
    auto base = (word == TauWord::TwoGenAB) ? two_generated_table(universal) : universal;
    auto tk = table_to_coeff<NumberFieldElem>(base, K);
    std::array<std::optional<NumberFieldElem>, 4> assign{};
    assign[param_index] = t;
    for (int v = 0; v < 4; ++v) {
        if (v != param_index && fixed_others[v]) {
            assign[v] = NumberFieldElem::from_rational(K, *fixed_others[v]);
        }
    }
    auto ts = partial_specialize(tk, assign);
    Matrix<ParamPoly<NumberFieldElem>> m(0, ParamPoly<NumberFieldElem>{});
    if (word == TauWord::UniversalConjugateABc) {
        auto tau_a = miyamoto(ts, ts.basis_element(0));
        auto tau_b = miyamoto(ts, ts.basis_element(1));
        auto tau_c = miyamoto(ts, ts.basis_element(2));
        m = tau_a * (tau_c * tau_b * tau_c);
    } else {
        m = miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
    }
    return exact_order_dividing(m, k);
}

namespace order_detail {

inline OrderSolution analyze_gcd(QPoly g, uint64_t k, int var, TauWord word,
                                 const AlgebraTable<QParamPoly>& universal,
                                 const std::array<std::optional<Rational>, 4>& fixed) {
    OrderSolution sol;
    sol.target = k;
    sol.parameter = var;
    if (g.is_zero() || g.degree() == 0) {
        sol.entry_gcd = QPoly(Rational(1));
        return sol;
    }
    g = squarefree_part(g);
    sol.entry_gcd = g;
    for (auto& [f, mult] : factor_q(g)) {
        (void)mult;
        uint64_t ord = verify_order_at(f, var, k, word, universal, fixed);
        sol.factor_orders.emplace_back(f, ord);
        auto intervals = sturm_isolate(f);
        if (intervals.empty()) {
            sol.nonreal_factors.push_back(f);
            continue;
        }
        const Rational width(1, 1000000);
        for (auto& iv : intervals) {
            OrderCandidate c{AlgebraicNumber::create(f, refine_interval(f, iv, width),
                                                     /*certify=*/false),
                             ord, ord == k};
            sol.candidates.push_back(std::move(c));
        }
    }
    return sol;
}

}  // namespace order_detail

// entry-gcd solving on the 3x3 two-generated word: values of alpha with
// |tau_ab| dividing k, each candidate verified exactly
inline OrderSolution solve_order_2gen(uint64_t k, const AlgebraTable<QParamPoly>& universal,
                                      uint64_t bound = 24) {
    if (k < 2 || k > bound) throw Error("order target out of configured bound");
    auto m = order_detail::word_matrix(universal, TauWord::TwoGenAB, {});
    QPoly g = order_detail::entry_gcd_of_power(m, k, 0);
    return order_detail::analyze_gcd(g, k, 0, TauWord::TwoGenAB, universal, {});
}

// entry-gcd solving in psi for |tau_a tau_b^{tau_c}| dividing k, at fixed
// alpha = beta = gamma
inline OrderSolution solve_order_3gen_conjugate(uint64_t k,
                                                const AlgebraTable<QParamPoly>& universal,
                                                const Rational& abg = Rational(-1, 8)) {
    std::array<std::optional<Rational>, 4> fixed{abg, abg, abg, std::nullopt};
    auto m = order_detail::word_matrix(universal, TauWord::UniversalConjugateABc, fixed);
    QPoly g = order_detail::entry_gcd_of_power(m, k, 3);
    return order_detail::analyze_gcd(g, k, 3, TauWord::UniversalConjugateABc, universal, fixed);
}

// |tau_ab| on the 3x3 subalgebra for every alpha in F_p
inline std::vector<uint64_t> two_gen_fp_orders(uint64_t p,
                                               const AlgebraTable<QParamPoly>& universal) {
    auto t2 = two_generated_table(universal);
    std::vector<uint64_t> orders;
    orders.reserve(p);
    for (uint64_t a = 0; a < p; ++a) {
        std::array<PrimeFieldElem, 4> point{PrimeFieldElem(a, p), PrimeFieldElem(0, p),
                                            PrimeFieldElem(0, p), PrimeFieldElem(0, p)};
        auto ts = specialize_table<PrimeFieldElem>(t2, point, p, /*verify=*/false);
        auto m = miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
        auto r = element_order(m, p * (p * p - 1));
        if (r.exceeded) throw Error("two-generated order exceeded its theoretical bound");
        orders.push_back(r.order);
    }
    return orders;
}

}  // namespace pcalg
