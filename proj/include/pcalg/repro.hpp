#pragma once

// Named reference checks: each item regenerates one published table or claim
// from scratch and compares against the golden values. The acceptance suite
// and the `repro` CLI verb share these functions.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pcalg/closure.hpp"
#include "pcalg/charpoly.hpp"
#include "pcalg/golden.hpp"
#include "pcalg/group_enum.hpp"
#include "pcalg/ideals.hpp"
#include "pcalg/minpoly.hpp"
#include "pcalg/order_solve.hpp"
#include "pcalg/poly_io.hpp"
#include "pcalg/sweep.hpp"

namespace pcalg {

struct ReproOptions {
    uint64_t full_cutoff = 2000000;
    uint64_t extended_cutoff = 6000000;
    uint64_t probe_cutoff = 200000;
    bool extended = true;  // run the enumerations that need the extended budget
};

inline ReproOptions repro_options_from_env() {
    ReproOptions opt;
    if (const char* e = std::getenv("PCALG_EXTENDED")) {
        opt.extended = !(std::string(e) == "0" || std::string(e) == "off");
    }
    return opt;
}

struct ReproResult {
    std::string item;
    bool pass = true;
    bool resource_limited = false;
    std::vector<std::string> lines;

    void check(bool ok, const std::string& what) {
        lines.push_back(std::string(ok ? "  ok: " : "  FAIL: ") + what);
        pass = pass && ok;
    }
    void note(const std::string& what) { lines.push_back("  note: " + what); }
};

namespace repro_detail {

inline const AlgebraTable<QParamPoly>& universal() {
    static const AlgebraTable<QParamPoly> t = build_universal_table();
    return t;
}

inline std::vector<QPoly> sorted_polys(std::vector<QPoly> v) {
    std::sort(v.begin(), v.end(), [](const QPoly& a, const QPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = 0; i <= a.degree(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    });
    return v;
}

inline std::vector<Matrix<PrimeFieldElem>> fp_taus(uint64_t p, long a, long b, long g, long s) {
    auto fp = [p](long v) { return PrimeFieldElem::from_int(v, p); };
    auto ts = specialize_table<PrimeFieldElem>(universal(), {fp(a), fp(b), fp(g), fp(s)}, p, false);
    return {miyamoto(ts, ts.basis_element(0)), miyamoto(ts, ts.basis_element(1)),
            miyamoto(ts, ts.basis_element(2))};
}

inline std::string layer_string(const std::vector<uint64_t>& layers) {
    std::ostringstream os;
    for (size_t i = 0; i < layers.size(); ++i) {
        if (i) os << " ";
        os << layers[i];
    }
    return os.str();
}

inline uint64_t exact_order(const Matrix<PrimeFieldElem>& m, uint64_t cutoff = 10000) {
    auto r = element_order(m, cutoff);
    if (r.exceeded) throw Error("element order exceeded cutoff");
    return r.order;
}

}  // namespace repro_detail

// Prop 1 table: 2-generated orders 2..12 over R
inline ReproResult repro_prop1(const ReproOptions& = {}) {
    using namespace repro_detail;
    ReproResult res{"prop1"};
    for (const auto& row : golden::two_gen_order_rows()) {
        auto sol = solve_order_2gen(row.order, universal());
        std::vector<QPoly> got;
        for (const auto& [f, ord] : sol.factor_orders) {
            if (ord == static_cast<uint64_t>(row.order) && !sturm_isolate(f).empty()) {
                got.push_back(f);
            }
        }
        std::vector<QPoly> want;
        for (const char* s : row.minpolys) want.push_back(parse_unipoly(s));
        bool ok = sorted_polys(got) == sorted_polys(want);
        for (const auto& c : sol.candidates) ok = ok && (row.order % c.verified_order == 0);
        res.check(ok, "order " + std::to_string(row.order) + ": " + std::to_string(want.size()) +
                          " minimal polynomial(s), verified in their number fields");
    }
    return res;
}

inline ReproResult repro_remark_fp(uint64_t p, const char* item) {
    using namespace repro_detail;
    ReproResult res{item};
    auto got = two_gen_fp_orders(p, universal());
    std::ostringstream os;
    bool ok = true;
    for (uint64_t a = 0; a < p; ++a) {
        uint64_t want = p == 7 ? golden::kOrdersF7[a] : golden::kOrdersF11[a];
        ok = ok && got[a] == want;
        os << got[a] << (a + 1 < p ? " " : "");
    }
    res.check(ok, "orders over F_" + std::to_string(p) + ": " + os.str());
    return res;
}

inline ReproResult repro_remark_f7(const ReproOptions& = {}) { return repro_remark_fp(7, "remark-f7"); }
inline ReproResult repro_remark_f11(const ReproOptions& = {}) { return repro_remark_fp(11, "remark-f11"); }

// Prop 2: characteristic polynomial of tau_a tau_b
inline ReproResult repro_prop2_charpoly(const ReproOptions& = {}) {
    using namespace repro_detail;
    ReproResult res{"prop2-charpoly"};
    const auto& t = universal();
    auto prod = miyamoto(t, t.basis_element(0)) * miyamoto(t, t.basis_element(1));
    auto cp = charpoly_faddeev(prod);
    res.check(cp.degree() == 8, "degree 8");
    bool alpha_only = true, palindromic = true;
    for (int i = 0; i <= 8; ++i) {
        alpha_only = alpha_only && cp[i].degree(1) == 0 && cp[i].degree(2) == 0 && cp[i].degree(3) == 0;
        palindromic = palindromic && cp[i] == cp[8 - i];
    }
    res.check(alpha_only, "coefficients lie in Q[alpha]");
    res.check(palindromic, "coefficient list is palindromic");
    res.check(cp == charpoly_bareiss(prod), "Faddeev-LeVerrier and Bareiss routes agree");
    bool match = true;
    for (int i = 0; i <= 8; ++i) {
        bool flagged =
            std::find(golden::kCharPolyFlagged.begin(), golden::kCharPolyFlagged.end(), i) !=
            golden::kCharPolyFlagged.end();
        QParamPoly printed = parse_parampoly(golden::kCharPolyTauAB[i]);
        QParamPoly derived = parse_parampoly(golden::kCharPolyTauABDerived[i]);
        if (flagged) {
            match = match && cp[i] == derived;
            if (cp[i] != printed) {
                res.note("x^" + std::to_string(i) + ": derived " + cp[i].str() +
                         " vs published " + printed.str() +
                         " (publication erratum: the published product matrix forces the derived "
                         "value via its trace)");
            }
        } else {
            match = match && cp[i] == printed;
        }
    }
    res.check(match, "coefficients equal the published polynomial up to the two flagged constants");
    return res;
}

// column statement for powers of tau_a tau_b
inline ReproResult repro_stmt_columns(const ReproOptions& = {}) {
    using namespace repro_detail;
    ReproResult res{"stmt-columns"};
    const auto& t = universal();
    auto m = miyamoto(t, t.basis_element(0)) * miyamoto(t, t.basis_element(1));
    auto pw = Matrix<QParamPoly>::identity(8, QCtx{});
    const std::vector<int> sub = {0, 1, 3};
    const std::vector<int> rest = {2, 4, 5, 6, 7};
    bool ok = true;
    for (int n = 1; n <= 6; ++n) {
        pw = pw * m;
        for (int j : sub) {
            for (int i : rest) ok = ok && pw.at(i, j).is_zero();
            for (int i : sub) {
                ok = ok && pw.at(i, j).degree(1) == 0 && pw.at(i, j).degree(2) == 0 &&
                     pw.at(i, j).degree(3) == 0;
            }
        }
        for (int i : rest) {
            for (int j : rest) {
                ok = ok && pw.at(i, j).degree(1) == 0 && pw.at(i, j).degree(2) == 0 &&
                     pw.at(i, j).degree(3) == 0;
            }
        }
    }
    res.check(ok, "powers 1..6: columns {a, b, ab} vanish outside the 2-generated block and all "
                  "surviving blocks lie in Q[alpha]");
    return res;
}

// Prop 3: defect matrix, echelon rank, ideal dimensions, induced order
inline ReproResult repro_prop3_ideal(const ReproOptions& = {}) {
    using namespace repro_detail;
    ReproResult res{"prop3-ideal"};
    const auto& t = universal();
    std::array<std::optional<Rational>, 4> at_quarter{Rational(1, 4), std::nullopt, std::nullopt,
                                                      std::nullopt};
    auto tsym = partial_specialize(t, at_quarter);
    auto tau_sym = miyamoto(tsym, tsym.basis_element(0)) * miyamoto(tsym, tsym.basis_element(1));
    auto defect_sym = fixed_point_defect(tsym, tau_sym, 2);
    bool match = true;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            match = match &&
                    defect_sym[i][j].scale(Rational(9)) == parse_parampoly(golden::kDefectTimes9[i][j]);
        }
    }
    res.check(match, "9 * (tau_ab^2 x_i - x_i) equals the published matrix at alpha = 1/4");

    std::vector<std::vector<Rational>> cols;
    for (auto& v : defect_sym) {
        std::vector<Rational> row;
        for (int j = 4; j < 8; ++j) row.push_back(v[j].constant_value(Rational(0)));
        cols.push_back(std::move(row));
    }
    auto ech = rref(cols, 4);
    std::vector<std::vector<Rational>> printed;
    for (auto& r : golden::kDefectEchelon) {
        printed.push_back({Rational(r[0]), Rational(r[1]), Rational(r[2]), Rational(r[3])});
    }
    res.check(ech.rows.size() == 4 && ech.rows == rref(printed, 4).rows,
              "last four coordinate columns reduce to the published rank-4 echelon row space");

    std::array<Rational, 4> pt{Rational(1, 4), Rational(1), Rational(1, 4), Rational(1, 4)};
    auto ts = specialize_table<Rational>(t, pt, QCtx{}, false);
    auto tau = miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
    auto defect = fixed_point_defect(ts, tau, 2);
    auto I = ideal_closure(ts, defect);
    res.check(I.dim() == 4, "ideal dimension 4 at (1/4, 1, 1/4, 1/4)");
    auto q = quotient(ts, I);
    auto induced_ord = element_order(q.induced(tau), 100);
    res.check(!induced_ord.exceeded && induced_ord.order == 2,
              "induced tau_ab has order 2 on the 4-dimensional quotient");
    auto up = element_order(tau, 100);
    res.check(!up.exceeded && up.order == 4 && up.order % induced_ord.order == 0,
              "order upstairs is 4 and the quotient order divides it");

    auto seeds5 = defect;
    seeds5.push_back(vec_sub(ts.basis_element(1), ts.basis_element(2)));
    auto J5 = ideal_closure(ts, seeds5);
    bool contains = true;
    for (const auto& v : I.vectors()) contains = contains && J5.span.contains(v);
    res.check(J5.dim() == 5 && contains, "b = c yields a 5-dimensional ideal containing I");

    SpanBasis<Rational> span6;
    for (auto& v : defect) span6.insert(v);
    span6.insert(ts.basis_element(3));
    span6.insert(ts.basis_element(2));
    res.check(span6.dim() == 6, "ab = 0 = c relation span is 6-dimensional");
    auto seeds6 = defect;
    seeds6.push_back(ts.basis_element(3));
    seeds6.push_back(ts.basis_element(2));
    auto closure6 = ideal_closure(ts, seeds6);
    res.note("the 6-dimensional relation span is not multiplication-closed: its ideal closure has "
             "dimension " +
             std::to_string(closure6.dim()) +
             " (no proper ideal contains the basis monomial ab)");
    return res;
}

// statement: universal tau_ab orders divide 3, 4, 5, 6, 10 at the listed alphas
inline ReproResult repro_stmt_orders(const ReproOptions& = {}) {
    using namespace repro_detail;
    ReproResult res{"stmt-orders"};
    const auto& t = universal();
    struct Row {
        uint64_t k;
        const char* minpoly;
        const char* label;
    };
    const Row rows[] = {
        {3, "x + 1/8", "alpha = -1/8"},
        {4, "x - 1/4", "alpha = 1/4"},
        {5, "x^2 - 1/8*x - 11/64", "alpha = 1/16 +- 3 sqrt5/16"},
        {6, "x - 5/8", "alpha = 5/8"},
        {10, "x^2 - 7/8*x + 1/64", "alpha = 7/16 +- 3 sqrt5/16"},
    };
    for (const auto& row : rows) {
        uint64_t ord = verify_order_at(parse_unipoly(row.minpoly), 0, row.k, TauWord::UniversalAB, t);
        res.check(ord == row.k, std::string(row.label) + ": |tau_ab| = " + std::to_string(ord) +
                                    " on the universal algebra (beta, gamma, psi symbolic)");
    }
    return res;
}

// Prop 4 empirical check: orders of the finite quotients divide 6 k^2
inline ReproResult repro_prop4_quotient(const ReproOptions& = {}) {
    using namespace repro_detail;
    ReproResult res{"prop4-quotient"};
    const auto& t = universal();
    auto run = [&](const Rational& psi, uint64_t k) {
        std::array<Rational, 4> pt{Rational(-1, 8), Rational(-1, 8), Rational(-1, 8), psi};
        auto ts = specialize_table<Rational>(t, pt, QCtx{}, false);
        std::vector<Matrix<Rational>> gens{miyamoto(ts, ts.basis_element(0)),
                                           miyamoto(ts, ts.basis_element(1)),
                                           miyamoto(ts, ts.basis_element(2))};
        auto rep = enumerate_q_group(gens, 1000, AnalysisLevel::None);
        uint64_t bound = 6 * k * k;
        res.check(rep.completed && bound % rep.order == 0,
                  "psi = " + psi.str() + ": completed group order " + std::to_string(rep.order) +
                      " divides " + std::to_string(bound));
    };
    run(Rational(5, 32), 3);
    run(Rational(-1, 8), 4);
    return res;
}

// statement: psi values bounding |tau_a tau_b^{tau_c}|
inline ReproResult repro_stmt_psi(const ReproOptions& = {}) {
    using namespace repro_detail;
    ReproResult res{"stmt-psi"};
    const auto& t = universal();
    std::array<std::optional<Rational>, 4> abg{Rational(-1, 8), Rational(-1, 8), Rational(-1, 8),
                                               std::nullopt};
    for (const auto& row : golden::conjugate_order_rows()) {
        auto sol = solve_order_3gen_conjugate(row.order, t);
        bool ok = true;
        for (const char* s : row.minpolys) {
            QPoly want = parse_unipoly(s);
            bool found = false;
            uint64_t ord = 0;
            for (const auto& [f, o] : sol.factor_orders) {
                if (f == want) {
                    found = true;
                    ord = o;
                }
            }
            ok = ok && found && row.order % ord == 0;
            if (found) {
                res.note("k = " + std::to_string(row.order) + ": " + std::string(s) +
                         " gives exact order " + std::to_string(ord));
            }
        }
        res.check(ok, "k = " + std::to_string(row.order) + ": published psi value appears with "
                      "order dividing k");
    }
    // the minimal polynomial of the conjugate word is the published quintic
    auto ts = partial_specialize(t, abg);
    auto word = miyamoto(ts, ts.basis_element(0)) *
                (miyamoto(ts, ts.basis_element(2)) * miyamoto(ts, ts.basis_element(1)) *
                 miyamoto(ts, ts.basis_element(2)));
    auto mp = min_poly_param(word, 3);
    bool match = mp.degree() == 5;
    for (int i = 0; i <= 5 && match; ++i) {
        bool flagged = std::find(golden::kQuinticFlagged.begin(), golden::kQuinticFlagged.end(),
                                 i) != golden::kQuinticFlagged.end();
        QParamPoly printed = parse_parampoly(golden::kMinPolyQuintic[i]);
        match = mp[i] == (flagged ? -printed : printed);
        if (flagged) {
            res.note("x^" + std::to_string(i) + ": derived " + mp[i].str() + " vs published " +
                     printed.str() + " (publication erratum: x = 1 must be a root)");
        }
    }
    QParamPoly at_one;
    for (int i = 0; i <= mp.degree(); ++i) at_one += mp[i];
    res.check(match, "minimal polynomial equals the published quintic up to the two flagged signs");
    res.check(at_one.is_zero(), "x = 1 is a root of the quintic, identically in psi");
    return res;
}

// the A_5 obstruction: angles, psi values, orders, growth evidence
inline ReproResult repro_a5_obstruction(const ReproOptions& opt = {}) {
    using namespace repro_detail;
    ReproResult res{"a5-obstruction"};
    const auto& t = universal();
    auto K = NumberField::create(parse_unipoly("t^2-5", "t"));
    auto nf = [&](long n, long d) { return NumberFieldElem::from_rational(K, Rational(n, d)); };
    auto nfc = [&](const Rational& c0, const Rational& c1) {
        return NumberFieldElem(K, {c0, c1});
    };
    auto tk = table_to_coeff<NumberFieldElem>(t, K);
    NumberFieldElem gamma = nfc(Rational(1, 16), Rational(-3, 16));
    std::array<std::optional<NumberFieldElem>, 4> assign{nf(-1, 8), nf(-1, 8), gamma, std::nullopt};
    auto tsym = partial_specialize(tk, assign);
    auto tau_c = miyamoto(tsym, tsym.basis_element(2));
    auto d = conjugate_axis(tsym, tsym.basis_element(1), tau_c);
    ParamPoly<NumberFieldElem> angle;
    for (size_t i = 0; i < 8; ++i) angle += tsym.gram.at(0, i) * d[i];
    ParamPoly<NumberFieldElem> expected =
        ParamPoly<NumberFieldElem>::variable(3, nf(1, 1)).scale(nf(-4, 3)) +
        ParamPoly<NumberFieldElem>(nfc(Rational(1, 48), Rational(3, 48)));
    res.check(angle == expected, "(a, d) = -(4/3) psi + (3 sqrt5 + 1)/48 symbolically");

    // solve (a, d) = r for the four order-5 targets
    const NumberFieldElem targets[] = {
        nfc(Rational(1, 16), Rational(3, 16)), nfc(Rational(1, 16), Rational(-3, 16)),
        nfc(Rational(7, 16), Rational(3, 16)), nfc(Rational(7, 16), Rational(-3, 16))};
    const NumberFieldElem want_psi[] = {
        nfc(Rational(-1, 32), Rational(-3, 32)), nfc(Rational(-1, 32), Rational(6, 32)),
        nfc(Rational(-10, 32), Rational(-3, 32)), nfc(Rational(-5, 16), Rational(3, 16))};
    NumberFieldElem offset = nfc(Rational(1, 48), Rational(3, 48));
    bool solved = true;
    std::vector<NumberFieldElem> psis;
    for (int i = 0; i < 4; ++i) {
        NumberFieldElem psi = (offset - targets[i]) * nf(3, 4);
        psis.push_back(psi);
        solved = solved && psi == want_psi[i];
    }
    res.check(solved, "the four order-5 targets give exactly the published psi values");

    // outcomes per psi value
    for (int i = 0; i < 4; ++i) {
        std::array<std::optional<NumberFieldElem>, 4> full{nf(-1, 8), nf(-1, 8), gamma, psis[i]};
        auto tspec_poly = partial_specialize(tk, full);
        // everything is assigned; collapse to plain number-field entries
        AlgebraTable<NumberFieldElem> ts;
        ts.dim = 8;
        ts.labels = tspec_poly.labels;
        ts.ctx = K;
        NumberFieldElem zero = nf(0, 1);
        ts.prod.assign(8, std::vector<std::vector<NumberFieldElem>>(8,
                                                                    std::vector<NumberFieldElem>(8, zero)));
        ts.gram = Matrix<NumberFieldElem>(8, zero);
        for (size_t a = 0; a < 8; ++a) {
            for (size_t b = 0; b < 8; ++b) {
                for (size_t c = 0; c < 8; ++c) {
                    ts.prod[a][b][c] = tspec_poly.prod[a][b][c].constant_value(zero);
                }
                ts.gram.at(a, b) = tspec_poly.gram.at(a, b).constant_value(zero);
            }
        }
        auto tau_a2 = miyamoto(ts, ts.basis_element(0));
        auto tau_b2 = miyamoto(ts, ts.basis_element(1));
        auto tau_c2 = miyamoto(ts, ts.basis_element(2));
        auto tau_d = tau_c2 * tau_b2 * tau_c2;
        auto ord = element_order(tau_a2 * tau_d, 100);
        if (i < 2) {
            res.check(!ord.exceeded && ord.order == 5,
                      "psi value " + std::to_string(i + 1) + ": |tau_a tau_d| = 5");
            auto rep = enumerate_nf_group({tau_a2, tau_b2, tau_c2}, opt.probe_cutoff,
                                          AnalysisLevel::None);
            res.check(!rep.completed, "psi value " + std::to_string(i + 1) +
                                          ": closure exceeds " + std::to_string(opt.probe_cutoff) +
                                          " elements");
            res.note("layer growth: " + layer_string(rep.layers));
        } else {
            res.check(!ord.exceeded && ord.order == 10,
                      "psi value " + std::to_string(i + 1) + ": |tau_a tau_d| = 10");
            res.check(gram_rank(ts) == 8,
                      "psi value " + std::to_string(i + 1) + ": Gram rank 8 (simple algebra)");
        }
    }
    return res;
}

// PSL(2,7) over Q
inline ReproResult repro_psl27(const ReproOptions& = {}) {
    using namespace repro_detail;
    ReproResult res{"psl27"};
    const auto& t = universal();
    std::array<Rational, 4> pt{Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(5, 32)};
    auto ts = specialize_table<Rational>(t, pt, QCtx{}, false);
    auto tau_a = miyamoto(ts, ts.basis_element(0));
    auto tau_b = miyamoto(ts, ts.basis_element(1));
    auto tau_c = miyamoto(ts, ts.basis_element(2));
    auto ordq = [&](const Matrix<Rational>& m) {
        auto r = element_order(m, 1000);
        return r.exceeded ? uint64_t(0) : r.order;
    };
    uint64_t oab = ordq(tau_a * tau_b), obc = ordq(tau_b * tau_c), oac = ordq(tau_a * tau_c);
    uint64_t oconj = ordq(tau_a * (tau_c * tau_b * tau_c));
    res.check(oab == 4 && obc == 4 && oac == 4 && oconj == 3,
              "orders (|ab|, |bc|, |ac|, |ab^c|) = (4, 4, 4, 3)");
    auto rep = enumerate_q_group({tau_a, tau_b, tau_c}, 1000, AnalysisLevel::Full);
    res.check(rep.completed && rep.order == 168, "group order 168");
    res.check(rep.perfect == true && rep.solvable == false, "perfect and non-solvable");
    res.check(rep.center == 1, "trivial center");
    res.check(!rep.catalog.empty() && rep.catalog[0] == "PSL(2,7)", "catalog match PSL(2,7)");
    res.check(gram_rank(ts) == 8, "Gram rank 8");
    return res;
}

// Prop 6: the eight published F5 rows
inline ReproResult repro_prop6_char5(const ReproOptions& opt = {}) {
    using namespace repro_detail;
    ReproResult res{"prop6-char5"};
    struct Row {
        long a, b, g, s;
        uint64_t order;
        size_t rank;
        const char* name;
    };
    const Row rows[] = {
        {3, 4, 1, 1, 150000, 4, "5^2:(5^2:(SL(2,5):2))"},
        {3, 1, 3, 2, 187500, 5, "5^5:A_5"},
        {3, 0, 4, 4, 375000, 5, "5^5:S_5"},
        {3, 3, 4, 4, 168, 8, "PSL(2,7)"},
        {3, 3, 1, 0, 372000, 8, "PSL(3,5)"},
        {1, 3, 1, 0, 126000, 8, "PSU(3,5)"},
        {3, 3, 1, 1, 360, 8, "A_6"},
        {3, 3, 1, 4, 2520, 8, "A_7"},
    };
    for (const auto& row : rows) {
        auto gens = fp_taus(5, row.a, row.b, row.g, row.s);
        auto rep = enumerate_fp_group(gens, opt.full_cutoff, AnalysisLevel::Full);
        std::ostringstream what;
        what << "(" << row.a << "," << row.b << "," << row.g << "," << row.s << ") -> " << row.name;
        if (!rep.completed) {
            res.resource_limited = true;
            res.check(false, what.str() + ": enumeration exceeded the cutoff");
            continue;
        }
        bool ok = rep.order == row.order;
        // flags must be consistent with the catalog entry where known
        for (const auto& e : group_catalog()) {
            if (std::string(e.name) != row.name) continue;
            if (e.solvable && rep.solvable) ok = ok && *e.solvable == *rep.solvable;
            if (e.perfect && rep.perfect) ok = ok && *e.perfect == *rep.perfect;
        }
        auto fp = [&](long v) { return PrimeFieldElem::from_int(v, 5); };
        auto ts = specialize_table<PrimeFieldElem>(universal(), {fp(row.a), fp(row.b), fp(row.g), fp(row.s)},
                                                   5, false);
        ok = ok && gram_rank(ts) == row.rank;
        bool named = false;
        for (auto& n : rep.catalog) named = named || n == row.name;
        ok = ok && named;
        std::ostringstream detail;
        detail << what.str() << ": order " << rep.order << ", solvable "
               << (rep.solvable ? (*rep.solvable ? "yes" : "no") : "?") << ", perfect "
               << (rep.perfect ? (*rep.perfect ? "yes" : "no") : "?") << ", gram rank "
               << gram_rank(ts);
        res.check(ok, detail.str());
    }
    return res;
}

// the b(ac) axis example: property substitute for the full identification
inline ReproResult repro_example_sl85(const ReproOptions& opt = {}) {
    using namespace repro_detail;
    ReproResult res{"example-sl85"};
    auto fp = [](long v) { return PrimeFieldElem::from_int(v, 5); };
    auto ts = specialize_table<PrimeFieldElem>(universal(), {fp(3), fp(3), fp(1), fp(1)}, 5, false);
    auto axis = ts.basis_element(7);  // b(ac)
    res.check(ts.is_idempotent(axis), "b(ac) is an idempotent at F5 (3,3,1,1)");
    auto tau_d = miyamoto(ts, axis);
    auto id = Matrix<PrimeFieldElem>::identity(8, 5);
    res.check(tau_d * tau_d == id && !(tau_d == id), "tau_{b(ac)} is an involution");
    res.check(is_automorphism(ts, tau_d), "tau_{b(ac)} is an algebra automorphism");
    res.check(tau_d.transpose() * ts.gram * tau_d == ts.gram, "tau_{b(ac)} preserves the Gram form");
    auto gens = fp_taus(5, 3, 3, 1, 1);
    gens.push_back(tau_d);
    auto rep = enumerate_fp_group(gens, opt.full_cutoff, AnalysisLevel::None);
    res.check(!rep.completed, "4-generator closure exceeds " + std::to_string(opt.full_cutoff) +
                                  " elements (full identification is out of desk scale)");
    res.note("layer growth: " + layer_string(rep.layers));
    return res;
}

// PSL(3,q) / PSU(3,q) rows
inline ReproResult repro_stmt_psl3q(const ReproOptions& opt = {}) {
    using namespace repro_detail;
    ReproResult res{"stmt-psl3q"};
    // q = 7: full enumerations
    {
        auto gens = fp_taus(7, 6, 2, 1, 5);
        auto rep = enumerate_fp_group(gens, opt.full_cutoff, AnalysisLevel::Full);
        if (rep.completed) {
            bool ok = rep.order == 1876896 && rep.perfect == true;
            res.check(ok, "F7 (6,2,1,5): order " + std::to_string(rep.order) + " = |PSL(3,7)|, perfect");
        } else {
            res.resource_limited = true;
            res.check(false, "F7 (6,2,1,5): exceeded cutoff unexpectedly");
        }
    }
    {
        auto gens = fp_taus(7, 6, 2, 1, 1);
        if (opt.extended) {
            auto rep = enumerate_fp_group(gens, opt.extended_cutoff, AnalysisLevel::Full);
            if (rep.completed) {
                bool ok = rep.order == 5663616 && rep.perfect == true;
                res.check(ok, "F7 (6,2,1,1): order " + std::to_string(rep.order) +
                                  " = |PSU(3,7)|, perfect (extended budget)");
            } else {
                res.resource_limited = true;
                res.check(false, "F7 (6,2,1,1): exceeded the extended cutoff unexpectedly");
            }
        } else {
            auto rep = enumerate_fp_group(gens, opt.full_cutoff, AnalysisLevel::None);
            res.check(!rep.completed, "F7 (6,2,1,1): exceeds the default cutoff (|PSU(3,7)| = "
                                      "5663616); extended budget disabled");
            res.note("layer growth: " + layer_string(rep.layers));
        }
    }
    // q = 11, 13: generator-product orders plus growth evidence only
    struct Probe {
        uint64_t p;
        long a, b, g, s;
        const char* name;
    };
    const Probe probes[] = {
        {11, 1, 1, 3, 0, "PSL(3,11)"},
        {11, 1, 1, 3, 1, "PSU(3,11)"},
        {13, 8, 10, 4, 2, "PSL(3,13)"},
        {13, 8, 10, 4, 1, "PSU(3,13)"},
    };
    for (const auto& pr : probes) {
        auto gens = fp_taus(pr.p, pr.a, pr.b, pr.g, pr.s);
        uint64_t oab = exact_order(gens[0] * gens[1]);
        uint64_t obc = exact_order(gens[1] * gens[2]);
        uint64_t oac = exact_order(gens[0] * gens[2]);
        uint64_t oconj = exact_order(gens[0] * (gens[2] * gens[1] * gens[2]));
        auto rep = enumerate_fp_group(gens, opt.probe_cutoff, AnalysisLevel::None);
        std::ostringstream os;
        os << "F" << pr.p << " candidate for " << pr.name << ": orders (" << oab << "," << obc
           << "," << oac << "," << oconj << "), closure exceeds " << opt.probe_cutoff;
        res.check(!rep.completed, os.str());
        res.note("declared not desk-verifiable in full; layer growth: " + layer_string(rep.layers));
    }
    return res;
}

inline const std::vector<std::string>& repro_items() {
    static const std::vector<std::string> items = {
        "prop1",         "remark-f7",     "remark-f11",    "prop2-charpoly", "stmt-columns",
        "prop3-ideal",   "stmt-orders",   "prop4-quotient", "stmt-psi",      "a5-obstruction",
        "psl27",         "prop6-char5",   "example-sl85",  "stmt-psl3q",
    };
    return items;
}

inline ReproResult run_repro(const std::string& item, const ReproOptions& opt) {
    if (item == "prop1") return repro_prop1(opt);
    if (item == "remark-f7") return repro_remark_f7(opt);
    if (item == "remark-f11") return repro_remark_f11(opt);
    if (item == "prop2-charpoly") return repro_prop2_charpoly(opt);
    if (item == "stmt-columns") return repro_stmt_columns(opt);
    if (item == "prop3-ideal") return repro_prop3_ideal(opt);
    if (item == "stmt-orders") return repro_stmt_orders(opt);
    if (item == "prop4-quotient") return repro_prop4_quotient(opt);
    if (item == "stmt-psi") return repro_stmt_psi(opt);
    if (item == "a5-obstruction") return repro_a5_obstruction(opt);
    if (item == "psl27") return repro_psl27(opt);
    if (item == "prop6-char5") return repro_prop6_char5(opt);
    if (item == "example-sl85") return repro_example_sl85(opt);
    if (item == "stmt-psl3q") return repro_stmt_psl3q(opt);
    throw UnknownItem(item);
}

}  // namespace pcalg
