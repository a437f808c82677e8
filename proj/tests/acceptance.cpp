// Acceptance suite: one check per criterion, each printing a PASS/FAIL line.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <iostream>
#include <random>
#include <vector>

#include "pcalg/closure.hpp"
#include "pcalg/charpoly.hpp"
#include "pcalg/golden.hpp"
#include "pcalg/ideals.hpp"
#include "pcalg/poly_io.hpp"
#include "pcalg/repro.hpp"

using namespace pcalg;

namespace {

const AlgebraTable<QParamPoly>& universal() { return repro_detail::universal(); }

template <size_t N>
Matrix<QParamPoly> golden_matrix(const std::array<std::array<const char*, N>, N>& rows) {
    std::vector<QParamPoly> e;
    for (const auto& row : rows) {
        for (const char* s : row) e.push_back(parse_parampoly(s));
    }
    return Matrix<QParamPoly>(N, std::move(e));
}

bool criterion_golden_matrices(std::vector<std::string>& lines) {
    const auto& t = universal();
    auto tau_a = miyamoto(t, t.basis_element(0));
    auto tau_b = miyamoto(t, t.basis_element(1));
    auto tau_c = miyamoto(t, t.basis_element(2));
    bool ok = tau_a == golden_matrix(golden::kTauA);
    lines.push_back(std::string("  tau_a matches the print: ") + (ok ? "yes" : "NO"));
    bool okb = tau_b == golden_matrix(golden::kTauB);
    lines.push_back(std::string("  tau_b matches the print: ") + (okb ? "yes" : "NO"));
    ok = ok && okb;
    auto ref_c = golden_matrix(golden::kTauC);
    size_t mismatches = 0;
    bool outside_allowance = false;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            if (tau_c.at(i, j) == ref_c.at(i, j)) continue;
            ++mismatches;
            bool allowed = false;
            for (auto& u : golden::kTauCUncertain) allowed |= u == std::make_pair(i, j);
            if (!allowed) outside_allowance = true;
            lines.push_back("  tau_c (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            "): derived " + tau_c.at(i, j).str() + " vs print " +
                            ref_c.at(i, j).str());
        }
    }
    if (mismatches == 0) {
        lines.push_back(
            "  tau_c matches the print entrywise, including both flagged xi entries of row 3");
    }
    ok = ok && !outside_allowance;
    const auto& t2 = two_generated_table(t);
    auto prod3 = miyamoto(t2, t2.basis_element(0)) * miyamoto(t2, t2.basis_element(1));
    bool ok3 = prod3 == golden_matrix(golden::kTwoGenTauAB);
    lines.push_back(std::string("  3x3 tau_ab matches the print: ") + (ok3 ? "yes" : "NO"));
    bool ok8 = miyamoto(t, t.basis_element(0)) * miyamoto(t, t.basis_element(1)) ==
               golden_matrix(golden::kTauAB);
    lines.push_back(std::string("  8x8 tau_a tau_b matches the print: ") + (ok8 ? "yes" : "NO"));
    return ok && ok3 && ok8;
}

bool criterion_properties(std::vector<std::string>& lines) {
    bool ok = true;
    const auto& t = universal();
    // trilinear + Frobenius identities, symbolically over the parameter ring
    try {
        verify_table(t);
        lines.push_back("  trilinear and Frobenius identities hold symbolically on all triples");
    } catch (const Error& e) {
        lines.push_back(std::string("  table invariants FAILED: ") + e.what());
        ok = false;
    }
    // pseudo-composition identity at random points
    std::mt19937_64 rng(2024);
    bool pc_ok = true;
    for (int it = 0; it < 100; ++it) {
        std::array<Rational, 4> point;
        for (auto& v : point) {
            v = Rational(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4));
        }
        auto ts = specialize_table<Rational>(t, point, QCtx{}, false);
        std::vector<Rational> x;
        for (int i = 0; i < 8; ++i) {
            x.emplace_back(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
        }
        pc_ok = pc_ok && ts.mult(ts.mult(x, x), x) == vec_scale(x, ts.form(x, x));
    }
    lines.push_back(std::string("  x^2 x = f(x,x) x at 100 random rational points: ") +
                    (pc_ok ? "yes" : "NO"));
    ok = ok && pc_ok;
    // Cayley-Hamilton and minimal-divides-characteristic on random matrices
    bool ch_ok = true;
    for (int it = 0; it < 25; ++it) {
        size_t n = 2 + (it % 4);
        std::vector<Rational> e;
        for (size_t k = 0; k < n * n; ++k) e.emplace_back(static_cast<long>(rng() % 11) - 5);
        Matrix<Rational> m(n, std::move(e));
        auto cp = charpoly_faddeev(m);
        ch_ok = ch_ok && poly_at_matrix(cp, m) == Matrix<Rational>(n, Rational(0));
        auto mp = min_poly(m);
        ch_ok = ch_ok && divmod(cp, mp).second.is_zero();
    }
    lines.push_back(std::string("  Cayley-Hamilton and min | char on random matrices: ") +
                    (ch_ok ? "yes" : "NO"));
    ok = ok && ch_ok;
    // palindromic characteristic polynomial of tau_a tau_b
    auto cp = charpoly_faddeev(miyamoto(t, t.basis_element(0)) * miyamoto(t, t.basis_element(1)));
    bool pal = true;
    for (int i = 0; i <= 8; ++i) pal = pal && cp[i] == cp[8 - i];
    lines.push_back(std::string("  charpoly(tau_a tau_b) palindromic: ") + (pal ? "yes" : "NO"));
    ok = ok && pal;
    // Corollary 1 and Miyamoto invariance on the Prop-3 quotient
    std::array<Rational, 4> pt{Rational(1, 4), Rational(1), Rational(1, 4), Rational(1, 4)};
    auto ts = specialize_table<Rational>(t, pt, QCtx{}, false);
    auto tau = miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
    auto I = ideal_closure(ts, fixed_point_defect(ts, tau, 2));
    bool inv = true;
    for (int g = 0; g < 3; ++g) {
        auto tg = miyamoto(ts, ts.basis_element(g));
        for (const auto& v : I.vectors()) inv = inv && I.span.contains(tg.apply(v));
    }
    lines.push_back(std::string("  defect ideal is invariant under tau_a, tau_b, tau_c: ") +
                    (inv ? "yes" : "NO"));
    ok = ok && inv;
    auto q = quotient(ts, I);
    auto down = element_order(q.induced(tau), 100);
    auto up = element_order(tau, 100);
    bool divides = !down.exceeded && !up.exceeded && up.order % down.order == 0;
    lines.push_back("  quotient order " + std::to_string(down.order) + " divides upstairs order " +
                    std::to_string(up.order) + (divides ? "" : " FAILED"));
    ok = ok && divides;
    return ok;
}

struct Criterion {
    int id;
    std::string what;
    bool pass = false;
    std::vector<std::string> lines;
    double seconds = 0;
};

}  // namespace

int main() {
    ReproOptions opt = repro_options_from_env();
    std::vector<Criterion> criteria;

    auto add_repro = [&](int id, const std::string& what, const std::string& item) {
        Criterion c{id, what};
        auto t0 = std::chrono::steady_clock::now();
        auto r = run_repro(item, opt);
        c.pass = r.pass;
        c.lines = r.lines;
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        criteria.push_back(std::move(c));
    };
    auto add_direct = [&](int id, const std::string& what, auto fn) {
        Criterion c{id, what};
        auto t0 = std::chrono::steady_clock::now();
        c.pass = fn(c.lines);
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        criteria.push_back(std::move(c));
    };

    add_direct(1, "golden involution matrices", criterion_golden_matrices);
    add_repro(2, "characteristic polynomial of tau_a tau_b", "prop2-charpoly");
    add_repro(3, "2-generated order table, rows 2..12", "prop1");
    {
        Criterion c{4, "exhaustive F7 and F11 order tables"};
        auto t0 = std::chrono::steady_clock::now();
        auto r7 = run_repro("remark-f7", opt);
        auto r11 = run_repro("remark-f11", opt);
        c.pass = r7.pass && r11.pass;
        c.lines = r7.lines;
        c.lines.insert(c.lines.end(), r11.lines.begin(), r11.lines.end());
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        criteria.push_back(std::move(c));
    }
    add_repro(5, "defect matrix, echelon rank, ideal dimensions", "prop3-ideal");
    add_repro(6, "conjugate-word minimal polynomial and psi values", "stmt-psi");
    add_repro(7, "finite quotients divide 6 k^2", "prop4-quotient");
    add_repro(8, "A5 obstruction: angles, psi values, growth evidence", "a5-obstruction");
    add_repro(9, "PSL(2,7) over Q", "psl27");
    add_repro(10, "the eight published F5 rows", "prop6-char5");
    add_repro(11, "b(ac) axis properties and 4-generator growth", "example-sl85");
    add_repro(12, "PSL(3,q)/PSU(3,q) rows", "stmt-psl3q");
    add_direct(13, "property suites", criterion_properties);

    // the statement and column checks ride along with their criteria
    {
        Criterion c{13, "supporting statements (orders and columns)"};
        auto t0 = std::chrono::steady_clock::now();
        auto r1 = run_repro("stmt-orders", opt);
        auto r2 = run_repro("stmt-columns", opt);
        c.pass = r1.pass && r2.pass;
        c.lines = r1.lines;
        c.lines.insert(c.lines.end(), r2.lines.begin(), r2.lines.end());
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        criteria.push_back(std::move(c));
    }

    bool all = true;
    for (const auto& c : criteria) {
        std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.what << " ("
                  << static_cast<int>(c.seconds * 1000) << " ms)\n";
        for (const auto& l : c.lines) std::cout << l << "\n";
        all = all && c.pass;
    }
    std::cout << (all ? "ACCEPTANCE: all criteria passed\n" : "ACCEPTANCE: FAILURES above\n");
    return all ? 0 : 1;
}
