#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pcalg/charpoly.hpp"
#include "pcalg/closure.hpp"
#include "pcalg/golden.hpp"
#include "pcalg/minpoly.hpp"
#include "pcalg/poly_io.hpp"
#include "test_util.hpp"

using namespace pcalg;
using testutil::golden_matrix;
using testutil::pp;
using testutil::universal;

TEST_CASE("universal table: structure constants from the closure engine") {
    const auto& t = universal();
    REQUIRE(t.dim == 8);
    CHECK(t.labels == universal_basis_labels());

    // a*a = a
    CHECK(t.product(0, 0) == t.basis_element(0));
    // a*(ab) = alpha a + 1/2 b - 1/2 ab
    auto a_ab = t.zero_vec();
    a_ab[0] = pp("alpha");
    a_ab[1] = pp("1/2");
    a_ab[3] = pp("-1/2");
    CHECK(t.product(0, 3) == a_ab);
    // (ab)*c = beta a + gamma b + alpha c - a(bc) - b(ac)
    auto ab_c = t.zero_vec();
    ab_c[0] = pp("beta");
    ab_c[1] = pp("gamma");
    ab_c[2] = pp("alpha");
    ab_c[6] = pp("-1");
    ab_c[7] = pp("-1");
    CHECK(t.product(3, 2) == ab_c);
    // gram (ab, ab) = alpha^2 - alpha/2 + 1/2
    CHECK(t.gram.at(3, 3) == pp("alpha^2 - 1/2*alpha + 1/2"));
    // defining form values
    CHECK(t.gram.at(0, 0) == pp("1"));
    CHECK(t.gram.at(0, 1) == pp("alpha"));
    CHECK(t.gram.at(1, 2) == pp("beta"));
    CHECK(t.gram.at(0, 2) == pp("gamma"));
    CHECK(t.gram.at(3, 2) == pp("psi"));
    CHECK(t.gram.at(0, 4) == pp("psi"));
    CHECK(t.gram.at(1, 5) == pp("psi"));
}

TEST_CASE("universal table: all denominators are powers of 2") {
    const auto& t = universal();
    auto pow2 = [](const Rational& q) {
        mpz_class d = q.den();
        while (d % 2 == 0) d /= 2;
        return d == 1;
    };
    for (size_t i = 0; i < 8; ++i) {
        for (size_t j = 0; j < 8; ++j) {
            for (size_t k = 0; k < 8; ++k) {
                for (const auto& [e, c] : t.prod[i][j][k].terms()) CHECK(pow2(c));
            }
            for (const auto& [e, c] : t.gram.at(i, j).terms()) CHECK(pow2(c));
        }
    }
}

TEST_CASE("golden involution matrices tau_a, tau_b, tau_c") {
    const auto& t = universal();
    Matrix<QParamPoly> tau_a = miyamoto(t, t.basis_element(0));
    Matrix<QParamPoly> tau_b = miyamoto(t, t.basis_element(1));
    Matrix<QParamPoly> tau_c = miyamoto(t, t.basis_element(2));

    CHECK(tau_a == golden_matrix(golden::kTauA));
    CHECK(tau_b == golden_matrix(golden::kTauB));

    // the derivation is authoritative for tau_c; mismatches may only occur at
    // the flagged entries and are reported
    auto ref_c = golden_matrix(golden::kTauC);
    std::vector<std::pair<int, int>> mismatches;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            if (tau_c.at(i, j) != ref_c.at(i, j)) mismatches.emplace_back(i, j);
        }
    }
    for (auto& m : mismatches) {
        bool allowed = false;
        for (auto& u : golden::kTauCUncertain) allowed |= (u == m);
        INFO("tau_c mismatch at (" << m.first << "," << m.second
                                   << "): derived = " << tau_c.at(m.first, m.second).str()
                                   << ", reference = " << ref_c.at(m.first, m.second).str());
        CHECK(allowed);
    }
    INFO("tau_c mismatch count: " << mismatches.size());
    CHECK(mismatches.size() <= golden::kTauCUncertain.size());
}

TEST_CASE("tau column 2 equals 1/3(8 alpha a - b - 4 ab)") {
    const auto& t = universal();
    Matrix<QParamPoly> tau_a = miyamoto(t, t.basis_element(0));
    CHECK(tau_a.at(0, 1) == pp("8/3*alpha"));
    CHECK(tau_a.at(1, 1) == pp("-1/3"));
    CHECK(tau_a.at(3, 1) == pp("-4/3"));
    for (int i : {2, 4, 5, 6, 7}) CHECK(tau_a.at(i, 1).is_zero());
}

TEST_CASE("miyamoto involutions square to the identity") {
    const auto& t = universal();
    auto tau_a = miyamoto(t, t.basis_element(0));
    CHECK((tau_a * tau_a).is_identity());
    auto tau_b = miyamoto(t, t.basis_element(1));
    CHECK((tau_b * tau_b).is_identity());
}

TEST_CASE("miyamoto rejects non-axes") {
    const auto& t = universal();
    auto x = t.zero_vec();
    x[0] = pp("1");
    x[1] = pp("1");  // a + b is generically not idempotent
    CHECK_THROWS_AS(miyamoto(t, x), NotAnAxis);
}

TEST_CASE("two-generated subalgebra reproduces the printed 3x3 matrix") {
    const auto& t2 = two_generated_table(universal());
    REQUIRE(t2.dim == 3);
    auto tau_a = miyamoto(t2, t2.basis_element(0));
    auto tau_b = miyamoto(t2, t2.basis_element(1));
    CHECK(tau_a * tau_b == golden_matrix(golden::kTwoGenTauAB));
}

TEST_CASE("8x8 product tau_a tau_b matches the print") {
    const auto& t = universal();
    auto prod = miyamoto(t, t.basis_element(0)) * miyamoto(t, t.basis_element(1));
    CHECK(prod == golden_matrix(golden::kTauAB));
}

TEST_CASE("automorphism property of the Miyamoto involutions, symbolically") {
    const auto& t = universal();
    for (int g = 0; g < 3; ++g) {
        auto tau = miyamoto(t, t.basis_element(g));
        CHECK(is_automorphism(t, tau));
        CHECK(tau.transpose() * t.gram * tau == t.gram);
    }
}

TEST_CASE("pseudo-composition identity x^2 x = f(x,x) x at random rational points") {
    const auto& t = universal();
    std::mt19937_64 rng(31);
    for (int it = 0; it < 100; ++it) {
        std::array<Rational, 4> point;
        for (auto& v : point) {
            v = Rational(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4));
        }
        auto ts = specialize_table<Rational>(t, point, QCtx{}, /*verify=*/false);
        std::vector<Rational> x;
        for (size_t i = 0; i < 8; ++i) {
            x.emplace_back(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
        }
        auto x2 = ts.mult(x, x);
        auto lhs = ts.mult(x2, x);
        auto rhs = vec_scale(x, ts.form(x, x));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("fusion grading: image of (I - tau)/2 is the 1/2-eigenspace of L") {
    const auto& t = universal();
    std::mt19937_64 rng(37);
    for (int it = 0; it < 20; ++it) {
        std::array<Rational, 4> point;
        for (auto& v : point) {
            v = Rational(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4));
        }
        auto ts = specialize_table<Rational>(t, point, QCtx{}, /*verify=*/false);
        for (int g = 0; g < 3; ++g) {
            auto axis = ts.basis_element(g);
            auto L = ts.left_mult(axis);
            auto tau = miyamoto(ts, axis);
            auto id = Matrix<Rational>::identity(8, QCtx{});
            auto P = (id - tau).scale(Rational(1, 2));
            auto Lhalf = L - id.scale(Rational(1, 2));
            CHECK(Lhalf * P == Matrix<Rational>(8, Rational(0)));
            CHECK(rank(P) == 8 - rank(Lhalf));
        }
    }
}

TEST_CASE("specialization examples over F5 and idempotency of b(ac)") {
    const auto& t = universal();
    auto fp = [](long v) { return PrimeFieldElem::from_int(v, 5); };
    auto t5 = specialize_table<PrimeFieldElem>(t, {fp(3), fp(3), fp(1), fp(4)}, 5);
    CHECK(t5.dim == 8);

    auto t5b = specialize_table<PrimeFieldElem>(t, {fp(3), fp(3), fp(1), fp(1)}, 5);
    CHECK(t5b.is_idempotent(t5b.basis_element(7)));  // b(ac)

    std::array<std::optional<Rational>, 4> none{};
    auto same = partial_specialize(t, none);
    CHECK(same.gram == t.gram);
    for (size_t i = 0; i < 8; ++i) {
        for (size_t j = 0; j < 8; ++j) CHECK(same.prod[i][j] == t.prod[i][j]);
    }
}

TEST_CASE("characteristic 2 and 3 are rejected at specialization") {
    const auto& t = universal();
    auto f3 = [](long v) { return PrimeFieldElem::from_int(v, 3); };
    CHECK_THROWS_AS(specialize_table<PrimeFieldElem>(t, {f3(1), f3(1), f3(1), f3(1)}, 3),
                    UnsupportedCharacteristic);
}

TEST_CASE("conjugate_axis produces idempotents and checks automorphisms") {
    const auto& t = universal();
    std::array<Rational, 4> point{Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(5, 32)};
    auto ts = specialize_table<Rational>(t, point, QCtx{}, false);
    auto tau_c = miyamoto(ts, ts.basis_element(2));
    auto d = conjugate_axis(ts, ts.basis_element(1), tau_c);
    CHECK(ts.is_idempotent(d));
    auto id = Matrix<Rational>::identity(8, QCtx{});
    CHECK(conjugate_axis(ts, ts.basis_element(1), id) == ts.basis_element(1));
    auto bad = id.scale(Rational(2));
    CHECK_THROWS_AS(conjugate_axis(ts, ts.basis_element(1), bad), NotAutomorphism);
}

TEST_CASE("angle (a, d) with d = b^{tau_c} over Q(sqrt5), psi symbolic") {
    const auto& t = universal();
    auto K = NumberField::create(parse_unipoly("t^2-5", "t"));
    auto tk = table_to_coeff<NumberFieldElem>(t, K);
    auto nf = [&](long n, long d) { return NumberFieldElem::from_rational(K, Rational(n, d)); };
    NumberFieldElem gamma(K, {Rational(1, 16), Rational(-3, 16)});
    std::array<std::optional<NumberFieldElem>, 4> assign{nf(-1, 8), nf(-1, 8), gamma, std::nullopt};
    auto tspec = partial_specialize(tk, assign);
    auto tau_c = miyamoto(tspec, tspec.basis_element(2));
    auto d = conjugate_axis(tspec, tspec.basis_element(1), tau_c);
    ParamPoly<NumberFieldElem> angle;
    for (size_t i = 0; i < 8; ++i) angle += tspec.gram.at(0, i) * d[i];
    // expected: -(4/3) psi + (3 sqrt5 + 1)/48
    ParamPoly<NumberFieldElem> expected =
        ParamPoly<NumberFieldElem>::variable(3, nf(1, 1)).scale(nf(-4, 3)) +
        ParamPoly<NumberFieldElem>(NumberFieldElem(K, {Rational(1, 48), Rational(3, 48)}));
    CHECK(angle == expected);
}

TEST_CASE("characteristic polynomial of tau_a tau_b: degree 8, alpha only, palindromic") {
    const auto& t = universal();
    auto prod = miyamoto(t, t.basis_element(0)) * miyamoto(t, t.basis_element(1));
    auto cp = charpoly_faddeev(prod);
    REQUIRE(cp.degree() == 8);
    std::vector<QParamPoly> derived;
    for (const char* s : golden::kCharPolyTauABDerived) derived.push_back(pp(s));
    CHECK(cp == UniPoly<QParamPoly>(derived));
    // the published coefficients agree except at the flagged erratum positions
    for (int i = 0; i <= 8; ++i) {
        bool flagged = false;
        for (int f : golden::kCharPolyFlagged) flagged |= (f == i);
        if (flagged) {
            CHECK(cp[i] != pp(golden::kCharPolyTauAB[i]));
        } else {
            CHECK(cp[i] == pp(golden::kCharPolyTauAB[i]));
        }
    }
    // trace of the published product matrix certifies the flagged coefficient
    QParamPoly tr;
    for (int i = 0; i < 8; ++i) tr += golden_matrix(golden::kTauAB).at(i, i);
    CHECK(cp[7] == -tr);
    for (int i = 0; i <= 8; ++i) {
        CHECK(cp[i].degree(1) == 0);
        CHECK(cp[i].degree(2) == 0);
        CHECK(cp[i].degree(3) == 0);
    }
    for (int i = 0; i <= 8; ++i) CHECK(cp[i] == cp[8 - i]);
    CHECK(cp == charpoly_bareiss(prod));
}

TEST_CASE("column statement: powers of tau_a tau_b keep the 2-generated block clean") {
    const auto& t = universal();
    auto m = miyamoto(t, t.basis_element(0)) * miyamoto(t, t.basis_element(1));
    auto pw = Matrix<QParamPoly>::identity(8, QCtx{});
    const std::vector<int> sub = {0, 1, 3};
    const std::vector<int> rest = {2, 4, 5, 6, 7};
    for (int n = 1; n <= 6; ++n) {
        pw = pw * m;
        for (int j : sub) {
            for (int i : rest) CHECK(pw.at(i, j).is_zero());
            for (int i : sub) {
                CHECK(pw.at(i, j).degree(1) == 0);
                CHECK(pw.at(i, j).degree(2) == 0);
                CHECK(pw.at(i, j).degree(3) == 0);
            }
        }
        for (int i : rest) {
            for (int j : rest) {
                CHECK(pw.at(i, j).degree(1) == 0);
                CHECK(pw.at(i, j).degree(2) == 0);
                CHECK(pw.at(i, j).degree(3) == 0);
            }
        }
    }
}

TEST_CASE("(**) polynomials for k = 2 and their common factor") {
    const auto& t = universal();
    auto m = miyamoto(t, t.basis_element(0)) * miyamoto(t, t.basis_element(1));
    auto sq = m * m;
    QParamPoly f1 = sq.at(0, 0) - pp("1");
    QParamPoly f2 = sq.at(0, 1);
    CHECK(f1 == pp(golden::kStarF1));
    CHECK(f2 == pp(golden::kStarF2));
    QPoly f1u = f1.as_unipoly(0, Rational(0));
    QPoly f2u = f2.as_unipoly(0, Rational(0));
    CHECK(gcd_q(f1u, f2u) == parse_unipoly("x - 1/4"));
}

TEST_CASE("minimal polynomial of tau_a tau_b^{tau_c}: the printed quintic") {
    const auto& t = universal();
    std::array<std::optional<Rational>, 4> assign{Rational(-1, 8), Rational(-1, 8), Rational(-1, 8),
                                                  std::nullopt};
    auto ts = partial_specialize(t, assign);
    auto tau_a = miyamoto(ts, ts.basis_element(0));
    auto tau_b = miyamoto(ts, ts.basis_element(1));
    auto tau_c = miyamoto(ts, ts.basis_element(2));
    auto word = tau_a * (tau_c * tau_b * tau_c);
    auto mp = min_poly_param(word, 3);
    REQUIRE(mp.degree() == 5);
    std::vector<QParamPoly> derived;
    for (const char* s : golden::kMinPolyQuinticDerived) derived.push_back(pp(s));
    CHECK(mp == UniPoly<QParamPoly>(derived));
    // published coefficients agree except at the flagged sign errata
    for (int i = 0; i <= 5; ++i) {
        bool flagged = false;
        for (int f : golden::kQuinticFlagged) flagged |= (f == i);
        if (flagged) {
            CHECK(mp[i] == -pp(golden::kMinPolyQuintic[i]));
        } else {
            CHECK(mp[i] == pp(golden::kMinPolyQuintic[i]));
        }
    }
    // x = 1 is a root, symbolically in psi
    QParamPoly at_one;
    for (int i = 0; i <= mp.degree(); ++i) at_one += mp[i];
    CHECK(at_one.is_zero());
    // the quadratic with root pair (1/9)(-(16 psi + 2) +- sqrt(256 psi^2 + 64 psi - 77))
    // has sum -2(16 psi + 2)/9 and product 1; it divides the quintic over Q(psi)
    std::vector<RationalFunction> c5, c2;
    for (int i = 0; i <= 5; ++i) c5.emplace_back(mp[i].as_unipoly(3, Rational(0)));
    UniPoly<RationalFunction> quintic_rf(c5);
    c2.emplace_back(Rational(1));
    c2.emplace_back(parse_unipoly("32/9*x + 4/9"));
    c2.emplace_back(Rational(1));
    UniPoly<RationalFunction> quad_rf(c2);
    CHECK(divmod(quintic_rf, quad_rf).second.is_zero());
    // min poly divides char poly
    auto cp = charpoly_faddeev(word);
    std::vector<RationalFunction> cc;
    for (int i = 0; i <= cp.degree(); ++i) cc.emplace_back(cp[i].as_unipoly(3, Rational(0)));
    UniPoly<RationalFunction> cp_rf(cc);
    CHECK(divmod(cp_rf, quintic_rf).second.is_zero());
}
