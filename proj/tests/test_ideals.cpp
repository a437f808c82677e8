#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pcalg/golden.hpp"
#include "pcalg/ideals.hpp"
#include "pcalg/poly_io.hpp"
#include "test_util.hpp"

using namespace pcalg;
using testutil::golden_matrix;
using testutil::pp;
using testutil::universal;

namespace {

AlgebraTable<Rational> prop3_table() {
    std::array<Rational, 4> pt{Rational(1, 4), Rational(1), Rational(1, 4), Rational(1, 4)};
    return specialize_table<Rational>(universal(), pt, QCtx{}, false);
}

}  // namespace

TEST_CASE("symbolic defect matrix at alpha = 1/4 equals the print times 9") {
    std::array<std::optional<Rational>, 4> assign{Rational(1, 4), std::nullopt, std::nullopt,
                                                  std::nullopt};
    auto ts = partial_specialize(universal(), assign);
    auto tau_ab = miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
    auto defect = fixed_point_defect(ts, tau_ab, 2);
    auto ref = golden_matrix(golden::kDefectTimes9);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            CHECK(defect[i][j].scale(Rational(9)) == ref.at(i, j));
        }
    }
    // spot value from row 3: a-coefficient
    CHECK(defect[2][0].scale(Rational(9)) == pp("-16/3*beta + 32/3*gamma - 64/3*psi"));
}

TEST_CASE("echelon of the last four defect columns: rank 4, printed row space") {
    std::array<std::optional<Rational>, 4> assign{Rational(1, 4), std::nullopt, std::nullopt,
                                                  std::nullopt};
    auto ts = partial_specialize(universal(), assign);
    auto tau_ab = miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
    auto defect = fixed_point_defect(ts, tau_ab, 2);
    // the last four coordinates are parameter-free rationals
    std::vector<std::vector<Rational>> rows;
    for (auto& v : defect) {
        std::vector<Rational> row;
        for (int j = 4; j < 8; ++j) {
            REQUIRE(v[j].is_constant());
            row.push_back(v[j].constant_value(Rational(0)));
        }
        rows.push_back(std::move(row));
    }
    auto ech = rref(rows, 4);
    REQUIRE(ech.rows.size() == 4);
    CHECK(ech.pivots == std::vector<size_t>{0, 1, 2, 3});
    // same row space as the printed echelon form
    std::vector<std::vector<Rational>> printed;
    for (auto& r : golden::kDefectEchelon) {
        printed.push_back({Rational(r[0]), Rational(r[1]), Rational(r[2]), Rational(r[3])});
    }
    auto ech2 = rref(printed, 4);
    CHECK(ech.rows == ech2.rows);
}

TEST_CASE("Prop-3 point: ideal dimension 4, induced involution order 2") {
    auto ts = prop3_table();
    auto tau_ab = miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
    auto defect = fixed_point_defect(ts, tau_ab, 2);
    auto I = ideal_closure(ts, defect);
    REQUIRE(I.dim() == 4);

    auto q = quotient(ts, I);
    CHECK(q.table.dim == 4);
    auto induced = q.induced(tau_ab);
    auto r = element_order(induced, 100);
    REQUIRE_FALSE(r.exceeded);
    CHECK(r.order == 2);

    // quotient-order divisibility: the order upstairs is a multiple
    auto up = element_order(tau_ab, 100);
    REQUIRE_FALSE(up.exceeded);
    CHECK(up.order == 4);
    CHECK(up.order % r.order == 0);
}

TEST_CASE("b = c gives a 5-dimensional ideal containing I") {
    auto ts = prop3_table();
    auto tau_ab = miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
    auto defect = fixed_point_defect(ts, tau_ab, 2);
    auto I = ideal_closure(ts, defect);
    auto seeds = defect;
    seeds.push_back(vec_sub(ts.basis_element(1), ts.basis_element(2)));
    auto J = ideal_closure(ts, seeds);
    CHECK(J.dim() == 5);
    for (const auto& v : I.vectors()) CHECK(J.span.contains(v));
}

TEST_CASE("ab = 0 = c: the relation span is 6-dimensional but is not an ideal") {
    auto ts = prop3_table();
    auto tau_ab = miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
    auto defect = fixed_point_defect(ts, tau_ab, 2);
    SpanBasis<Rational> span;
    for (auto& v : defect) span.insert(v);
    span.insert(ts.basis_element(3));
    span.insert(ts.basis_element(2));
    CHECK(span.dim() == 6);
    // closing under multiplication degenerates to the whole algebra: no proper
    // ideal contains the basis monomial ab
    auto seeds = defect;
    seeds.push_back(ts.basis_element(3));
    seeds.push_back(ts.basis_element(2));
    CHECK(ideal_closure(ts, seeds).dim() == 8);
}

TEST_CASE("empty seeds give the zero ideal; a generator seeds everything") {
    auto ts = prop3_table();
    CHECK(ideal_closure(ts, {}).dim() == 0);
    std::array<Rational, 4> gpt{Rational(1, 3), Rational(2, 5), Rational(1, 7), Rational(3, 11)};
    auto tg = specialize_table<Rational>(universal(), gpt, QCtx{}, false);
    CHECK(ideal_closure(tg, {tg.basis_element(0)}).dim() == 8);
}

TEST_CASE("every constructed ideal is Miyamoto-invariant") {
    auto ts = prop3_table();
    auto tau_ab = miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
    auto I = ideal_closure(ts, fixed_point_defect(ts, tau_ab, 2));
    for (int g = 0; g < 3; ++g) {
        auto tau = miyamoto(ts, ts.basis_element(g));
        for (const auto& v : I.vectors()) CHECK(I.span.contains(tau.apply(v)));
    }
}

TEST_CASE("defect of an automorphism power that is the identity vanishes") {
    auto ts = prop3_table();
    auto tau_ab = miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
    auto r = element_order(tau_ab, 100);
    auto defect = fixed_point_defect(ts, tau_ab, r.order);
    for (auto& v : defect) CHECK(vec_is_zero(v));
    // a non-automorphism is rejected
    auto bad = Matrix<Rational>::identity(8, QCtx{}).scale(Rational(2));
    CHECK_THROWS_AS(fixed_point_defect(ts, bad, 2), NotAutomorphism);
}

TEST_CASE("quotient projection respects products on random pairs") {
    auto ts = prop3_table();
    auto tau_ab = miyamoto(ts, ts.basis_element(0)) * miyamoto(ts, ts.basis_element(1));
    auto I = ideal_closure(ts, fixed_point_defect(ts, tau_ab, 2));
    auto q = quotient(ts, I);
    std::mt19937_64 rng(51);
    for (int it = 0; it < 200; ++it) {
        std::vector<Rational> x, y;
        for (int i = 0; i < 8; ++i) {
            x.emplace_back(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
            y.emplace_back(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3));
        }
        CHECK(q.project(ts.mult(x, y)) == q.table.mult(q.project(x), q.project(y)));
    }
}

TEST_CASE("quotient by the whole algebra is rejected") {
    auto ts = prop3_table();
    std::vector<std::vector<Rational>> all;
    for (size_t i = 0; i < 8; ++i) all.push_back(ts.basis_element(i));
    auto I = ideal_closure(ts, all);
    REQUIRE(I.dim() == 8);
    CHECK_THROWS_AS(quotient(ts, I), ImproperIdeal);
}

TEST_CASE("the Gram radical is an ideal") {
    const auto& t = universal();
    std::mt19937_64 rng(53);
    for (int it = 0; it < 10; ++it) {
        std::array<Rational, 4> point;
        for (auto& v : point) {
            v = Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 4));
        }
        auto ts = specialize_table<Rational>(t, point, QCtx{}, false);
        auto rad = gram_radical(ts);
        SpanBasis<Rational> span;
        for (auto& v : rad) span.insert(v);
        for (const auto& v : rad) {
            for (size_t j = 0; j < 8; ++j) {
                auto w = ts.mult(v, ts.basis_element(j));
                CHECK(span.contains(w));
            }
        }
        CHECK(gram_rank(ts) == 8 - span.dim());
    }
}

TEST_CASE("gram ranks at named parameter points") {
    const auto& t = universal();
    std::array<Rational, 4> psl{Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(5, 32)};
    auto tq = specialize_table<Rational>(t, psl, QCtx{}, false);
    CHECK(gram_rank(tq) == 8);

    auto fp = [](long v) { return PrimeFieldElem::from_int(v, 5); };
    auto t5a = specialize_table<PrimeFieldElem>(t, {fp(3), fp(1), fp(3), fp(2)}, 5, false);
    CHECK(gram_rank(t5a) == 5);
    auto t5b = specialize_table<PrimeFieldElem>(t, {fp(3), fp(0), fp(4), fp(4)}, 5, false);
    CHECK(gram_rank(t5b) == 5);
    auto t5c = specialize_table<PrimeFieldElem>(t, {fp(3), fp(4), fp(1), fp(1)}, 5, false);
    CHECK(gram_rank(t5c) == 4);
}
