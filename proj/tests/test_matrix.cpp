#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pcalg/charpoly.hpp"
#include "pcalg/matrix.hpp"
#include "pcalg/minpoly.hpp"
#include "pcalg/poly_io.hpp"

using namespace pcalg;

namespace {

Matrix<Rational> qmat(size_t n, std::vector<long> v) {
    std::vector<Rational> e;
    for (long x : v) e.emplace_back(x);
    return Matrix<Rational>(n, std::move(e));
}

}  // namespace

TEST_CASE("charpoly trivial examples") {
    auto id2 = Matrix<Rational>::identity(2, QCtx{});
    CHECK(charpoly_faddeev(id2) == parse_unipoly("x^2 - 2*x + 1"));
    CHECK(charpoly_bareiss(id2) == parse_unipoly("x^2 - 2*x + 1"));

    auto anti = qmat(2, {0, 1, 1, 0});
    CHECK(charpoly_faddeev(anti) == parse_unipoly("x^2 - 1"));
    CHECK(charpoly_hessenberg(anti) == parse_unipoly("x^2 - 1"));
}

TEST_CASE("Cayley-Hamilton and route agreement on random matrices") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 40; ++it) {
        size_t n = 2 + (it % 4);
        std::vector<Rational> e;
        for (size_t k = 0; k < n * n; ++k) e.emplace_back(static_cast<long>(rng() % 11) - 5);
        Matrix<Rational> m(n, std::move(e));
        auto cp = charpoly_faddeev(m);
        CHECK(cp == charpoly_bareiss(m));
        CHECK(cp == charpoly_hessenberg(m));
        CHECK(poly_at_matrix(cp, m) == Matrix<Rational>(n, Rational(0)));
        auto mp = min_poly(m);
        CHECK(divmod(cp, mp).second.is_zero());
        CHECK(poly_at_matrix(mp, m) == Matrix<Rational>(n, Rational(0)));
    }
}

TEST_CASE("charpoly over prime fields matches Bareiss route") {
    std::mt19937_64 rng(22);
    for (uint64_t p : {5ull, 7ull}) {
        for (int it = 0; it < 20; ++it) {
            size_t n = 2 + (it % 5);
            std::vector<PrimeFieldElem> e;
            for (size_t k = 0; k < n * n; ++k) e.emplace_back(rng() % p, p);
            Matrix<PrimeFieldElem> m(n, std::move(e));
            auto cp = charpoly_hessenberg(m);
            CHECK(cp == charpoly_bareiss(m));
            CHECK(poly_at_matrix(cp, m) == Matrix<PrimeFieldElem>(n, PrimeFieldElem(0, p)));
        }
    }
}

TEST_CASE("rank, echelon, kernel") {
    CHECK(rank(Matrix<Rational>(3, Rational(0))) == 0);
    auto m = qmat(3, {1, 2, 3, 2, 4, 6, 1, 1, 1});
    CHECK(rank(m) == 2);
    auto k = kernel(m);
    REQUIRE(k.size() == 1);
    auto img = m.apply(k[0]);
    for (auto& x : img) CHECK(x.is_zero());
    auto e = echelon(m);
    CHECK(e.at(0, 0) == Rational(1));
    CHECK(rank(e) == 2);
}

TEST_CASE("inverse and singular detection") {
    auto m = qmat(2, {1, 2, 3, 4});
    auto mi = inverse(m);
    CHECK(m * mi == Matrix<Rational>::identity(2, QCtx{}));
    CHECK_THROWS_AS(inverse(qmat(2, {1, 2, 2, 4})), Singular);
}

TEST_CASE("element order") {
    auto id = Matrix<Rational>::identity(3, QCtx{});
    auto r = element_order(id, 10);
    CHECK_FALSE(r.exceeded);
    CHECK(r.order == 1);
    // rotation by 90 degrees has order 4
    auto rot = qmat(2, {0, -1, 1, 0});
    CHECK(element_order(rot, 10).order == 4);
    CHECK(exact_order_dividing(rot, 8) == 4);
    CHECK(element_order(rot, 3).exceeded);
    CHECK_THROWS_AS(element_order(qmat(2, {1, 0, 0, 0}), 10), Singular);
}

TEST_CASE("min_poly of identity is x - 1") {
    auto id = Matrix<Rational>::identity(4, QCtx{});
    CHECK(min_poly(id) == parse_unipoly("x - 1"));
    auto diag = qmat(2, {2, 0, 0, 2});
    CHECK(min_poly(diag) == parse_unipoly("x - 2"));
}
