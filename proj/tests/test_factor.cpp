#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pcalg/factor.hpp"
#include "pcalg/poly_io.hpp"

using namespace pcalg;

TEST_CASE("factor small products") {
    QPoly f = parse_unipoly("x^2-1");
    auto fac = factor_q(f);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == parse_unipoly("x-1"));
    CHECK(fac[1].first == parse_unipoly("x+1"));

    // irreducible quadratics and cubics stay prime
    CHECK(is_irreducible_q(parse_unipoly("x^2-5")));
    CHECK(is_irreducible_q(parse_unipoly("x^3 - 3/8*x^2 - 9/32*x + 13/512")));
    CHECK(is_irreducible_q(parse_unipoly("x^3 - 9/8*x^2 + 3/32*x + 43/512")));
    CHECK_FALSE(is_irreducible_q(parse_unipoly("x^2-1")));
    CHECK_FALSE(is_irreducible_q(parse_unipoly("x^4+4")));  // (x^2-2x+2)(x^2+2x+2)
}

TEST_CASE("factor with multiplicities") {
    QPoly f = parse_unipoly("x-2") * parse_unipoly("x-2") * parse_unipoly("x+1") *
              parse_unipoly("x^2+1");
    auto fac = factor_q(f);
    REQUIRE(fac.size() == 3);
    bool saw_sq = false;
    for (auto& [p, m] : fac) {
        if (p == parse_unipoly("x-2")) {
            CHECK(m == 2);
            saw_sq = true;
        } else {
            CHECK(m == 1);
        }
    }
    CHECK(saw_sq);
}

TEST_CASE("factor splits degree-6 into two cubics") {
    QPoly c1 = parse_unipoly("x^3 - 3/8*x^2 - 9/32*x + 13/512");
    QPoly c2 = parse_unipoly("x^3 - 9/8*x^2 + 3/32*x + 43/512");
    auto fac = factor_q(c1 * c2);
    REQUIRE(fac.size() == 2);
    CHECK(((fac[0].first == c1 && fac[1].first == c2) || (fac[0].first == c2 && fac[1].first == c1)));
}

TEST_CASE("factor splits degree-10 into two quintics") {
    QPoly q1 = parse_unipoly("x^5 - 7/8*x^4 - 5/16*x^3 + 127/512*x^2 + 119/4096*x - 263/32768");
    QPoly q2 = parse_unipoly("x^5 - 13/8*x^4 + 7/16*x^3 + 145/512*x^2 - 337/4096*x - 197/32768");
    auto fac = factor_q(q1 * q2);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first * fac[1].first == q1 * q2);
    CHECK((fac[0].first == q1 || fac[0].first == q2));
}

TEST_CASE("random products refactor exactly") {
    std::mt19937_64 rng(9);
    auto rnd_monic = [&](int deg) {
        std::vector<Rational> c;
        for (int i = 0; i < deg; ++i) c.emplace_back(static_cast<long>(rng() % 13) - 6);
        c.emplace_back(1);
        return QPoly(std::move(c));
    };
    for (int it = 0; it < 30; ++it) {
        QPoly f = rnd_monic(2) * rnd_monic(3) * rnd_monic(1);
        auto fac = factor_q(f);
        QPoly prod(Rational(1));
        for (auto& [p, m] : fac) {
            for (int k = 0; k < m; ++k) prod = prod * p;
        }
        CHECK(prod == f.scale(f.lead().inverse()));
        for (auto& [p, m] : fac) CHECK(is_irreducible_q(p));
    }
}

TEST_CASE("cyclotomic-style factors") {
    // x^12 - 1 factors into the 6 cyclotomic polynomials of divisors of 12
    QPoly f = parse_unipoly("x^12 - 1");
    auto fac = factor_q(f);
    CHECK(fac.size() == 6);
    int degsum = 0;
    for (auto& [p, m] : fac) {
        CHECK(m == 1);
        degsum += p.degree();
    }
    CHECK(degsum == 12);
}

TEST_CASE("algebraic number construction certifies irreducibility and interval") {
    QPoly quad = parse_unipoly("32*x^2 - 16*x - 7");
    auto ivs = sturm_isolate(quad);
    REQUIRE(ivs.size() == 2);
    auto an = AlgebraicNumber::create(quad, ivs[0]);
    CHECK(an.minpoly.lead().is_one());
    CHECK(an.minpoly.eval(an.interval.lower).sign() * an.minpoly.eval(an.interval.upper).sign() < 0);
    CHECK_THROWS_AS(AlgebraicNumber::create(parse_unipoly("x^2-1"), ivs[0]), ReducibleMinpoly);
}
