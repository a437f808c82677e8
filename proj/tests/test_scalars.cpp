#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pcalg/domain.hpp"
#include "pcalg/number_field.hpp"
#include "pcalg/poly_io.hpp"
#include "pcalg/prime_field.hpp"
#include "pcalg/rational.hpp"

using namespace pcalg;

TEST_CASE("rational basics") {
    Rational a(1, 4);
    CHECK(a.inverse() == Rational(4));
    CHECK(Rational(3, 6) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational::parse("-3/8").str() == "-3/8");
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational(1).operator/(Rational(0)), DivisionByZero);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("prime field inversion and embedding") {
    CHECK(PrimeFieldElem(3, 7).inverse() == PrimeFieldElem(5, 7));
    CHECK(embed_rational_fp(Rational(1, 4), 5) == PrimeFieldElem(4, 5));
    CHECK(embed_rational_fp(Rational(-1, 8), 5) == PrimeFieldElem(3, 5));
    CHECK(embed_rational_fp(Rational(1, 4), 7) == PrimeFieldElem(2, 7));
    CHECK_THROWS_AS(embed_rational_fp(Rational(1, 5), 5), NonEmbeddable);
    CHECK_THROWS_AS(PrimeFieldElem(0, 7).inverse(), DivisionByZero);
    CHECK_THROWS_AS(PrimeFieldElem(1, 7) + PrimeFieldElem(1, 5), MixedDomains);
}

TEST_CASE("embed_rational is a ring homomorphism on random pairs") {
    std::mt19937_64 rng(42);
    for (uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        for (int it = 0; it < 200; ++it) {
            long n1 = static_cast<long>(rng() % 2001) - 1000;
            long n2 = static_cast<long>(rng() % 2001) - 1000;
            long d1 = 1 + static_cast<long>(rng() % 50);
            long d2 = 1 + static_cast<long>(rng() % 50);
            if (d1 % p == 0 || d2 % p == 0) continue;
            Rational q1(n1, d1), q2(n2, d2);
            auto e = [&](const Rational& q) { return embed_rational_fp(q, p); };
            CHECK(e(q1 * q2) == e(q1) * e(q2));
            CHECK(e(q1 + q2) == e(q1) + e(q2));
        }
    }
}

TEST_CASE("field axioms on random triples in every domain") {
    std::mt19937_64 rng(7);
    auto K = NumberField::create(parse_unipoly("t^2-5", "t"));
    for (int it = 0; it < 100; ++it) {
        // Q
        Rational a(static_cast<long>(rng() % 200) - 100, 1 + static_cast<long>(rng() % 30));
        Rational b(static_cast<long>(rng() % 200) - 100, 1 + static_cast<long>(rng() % 30));
        Rational c(static_cast<long>(rng() % 200) - 100, 1 + static_cast<long>(rng() % 30));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
        // F_p
        PrimeFieldElem x(rng() % 13, 13), y(rng() % 13, 13), z(rng() % 13, 13);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x * y) * z == x * (y * z));
        if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
        // Q(sqrt5)
        auto r = [&] {
            return NumberFieldElem(
                K, {Rational(static_cast<long>(rng() % 20) - 10, 1 + static_cast<long>(rng() % 8)),
                    Rational(static_cast<long>(rng() % 20) - 10, 1 + static_cast<long>(rng() % 8))});
        };
        NumberFieldElem u = r(), v = r(), w = r();
        CHECK((u + v) + w == u + (v + w));
        CHECK(u * (v + w) == u * v + u * w);
        CHECK((u * v) * w == u * (v * w));
    }
}

TEST_CASE("number field inverse: sqrt(5)^{-1} = t/5") {
    auto K = NumberField::create(parse_unipoly("t^2-5", "t"));
    NumberFieldElem t = NumberFieldElem::generator(K);
    NumberFieldElem inv = t.inverse();
    CHECK(inv == NumberFieldElem(K, {Rational(0), Rational(1, 5)}));
    CHECK((t * inv).is_one());
}

TEST_CASE("number field zero-test agrees with x*inv(x) - 1 == 0 on 1000 products") {
    auto K = NumberField::create(parse_unipoly("t^3-2", "t"));
    std::mt19937_64 rng(11);
    NumberFieldElem one = NumberFieldElem::from_rational(K, Rational(1));
    int checked = 0;
    while (checked < 1000) {
        std::vector<Rational> c;
        for (int i = 0; i < 3; ++i) {
            c.emplace_back(static_cast<long>(rng() % 40) - 20, 1 + static_cast<long>(rng() % 6));
        }
        NumberFieldElem x(K, std::move(c));
        if (x.is_zero()) continue;
        NumberFieldElem prod = x * x.inverse() - one;
        CHECK(prod.is_zero());
        ++checked;
    }
}

TEST_CASE("reducible defining polynomial is rejected") {
    CHECK_THROWS_AS(NumberField::create(parse_unipoly("t^2-1", "t")), ReducibleMinpoly);
    CHECK_THROWS_AS(NumberField::create(parse_unipoly("t^2-4", "t")), ReducibleMinpoly);
    CHECK_NOTHROW(NumberField::create(parse_unipoly("t^2-2", "t")));
}

TEST_CASE("domain descriptors parse and print") {
    CHECK(parse_domain("Q").kind == DomainKind::Q);
    auto f5 = parse_domain("Fp:5");
    CHECK(f5.kind == DomainKind::Fp);
    CHECK(f5.p == 5);
    CHECK(f5.str() == "Fp:5");
    auto nf = parse_domain("NF:t^2-5");
    CHECK(nf.kind == DomainKind::NF);
    CHECK(nf.nf_poly == parse_unipoly("t^2-5", "t"));
    CHECK(nf.str() == "NF:t^2-5");
    CHECK_THROWS_AS(parse_domain("Fp:6"), ParseError);
    CHECK_THROWS_AS(parse_domain("Zp:5"), ParseError);
}
