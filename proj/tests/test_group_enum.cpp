#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pcalg/group_enum.hpp"
#include "pcalg/poly_io.hpp"
#include "test_util.hpp"

using namespace pcalg;
using testutil::universal;

namespace {

// tau_a, tau_b, tau_c over F_p at a parameter point
std::vector<Matrix<PrimeFieldElem>> fp_taus(uint64_t p, long a, long b, long g, long s) {
    auto fp = [p](long v) { return PrimeFieldElem::from_int(v, p); };
    auto ts = specialize_table<PrimeFieldElem>(universal(), {fp(a), fp(b), fp(g), fp(s)}, p, false);
    return {miyamoto(ts, ts.basis_element(0)), miyamoto(ts, ts.basis_element(1)),
            miyamoto(ts, ts.basis_element(2))};
}

std::vector<Matrix<Rational>> q_taus(const Rational& a, const Rational& b, const Rational& g,
                                     const Rational& s) {
    auto ts = specialize_table<Rational>(universal(), {a, b, g, s}, QCtx{}, false);
    return {miyamoto(ts, ts.basis_element(0)), miyamoto(ts, ts.basis_element(1)),
            miyamoto(ts, ts.basis_element(2))};
}

}  // namespace

TEST_CASE("single identity generator gives the trivial group") {
    auto id = Matrix<Rational>::identity(3, QCtx{});
    auto r = enumerate_q_group({id}, 10, AnalysisLevel::None);
    REQUIRE(r.completed);
    CHECK(r.order == 1);
}

TEST_CASE("2-generated dihedral group of order 6 at alpha = -1/8") {
    auto t2 = two_generated_table(universal());
    std::array<Rational, 4> pt{Rational(-1, 8), Rational(0), Rational(0), Rational(0)};
    auto ts = specialize_table<Rational>(t2, pt, QCtx{}, false);
    auto tau_a = miyamoto(ts, ts.basis_element(0));
    auto tau_b = miyamoto(ts, ts.basis_element(1));
    auto r = enumerate_q_group({tau_a, tau_b}, 100, AnalysisLevel::Full);
    REQUIRE(r.completed);
    CHECK(r.order == 6);
    CHECK(r.solvable == true);
    CHECK(r.perfect == false);
}

TEST_CASE("PSL(2,7) over F5 at (3,3,4,4): order 168, perfect, trivial center") {
    auto gens = fp_taus(5, 3, 3, 4, 4);
    auto r = enumerate_fp_group(gens, 10000, AnalysisLevel::Full);
    REQUIRE(r.completed);
    CHECK(r.order == 168);
    CHECK(r.perfect == true);
    CHECK(r.solvable == false);
    CHECK(r.center == 1);
    REQUIRE(r.catalog.size() == 1);
    CHECK(r.catalog[0] == "PSL(2,7)");
}

TEST_CASE("completed closures are groups: identity, products, inverses") {
    auto gens = fp_taus(5, 3, 3, 4, 4);
    PackedFpOps ops{8, 5};
    std::vector<PackedFpOps::Elem> packed;
    for (auto& m : gens) packed.push_back(ops.pack(m));
    auto g = bfs_closure(ops, packed, 10000);
    REQUIRE(g.completed);
    REQUIRE(g.order() == 168);
    CHECK(g.contains(ops.identity()));
    std::mt19937_64 rng(61);
    for (int it = 0; it < 1000; ++it) {
        auto x = g.element(rng() % g.order());
        auto y = g.element(rng() % g.order());
        CHECK(g.contains(ops.mult(x, y)));
        CHECK(g.contains(ops.inverse(x)));
    }
}

TEST_CASE("group order is invariant under generator reordering and conjugation") {
    auto gens = fp_taus(5, 3, 3, 1, 1);  // A_6 point, order 360
    auto r1 = enumerate_fp_group(gens, 10000, AnalysisLevel::None);
    REQUIRE(r1.completed);
    CHECK(r1.order == 360);
    std::vector<Matrix<PrimeFieldElem>> rev(gens.rbegin(), gens.rend());
    auto r2 = enumerate_fp_group(rev, 10000, AnalysisLevel::None);
    REQUIRE(r2.completed);
    CHECK(r2.order == r1.order);
    // conjugate all generators by an enumerated element
    PackedFpOps ops{8, 5};
    std::vector<PackedFpOps::Elem> packed;
    for (auto& m : gens) packed.push_back(ops.pack(m));
    auto g = bfs_closure(ops, packed, 10000);
    auto c = g.element(g.order() / 3);
    auto cinv = ops.inverse(c);
    std::vector<Matrix<PrimeFieldElem>> conj;
    for (auto& m : gens) {
        conj.push_back(ops.unpack(ops.mult(ops.mult(cinv, ops.pack(m)), c)));
    }
    auto r3 = enumerate_fp_group(conj, 10000, AnalysisLevel::None);
    REQUIRE(r3.completed);
    CHECK(r3.order == r1.order);
}

TEST_CASE("cutoff produces Exceeded with layer statistics") {
    auto gens = fp_taus(5, 3, 3, 4, 4);
    auto r = enumerate_fp_group(gens, 50, AnalysisLevel::None);
    CHECK_FALSE(r.completed);
    CHECK(r.cutoff == 50);
    CHECK(r.layers.size() >= 2);
}

TEST_CASE("derived series of a dihedral group: solvable, derived length 2") {
    auto t2 = two_generated_table(universal());
    std::array<Rational, 4> pt{Rational(-1, 8), Rational(0), Rational(0), Rational(0)};
    auto ts = specialize_table<Rational>(t2, pt, QCtx{}, false);
    ScaledExactOps ops = ScaledExactOps::for_q(3);
    std::vector<ScaledExactOps::Elem> gens{
        ops.from_q(miyamoto(ts, ts.basis_element(0))),
        ops.from_q(miyamoto(ts, ts.basis_element(1)))};
    auto da = derived_analysis(ops, gens, 6, 100);
    CHECK(da.solvable);
    CHECK(da.derived_length == 2);
    CHECK_FALSE(da.perfect);
}

TEST_CASE("Prop-4 quotient bound: completed orders divide 6 k^2") {
    // alpha = beta = gamma = -1/8; psi = 5/32 gives k = 3, psi = -1/8 gives k | 4
    auto g1 = q_taus(Rational(-1, 8), Rational(-1, 8), Rational(-1, 8), Rational(5, 32));
    auto r1 = enumerate_q_group(g1, 1000, AnalysisLevel::None);
    REQUIRE(r1.completed);
    CHECK(54 % r1.order == 0);

    auto g2 = q_taus(Rational(-1, 8), Rational(-1, 8), Rational(-1, 8), Rational(-1, 8));
    auto r2 = enumerate_q_group(g2, 1000, AnalysisLevel::None);
    REQUIRE(r2.completed);
    CHECK(96 % r2.order == 0);
}

TEST_CASE("PSL(2,7) over Q at (1/4, 1/4, 1/4, 5/32)") {
    auto gens = q_taus(Rational(1, 4), Rational(1, 4), Rational(1, 4), Rational(5, 32));
    auto r = enumerate_q_group(gens, 1000, AnalysisLevel::Full);
    REQUIRE(r.completed);
    CHECK(r.order == 168);
    CHECK(r.perfect == true);
    CHECK(r.center == 1);
    REQUIRE_FALSE(r.catalog.empty());
    CHECK(r.catalog[0] == "PSL(2,7)");
}

TEST_CASE("scaled exact elements round-trip their serialization") {
    auto K = NumberField::create(parse_unipoly("t^2-5", "t"));
    ScaledExactOps ops = ScaledExactOps::for_field(2, K);
    Matrix<NumberFieldElem> m(2, NumberFieldElem::from_rational(K, Rational(0)));
    m.at(0, 0) = NumberFieldElem(K, {Rational(1, 3), Rational(-2, 7)});
    m.at(0, 1) = NumberFieldElem(K, {Rational(0), Rational(1)});
    m.at(1, 0) = NumberFieldElem::from_rational(K, Rational(-5, 8));
    m.at(1, 1) = NumberFieldElem::from_rational(K, Rational(1));
    auto e = ops.from_nf(m);
    auto back = ops.deserialize(ops.serialize(e));
    CHECK(ops.to_nf(back) == m);
    // multiplication agrees with the number-field matrix product
    auto e2 = ops.mult(e, e);
    CHECK(ops.to_nf(e2) == m * m);
    // inverse agrees too
    auto ei = ops.inverse(e);
    CHECK(ops.to_nf(ei) == inverse(m));
}

TEST_CASE("catalog orders are the documented constants") {
    auto names = catalog_matches(168);
    REQUIRE(names.size() == 1);
    CHECK(names[0] == "PSL(2,7)");
    CHECK(catalog_matches(360) == std::vector<std::string>{"A_6"});
    CHECK(catalog_matches(2520) == std::vector<std::string>{"A_7"});
    CHECK(catalog_matches(126000) == std::vector<std::string>{"PSU(3,5)"});
    CHECK(catalog_matches(150000) == std::vector<std::string>{"5^2:(5^2:(SL(2,5):2))"});
    CHECK(catalog_matches(187500) == std::vector<std::string>{"5^5:A_5"});
    CHECK(catalog_matches(372000) == std::vector<std::string>{"PSL(3,5)"});
    CHECK(catalog_matches(375000) == std::vector<std::string>{"5^5:S_5"});
    CHECK(catalog_matches(1876896) == std::vector<std::string>{"PSL(3,7)"});
    CHECK(catalog_matches(5663616) == std::vector<std::string>{"PSU(3,7)"});
    CHECK(catalog_matches(999).empty());
}
