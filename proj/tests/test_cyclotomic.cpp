#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqr/cyclotomic.hpp"

using namespace pqr;

namespace {

std::vector<BigInt> poly(std::initializer_list<int> cs) {
    std::vector<BigInt> out;
    for (int c : cs) out.emplace_back(c);
    return out;
}

Cyclotomic zeta(std::uint32_t e, std::uint64_t k = 1) { return Cyclotomic::root_of_unity(e, k); }

}  // namespace

TEST_CASE("cyclotomic polynomials match the classical table") {
    CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == poly({1, 1}));
    CHECK(cyclotomic_polynomial(3) == poly({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
    CHECK(cyclotomic_polynomial(5) == poly({1, 1, 1, 1, 1}));
    CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));
    CHECK(cyclotomic_polynomial(8) == poly({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(9) == poly({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
    // first conductor with a coefficient outside {-1,0,1}
    auto c105 = cyclotomic_polynomial(105);
    CHECK(c105.size() == 49);
    CHECK(c105[7] == -2);
    CHECK(c105[41] == -2);
}

TEST_CASE("roots of unity satisfy their minimal polynomial") {
    for (std::uint32_t e : {2u, 3u, 4u, 6u, 7u, 9u, 12u, 15u, 16u, 20u, 30u}) {
        auto phi = cyclotomic_polynomial(e);
        Cyclotomic z = zeta(e);
        Cyclotomic acc = Cyclotomic::integer(BigInt(0));
        for (std::size_t i = phi.size(); i-- > 0;) acc = acc * z + Cyclotomic::rational(BigRat(phi[i]));
        CHECK(acc.is_zero());
    }
}

TEST_CASE("root of unity arithmetic") {
    CHECK(zeta(5, 2) * zeta(5, 3) == Cyclotomic::integer(BigInt(1)));
    CHECK(zeta(7, 3) * zeta(7, 6) == zeta(7, 2));
    CHECK(zeta(8) * zeta(8) == zeta(8, 2));
    Cyclotomic sum;
    for (std::uint64_t k = 0; k < 12; ++k) sum = sum + zeta(12, k);
    CHECK(sum.is_zero());
    CHECK(zeta(1, 0) == Cyclotomic::integer(BigInt(1)));
}

TEST_CASE("equality crosses conductors") {
    CHECK(zeta(6, 2) == zeta(3, 1));
    CHECK(zeta(4, 2) == Cyclotomic::integer(BigInt(-1)));
    CHECK(zeta(2, 1) == Cyclotomic::integer(BigInt(-1)));
    CHECK(zeta(10, 2) == zeta(5, 1));
    CHECK(zeta(6, 1) != zeta(3, 1));
}

TEST_CASE("rational detection through the power basis") {
    Cyclotomic one = zeta(6, 1) + zeta(6, 5);
    CHECK(one.is_rational());
    CHECK(one.rational_value() == 1);
    CHECK(!zeta(5).is_rational());
    CHECK_THROWS_AS(zeta(5).rational_value(), PreconditionError);
    CHECK(Cyclotomic::rational(BigRat(BigInt(2), BigInt(3))).rational_value() == BigRat(BigInt(2), BigInt(3)));
}

TEST_CASE("conjugation and galois action") {
    Cyclotomic z = zeta(7);
    CHECK(z * z.conjugated() == Cyclotomic::integer(BigInt(1)));
    CHECK(z.conjugated().conjugated() == z);
    CHECK(z.galois(3) == zeta(7, 3));
    CHECK_THROWS_AS(zeta(6).galois(2), PreconditionError);

    // golden-ratio relation: t = zeta5 + zeta5^4 satisfies t^2 + t - 1 = 0
    Cyclotomic t = zeta(5, 1) + zeta(5, 4);
    CHECK((t * t + t - Cyclotomic::integer(BigInt(1))).is_zero());

    // quadratic Gauss sum for 5
    Cyclotomic g = zeta(5, 1) - zeta(5, 2) - zeta(5, 3) + zeta(5, 4);
    CHECK(g * g == Cyclotomic::integer(BigInt(5)));
}

TEST_CASE("lifting preserves values") {
    CHECK(zeta(3).lifted_to(12) == zeta(12, 4));
    Cyclotomic t = zeta(5, 1) + zeta(5, 4);
    CHECK(t.lifted_to(20) == zeta(20, 4) + zeta(20, 16));
    CHECK_THROWS_AS(zeta(5).lifted_to(12), PreconditionError);
}

TEST_CASE("printing is GAP-flavored and stable") {
    CHECK(Cyclotomic::integer(BigInt(3)).to_string() == "3");
    CHECK(Cyclotomic::integer(BigInt(-1)).to_string() == "-1");
    CHECK(Cyclotomic().to_string() == "0");
    CHECK(Cyclotomic::rational(BigRat(BigInt(-2), BigInt(3))).to_string() == "-2/3");
    CHECK(zeta(5).to_string() == "E(5)");
    // zeta5^4 rewrites through the power basis
    CHECK((zeta(5, 1) + zeta(5, 4)).to_string() == "-1-E(5)^2-E(5)^3");
    CHECK((Cyclotomic::integer(BigInt(2)) * zeta(8) - zeta(8, 3)).to_string() == "2*E(8)-E(8)^3");
    CHECK((Cyclotomic::integer(BigInt(1)) - zeta(4)).to_string() == "1-E(4)");
}

TEST_CASE("cyclic input folding") {
    // zeta4^2 = -1 arrives as a cyclic coefficient at index 2
    CHECK(Cyclotomic::from_cyclic_counts(4, {0, 0, 1, 0}) == Cyclotomic::integer(BigInt(-1)));
    // 1 + zeta3 + zeta3^2 = 0
    CHECK(Cyclotomic::from_cyclic_counts(3, {1, 1, 1}).is_zero());
    CHECK(Cyclotomic::from_cyclic_counts(6, {0, 2, 0, 0, 0, 0}) == Cyclotomic::integer(BigInt(2)) * zeta(6));
}

TEST_CASE("conductor tables stay small and consistent") {
    for (std::uint32_t e : {12u, 105u, 420u}) {
        const ConductorTables& t = conductor_tables(e);
        CHECK(t.phi == euler_phi(e));
        // zeta^e folds back to 1
        CHECK(Cyclotomic::from_cyclic_counts(e, std::vector<std::int64_t>(e, 0)) ==
              Cyclotomic::integer(BigInt(0)));
        std::vector<std::int64_t> unit(e, 0);
        unit[0] = 1;
        CHECK(Cyclotomic::from_cyclic_counts(e, unit) == Cyclotomic::integer(BigInt(1)));
    }
}
