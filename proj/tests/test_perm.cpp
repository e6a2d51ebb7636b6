#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pqr/perm.hpp"

using pqr::Perm;

namespace {

Perm random_perm(unsigned degree, std::mt19937& rng) {
    std::vector<std::uint16_t> img(degree);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Perm::from_images(std::move(img));
}

}  // namespace

TEST_CASE("identity") {
    Perm e(5);
    CHECK(e.degree() == 5);
    CHECK(e.is_identity());
    CHECK(e.order() == 1);
    CHECK(e.ind() == 0);
    CHECK(e.to_cycle_string() == "()");
}

TEST_CASE("composition applies right factor first") {
    // a = (1,2,3), b = (1,2); a*b maps 1 -> b -> 2 -> a -> 3
    Perm a = Perm::from_cycle_string("(1,2,3)", 3);
    Perm b = Perm::from_cycle_string("(1,2)", 3);
    Perm ab = a * b;
    CHECK(ab[0] == 2);
    CHECK(ab.to_cycle_string() == "(1,3)");
    Perm ba = b * a;
    CHECK(ba.to_cycle_string() == "(2,3)");
}

TEST_CASE("inverse and associativity on random elements") {
    std::mt19937 rng(20240811);
    for (int t = 0; t < 50; ++t) {
        Perm a = random_perm(40, rng), b = random_perm(40, rng), c = random_perm(40, rng);
        CHECK((a * a.inverse()).is_identity());
        CHECK((a.inverse() * a).is_identity());
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).inverse() == b.inverse() * a.inverse());
    }
}

TEST_CASE("conjugation") {
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        Perm x = random_perm(25, rng), y = random_perm(25, rng), g = random_perm(25, rng);
        CHECK(x.conjugated_by(g) == g.inverse() * x * g);
        CHECK(x.conjugated_by(g).order() == x.order());
        CHECK((x * y).conjugated_by(g) == x.conjugated_by(g) * y.conjugated_by(g));
    }
}

TEST_CASE("order is the least annihilating exponent") {
    Perm p = Perm::from_cycle_string("(1,2,3)(4,5)", 6);
    CHECK(p.order() == 6);
    std::mt19937 rng(99);
    for (int t = 0; t < 20; ++t) {
        Perm x = random_perm(30, rng);
        std::uint64_t n = x.order();
        CHECK(x.power(static_cast<std::int64_t>(n)).is_identity());
        for (std::uint64_t d = 1; d < n; ++d)
            if (n % d == 0) CHECK(!x.power(static_cast<std::int64_t>(d)).is_identity());
    }
}

TEST_CASE("power") {
    std::mt19937 rng(3);
    Perm x = random_perm(20, rng);
    CHECK(x.power(0).is_identity());
    CHECK(x.power(-1) == x.inverse());
    Perm acc(20);
    for (int k = 1; k <= 7; ++k) {
        acc = x * acc;
        CHECK(x.power(k) == acc);
        CHECK(x.power(-k) == acc.inverse());
    }
}

TEST_CASE("ind counts degree minus cycles") {
    // cycles of (1,2,3)(4,5) on 6 points: one 3-cycle, one 2-cycle, one fixed point
    Perm p = Perm::from_cycle_string("(1,2,3)(4,5)", 6);
    CHECK(p.ind() == 3);
    CHECK(Perm::from_cycle_string("(1,2)", 8).ind() == 1);
    CHECK(Perm(9).ind() == 0);
    // ind is invariant under conjugation
    std::mt19937 rng(5);
    Perm g = random_perm(6, rng);
    CHECK(p.conjugated_by(g).ind() == p.ind());
}

TEST_CASE("cycle string round trip") {
    std::mt19937 rng(123);
    for (int t = 0; t < 30; ++t) {
        Perm x = random_perm(17, rng);
        CHECK(Perm::from_cycle_string(x.to_cycle_string(), 17) == x);
    }
    CHECK(Perm::from_cycle_string("()", 4).is_identity());
    CHECK(Perm::from_cycle_string("(1 2 3)(4 5)", 6) == Perm::from_cycle_string("(1,2,3)(4,5)", 6));
}

TEST_CASE("cycle parse errors") {
    CHECK_THROWS_AS(Perm::from_cycle_string("(1,2", 4), pqr::ParseError);
    CHECK_THROWS_AS(Perm::from_cycle_string("(1,5)", 4), pqr::ParseError);
    CHECK_THROWS_AS(Perm::from_cycle_string("(1,2)(2,3)", 4), pqr::ParseError);
    CHECK_THROWS_AS(Perm::from_cycle_string("(0,1)", 4), pqr::ParseError);
    CHECK_THROWS_AS(Perm::from_cycle_string("bogus", 4), pqr::ParseError);
    CHECK_THROWS_AS(Perm::from_cycle_string("", 4), pqr::ParseError);
}

TEST_CASE("image validation") {
    CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), pqr::PreconditionError);
    CHECK_THROWS_AS(Perm::from_images({0, 3}), pqr::PreconditionError);
    CHECK_THROWS_AS(Perm::from_images({}), pqr::PreconditionError);
}

TEST_CASE("ordering and hashing") {
    Perm a = Perm::from_cycle_string("(1,2)", 3);
    Perm b = Perm::from_cycle_string("(1,2,3)", 3);
    Perm e(3);
    std::vector<Perm> v{b, a, e};
    std::sort(v.begin(), v.end());
    CHECK(v[0] == e);  // identity has lexicographically least image vector
    pqr::PermHash h;
    CHECK(h(a) == h(Perm::from_cycle_string("(2,1)", 3)));
    CHECK(h(a) != h(b));  // not guaranteed in general, but true for these
}
