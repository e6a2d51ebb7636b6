#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pqr/action.hpp"

using namespace pqr;

namespace {
GroupPtr gp(std::initializer_list<const char*> cycles, unsigned degree) {
    std::vector<Perm> gens;
    for (const char* c : cycles) gens.push_back(Perm::from_cycle_string(c, degree));
    return Group::from_generators(std::move(gens));
}
}  // namespace

TEST_CASE("point orbits") {
    std::vector<Perm> gens{Perm::from_cycle_string("(1,2,3)(4,5)", 6)};
    auto orbs = point_orbits(gens, 6);
    REQUIRE(orbs.size() == 3);
    CHECK(orbs[0] == std::vector<std::uint16_t>{0, 1, 2});
    CHECK(orbs[1] == std::vector<std::uint16_t>{3, 4});
    CHECK(orbs[2] == std::vector<std::uint16_t>{5});
    CHECK(point_orbit(gens, 4) == std::vector<std::uint16_t>{3, 4});
}

TEST_CASE("restriction to invariant point sets") {
    auto gens = std::vector<Perm>{Perm::from_cycle_string("(1,2)", 8), Perm::from_cycle_string("(1,2,3)", 8),
                                  Perm::from_cycle_string("(4,5,6,7,8)", 8)};
    auto left = Group::from_generators(restrict_to_points(gens, {0, 1, 2}));
    auto right = Group::from_generators(restrict_to_points(gens, {3, 4, 5, 6, 7}));
    CHECK(left->order() == 6);
    CHECK(right->order() == 5);
    CHECK_THROWS_AS(restrict_to_points(gens, {0, 1}), PreconditionError);
}

TEST_CASE("matrix action on vectors") {
    GFq F2(2);
    // GL2(2) is symmetric of degree 3; it fixes the zero vector
    auto gl22 = matrix_vector_action(F2, {RMat::from_rows(F2, {{1, 1}, {0, 1}}), RMat::from_rows(F2, {{0, 1}, {1, 0}})});
    auto G = Group::from_generators(gl22);
    CHECK(G->degree() == 4);
    CHECK(G->order() == 6);
    for (const Perm& g : G->generators()) CHECK(g[0] == 0);

    GFq F3(3);
    auto sl23 = matrix_vector_action(F3, {RMat::from_rows(F3, {{1, 1}, {0, 1}}), RMat::from_rows(F3, {{0, 1}, {2, 0}})});
    CHECK(Group::from_generators(sl23)->order() == 24);
}

TEST_CASE("matrix action on projective points") {
    GFq F3(3);
    auto psl23 = matrix_projective_action(F3, {RMat::from_rows(F3, {{1, 1}, {0, 1}}), RMat::from_rows(F3, {{0, 1}, {2, 0}})});
    auto A = Group::from_generators(psl23);
    CHECK(A->degree() == 4);
    CHECK(A->order() == 12);

    auto pgl23 = matrix_projective_action(
        F3, {RMat::from_rows(F3, {{1, 1}, {0, 1}}), RMat::from_rows(F3, {{0, 1}, {1, 0}}), RMat::from_rows(F3, {{2, 0}, {0, 1}})});
    CHECK(Group::from_generators(pgl23)->order() == 24);

    GFq F5(5);
    auto psl25 = matrix_projective_action(F5, {RMat::from_rows(F5, {{1, 1}, {0, 1}}), RMat::from_rows(F5, {{0, 1}, {4, 0}})});
    auto B = Group::from_generators(psl25);
    CHECK(B->degree() == 6);
    CHECK(B->order() == 60);
}

TEST_CASE("coset action on a non-normal subgroup") {
    auto G = gp({"(1,2)", "(1,2,3,4)"}, 4);
    auto H = gp({"(1,2,3,4)"}, 4);
    auto ca = coset_action(G, H);
    REQUIRE(ca.reps.size() == 6);
    CHECK(ca.reps[0].is_identity());
    CHECK(ca.image->order() == 24);  // core is trivial, so the action is faithful
    for (std::uint32_t i = 0; i < ca.reps.size(); ++i) CHECK(ca.coset_of(ca.reps[i]) == i);
    // right H-shift never changes the coset
    for (const Perm& h : oracles::closure(H->generators()))
        for (std::uint32_t i = 0; i < ca.reps.size(); ++i) CHECK(ca.coset_of(ca.reps[i] * h) == i);
    // left action homomorphism
    const auto& el = G->elements();
    std::mt19937 rng(77);
    for (int t = 0; t < 40; ++t) {
        const Perm& a = el[rng() % el.size()];
        const Perm& b = el[rng() % el.size()];
        CHECK(ca.image_of(a * b) == ca.image_of(a) * ca.image_of(b));
    }
}

TEST_CASE("point stabilizer coset action recovers the natural action") {
    auto G = gp({"(1,2,3)", "(3,4,5)"}, 5);
    auto H = gp({"(1,2,3)", "(2,3,4)"}, 5);  // stabilizer of the last point
    auto ca = coset_action(G, H);
    CHECK(ca.reps.size() == 5);
    CHECK(ca.image->order() == 60);
}

TEST_CASE("quotient action and lifting") {
    auto Q = gp({"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}, 8);
    auto Z = gp({"(1,3)(2,4)(5,7)(6,8)"}, 8);  // the central involution
    auto qa = quotient_action(Q, Z);
    CHECK(qa.image->order() == 4);
    CHECK(qa.image->is_abelian());
    for (const Perm& q : qa.image->elements()) {
        if (!q.is_identity()) CHECK(q.order() == 2);  // quotient of the quaternions is elementary
        Perm lift = qa.lift_of(q);
        CHECK(qa.image_of(lift) == q);
        CHECK(Q->contains(lift));
    }
    // kernel elements act trivially
    for (const Perm& z : Z->generators()) CHECK(qa.image_of(z).is_identity());

    auto S4 = gp({"(1,2)", "(1,2,3,4)"}, 4);
    auto V4 = gp({"(1,2)(3,4)", "(1,3)(2,4)"}, 4);
    auto sa = quotient_action(S4, V4);
    CHECK(sa.image->order() == 6);
    CHECK(!sa.image->is_abelian());

    auto C4 = gp({"(1,2,3,4)"}, 4);
    CHECK_THROWS_AS(quotient_action(S4, C4), PreconditionError);
}

TEST_CASE("coset index cap") {
    oracles::CapsGuard guard;
    pqr::caps().coset_index = 3;
    auto G = gp({"(1,2)", "(1,2,3,4)"}, 4);
    auto H = gp({"(1,2,3,4)"}, 4);
    CHECK_THROWS_AS(coset_action(G, H), OverCapError);
}
