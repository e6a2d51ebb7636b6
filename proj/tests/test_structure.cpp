#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pqr/action.hpp"
#include "pqr/gf.hpp"
#include "pqr/structure.hpp"

using namespace pqr;

namespace {

GroupPtr gp(const std::vector<std::string>& cycles, unsigned degree, std::string name = "") {
    std::vector<Perm> gens;
    for (const auto& c : cycles) gens.push_back(Perm::from_cycle_string(c, degree));
    return Group::from_generators(std::move(gens), std::move(name));
}

GroupPtr c4() { return gp({"(1,2,3,4)"}, 4); }
GroupPtr c6() { return gp({"(1,2)(3,4,5)"}, 5); }
GroupPtr c12() { return gp({"(1,2,3,4)(5,6,7)"}, 7); }
GroupPtr v4() { return gp({"(1,2)(3,4)", "(1,3)(2,4)"}, 4); }
GroupPtr q8() { return gp({"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}, 8); }
GroupPtr d8() { return gp({"(1,2,3,4)", "(1,3)"}, 4); }
GroupPtr a4() { return gp({"(1,2,3)", "(2,3,4)"}, 4); }
GroupPtr s4() { return gp({"(1,2,3,4)", "(1,2)"}, 4); }
GroupPtr f20() { return gp({"(1,2,3,4,5)", "(2,3,5,4)"}, 5); }
GroupPtr f42() { return gp({"(1,2,3,4,5,6,7)", "(2,4,3,7,5,6)"}, 7); }
GroupPtr a5() { return gp({"(1,2,3)", "(3,4,5)"}, 5); }
GroupPtr s3xc5() { return gp({"(1,2)", "(1,2,3)", "(4,5,6,7,8)"}, 8); }
GroupPtr a5xc2() { return gp({"(1,2,3)", "(3,4,5)", "(6,7)"}, 7); }

// SL2(5) acting on the 25 vectors of a 2-dimensional space over GF(5)
GroupPtr sl2_5() {
    GFq F(5);
    auto gens = matrix_vector_action(
        F, {RMat::from_rows(F, {{0, 1}, {4, 0}}), RMat::from_rows(F, {{1, 1}, {0, 1}})});
    return Group::from_generators(std::move(gens), "SL2(5)");
}

std::vector<Perm> center_oracle(const GroupPtr& G) {
    std::vector<Perm> out;
    for (const Perm& x : G->elements()) {
        bool ok = true;
        for (const Perm& g : G->elements())
            if (x * g != g * x) {
                ok = false;
                break;
            }
        if (ok) out.push_back(x);
    }
    return out;
}

std::vector<Perm> derived_oracle(const GroupPtr& G) {
    std::vector<Perm> comms;
    for (const Perm& a : G->elements())
        for (const Perm& b : G->elements()) comms.push_back(a.inverse() * b.inverse() * a * b);
    return oracles::closure(comms);
}

}  // namespace

TEST_CASE("center matches the brute-force filter") {
    struct Case {
        GroupPtr G;
        std::uint64_t order;
    };
    for (const auto& [G, order] : std::vector<Case>{
             {q8(), 2}, {s4(), 1}, {c6(), 6}, {d8(), 2}, {s3xc5(), 5}, {a5(), 1}}) {
        GroupPtr Z = center(G);
        CHECK(Z->order_u64() == order);
        CHECK(Z->elements() == center_oracle(G));
        CHECK(is_normal(G, Z));
    }
}

TEST_CASE("centralizer orders satisfy the orbit-stabilizer identity") {
    for (const auto& G : {s4(), a5(), f20()}) {
        const ClassData& cd = G->classes();
        for (std::size_t k = 0; k < cd.count(); ++k) {
            GroupPtr C = centralizer(G, cd.reps[k]);
            CHECK(C->contains(cd.reps[k]));
            CHECK(C->order_u64() * cd.sizes[k] == G->order_u64());
        }
    }
}

TEST_CASE("normalizer picks out the stabilizing elements") {
    auto S = s4();
    GroupPtr C4 = gp({"(1,2,3,4)"}, 4);
    GroupPtr N = normalizer(S, C4);
    CHECK(N->order_u64() == 8);
    CHECK(subgroup_contains(N, C4));

    auto A = a5();
    GroupPtr P5 = sylow_subgroup(A, 5);
    CHECK(normalizer(A, P5)->order_u64() == 10);
}

TEST_CASE("derived series of S4 and friends") {
    auto S = s4();
    GroupPtr D1 = derived_subgroup(S);
    CHECK(D1->order_u64() == 12);
    CHECK(D1->contains(Perm::from_cycle_string("(1,2,3)", 4)));
    GroupPtr D2 = derived_subgroup(D1);
    CHECK(D2->order_u64() == 4);
    CHECK(derived_subgroup(D2)->is_trivial());

    CHECK(is_perfect(a5()));
    CHECK(!is_perfect(s4()));

    auto Q = q8();
    GroupPtr QD = derived_subgroup(Q);
    CHECK(QD->order_u64() == 2);
    CHECK(QD->elements() == center(Q)->elements());
}

TEST_CASE("derived subgroup equals the all-pairs commutator closure") {
    for (const auto& G : {s4(), q8(), f20(), c12()})
        CHECK(derived_subgroup(G)->elements() == derived_oracle(G));
}

TEST_CASE("normal closures inside S4") {
    auto S = s4();
    CHECK(normal_closure(S, {Perm::from_cycle_string("(1,2)(3,4)", 4)})->order_u64() == 4);
    CHECK(normal_closure(S, {Perm::from_cycle_string("(1,2,3)", 4)})->order_u64() == 12);
    CHECK(normal_closure(S, {Perm::from_cycle_string("(1,2)", 4)})->order_u64() == 24);
    CHECK(normal_closure(S, {})->is_trivial());
    CHECK_THROWS_AS(normal_closure(v4(), {Perm::from_cycle_string("(1,2)", 4)}), PreconditionError);
}

TEST_CASE("normality and containment checks") {
    auto S = s4();
    CHECK(is_normal(S, v4()));
    CHECK(is_normal(S, a4()));
    CHECK(!is_normal(S, gp({"(1,2)"}, 4)));
    CHECK(subgroup_contains(S, v4()));
    CHECK(!subgroup_contains(v4(), S));
}

TEST_CASE("commutator subgroup of a pair") {
    GroupPtr c1 = commutator_subgroup(s4(), v4());
    CHECK(c1->order_u64() == 4);
    CHECK(c1->elements() == v4()->elements());
    auto Q = q8();
    CHECK(commutator_subgroup(Q, Q)->order_u64() == 2);
}

TEST_CASE("sylow subgroups have the right order and conjugacy behaviour") {
    auto S = s4();
    CHECK(sylow_subgroup(S, 2)->order_u64() == 8);
    CHECK(sylow_subgroup(S, 3)->order_u64() == 3);
    CHECK(sylow_subgroup(S, 5)->is_trivial());

    auto A = a5();
    CHECK(sylow_subgroup(A, 2)->order_u64() == 4);
    CHECK(sylow_subgroup(A, 3)->order_u64() == 3);
    CHECK(sylow_subgroup(A, 5)->order_u64() == 5);

    auto F = f42();
    CHECK(F->order_u64() == 42);
    GroupPtr P7 = sylow_subgroup(F, 7);
    CHECK(P7->order_u64() == 7);
    CHECK(is_normal(F, P7));

    auto L = sl2_5();
    CHECK(L->order_u64() == 120);
    GroupPtr P2 = sylow_subgroup(L, 2);
    CHECK(P2->order_u64() == 8);
    // quaternion: a unique involution
    int involutions = 0;
    for (const Perm& x : P2->elements())
        if (x.order() == 2) ++involutions;
    CHECK(involutions == 1);

    CHECK_THROWS_AS(sylow_subgroup(S, 6), PreconditionError);
}

TEST_CASE("sylow subgroups contain only p-elements and conjugate to sylows") {
    auto A = a5();
    for (std::uint64_t p : {2u, 3u, 5u}) {
        GroupPtr P = sylow_subgroup(A, p);
        for (const Perm& x : P->elements()) {
            std::uint64_t o = x.order();
            while (o % p == 0) o /= p;
            CHECK(o == 1);
        }
        Perm g = Perm::from_cycle_string("(1,2,3,4,5)", 5);
        std::vector<Perm> conj;
        for (const Perm& x : P->generators()) conj.push_back(x.conjugated_by(g));
        CHECK(Group::from_generators(std::move(conj))->order() == P->order());
    }
}

TEST_CASE("derived series report") {
    SeriesReport r = derived_series(s4());
    CHECK(r.kind == SeriesReport::Kind::derived);
    CHECK(r.verdict);
    REQUIRE(r.terms.size() == 4);
    CHECK(r.terms[0]->order_u64() == 24);
    CHECK(r.terms[1]->order_u64() == 12);
    CHECK(r.terms[2]->order_u64() == 4);
    CHECK(r.terms[3]->is_trivial());
    for (std::size_t i = 0; i + 1 < r.terms.size(); ++i) {
        CHECK(r.terms[i + 1]->order() < r.terms[i]->order());
        CHECK(is_normal(r.terms[i], r.terms[i + 1]));
    }

    SeriesReport a = derived_series(a5());
    CHECK(!a.verdict);
    REQUIRE(a.terms.size() == 1);
    CHECK(a.terms[0]->order_u64() == 60);

    SeriesReport t = derived_series(Group::trivial(2));
    CHECK(t.verdict);
    CHECK(t.terms.size() == 1);
}

TEST_CASE("p-series report") {
    auto S = s4();
    SeriesReport r = p_series(S, 2);
    CHECK(r.kind == SeriesReport::Kind::p_chief);
    CHECK(r.verdict);
    REQUIRE(r.terms.size() == 4);
    CHECK(r.terms.front()->order_u64() == 24);
    CHECK(r.terms.back()->is_trivial());
    for (std::size_t i = 0; i + 1 < r.terms.size(); ++i) {
        CHECK(r.terms[i + 1]->order() < r.terms[i]->order());
        CHECK(is_normal(S, r.terms[i]));
    }

    SeriesReport a = p_series(a5(), 2);
    CHECK(!a.verdict);
    REQUIRE(a.terms.size() == 1);
    CHECK(a.terms[0]->is_trivial());

    SeriesReport l = p_series(sl2_5(), 5);
    CHECK(!l.verdict);
    REQUIRE(l.terms.size() == 2);
    CHECK(l.terms[0]->order_u64() == 2);  // the center is as far as it gets
}

TEST_CASE("nilpotency and solvability") {
    CHECK(is_nilpotent(q8()));
    CHECK(is_nilpotent(d8()));
    CHECK(is_nilpotent(c12()));
    CHECK(!is_nilpotent(s4()));
    CHECK(!is_nilpotent(s3xc5()));
    CHECK(!is_nilpotent(a5()));

    CHECK(is_solvable(s4()));
    CHECK(is_solvable(f42()));
    CHECK(is_solvable(q8()));
    CHECK(!is_solvable(a5()));
    CHECK(!is_solvable(sl2_5()));
}

TEST_CASE("elementary abelian recognition") {
    CHECK(is_elementary_abelian(v4(), 2));
    CHECK(!is_elementary_abelian(c4(), 2));
    CHECK(is_elementary_abelian(gp({"(1,2,3)", "(4,5,6)"}, 6), 3));
    CHECK(!is_elementary_abelian(c6(), 2));
    CHECK(is_elementary_abelian(Group::trivial(3), 2));
}

TEST_CASE("p-residual subgroups") {
    CHECK(p_residual(s4(), 2)->order_u64() == 12);
    CHECK(p_residual(s4(), 3)->order_u64() == 24);
    CHECK(p_residual(c6(), 2)->order_u64() == 3);
    CHECK(p_residual(c6(), 3)->order_u64() == 2);
    CHECK(p_residual(a5(), 5)->order_u64() == 60);
    CHECK(p_residual(q8(), 2)->is_trivial());
}

TEST_CASE("p-solvability towers") {
    CHECK(is_p_solvable(s4(), 2));
    CHECK(is_p_solvable(s4(), 3));
    CHECK(!is_p_solvable(a5(), 2));
    CHECK(!is_p_solvable(a5(), 3));
    CHECK(!is_p_solvable(a5(), 5));
    CHECK(is_p_solvable(a5(), 7));  // p does not divide the order
    CHECK(!is_p_solvable(sl2_5(), 5));
    CHECK(!is_p_solvable(sl2_5(), 2));
    CHECK(is_p_solvable(f42(), 2));
    CHECK(is_p_solvable(f42(), 3));
    CHECK(is_p_solvable(f42(), 7));
}

TEST_CASE("solvable radical") {
    CHECK(solvable_radical(a5())->is_trivial());
    CHECK(solvable_radical(s4())->order_u64() == 24);
    CHECK(solvable_radical(sl2_5())->order_u64() == 2);
    GroupPtr R = solvable_radical(a5xc2());
    CHECK(R->order_u64() == 2);
    CHECK(R->contains(Perm::from_cycle_string("(6,7)", 7)));
}

TEST_CASE("frattini subgroups") {
    CHECK(frattini_subgroup(c4())->order_u64() == 2);
    CHECK(frattini_subgroup(q8())->elements() == center(q8())->elements());
    CHECK(frattini_subgroup(d8())->order_u64() == 2);
    CHECK(frattini_subgroup(c12())->order_u64() == 2);
    CHECK(frattini_subgroup(s4())->is_trivial());
    CHECK(frattini_subgroup(a5())->is_trivial());
    CHECK(frattini_subgroup(v4())->is_trivial());
}

TEST_CASE("frattini subgroups are normal and nilpotent") {
    for (const auto& G : {c4(), q8(), d8(), c12(), s4(), f20(), a5(), f42()}) {
        GroupPtr F = frattini_subgroup(G);
        CHECK(is_normal(G, F));
        CHECK(is_nilpotent(F));
    }
}

TEST_CASE("frattini scan agrees with the structural shortcuts") {
    for (const auto& G : {c4(), q8(), d8(), c12(), s4(), f20()})
        CHECK(frattini_subgroup_by_scan(G)->elements() == frattini_subgroup(G)->elements());
}

TEST_CASE("frattini respects the order cap") {
    oracles::CapsGuard guard;
    caps().subgroup_order = 10;
    CHECK_THROWS_AS(frattini_subgroup(s4()), OverCapError);
    CHECK_THROWS_AS(frattini_subgroup_by_scan(s4()), OverCapError);
}

TEST_CASE("complements found and refuted") {
    auto S = s4();
    auto K = find_complement(S, v4());
    REQUIRE(K.has_value());
    CHECK((*K)->order_u64() == 6);
    for (const Perm& x : (*K)->elements())
        CHECK((x.is_identity() || !v4()->contains(x)));

    auto A = a4();
    auto K2 = find_complement(A, v4());
    REQUIRE(K2.has_value());
    CHECK((*K2)->order_u64() == 3);

    auto X = s3xc5();
    GroupPtr C5 = gp({"(4,5,6,7,8)"}, 8);
    auto K3 = find_complement(X, C5);
    REQUIRE(K3.has_value());
    CHECK((*K3)->order_u64() == 6);

    auto C = c6();
    GroupPtr C3 = gp({"(3,4,5)"}, 5);
    auto K4 = find_complement(C, C3);
    REQUIRE(K4.has_value());
    CHECK((*K4)->order_u64() == 2);

    // nonsplit cases
    CHECK(!find_complement(q8(), center(q8())).has_value());
    CHECK(!find_complement(c4(), gp({"(1,3)(2,4)"}, 4)).has_value());

    // edge cases
    CHECK((*find_complement(S, Group::trivial(4)))->order_u64() == 24);
    CHECK((*find_complement(S, S))->is_trivial());
    CHECK_THROWS_AS(find_complement(S, gp({"(1,2)"}, 4)), PreconditionError);
}

TEST_CASE("complement scan respects the tuple cap") {
    oracles::CapsGuard guard;
    caps().tuple_scan = 2;
    CHECK_THROWS_AS(find_complement(s4(), v4()), OverCapError);
}

TEST_CASE("minimal noncentral normal subgroups") {
    auto S = s4();
    auto mins = minimal_noncentral_normals(S, S);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0]->order_u64() == 4);

    auto A = a5();
    auto amins = minimal_noncentral_normals(A, A);
    REQUIRE(amins.size() == 1);
    CHECK(amins[0]->order_u64() == 60);

    auto Q = q8();
    auto qmins = minimal_noncentral_normals(Q, Q);
    CHECK(qmins.size() == 3);
    for (const auto& M : qmins) CHECK(M->order_u64() == 4);

    auto D = d8();
    CHECK(minimal_noncentral_normals(D, D).size() == 3);

    // restricted to a proper normal subgroup
    auto inV = minimal_noncentral_normals(S, v4());
    REQUIRE(inV.size() == 1);
    CHECK(inV[0]->order_u64() == 4);
}

TEST_CASE("single minimal noncentral normal with its error modes") {
    auto S = s4();
    CHECK(minimal_noncentral_normal(S, S)->order_u64() == 4);
    CHECK(minimal_noncentral_normal(q8(), q8())->order_u64() == 4);

    GroupPtr G = gp({"(1,2,3)", "(4,5,6)", "(4,5)"}, 6);  // C3 x S3
    GroupPtr rot = gp({"(4,5,6)"}, 6);
    GroupPtr got = minimal_noncentral_normal(G, rot);
    CHECK(got->order_u64() == 3);
    CHECK(got->contains(Perm::from_cycle_string("(4,5,6)", 6)));

    GroupPtr central = gp({"(1,2,3)"}, 6);
    CHECK_THROWS_AS(minimal_noncentral_normal(G, central), NoneFoundError);
    GroupPtr flip = gp({"(4,5)"}, 6);
    CHECK_THROWS_AS(minimal_noncentral_normal(G, flip), PreconditionError);
}

TEST_CASE("extraspecial recognition with type tags") {
    CHECK(extraspecial_type(d8(), 2) == EsType::plus);
    CHECK(extraspecial_type(q8(), 2) == EsType::minus);
    CHECK(is_extraspecial(d8(), 2));
    CHECK(!is_extraspecial(d8(), 3));

    // Heisenberg group over GF(3): unitriangular 3x3 matrices
    GFq F3(3);
    auto heis = Group::from_generators(matrix_vector_action(
        F3, {RMat::from_rows(F3, {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}),
             RMat::from_rows(F3, {{1, 0, 0}, {0, 1, 1}, {0, 0, 1}})}));
    CHECK(heis->order_u64() == 27);
    CHECK(extraspecial_type(heis, 3) == EsType::exp_p);

    // C9 : C3 with the generator cubes identified
    auto m27 = gp({"(1,2,3,4,5,6,7,8,9)", "(2,5,8)(3,9,6)"}, 9);
    CHECK(m27->order_u64() == 27);
    CHECK(extraspecial_type(m27, 3) == EsType::exp_p2);

    CHECK(extraspecial_type(gp({"(1,2,3,4,5,6,7,8,9)"}, 9), 3) == EsType::none);
    CHECK(extraspecial_type(v4(), 2) == EsType::none);
    CHECK(extraspecial_type(s4(), 2) == EsType::none);
    CHECK(extraspecial_type(c12(), 2) == EsType::none);
}
