#pragma once

#include <cstdint>
#include <vector>

#include "pqr/action.hpp"
#include "pqr/chartab.hpp"
#include "pqr/cyclotomic.hpp"
#include "pqr/structure.hpp"

namespace pqr {

// Extraspecial group of order p^(1+2n) as a regular permutation group.
// type selects the isomorphism class: exp_p needs p odd; plus and minus need
// p = 2.  The returned group passes extraspecial_type with the same type.
GroupPtr extraspecial_group(std::uint64_t p, unsigned n, EsType type);

// Semidirect product E . <a> where E = extraspecial_group(p, n, type) and a
// is the automorphism acting on E/Z(E) by `mat` (a 2n x 2n matrix mod p,
// row-major) and trivially on Z(E).  mat must preserve the commutator form;
// for p = 2 it must preserve the squaring form as well.  The center twist
// that makes a an automorphism of the chosen cocycle is solved for
// internally, and the result is validated to have order |E| * ord(mat).
GroupPtr extraspecial_semidirect(std::uint64_t p, unsigned n, EsType type,
                                 const std::vector<std::vector<unsigned>>& mat);

// Ramification of a center character into a nonabelian normal p-subgroup n
// of parent.  Picks the first linear character phi of Z(n) nontrivial on
// [n,n] (all of them when exhaust_all is set), decomposes the induction by
// restricting each irreducible of n back to Z(n), and reports e with
// phi^n = e*theta when a single constituent theta carries phi.  ok means
// every examined phi had a single constituent and e^2 = |n : Z(n)|.
struct RamificationReport {
    std::uint64_t e;
    bool ok;
};
RamificationReport fully_ramified_check(const GroupPtr& parent, const GroupPtr& n,
                                        bool exhaust_all = false);

// A group X together with a normal subgroup F playing the role of a cover
// kernel, plus the quotient action on X/F.  kernel_prime is p when |F| is a
// p-power (0 otherwise).  frattini_computed records that F <= Phi(X) was
// verified directly; multiplier_coprime is caller-supplied metadata.
struct CoverScenario {
    GroupPtr X;
    GroupPtr F;
    CosetAction quot;
    std::uint64_t kernel_prime = 0;
    bool frattini_computed = false;
    bool multiplier_coprime = false;
};

CoverScenario make_cover_scenario(GroupPtr X, GroupPtr F, bool check_frattini = false);

// SL2 over Z/m for m = p^2, p in {5, 7}: the reduction X -> SL2(p) has an
// elementary abelian kernel of order p^3 on which X acts by conjugation.
// The kernel is found as a normal closure and validated by order alone.
CoverScenario sl2_zm(unsigned m);

// All preimages of g_rep (an element of sc.quot.image) that have the same
// order as g_rep.  Emptiness is meaningful: an order-p quotient element of a
// nonsplit p-cover has no same-order lift.
struct LiftSet {
    std::uint32_t base_class;  // class of g_rep in the quotient image
    std::uint64_t order;
    std::vector<Perm> members;
};
LiftSet lift_set(const CoverScenario& sc, const Perm& g_rep);

// Product set X_1 X_2 ... X_r of the same-order lift sets of a quotient
// tuple whose product is the identity and whose orders are coprime to |F|.
// products is sorted; J = [F, X]; single_coset reports whether the product
// set is exactly one coset of J.
struct LiftProductReport {
    std::vector<Perm> products;
    GroupPtr J;
    bool single_coset;
};
LiftProductReport lift_product_set(const CoverScenario& sc, const std::vector<Perm>& g_reps);

// For n a minimal noncentral abelian normal p-subgroup of g and a generating
// tuple g_reps that is either all p'-elements or generates a group with no
// nontrivial p-quotient: checks (g_1 C_1)(g_2 C_2)...(g_r C_r) = g_1...g_r n
// with C_i = [g_i, n].  Hypothesis failures raise PreconditionError naming
// the failed hypothesis.
bool abelian_coset_identity_check(const GroupPtr& g, const GroupPtr& n,
                                  const std::vector<Perm>& g_reps);

// Character value check on E . C_(2^k+1), E = 2^(1+2n) of minus type, where
// the cyclic part acts on E/Z(E) with one nontrivial irreducible 2k-dim
// block (k = n_i) and fixes a complement.  Locates the faithful degree-2^n
// irreducibles and reports the unique one rational on the generator's class;
// ok means exactly one is rational there and its value is -2^(n - n_i).
struct ValueFormulaReport {
    Cyclotomic value;
    bool ok;
};
ValueFormulaReport value_formula_check(unsigned n, unsigned n_i);

// Just the group of that scenario, for corpus bundling.
GroupPtr value_scenario_group(unsigned n, unsigned n_i);

}  // namespace pqr
