#pragma once

#include <optional>
#include <vector>

#include "pqr/group.hpp"

namespace pqr {

// All functions treat their GroupPtr arguments as subgroups of a common
// symmetric group on the same point set.  Returned subgroups live on that
// same point set.

GroupPtr center(const GroupPtr& G);
GroupPtr centralizer(const GroupPtr& G, const Perm& x);
GroupPtr normalizer(const GroupPtr& G, const GroupPtr& H);

// smallest normal subgroup of G containing the seed elements
GroupPtr normal_closure(const GroupPtr& G, const std::vector<Perm>& seed);

// subgroup generated by the union of the parts
GroupPtr join_subgroups(const GroupPtr& G, const std::vector<GroupPtr>& parts);

// [A, B], computed inside the join of A and B
GroupPtr commutator_subgroup(const GroupPtr& A, const GroupPtr& B);
GroupPtr derived_subgroup(const GroupPtr& G);

bool subgroup_contains(const GroupPtr& big, const GroupPtr& small);
bool is_normal(const GroupPtr& G, const GroupPtr& H);
bool is_perfect(const GroupPtr& G);
bool is_solvable(const GroupPtr& G);
bool is_nilpotent(const GroupPtr& G);
bool is_elementary_abelian(const GroupPtr& G, std::uint64_t p);

// Evidence trail behind a solvability-style verdict: a strictly descending
// chain of subgroups ending at the trivial group exactly when the verdict
// is positive.
struct SeriesReport {
    enum class Kind { derived, p_chief };
    Kind kind;
    std::vector<GroupPtr> terms;  // strictly descending; derived: each normal
                                  // in its predecessor; p_chief: each normal in G
    bool verdict;
};

// derived series G > G' > G'' > ...; stops on repetition, verdict true iff
// it reaches the trivial subgroup
SeriesReport derived_series(const GroupPtr& G);

// upper p-series (alternating largest p'- and p-extensions), reported top
// down; verdict true iff the tower exhausts G
SeriesReport p_series(const GroupPtr& G, std::uint64_t p);

// Sylow p-subgroup by normalizer climbing from a deterministic seed; the
// same group always yields the same subgroup.
GroupPtr sylow_subgroup(const GroupPtr& G, std::uint64_t p);

// smallest normal subgroup with p-group quotient (generated by all
// p'-elements)
GroupPtr p_residual(const GroupPtr& G, std::uint64_t p);

// upper p-series reaches the whole group?
bool is_p_solvable(const GroupPtr& G, std::uint64_t p);

// largest solvable normal subgroup
GroupPtr solvable_radical(const GroupPtr& G);

// Largest subgroup of non-generators.  p-groups use the generator-power and
// commutator description, nilpotent groups reduce to their Sylow parts, and
// everything else falls back to the omissibility scan below.
GroupPtr frattini_subgroup(const GroupPtr& G);

// Direct definition, independent of the shortcuts: joins every normal
// closure of a class representative all of whose generator-coset lift
// tuples still generate G.  Exposed so the shortcut paths can be checked
// against it.
GroupPtr frattini_subgroup_by_scan(const GroupPtr& G);

// Complement of a normal subgroup, if one exists: scans the tuples of
// order-preserving lifts of the quotient generator images.  The scan is
// exhaustive, so nullopt is a proof of non-existence (within caps).
std::optional<GroupPtr> find_complement(const GroupPtr& G, const GroupPtr& N);

// Minimal members of { normal closure of x : x a noncentral class rep whose
// closure lies inside `inside` }.  When `inside` is normal these are exactly
// the minimal noncentral normal subgroups of G contained in it.
std::vector<GroupPtr> minimal_noncentral_normals(const GroupPtr& G, const GroupPtr& inside);

// One minimal noncentral normal subgroup of G inside `inside` (the smallest,
// ties broken by class order).  Requires `inside` normal in G; throws
// NoneFoundError when `inside` is central.
GroupPtr minimal_noncentral_normal(const GroupPtr& G, const GroupPtr& inside);

enum class EsType {
    none,     // not extraspecial
    plus,     // p = 2, type +
    minus,    // p = 2, type -
    exp_p,    // p odd, exponent p
    exp_p2,   // p odd, exponent p^2
};

// Extraspecial means Z(G) = [G,G] = Phi(G) of order p with G/Z elementary
// abelian.  For p = 2 the type is read off the involution census; for odd p
// it is the exponent.
EsType extraspecial_type(const GroupPtr& G, std::uint64_t p);
inline bool is_extraspecial(const GroupPtr& G, std::uint64_t p) {
    return extraspecial_type(G, p) != EsType::none;
}

}  // namespace pqr
