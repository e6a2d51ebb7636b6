#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pqr/gf.hpp"
#include "pqr/group.hpp"

namespace pqr {

// orbit of a point under generators, ascending
std::vector<std::uint16_t> point_orbit(const std::vector<Perm>& gens, std::uint16_t seed);

// all orbits, each ascending, ordered by least point
std::vector<std::vector<std::uint16_t>> point_orbits(const std::vector<Perm>& gens, unsigned degree);

// Re-index generators to an invariant point set (ascending).  Throws
// PreconditionError if some generator moves a point off the set.
std::vector<Perm> restrict_to_points(const std::vector<Perm>& gens, const std::vector<std::uint16_t>& pts);

// Permutation action of matrices on all of R^n; vector v has point index
// sum v_i |R|^i.  The zero vector is a fixed point of everything.
std::vector<Perm> matrix_vector_action(const Ring& R, const std::vector<RMat>& mats);

// Action on projective points (field scalars only): nonzero vectors whose
// first nonzero coordinate is 1, ordered by vector index.
std::vector<Perm> matrix_projective_action(const Ring& R, const std::vector<RMat>& mats);

// Left multiplication action of G on the cosets xH.  Coset 0 is H itself;
// reps[i] maps coset 0 to coset i, reps[0] = identity.  Cosets are numbered
// in BFS discovery order (generators in order), so the numbering is
// deterministic.  image is the permutation group generated by gen_images.
struct CosetAction {
    GroupPtr parent, sub, image;
    std::vector<Perm> gen_images;  // aligned with parent->generators()
    std::vector<Perm> reps;

    std::uint32_t coset_of(const Perm& g) const;
    Perm image_of(const Perm& g) const;  // induced permutation of the cosets
    // Unique preimage coset representative of a quotient element; requires a
    // regular image (the case when sub is normal).
    Perm lift_of(const Perm& quotient_elem) const;

    // internal: coset signature machinery (invariant under right H-shift)
    std::vector<std::uint16_t> signature(const Perm& x) const;
    std::vector<std::vector<std::uint16_t>> sub_orbits;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_sig;
};

CosetAction coset_action(const GroupPtr& G, const GroupPtr& H);

// coset_action plus the checks that make it a quotient: H normal in G,
// image order equal to the index.
CosetAction quotient_action(const GroupPtr& G, const GroupPtr& H);

}  // namespace pqr
