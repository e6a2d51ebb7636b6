#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pqr/cyclotomic.hpp"
#include "pqr/group.hpp"

namespace pqr {

// Exact complex character table.  Rows are irreducible characters, columns are
// the conjugacy classes in the canonical class order of Group::classes().
// Row 0 is the principal character; the remaining rows are sorted by degree,
// then by their eigenvalue-multiplicity data, so the table is a pure function
// of the group.
struct CharTable {
    GroupPtr group;
    std::uint64_t exponent;  // exp(G); every value lies in Q(zeta_exponent)
    std::uint64_t prime;     // working prime: 1 mod exponent, above 2*ceil(sqrt(|G|))

    std::vector<std::uint32_t> inverse_map;                 // class -> class of inverses
    std::vector<std::vector<std::uint32_t>> power_classes;  // [k][t] = class of rep_k^t, 0 <= t < order(rep_k)
    std::vector<std::uint64_t> degrees;

    // root_mults[i][k][u] = multiplicity of zeta_m^u among the eigenvalues of
    // the i-th representation at class k, where m = order of rep_k.  This is
    // the exact integer payload of the table; values is derived from it.
    std::vector<std::vector<std::vector<std::uint32_t>>> root_mults;
    std::vector<std::vector<Cyclotomic>> values;  // values[i][k] = chi_i(x_k)

    std::size_t size() const { return degrees.size(); }  // rows == columns
    const ClassData& classes() const { return group->classes(); }
    const Cyclotomic& value(std::size_t i, std::size_t k) const { return values[i][k]; }
};

// Dixon's method: simultaneous eigenvectors of the class matrices mod a prime
// l = 1 mod exp(G) with l > 2*ceil(sqrt(|G|)), degrees recovered from the
// second orthogonality sum, values lifted to cyclotomic integers through
// root-of-unity multiplicities against a fixed order-e root mod l.
CharTable character_table(const GroupPtr& G);

// #{(a,b) in C_i x C_j : a*b = rep_k}, evaluated from the character sum at a
// prime large enough that the residue pins down the exact count.
BigInt class_mult_coefficient(const CharTable& t, std::size_t i, std::size_t j, std::size_t k);

// Exact soundness gate: principal row first, degrees positive divisors of |G|
// with square sum |G|, values consistent with the multiplicity payload,
// conjugate-closed rows, inverse classes conjugate, and the full row and
// column orthogonality relations, all in exact integer arithmetic.
bool verify_orthogonality(const CharTable& t);

// Deterministic text export, one class header block then one row per character.
std::string render_table(const CharTable& t);

}  // namespace pqr
