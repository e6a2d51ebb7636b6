#pragma once

#include <cstdint>
#include <vector>

#include "pqr/perm.hpp"

namespace pqr {

class Group;

// Data-parallel inner loops, each in a serial and an OpenMP flavor.  The two
// flavors produce byte-identical results for any thread count: outputs are
// either written positionally or merged with commutative exact operations.
// The unsuffixed names dispatch to the OpenMP flavor when it is compiled in.
namespace kernels {

// out[x * gens.size() + g] = gens_inv[g] * xs[x] * gens[g]
std::vector<Perm> conjugation_edges_serial(const std::vector<Perm>& xs, const std::vector<Perm>& gens,
                                           const std::vector<Perm>& gens_inv);
std::vector<Perm> conjugation_edges_omp(const std::vector<Perm>& xs, const std::vector<Perm>& gens,
                                        const std::vector<Perm>& gens_inv);
std::vector<Perm> conjugation_edges(const std::vector<Perm>& xs, const std::vector<Perm>& gens,
                                    const std::vector<Perm>& gens_inv);

// hist[k] = #{ (x, y) in C_i x C_j : x*y in C_k }, by walking all pairs.
// Guarded by caps().pair_products.
std::vector<std::uint64_t> pair_product_histogram_serial(const Group& G, std::uint32_t ci, std::uint32_t cj);
std::vector<std::uint64_t> pair_product_histogram_omp(const Group& G, std::uint32_t ci, std::uint32_t cj);
std::vector<std::uint64_t> pair_product_histogram(const Group& G, std::uint32_t ci, std::uint32_t cj);

// M[j*r + k] = #{ x in C_i : x^{-1} z_k in C_j } for class reps z_k; this is
// the structure constant a_{ijk} of the class algebra.
std::vector<std::uint64_t> class_matrix_serial(const Group& G, std::uint32_t ci);
std::vector<std::uint64_t> class_matrix_omp(const Group& G, std::uint32_t ci);
std::vector<std::uint64_t> class_matrix(const Group& G, std::uint32_t ci);

// Bitmap over element indices of { elements[a] * elements[b] : a in A, b in B }.
// Word w bit b covers element index 64*w + b.  Guarded by caps().lift_products.
std::vector<std::uint64_t> product_set_bitmap_serial(const Group& G, const std::vector<std::uint32_t>& A,
                                                     const std::vector<std::uint32_t>& B);
std::vector<std::uint64_t> product_set_bitmap_omp(const Group& G, const std::vector<std::uint32_t>& A,
                                                  const std::vector<std::uint32_t>& B);
std::vector<std::uint64_t> product_set_bitmap(const Group& G, const std::vector<std::uint32_t>& A,
                                              const std::vector<std::uint32_t>& B);

}  // namespace kernels
}  // namespace pqr
