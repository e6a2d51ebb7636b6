#include "pqr/kernels.hpp"

#include "pqr/group.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pqr::kernels {

std::vector<Perm> conjugation_edges_serial(const std::vector<Perm>& xs, const std::vector<Perm>& gens,
                                           const std::vector<Perm>& gens_inv) {
    std::vector<Perm> out;
    out.reserve(xs.size() * gens.size());
    for (const Perm& x : xs)
        for (std::size_t g = 0; g < gens.size(); ++g)
            out.push_back(gens_inv[g] * (x * gens[g]));
    return out;
}

std::vector<Perm> conjugation_edges_omp(const std::vector<Perm>& xs, const std::vector<Perm>& gens,
                                        const std::vector<Perm>& gens_inv) {
#ifdef _OPENMP
    if (xs.empty() || gens.empty()) return {};
    const std::size_t ng = gens.size();
    std::vector<Perm> out(xs.size() * ng, Perm(xs[0].degree()));
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(xs.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        for (std::size_t g = 0; g < ng; ++g)
            out[static_cast<std::size_t>(i) * ng + g] = gens_inv[g] * (xs[i] * gens[g]);
    return out;
#else
    return conjugation_edges_serial(xs, gens, gens_inv);
#endif
}

std::vector<Perm> conjugation_edges(const std::vector<Perm>& xs, const std::vector<Perm>& gens,
                                    const std::vector<Perm>& gens_inv) {
    return conjugation_edges_omp(xs, gens, gens_inv);
}

namespace {
void check_pair_cap(std::uint64_t a, std::uint64_t b, std::uint64_t cap, const char* what) {
    if (b != 0 && a > cap / b) throw OverCapError(std::string(what) + " over cap");
}
}  // namespace

std::vector<std::uint64_t> pair_product_histogram_serial(const Group& G, std::uint32_t ci, std::uint32_t cj) {
    const ClassData& cd = G.classes();
    const auto& A = cd.members[ci];
    const auto& B = cd.members[cj];
    check_pair_cap(A.size(), B.size(), caps().pair_products, "pair product walk");
    const auto& el = G.elements();
    std::vector<std::uint64_t> hist(cd.count(), 0);
    for (std::uint32_t a : A) {
        const Perm& x = el[a];
        for (std::uint32_t b : B) ++hist[cd.class_of[G.element_index(x * el[b])]];
    }
    return hist;
}

std::vector<std::uint64_t> pair_product_histogram_omp(const Group& G, std::uint32_t ci, std::uint32_t cj) {
#ifdef _OPENMP
    const ClassData& cd = G.classes();
    const auto& A = cd.members[ci];
    const auto& B = cd.members[cj];
    check_pair_cap(A.size(), B.size(), caps().pair_products, "pair product walk");
    const auto& el = G.elements();
    std::vector<std::uint64_t> hist(cd.count(), 0);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(A.size());
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(cd.count(), 0);
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const Perm& x = el[A[static_cast<std::size_t>(i)]];
            for (std::uint32_t b : B) ++local[cd.class_of[G.element_index(x * el[b])]];
        }
#pragma omp critical
        for (std::size_t k = 0; k < hist.size(); ++k) hist[k] += local[k];
    }
    return hist;
#else
    return pair_product_histogram_serial(G, ci, cj);
#endif
}

std::vector<std::uint64_t> pair_product_histogram(const Group& G, std::uint32_t ci, std::uint32_t cj) {
    return pair_product_histogram_omp(G, ci, cj);
}

std::vector<std::uint64_t> class_matrix_serial(const Group& G, std::uint32_t ci) {
    const ClassData& cd = G.classes();
    const std::size_t r = cd.count();
    const auto& el = G.elements();
    std::vector<std::uint64_t> M(r * r, 0);
    for (std::uint32_t a : cd.members[ci]) {
        Perm xinv = el[a].inverse();
        for (std::size_t k = 0; k < r; ++k)
            ++M[cd.class_of[G.element_index(xinv * cd.reps[k])] * r + k];
    }
    return M;
}

std::vector<std::uint64_t> class_matrix_omp(const Group& G, std::uint32_t ci) {
#ifdef _OPENMP
    const ClassData& cd = G.classes();
    const std::size_t r = cd.count();
    const auto& el = G.elements();
    const auto& A = cd.members[ci];
    std::vector<std::uint64_t> M(r * r, 0);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(A.size());
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(r * r, 0);
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            Perm xinv = el[A[static_cast<std::size_t>(i)]].inverse();
            for (std::size_t k = 0; k < r; ++k)
                ++local[cd.class_of[G.element_index(xinv * cd.reps[k])] * r + k];
        }
#pragma omp critical
        for (std::size_t t = 0; t < M.size(); ++t) M[t] += local[t];
    }
    return M;
#else
    return class_matrix_serial(G, ci);
#endif
}

std::vector<std::uint64_t> class_matrix(const Group& G, std::uint32_t ci) { return class_matrix_omp(G, ci); }

std::vector<std::uint64_t> product_set_bitmap_serial(const Group& G, const std::vector<std::uint32_t>& A,
                                                     const std::vector<std::uint32_t>& B) {
    check_pair_cap(A.size(), B.size(), caps().lift_products, "product set walk");
    const auto& el = G.elements();
    std::vector<std::uint64_t> bits((el.size() + 63) / 64, 0);
    for (std::uint32_t a : A) {
        const Perm& x = el[a];
        for (std::uint32_t b : B) {
            std::uint32_t idx = G.element_index(x * el[b]);
            bits[idx >> 6] |= std::uint64_t(1) << (idx & 63);
        }
    }
    return bits;
}

std::vector<std::uint64_t> product_set_bitmap_omp(const Group& G, const std::vector<std::uint32_t>& A,
                                                  const std::vector<std::uint32_t>& B) {
#ifdef _OPENMP
    check_pair_cap(A.size(), B.size(), caps().lift_products, "product set walk");
    const auto& el = G.elements();
    std::vector<std::uint64_t> bits((el.size() + 63) / 64, 0);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(A.size());
#pragma omp parallel
    {
        std::vector<std::uint64_t> local(bits.size(), 0);
#pragma omp for schedule(static) nowait
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const Perm& x = el[A[static_cast<std::size_t>(i)]];
            for (std::uint32_t b : B) {
                std::uint32_t idx = G.element_index(x * el[b]);
                local[idx >> 6] |= std::uint64_t(1) << (idx & 63);
            }
        }
#pragma omp critical
        for (std::size_t w = 0; w < bits.size(); ++w) bits[w] |= local[w];
    }
    return bits;
#else
    return product_set_bitmap_serial(G, A, B);
#endif
}

std::vector<std::uint64_t> product_set_bitmap(const Group& G, const std::vector<std::uint32_t>& A,
                                              const std::vector<std::uint32_t>& B) {
    return product_set_bitmap_omp(G, A, B);
}

}  // namespace pqr::kernels
