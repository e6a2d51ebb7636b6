#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "pqr/group.hpp"
#include "pqr/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace pqr;

namespace {

GroupPtr a5() {
    return Group::from_generators(
        {Perm::from_cycle_string("(1,2,3)", 5), Perm::from_cycle_string("(3,4,5)", 5)});
}
GroupPtr s4() {
    return Group::from_generators(
        {Perm::from_cycle_string("(1,2)", 4), Perm::from_cycle_string("(1,2,3,4)", 4)});
}

template <typename F>
void for_each_thread_count(F&& body) {
#ifdef _OPENMP
    for (int t : {1, 2, 4}) {
        omp_set_num_threads(t);
        body();
    }
    omp_set_num_threads(omp_get_num_procs());
#else
    body();
#endif
}

}  // namespace

TEST_CASE("conjugation edges: serial and parallel agree for every thread count") {
    auto G = a5();
    const auto& el = G->elements();
    std::vector<Perm> gens = G->generators(), gens_inv;
    for (const auto& g : gens) gens_inv.push_back(g.inverse());
    std::mt19937 rng(2024);
    std::vector<Perm> xs;
    for (int t = 0; t < 23; ++t) xs.push_back(el[rng() % el.size()]);

    auto ref = kernels::conjugation_edges_serial(xs, gens, gens_inv);
    REQUIRE(ref.size() == xs.size() * gens.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t g = 0; g < gens.size(); ++g)
            CHECK(ref[i * gens.size() + g] == xs[i].conjugated_by(gens[g]));
    for_each_thread_count([&] { CHECK(kernels::conjugation_edges_omp(xs, gens, gens_inv) == ref); });
}

TEST_CASE("pair product histogram: totals, oracle, thread independence") {
    auto G = a5();
    const auto& cd = G->classes();
    const auto& el = G->elements();
    for (std::uint32_t i = 0; i < cd.count(); ++i)
        for (std::uint32_t j = 0; j < cd.count(); ++j) {
            auto hist = kernels::pair_product_histogram_serial(*G, i, j);
            std::uint64_t total = 0;
            for (auto h : hist) total += h;
            CHECK(total == cd.sizes[i] * cd.sizes[j]);
            for_each_thread_count([&] { CHECK(kernels::pair_product_histogram_omp(*G, i, j) == hist); });
        }

    // one cell against the direct pair walk
    std::vector<Perm> A, B;
    for (auto a : cd.members[1]) A.push_back(el[a]);
    for (auto b : cd.members[2]) B.push_back(el[b]);
    auto hist = kernels::pair_product_histogram(*G, 1, 2);
    for (std::uint32_t k = 0; k < cd.count(); ++k) {
        std::uint64_t direct = 0;
        for (auto m : cd.members[k]) direct += oracles::pair_count(A, B, el[m]);
        CHECK(hist[k] == direct);
    }
}

TEST_CASE("pair product histogram respects the cap") {
    oracles::CapsGuard guard;
    auto G = a5();
    G->classes();
    pqr::caps().pair_products = 10;
    CHECK_THROWS_AS(kernels::pair_product_histogram(*G, 1, 1), pqr::OverCapError);
}

TEST_CASE("class matrix entries satisfy a_ijk * |C_k| = pair histogram") {
    for (const auto& G : {s4(), a5()}) {
        const auto& cd = G->classes();
        const std::size_t r = cd.count();
        std::vector<std::vector<std::uint64_t>> M;
        for (std::uint32_t i = 0; i < r; ++i) {
            M.push_back(kernels::class_matrix_serial(*G, i));
            for_each_thread_count([&] { CHECK(kernels::class_matrix_omp(*G, i) == M.back()); });
        }
        for (std::uint32_t i = 0; i < r; ++i)
            for (std::uint32_t j = 0; j < r; ++j) {
                auto hist = kernels::pair_product_histogram(*G, i, j);
                for (std::uint32_t k = 0; k < r; ++k)
                    CHECK(M[i][j * r + k] * cd.sizes[k] == hist[k]);
            }
    }
}

TEST_CASE("product set bitmap matches a set oracle") {
    auto G = s4();
    const auto& cd = G->classes();
    const auto& el = G->elements();
    std::vector<std::uint32_t> A = cd.members[2], B = cd.members[4];
    auto bits = kernels::product_set_bitmap_serial(*G, A, B);
    for_each_thread_count([&] { CHECK(kernels::product_set_bitmap_omp(*G, A, B) == bits); });

    std::set<Perm> ref;
    for (auto a : A)
        for (auto b : B) ref.insert(el[a] * el[b]);
    std::uint64_t popcount = 0;
    for (std::uint32_t idx = 0; idx < el.size(); ++idx) {
        bool bit = (bits[idx >> 6] >> (idx & 63)) & 1;
        if (bit) ++popcount;
        CHECK(bit == (ref.count(el[idx]) == 1));
    }
    CHECK(popcount == ref.size());
}
