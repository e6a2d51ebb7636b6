#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "pqr/chartab.hpp"

namespace pqr {

// A (p1,p2,p3)-triple: nontrivial x, y, z with x*y*z = identity, where x is a
// p1-element, y a p2-element, z a p3-element (orders are nontrivial prime
// powers, role order matches the primes array).
struct TripleReport {
    enum class Method { character_formula, brute_force, constructive };
    std::array<std::uint64_t, 3> primes;
    std::optional<std::array<std::uint32_t, 3>> class_triple;  // indices into classes()
    BigInt count;  // product-one triples on class_triple; 1 for constructive reports
    std::optional<std::array<Perm, 3>> witness;
    Method method;
};

// Outcome of a (p-)solvability gate together with the cross-check against
// the series-based predicate.  prime is 0 for the plain solvability gate.
// A witness is present exactly when the verdict is negative.
struct GateVerdict {
    bool solvable;
    std::uint64_t prime;
    std::optional<TripleReport> witness;
    bool cross_check;
};

// #{(a,b,c) in C_i x C_j x C_k : abc = identity}, from the character sum.
BigInt triple_count(const CharTable& t, std::size_t i, std::size_t j, std::size_t k);

// Same count by walking C_i x C_j and classifying the products.
BigInt triple_count_bruteforce(const GroupPtr& g, std::size_t i, std::size_t j, std::size_t k);

// Scans class triples whose representative orders are nontrivial powers of
// p, q, r in ascending index order; the first positive count yields a report
// with an explicit witness.  nullopt means every such class triple has
// count zero.
std::optional<TripleReport> pqr_triple_exists(const GroupPtr& g, std::uint64_t p, std::uint64_t q, std::uint64_t r);
std::optional<TripleReport> pqr_triple_exists(const CharTable& t, std::uint64_t p, std::uint64_t q, std::uint64_t r);

// Solvable iff no triple exists over any three distinct primes dividing |G|.
GateVerdict solvability_gate(const GroupPtr& g);

// For a non-solvable group: a witness with x a 2-element and the other
// primes odd, the smaller one in {3, 5}.  Returns nullopt on solvable input.
std::optional<TripleReport> main3_witness(const GroupPtr& g);

// p-solvable iff no (2,p,q)-triple exists for any odd prime q != p.
GateVerdict psolvable_gate(const GroupPtr& g, std::uint64_t p);

struct SylowProductReport {
    bool all_equal;
    std::optional<std::array<GroupPtr, 3>> counterexample;
};

// Checks |P1 P2 P3| = |P1||P2||P3| for every choice of Sylow subgroups of
// the three primes, by exact product-set enumeration over all conjugates.
SylowProductReport sylow_product_test(const GroupPtr& g, std::uint64_t p1, std::uint64_t p2, std::uint64_t p3);

// The constructive (2,q,p)-triple in A_p for odd primes q < p: y a product
// of s q-cycles (p = sq + t), x an even product of s+t-1 transpositions
// linking the orbits, which forces xy to be a p-cycle.  No enumeration.
TripleReport alt_triple_construct(std::uint64_t p, std::uint64_t q);

// True iff the product of classes i and j covers every noncentral class of
// order coprime to char_prime.  Classes i, j must themselves be noncentral
// of coprime order (regular semisimple in the defining-characteristic
// reading).
bool gow_coverage_check(const GroupPtr& g, std::uint64_t char_prime, std::size_t i, std::size_t j);

// stable JSON, primes sorted ascending, witness in cycle notation
std::string render_report(const TripleReport& r);
std::string render_verdict(const GateVerdict& v);

}  // namespace pqr
