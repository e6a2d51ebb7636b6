#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pqr {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Base of the error hierarchy; everything thrown on purpose derives from this.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation was abandoned because it would exceed a configured cap.
// Never thrown retroactively: work stops before the cap is crossed.
struct OverCapError : Error {
    explicit OverCapError(const std::string& msg) : Error(msg) {}
};

// Malformed input text (group files, CLI payloads).
struct ParseError : Error {
    ParseError(const std::string& msg, int line, int col)
        : Error(msg + " at line " + std::to_string(line) + ", col " + std::to_string(col)),
          line(line), col(col) {}
    explicit ParseError(const std::string& msg) : Error(msg), line(0), col(0) {}
    int line;
    int col;
};

// Internal consistency check failed (a computed object contradicts itself).
struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// Caller violated a documented precondition (e.g. asked for the p-part of a
// group whose order p does not divide).
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// A search that is allowed to come up empty did come up empty.
struct NoneFoundError : Error {
    explicit NoneFoundError(const std::string& msg) : Error(msg) {}
};

// Resource ceilings for the unboundedly expensive operations.  All limits are
// inclusive ("at most").  Mutable global so the CLI can map flags onto it.
struct Caps {
    std::uint64_t elements = 1'000'000;        // max group order for element enumeration
    std::uint64_t pair_products = 100'000'000; // max |C_i|*|C_j| pair walks per class-pair job
    std::uint64_t coset_index = 200'000;       // max [G:H] for coset actions
    std::uint64_t subgroup_order = 10'000;     // max |G| for subgroup-lattice style searches
    std::uint64_t tuple_scan = 50'000'000;     // max lift-tuple combinations scanned
    std::uint64_t lift_products = 100'000'000; // max element products in lift-product sets
};

Caps& caps();

// exact integer power, overflow-checked
std::uint64_t ipow_checked(std::uint64_t base, unsigned exp);

// floor(sqrt(n)) for exact integers
std::uint64_t isqrt(std::uint64_t n);

// gcd/lcm on uint64 with overflow check in lcm
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);

// prime factorization of a small integer, pairs (p, multiplicity), p ascending
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Euler phi
std::uint64_t euler_phi(std::uint64_t n);

// modular arithmetic on uint64, correct for any modulus below 2^63
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p);  // p prime, a not 0 mod p

// deterministic Miller-Rabin, exact for all uint64
bool is_prime_u64(std::uint64_t n);

// smallest prime p with p ≡ 1 (mod modulus) and p > above
std::uint64_t prime_in_progression(std::uint64_t modulus, std::uint64_t above);

// smallest w of multiplicative order exactly e mod prime p (requires e | p-1);
// w is a^((p-1)/e) for the least base a that works, so the choice is stable
std::uint64_t root_of_order(std::uint64_t p, std::uint64_t e);

}  // namespace pqr
