#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pqr/base.hpp"

namespace pqr {

// e-th cyclotomic polynomial, exact, monic; index = degree
std::vector<BigInt> cyclotomic_polynomial(std::uint32_t e);

// Per-conductor reduction data, computed once and cached.  rows[t] holds the
// power-basis coordinates of zeta^t, so folding a cyclic coefficient vector
// through `rows` performs the reduction modulo the cyclotomic polynomial.
// Coordinates stay tiny at desk-scale conductors; the int64 copy is verified
// against the exact computation when the table is built.
struct ConductorTables {
    std::uint32_t e;
    std::uint32_t phi;
    std::vector<BigInt> poly;                     // cyclotomic polynomial of e
    std::vector<std::vector<std::int64_t>> rows;  // e rows, each phi wide
};
const ConductorTables& conductor_tables(std::uint32_t e);

// An exact element of Q(zeta_e): rational coordinates over the power basis
// 1, zeta, ..., zeta^(phi(e)-1).  The basis is canonical for each conductor,
// so equality at a fixed conductor is coefficient-wise; mixed conductors are
// compared after lifting to the least common one.  Values keep the conductor
// they were created with (no minimal-field detection).
class Cyclotomic {
  public:
    Cyclotomic() : e_(1), c_(1) {}

    static Cyclotomic integer(const BigInt& n);
    static Cyclotomic rational(const BigRat& q);
    static Cyclotomic root_of_unity(std::uint32_t e, std::uint64_t k);
    // sum of coeffs[t] * zeta_e^t; coeffs may have any length up to e
    static Cyclotomic from_cyclic(std::uint32_t e, const std::vector<BigRat>& coeffs);
    static Cyclotomic from_cyclic_counts(std::uint32_t e, const std::vector<std::int64_t>& coeffs);

    std::uint32_t conductor() const { return e_; }
    const std::vector<BigRat>& coeffs() const { return c_; }

    // embed into Q(zeta_e2); conductor() must divide e2
    Cyclotomic lifted_to(std::uint32_t e2) const;
    Cyclotomic conjugated() const;
    // field automorphism zeta -> zeta^u; u must be coprime to the conductor
    Cyclotomic galois(std::uint64_t u) const;

    bool is_zero() const;
    bool is_rational() const;
    BigRat rational_value() const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // "c*E(e)^k +- ..." rendering, exponents ascending, rationals plain
    std::string to_string() const;

  private:
    std::uint32_t e_;
    std::vector<BigRat> c_;
};

}  // namespace pqr
