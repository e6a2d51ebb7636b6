#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pqr/base.hpp"

namespace pqr {

// Finite commutative ring with unity.  Elements are encoded as 0..size()-1
// with 0 the additive and 1 the multiplicative identity.
struct Ring {
    virtual ~Ring() = default;
    virtual unsigned size() const = 0;
    virtual unsigned add(unsigned a, unsigned b) const = 0;
    virtual unsigned neg(unsigned a) const = 0;
    virtual unsigned mul(unsigned a, unsigned b) const = 0;
    virtual std::optional<unsigned> inv(unsigned a) const = 0;  // nullopt for non-units

    unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
    unsigned pow(unsigned a, std::uint64_t e) const;
};

// Integers mod m.
class Zmod : public Ring {
  public:
    explicit Zmod(unsigned m);
    unsigned size() const override { return m_; }
    unsigned add(unsigned a, unsigned b) const override { return (a + b) % m_; }
    unsigned neg(unsigned a) const override { return a == 0 ? 0 : m_ - a; }
    unsigned mul(unsigned a, unsigned b) const override { return (a * b) % m_; }
    std::optional<unsigned> inv(unsigned a) const override;

  private:
    unsigned m_;
};

// GF(p^k), q <= 81.  Elements 0..q-1 encode polynomials over F_p in a root of
// the lexicographically first irreducible monic polynomial of degree k, with
// base-p digits as coefficients (a = sum a_i p^i encodes sum a_i x^i).  All
// arithmetic is table-driven.
class GFq : public Ring {
  public:
    explicit GFq(unsigned p, unsigned k = 1);

    unsigned size() const override { return q_; }
    unsigned q() const { return q_; }
    unsigned p() const { return p_; }
    unsigned k() const { return k_; }

    unsigned add(unsigned a, unsigned b) const override;
    unsigned neg(unsigned a) const override;
    unsigned mul(unsigned a, unsigned b) const override { return mul_[a * q_ + b]; }
    std::optional<unsigned> inv(unsigned a) const override;

    unsigned frobenius(unsigned a) const { return pow(a, p_); }
    unsigned generator() const { return gen_; }  // multiplicative generator
    unsigned element_order(unsigned a) const;    // multiplicative order, a != 0

  private:
    unsigned p_, k_, q_;
    std::vector<unsigned> mul_;
    std::vector<unsigned> inv_;
    unsigned gen_;
};

// Square matrix over a Ring, row-major.  The ring outlives the matrix.
class RMat {
  public:
    RMat(const Ring& R, unsigned n);  // zero matrix
    static RMat identity(const Ring& R, unsigned n);
    static RMat from_rows(const Ring& R, const std::vector<std::vector<unsigned>>& rows);

    unsigned n() const { return n_; }
    unsigned at(unsigned i, unsigned j) const { return a_[i * n_ + j]; }
    unsigned& at(unsigned i, unsigned j) { return a_[i * n_ + j]; }

    RMat operator*(const RMat& b) const;
    RMat pow(std::uint64_t e) const;
    bool operator==(const RMat& b) const { return a_ == b.a_; }

    // cofactor expansion; exact over any commutative ring (n <= 6)
    unsigned det() const;

    // image of a column vector (entries ring-encoded)
    std::vector<unsigned> apply(const std::vector<unsigned>& v) const;

  private:
    const Ring* R_;
    unsigned n_;
    std::vector<unsigned> a_;
};

}  // namespace pqr
