#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pqr/base.hpp"

namespace pqr {

// Permutation of {0, ..., n-1}, stored as the image vector.  Degree is fixed
// at construction and capped at 65535 so images pack into uint16_t.
//
// Composition convention used throughout: (a * b)(i) = a(b(i)), i.e. b acts
// first.  Conjugation is x.conjugated_by(g) = g^-1 * x * g, which makes
// (x*y)^g = x^g * y^g.
class Perm {
  public:
    static constexpr unsigned kMaxDegree = 65535;

    explicit Perm(unsigned degree);  // identity
    static Perm from_images(std::vector<std::uint16_t> images);

    unsigned degree() const { return static_cast<unsigned>(img_.size()); }
    std::uint16_t operator[](std::uint16_t i) const { return img_[i]; }
    const std::vector<std::uint16_t>& images() const { return img_; }

    bool is_identity() const;

    Perm operator*(const Perm& b) const;
    Perm inverse() const;
    Perm conjugated_by(const Perm& g) const;
    Perm power(std::int64_t e) const;

    std::uint64_t order() const;       // lcm of cycle lengths
    unsigned ind() const;              // degree minus number of cycles

    // Cycle notation is 1-indexed: "(1,2,3)(4,5)".  Identity prints as "()".
    std::string to_cycle_string() const;
    static Perm from_cycle_string(const std::string& s, unsigned degree);

    auto operator<=>(const Perm&) const = default;
    bool operator==(const Perm&) const = default;

  private:
    Perm() = default;
    std::vector<std::uint16_t> img_;
};

struct PermHash {
    std::size_t operator()(const Perm& p) const;
};

}  // namespace pqr
