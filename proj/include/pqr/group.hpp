#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "pqr/bsgs.hpp"

namespace pqr {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Conjugacy class data for a fully enumerated group.  Classes are sorted by
// (element order, size, lexicographic representative); the identity class is
// therefore always index 0.  Representatives are the lexicographically least
// member of each class.
struct ClassData {
    std::vector<Perm> reps;
    std::vector<std::uint64_t> sizes;
    std::vector<std::uint64_t> element_orders;
    std::vector<std::vector<std::uint32_t>> members;  // ascending element indices
    std::vector<std::uint32_t> class_of;              // element index -> class index
    std::size_t count() const { return reps.size(); }
};

// Finite permutation group, immutable after construction.  Orders come from a
// stabilizer chain; element and class enumeration are computed on first use
// and cached (guarded by caps().elements).
class Group {
  public:
    static GroupPtr from_generators(std::vector<Perm> gens, std::string name = "");
    static GroupPtr trivial(unsigned degree, std::string name = "");

    const std::string& name() const { return name_; }
    unsigned degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }  // identity-free
    Perm identity() const { return Perm(degree_); }
    const BSGS& chain() const { return bsgs_; }

    const BigInt& order() const { return bsgs_.order(); }
    std::uint64_t order_u64() const { return bsgs_.order_u64(); }
    bool contains(const Perm& p) const { return bsgs_.contains(p); }
    bool is_trivial() const { return bsgs_.order() == 1; }
    bool is_abelian() const;

    // All elements, lexicographically sorted (so index 0 is the identity).
    const std::vector<Perm>& elements() const;
    std::uint32_t element_index(const Perm& p) const;
    std::optional<std::uint32_t> try_element_index(const Perm& p) const;

    const ClassData& classes() const;
    std::uint32_t class_of(const Perm& p) const;
    std::uint64_t exponent() const;  // lcm of element orders

  private:
    Group(std::vector<Perm> gens, unsigned degree, std::string name);
    void build_elements() const;
    void build_classes() const;

    std::string name_;
    unsigned degree_;
    std::vector<Perm> gens_;
    BSGS bsgs_;

    mutable std::once_flag elems_flag_, classes_flag_;
    mutable std::vector<Perm> elems_;
    mutable std::vector<std::uint32_t> lookup_;  // open addressing; entry = index + 1
    mutable std::optional<ClassData> classes_;
};

// A subgroup relation: sub's elements all lie in parent, same point set.
struct Subgroup {
    GroupPtr parent;
    GroupPtr sub;
};

}  // namespace pqr
