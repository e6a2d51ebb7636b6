#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pqr/perm.hpp"

namespace pqr {

// One level of a stabilizer chain: the orbit of `base` under `gens`, with a
// full transversal.  transversal[s] maps base to orbit[s].
struct BSGSLevel {
    std::uint16_t base;
    std::vector<std::uint16_t> orbit;   // discovery order; orbit[0] == base
    std::vector<Perm> transversal;      // aligned with orbit
    std::vector<std::int32_t> slot;     // point -> orbit position, -1 outside
    std::vector<Perm> gens;             // strong generators fixing all earlier bases
};

// Deterministic Schreier-Sims.  Base points are always the lowest moved point
// of the generator that forces the level, so the same generator list always
// yields the same chain.
class BSGS {
  public:
    BSGS(unsigned degree, std::vector<Perm> gens);

    unsigned degree() const { return degree_; }
    const std::vector<BSGSLevel>& levels() const { return levels_; }
    const BigInt& order() const { return order_; }
    std::uint64_t order_u64() const;

    bool contains(const Perm& p) const;
    // Sift p through the chain; the residue is the identity iff p is a member.
    Perm sift(const Perm& p) const;

  private:
    void process();
    std::pair<Perm, std::size_t> strip(Perm p, std::size_t from) const;
    void rebuild_orbit(std::size_t level);

    unsigned degree_;
    std::vector<BSGSLevel> levels_;
    BigInt order_;
};

}  // namespace pqr
